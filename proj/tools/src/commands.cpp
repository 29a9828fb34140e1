#include "dgap/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include "dgap/cli/dvo.hpp"
#include "dgap/cli/report.hpp"
#include "dgap/cli/verify.hpp"
#include "dgap/errors.hpp"
#include "dgap/gaps.hpp"
#include "dgap/generator.hpp"

namespace dgap::cli {
namespace {

void check_census_cap(const DigitalObject& d) {
  if (d.ambient() > kMaxCensusDim) {
    throw ResourceLimit("full census limited to n <= " + std::to_string(kMaxCensusDim) + ", got n=" +
                        std::to_string(d.ambient()));
  }
}

// Runs body(), translating exceptions into exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
}

void print_verify(std::ostream& out, const VerifyResult& r) {
  for (const auto& id : r.identities) {
    out << (id.ok() ? "PASS " : "FAIL ") << id.name << " checked=" << id.checked << " failed=" << id.failed;
    if (!id.ok()) out << " first: " << id.first_failure;
    out << '\n';
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

}  // namespace

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto d = read_dvo_file(args.file);
    check_census_cap(d);
    const auto report = build_report(d, {args.hubs, args.histogram});
    if (args.json) {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << to_text(report);
    }
    if (report.gaps && !report.gaps->agree()) {
      err << "error: gap counts disagree\n";
      return static_cast<int>(kInconsistent);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto d = read_dvo_file(args.file);
    check_census_cap(d);
    if (d.ambient() < 2) throw std::invalid_argument("classification needs n >= 2");
    const auto h = classification_histogram(d);
    std::int64_t total = 0;
    for (auto k : h) total += k;
    if (args.json) {
      nlohmann::ordered_json j;
      for (HubTag t : kAllHubTags) j[std::string(to_string(t))] = h[static_cast<std::size_t>(t)];
      j["total"] = total;
      out << j.dump(2) << '\n';
    } else {
      for (HubTag t : kAllHubTags) out << to_string(t) << ' ' << h[static_cast<std::size_t>(t)] << '\n';
      out << "total " << total << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    VerifyOptions opts;
    if (args.corrupt_census) {
      opts.tamper_census = [](CellCensus& c) {
        const int top = c.ambient() - 1;
        auto counts = c.at(top);
        ++counts.total;
        ++counts.free;
        c.override_counts(top, counts);
      };
    }

    std::vector<DigitalObject> objects;
    if (args.file) objects.push_back(read_dvo_file(*args.file));
    if (args.random) {
      const auto& r = *args.random;
      if (r.trials < 1) throw std::invalid_argument("trials must be positive");
      ShapeSpec spec;
      spec.kind = ShapeKind::Random;
      spec.n = r.n;
      spec.extents.assign(static_cast<std::size_t>(r.n), r.extent);
      spec.density = Density::parse(r.density);
      for (std::int64_t t = 0; t < r.trials; ++t) {
        spec.seed = r.seed + static_cast<std::uint64_t>(t);
        objects.push_back(generate(spec));
      }
    }
    if (objects.empty()) throw std::invalid_argument("verify needs a file or --random");

    VerifyResult total;
    std::optional<std::size_t> witness;
    for (std::size_t k = 0; k < objects.size(); ++k) {
      check_census_cap(objects[k]);
      const auto r = verify_object(objects[k], opts);
      if (!r.ok() && !witness) witness = k;
      merge(total, r);
    }
    print_verify(out, total);
    out << "objects " << objects.size() << '\n';
    if (witness) {
      out << "witness object " << *witness << ":\n" << to_dvo(objects[*witness]);
      out << "FAIL\n";
      return static_cast<int>(kFailure);
    }
    out << "PASS\n";
    return static_cast<int>(kOk);
  });
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ShapeSpec spec;
    spec.kind = parse_shape_kind(args.shape);
    spec.n = args.n;
    spec.extents = args.extents;
    spec.density = Density::parse(args.density);
    spec.seed = args.seed;
    const auto d = generate(spec);

    std::vector<std::string> comments;
    std::string line = "shape " + args.shape + " n=" + std::to_string(args.n);
    if (!spec.extents.empty()) line += " extents=" + join(spec.extents);
    if (spec.kind == ShapeKind::Random) {
      line += " density=" + spec.density.to_string() + " seed=" + std::to_string(spec.seed) +
              " generator=" + std::string(kRandomAlgorithm);
    }
    comments.push_back(line);

    if (args.out_file) {
      std::ofstream f(*args.out_file, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write '" + *args.out_file + "'");
      write_dvo(f, d, comments);
    } else {
      write_dvo(out, d, comments);
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace dgap::cli

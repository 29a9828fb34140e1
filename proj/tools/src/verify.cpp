#include "dgap/cli/verify.hpp"

#include <stdexcept>


#include "dgap/combinatorics.hpp"
#include "dgap/gaps.hpp"

namespace dgap::cli {

const std::vector<std::string> kIdentityNames = {
    "census_partition",        // c_i = c*_i + c'_i
    "census_vs_enumeration",   // census counts match cells() and border()
    "facet_count_lemma",       // c_{n-1} = 2n c_n - c'_{n-1}
    "border_sum",              // sum_{bd_i} b_j = c_{i->j} c*_j
    "free_face_closure",       // faces of free cells are free
    "degree_dichotomy",        // b_{n-1} = 4 on hubs, 2 on nubs
    "theorem_replay",          // sum_{bd_{n-2}} b_{n-1} = 2(n-1)c*_{n-1} = 4g + 2(c*_{n-2} - g)
    "gap_triple_agreement",    // oracle = formula = brimkov
    "detector_equivalence",    // is_gap = is_gap_by_adjacency
    "classification_totality", // one tag per (n-2)-cell; FullBlock iff non-free
};

namespace {

class Recorder {
 public:
  Recorder() {
    for (const auto& name : kIdentityNames) results_.push_back({name, 0, 0, {}});
  }

  void check(std::string_view name, bool ok, const std::string& detail) {
    auto& r = find(name);
    ++r.checked;
    if (!ok) {
      ++r.failed;
      if (r.first_failure.empty()) r.first_failure = detail;
    }
  }

  VerifyResult finish() { return {std::move(results_)}; }

 private:
  IdentityResult& find(std::string_view name) {
    for (auto& r : results_)
      if (r.name == name) return r;
    throw std::logic_error("unknown identity " + std::string(name));
  }
  std::vector<IdentityResult> results_;
};

std::string eq(std::int64_t lhs, std::int64_t rhs) {
  return std::to_string(lhs) + " != " + std::to_string(rhs);
}

}  // namespace

bool VerifyResult::ok() const noexcept {
  for (const auto& r : identities)
    if (!r.ok()) return false;
  return true;
}

void merge(VerifyResult& into, const VerifyResult& from) {
  if (into.identities.empty()) {
    into = from;
    return;
  }
  for (std::size_t k = 0; k < into.identities.size(); ++k) {
    auto& a = into.identities[k];
    const auto& b = from.identities[k];
    a.checked += b.checked;
    a.failed += b.failed;
    if (a.first_failure.empty()) a.first_failure = b.first_failure;
  }
}

VerifyResult verify_object(const DigitalObject& d, const VerifyOptions& opts) {
  Recorder rec;
  const int n = d.ambient();
  auto c = census(d);
  if (opts.tamper_census) opts.tamper_census(c);

  for (int i = 0; i <= n; ++i) {
    rec.check("census_partition", c.c(i) == c.c_star(i) + c.c_prime(i),
              "i=" + std::to_string(i) + ": " + eq(c.c(i), c.c_star(i) + c.c_prime(i)));
    const auto all = static_cast<std::int64_t>(cells(d, i).size());
    rec.check("census_vs_enumeration", c.c(i) == all, "c_" + std::to_string(i) + ": " + eq(c.c(i), all));
    if (i < n) {
      const auto bd = static_cast<std::int64_t>(border(d, i).size());
      rec.check("census_vs_enumeration", c.c_star(i) == bd, "c*_" + std::to_string(i) + ": " + eq(c.c_star(i), bd));
    }
  }

  rec.check("facet_count_lemma", c.c(n - 1) == 2 * n * c.c(n) - c.c_prime(n - 1),
            eq(c.c(n - 1), 2 * n * c.c(n) - c.c_prime(n - 1)));

  // Border cells per dimension, computed independently of the census.
  std::vector<std::vector<Cell>> bd(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bd[static_cast<std::size_t>(i)] = border(d, i);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      std::int64_t sum = 0;
      for (const Cell& e : bd[static_cast<std::size_t>(i)]) sum += b_boundary(d, e, j);
      const auto expect = c_bounding(i, j) * c.c_star(j);
      rec.check("border_sum", sum == expect,
                "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + eq(sum, expect));
    }
  }

  for (int j = 1; j < n; ++j) {
    for (const Cell& f : bd[static_cast<std::size_t>(j)]) {
      for (int i = 0; i < j; ++i) {
        for (const Cell& e : faces(f, i)) {
          rec.check("free_face_closure", is_free(d, e), "face " + e.to_string() + " of free " + f.to_string());
        }
      }
    }
  }

  if (n >= 2) {
    const auto part = hub_nub_partition(d);
    std::int64_t degree_sum = 0;
    for (const Cell& e : part.hubs) {
      const auto b = b_boundary(d, e, n - 1);
      degree_sum += b;
      rec.check("degree_dichotomy", b == 4, "hub " + e.to_string() + ": b=" + std::to_string(b));
    }
    for (const Cell& e : part.nubs) {
      const auto b = b_boundary(d, e, n - 1);
      degree_sum += b;
      rec.check("degree_dichotomy", b == 2, "nub " + e.to_string() + ": b=" + std::to_string(b));
    }
    const auto g = static_cast<std::int64_t>(part.hubs.size());
    const auto incidences = 2 * (n - 1) * c.c_star(n - 1);
    const auto split = 4 * g + 2 * (c.c_star(n - 2) - g);
    rec.check("theorem_replay", degree_sum == incidences && incidences == split,
              "sum b=" + std::to_string(degree_sum) + " 2(n-1)c*=" + std::to_string(incidences) +
                  " 4g+2(c*-g)=" + std::to_string(split));

    const auto oracle = count_gaps_oracle(d, n - 2).count;
    const auto formula = count_gaps_formula(c);
    const auto brimkov = count_gaps_brimkov(c);
    rec.check("gap_triple_agreement", oracle == formula && formula == brimkov,
              "oracle " + std::to_string(oracle) + " formula " + std::to_string(formula) + " brimkov " +
                  std::to_string(brimkov));

    std::int64_t tagged = 0;
    for (const Cell& e : cells(d, n - 2)) {
      const bool by_block = is_gap(d, e, n - 2);
      const bool by_adj = is_gap_by_adjacency(d, e);
      rec.check("detector_equivalence", by_block == by_adj, "cell " + e.to_string());
      const auto cls = classify_cell(d, e);
      ++tagged;
      const bool full = cls.tag == HubTag::FullBlock;
      rec.check("classification_totality", full == !is_free(d, e) && (cls.tag == HubTag::GapTandem) == by_block,
                "cell " + e.to_string() + " tagged " + std::string(to_string(cls.tag)));
    }
    rec.check("classification_totality", tagged == c.c(n - 2), "tagged " + eq(tagged, c.c(n - 2)));
  }

  return rec.finish();
}

}  // namespace dgap::cli

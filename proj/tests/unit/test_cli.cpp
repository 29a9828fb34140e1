#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dgap/cli/commands.hpp"
#include "dgap/cli/dvo.hpp"
#include "dgap/cli/report.hpp"
#include "dgap/cli/verify.hpp"
#include "dgap/errors.hpp"
#include "dgap/generator.hpp"

using namespace dgap;
using namespace dgap::cli;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) { return std::string(DGAP_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "dgap_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

DigitalObject parse(const std::string& text) {
  std::istringstream in(text);
  return read_dvo(in);
}

struct Run {
  int rc;
  std::string out;
  std::string err;
};

template <class Args, class Cmd>
Run run(Cmd cmd, const Args& args) {
  std::ostringstream out, err;
  const int rc = cmd(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("dvo") {

TEST_CASE("parse") {
  const auto d = parse("# comment\n\ndvo 3\n0 0 0\n# inner\n1 1 0\r\n\n");
  CHECK(d == DigitalObject::from_centers(3, {{0, 0, 0}, {1, 1, 0}}));
  CHECK(parse("dvo 2\n").empty());
  CHECK(parse("dvo 1\n-4\n+3\n").size() == 2);
}

TEST_CASE("parse errors cite the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("dvo 3\n1 2\n") == 2);
  CHECK(line_of("dvo 3\n1 2 3\n1 2 3\n") == 3);
  CHECK(line_of("# x\ndvo three\n") == 2);
  CHECK(line_of("0 0\n") == 1);
  CHECK(line_of("dvo 2\n0 a\n") == 2);
  CHECK(line_of("dvo 0\n") == 1);
  CHECK(line_of("") == 1);
  CHECK(line_of("dvo 2\n0 0 0\n") == 2);

  try {
    parse("dvo 3\n1 2\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("write then read returns the same object") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ShapeSpec s{ShapeKind::Random, n, std::vector<std::int64_t>(static_cast<std::size_t>(n), 3), {1, 2}, seed};
      const auto d = generate(s).translated(std::vector<std::int64_t>(static_cast<std::size_t>(n), -1));
      CHECK(parse(to_dvo(d, {"note"})) == d);
    }
  }
}

TEST_CASE("writer format") {
  CHECK(to_dvo(DigitalObject::from_centers(2, {{1, -2}, {0, 0}})) == "dvo 2\n0 0\n1 -2\n");
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("count on the diagonal pair") {
  const auto r = run(cmd_count, CountArgs{fixture("diagonal_pair_n3.dvo"), true, true, true});
  REQUIRE(r.rc == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["voxels"] == 2);
  CHECK(j["gaps"]["oracle"] == 1);
  CHECK(j["gaps"]["formula"] == 1);
  CHECK(j["gaps"]["brimkov"] == 1);
  CHECK(j["gaps"]["agree"] == true);
  CHECK(j["hubs"] == nlohmann::json::array({nlohmann::json::array({1, 1, 0})}));
  CHECK(j["classification"]["GapTandem"] == 1);
  CHECK(j["census"][1]["c"] == 23);
  CHECK(j["census"][1]["c_star"] == 23);
}

TEST_CASE("report JSON key order is frozen") {
  const auto r = run(cmd_count, CountArgs{fixture("single_n3.dvo"), true, false, false});
  REQUIRE(r.rc == kOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "voxels", "census", "gaps"});
  std::vector<std::string> row;
  for (auto it = j["census"][0].begin(); it != j["census"][0].end(); ++it) row.push_back(it.key());
  CHECK(row == std::vector<std::string>{"i", "c", "c_star", "c_prime", "beta"});
  std::vector<std::string> gaps;
  for (auto it = j["gaps"].begin(); it != j["gaps"].end(); ++it) gaps.push_back(it.key());
  CHECK(gaps == std::vector<std::string>{"dimension", "oracle", "formula", "brimkov", "agree"});
  CHECK(j["gaps"]["oracle"] == 0);
  CHECK(j["gaps"]["formula"] == 0);
  CHECK(j["gaps"]["brimkov"] == 0);
}

TEST_CASE("count on n = 1 reports no gap section") {
  const auto p = write_scratch("line.dvo", "dvo 1\n0\n1\n");
  const auto r = run(cmd_count, CountArgs{p, true, false, false});
  CHECK(r.rc == kOk);
  CHECK(nlohmann::json::parse(r.out)["gaps"].is_null());
}

TEST_CASE("exit codes") {
  const auto bad = write_scratch("bad.dvo", "dvo 3\n1 2\n");
  auto r = run(cmd_count, CountArgs{bad, false, false, false});
  CHECK(r.rc == kInputError);
  CHECK(r.err.find("line 2") != std::string::npos);

  r = run(cmd_count, CountArgs{scratch("missing.dvo").string(), false, false, false});
  CHECK(r.rc == kInputError);

  const auto big = write_scratch("n9.dvo", "dvo 9\n0 0 0 0 0 0 0 0 0\n");
  r = run(cmd_count, CountArgs{big, false, false, false});
  CHECK(r.rc == kResourceLimit);

  r = run(cmd_gen, GenArgs{"torus", 3, {}, "0.5", 0, std::nullopt});
  CHECK(r.rc == kInputError);
  r = run(cmd_gen, GenArgs{"box", 2, {2}, "0.5", 0, std::nullopt});
  CHECK(r.rc == kInputError);
}

TEST_CASE("classify") {
  auto r = run(cmd_classify, ClassifyArgs{fixture("box_2x2.dvo"), true});
  REQUIRE(r.rc == kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["FullBlock"] == 1);
  CHECK(j["total"] == 9);

  r = run(cmd_classify, ClassifyArgs{fixture("l_block_n3.dvo"), true});
  j = nlohmann::json::parse(r.out);
  CHECK(j["LBlock"] >= 1);

  r = run(cmd_classify, ClassifyArgs{fixture("single_n3.dvo"), false});
  CHECK(r.out.find("Simple 12\n") != std::string::npos);
  CHECK(r.out.find("total 12\n") != std::string::npos);
}

TEST_CASE("verify") {
  VerifyArgs a;
  a.random = RandomTrials{3, 4, "0.5", 42, 20};
  auto r = run(cmd_verify, a);
  CHECK(r.rc == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  for (const char* f : {"single_n3.dvo", "diagonal_pair_n3.dvo", "l_block_n3.dvo", "facet_block_n3.dvo",
                        "box_2x2x2.dvo", "box_2x2.dvo", "diagonal_pair_n2.dvo", "random_n4_seed7.dvo"}) {
    VerifyArgs v;
    v.file = fixture(f);
    CHECK_MESSAGE(run(cmd_verify, v).rc == kOk, f);
  }

  VerifyArgs bad;
  bad.file = fixture("diagonal_pair_n3.dvo");
  bad.corrupt_census = true;
  r = run(cmd_verify, bad);
  CHECK(r.rc == kFailure);
  CHECK(r.out.find("FAIL facet_count_lemma") != std::string::npos);
  CHECK(r.out.find("FAIL gap_triple_agreement") != std::string::npos);
  CHECK(r.out.find("witness object 0:\ndvo 3\n0 0 0\n1 1 0\n") != std::string::npos);

  CHECK(run(cmd_verify, VerifyArgs{}).rc == kInputError);
}

TEST_CASE("verify_object names every identity") {
  const auto res = verify_object(generate({ShapeKind::LBlock, 3, {}, {}, 0}));
  REQUIRE(res.identities.size() == kIdentityNames.size());
  for (std::size_t k = 0; k < kIdentityNames.size(); ++k) {
    CHECK(res.identities[k].name == kIdentityNames[k]);
    CHECK(res.identities[k].checked > 0);
  }
  CHECK(res.ok());
}

TEST_CASE("gen writes deterministic files") {
  const auto p = scratch("gen.dvo").string();
  auto r = run(cmd_gen, GenArgs{"random", 4, {3, 3, 3, 3}, "0.5", 7, p});
  REQUIRE(r.rc == kOk);
  CHECK(slurp(p) == slurp(fixture("random_n4_seed7.dvo")));

  r = run(cmd_gen, GenArgs{"diagonal_pair", 3, {}, "0.5", 0, std::nullopt});
  CHECK(r.out == "dvo 3\n# shape diagonal_pair n=3\n0 0 0\n1 1 0\n");
  r = run(cmd_gen, GenArgs{"box", 2, {2, 2}, "0.5", 0, std::nullopt});
  CHECK(parse(r.out).size() == 4);
}

}  // TEST_SUITE

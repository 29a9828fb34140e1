#include "dgap/cli/dvo.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "dgap/errors.hpp"

namespace dgap::cli {
namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

bool parse_int(std::string_view tok, std::int64_t& v) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return !tok.empty() && ec == std::errc{} && p == tok.data() + tok.size();
}

}  // namespace

DigitalObject read_dvo(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  int n = 0;
  std::vector<Cell> voxels;
  std::unordered_set<Cell, CellHash> seen;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (n == 0) {
      std::int64_t dim = 0;
      if (toks.size() != 2 || toks[0] != "dvo" || !parse_int(toks[1], dim)) {
        throw ParseError(lineno, "expected header 'dvo <n>'");
      }
      if (dim < 1 || dim > kMaxDim) {
        throw ParseError(lineno, "dimension " + std::to_string(dim) + " outside [1, " + std::to_string(kMaxDim) + "]");
      }
      n = static_cast<int>(dim);
      continue;
    }

    if (static_cast<int>(toks.size()) != n) {
      throw ParseError(lineno, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(toks.size()));
    }
    std::vector<std::int64_t> center(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      auto& v = center[static_cast<std::size_t>(j)];
      if (!parse_int(toks[static_cast<std::size_t>(j)], v)) {
        throw ParseError(lineno, "not an integer: '" + std::string(toks[static_cast<std::size_t>(j)]) + "'");
      }
      if (v > kCoordLimit / 2 || v < -kCoordLimit / 2) throw ParseError(lineno, "coordinate out of range");
    }
    Cell voxel = Cell::voxel(center);
    if (!seen.insert(voxel).second) throw ParseError(lineno, "duplicate voxel");
    if (voxels.size() == kMaxVoxels) {
      throw ResourceLimit("object has more than " + std::to_string(kMaxVoxels) + " voxels");
    }
    voxels.push_back(voxel);
  }
  if (n == 0) throw ParseError(lineno + 1, "missing header 'dvo <n>'");
  return DigitalObject(n, std::move(voxels));
}

DigitalObject read_dvo_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_dvo(in);
}

void write_dvo(std::ostream& out, const DigitalObject& d, const std::vector<std::string>& comments) {
  out << "dvo " << d.ambient() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Cell& v : d.voxels()) {
    const auto c = v.center();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out << ' ';
      out << c[j];
    }
    out << '\n';
  }
}

std::string to_dvo(const DigitalObject& d, const std::vector<std::string>& comments) {
  std::ostringstream os;
  write_dvo(os, d, comments);
  return os.str();
}

}  // namespace dgap::cli

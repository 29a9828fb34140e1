#include "dgap/generator.hpp"

#include <charconv>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dgap/errors.hpp"

namespace dgap {
namespace {

struct NamedKind {
  std::string_view name;
  ShapeKind kind;
};

constexpr NamedKind kKinds[] = {
    {"single", ShapeKind::Single},         {"box", ShapeKind::Box},
    {"diagonal_pair", ShapeKind::DiagonalPair}, {"l_block", ShapeKind::LBlock},
    {"facet_block", ShapeKind::FacetBlock}, {"checkerboard", ShapeKind::Checkerboard},
    {"random", ShapeKind::Random},
};

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("bad density '" + std::string(whole) + "'");
  }
  return v;
}

bool needs_extents(ShapeKind k) {
  return k == ShapeKind::Box || k == ShapeKind::Checkerboard || k == ShapeKind::Random;
}

std::vector<std::int64_t> unit(int n, std::initializer_list<int> axes) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (int a : axes) c[static_cast<std::size_t>(a)] = 1;
  return c;
}

}  // namespace

std::string_view to_string(ShapeKind kind) noexcept {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "?";
}

ShapeKind parse_shape_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.name == name) return k.kind;
  throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

Density Density::parse(std::string_view text) {
  Density d;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    d.num = parse_u64(text.substr(0, slash), text);
    d.den = parse_u64(text.substr(slash + 1), text);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) throw std::invalid_argument("bad density '" + std::string(text) + "'");
    d.den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) d.den *= 10;
    d.num = (whole.empty() ? 0 : parse_u64(whole, text)) * d.den + parse_u64(frac, text);
  } else {
    d.num = parse_u64(text, text);
    d.den = 1;
  }
  if (d.den == 0 || d.num > d.den) throw std::invalid_argument("density '" + std::string(text) + "' not in [0, 1]");
  const auto g = std::gcd(d.num, d.den);
  if (g > 1) {
    d.num /= g;
    d.den /= g;
  }
  return d;
}

std::string Density::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

void validate(const ShapeSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxDim) throw std::invalid_argument("shape dimension n=" + std::to_string(spec.n) + " unsupported");
  if ((spec.kind == ShapeKind::DiagonalPair || spec.kind == ShapeKind::LBlock) && spec.n < 2) {
    throw std::invalid_argument(std::string(to_string(spec.kind)) + " needs n >= 2");
  }
  if (needs_extents(spec.kind)) {
    if (static_cast<int>(spec.extents.size()) != spec.n) {
      throw std::invalid_argument(std::string(to_string(spec.kind)) + " needs " + std::to_string(spec.n) + " extents");
    }
    for (auto e : spec.extents)
      if (e <= 0) throw std::invalid_argument("extents must be positive");
  }
  if (spec.kind == ShapeKind::Random && (spec.density.den == 0 || spec.density.num > spec.density.den)) {
    throw std::invalid_argument("density not in [0, 1]");
  }
}

std::vector<std::vector<std::int64_t>> box_positions(const std::vector<std::int64_t>& extents) {
  std::vector<std::vector<std::int64_t>> out;
  if (extents.empty()) return out;
  for (auto e : extents)
    if (e <= 0) return out;
  std::vector<std::int64_t> p(extents.size(), 0);
  while (true) {
    out.push_back(p);
    std::size_t a = extents.size();
    while (a > 0) {
      --a;
      if (++p[a] < extents[a]) break;
      p[a] = 0;
      if (a == 0) return out;
    }
  }
}

DigitalObject generate(const ShapeSpec& spec) {
  validate(spec);
  const int n = spec.n;
  std::vector<std::vector<std::int64_t>> centers;
  switch (spec.kind) {
    case ShapeKind::Single: centers = {unit(n, {})}; break;
    case ShapeKind::DiagonalPair: centers = {unit(n, {}), unit(n, {0, 1})}; break;
    case ShapeKind::FacetBlock: centers = {unit(n, {}), unit(n, {0})}; break;
    case ShapeKind::LBlock: centers = {unit(n, {}), unit(n, {0}), unit(n, {1})}; break;
    case ShapeKind::Box: centers = box_positions(spec.extents); break;
    case ShapeKind::Checkerboard:
      for (auto& p : box_positions(spec.extents)) {
        if (std::accumulate(p.begin(), p.end(), std::int64_t{0}) % 2 == 0) centers.push_back(std::move(p));
      }
      break;
    case ShapeKind::Random: {
      std::mt19937_64 rng(spec.seed);
      for (auto& p : box_positions(spec.extents)) {
        if (rng() % spec.density.den < spec.density.num) centers.push_back(std::move(p));
      }
      break;
    }
  }
  return DigitalObject::from_centers(n, centers);
}

ObjectEnumerator::ObjectEnumerator(int n, std::vector<std::int64_t> extents) : n_(n) {
  if (n < 1 || n > kMaxDim || static_cast<int>(extents.size()) != n) {
    throw std::invalid_argument("enumeration needs n extents");
  }
  std::int64_t volume = 1;
  for (auto e : extents) {
    if (e <= 0) throw std::invalid_argument("extents must be positive");
    if (e > kMaxEnumerationVolume || volume * e > kMaxEnumerationVolume) {
      throw ResourceLimit("enumeration volume exceeds " + std::to_string(kMaxEnumerationVolume));
    }
    volume *= e;
  }
  positions_ = box_positions(extents);
  total_ = std::uint64_t{1} << positions_.size();
}

std::optional<DigitalObject> ObjectEnumerator::next() {
  if (mask_ >= total_) return std::nullopt;
  std::vector<std::vector<std::int64_t>> centers;
  for (std::size_t b = 0; b < positions_.size(); ++b)
    if (mask_ >> b & 1) centers.push_back(positions_[b]);
  ++mask_;
  return DigitalObject::from_centers(n_, centers);
}

}  // namespace dgap

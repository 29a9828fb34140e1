#include "dgap/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace dgap {
namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("count overflows 64 bits: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("count overflows 64 bits: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error("inexact division " + std::to_string(num) + " / " + std::to_string(den));
  }
  return num / den;
}

std::int64_t pow2(int k) {
  if (k < 0 || k > 62) throw std::overflow_error("2^" + std::to_string(k) + " out of range");
  return std::int64_t{1} << k;
}

void check_cap(int n) {
  if (n < 0 || n > kMaxCountDim) {
    throw std::out_of_range("dimension " + std::to_string(n) + " outside [0, " + std::to_string(kMaxCountDim) + "]");
  }
}

void check_order(int i, int j, const char* what) {
  if (i < 0 || i > j) {
    throw std::out_of_range(std::string(what) + ": need 0 <= i <= j, got i=" + std::to_string(i) +
                            " j=" + std::to_string(j));
  }
}

}  // namespace

std::int64_t binomial(int n, int k) {
  check_cap(n);
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  // r * (n - k + t) is always divisible by t after the previous step.
  for (int t = 1; t <= k; ++t) r = exact_div(mul(r, n - k + t), t);
  return r;
}

std::int64_t c_bounding(int i, int j) {
  check_cap(j);
  check_order(i, j, "c_bounding");
  return mul(pow2(j - i), binomial(j, i));
}

std::int64_t c_bounded(int i, int j, int n) {
  check_cap(n);
  check_order(i, j, "c_bounded");
  if (j > n) throw std::out_of_range("c_bounded: j=" + std::to_string(j) + " exceeds n=" + std::to_string(n));
  return mul(pow2(j - i), binomial(n - i, j - i));
}

std::int64_t b_in_voxel(int i, int j, int n) {
  check_cap(n);
  check_order(i, j, "b_in_voxel");
  if (j > n) throw std::out_of_range("b_in_voxel: j=" + std::to_string(j) + " exceeds n=" + std::to_string(n));
  return binomial(n - i, j - i);
}

std::int64_t block_cell_count(int i, int n) {
  check_cap(n);
  if (n < 1) throw std::out_of_range("block_cell_count: n must be >= 1");
  check_order(i, n, "block_cell_count");
  return exact_div(mul(3 * n + i, c_bounding(i, n)), 2 * n);
}

std::int64_t lblock_cell_count(int i, int n) {
  check_cap(n);
  if (n < 2) throw std::out_of_range("lblock_cell_count: n must be >= 2");
  check_order(i, n, "lblock_cell_count");
  return exact_div(mul(2 * n + i, c_bounding(i, n)), n);
}

std::int64_t block_free_facets(int n) {
  check_cap(n);
  if (n < 1) throw std::out_of_range("block_free_facets: n must be >= 1");
  return 2 * (2 * n - 1);
}

std::int64_t lblock_free_facets(int n) {
  check_cap(n);
  if (n < 2) throw std::out_of_range("lblock_free_facets: n must be >= 2");
  return 2 * (3 * n - 2);
}

bool incidence_sum_check(std::span<const std::int64_t> point_degrees,
                         std::span<const std::int64_t> block_degrees) {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  for (auto r : point_degrees) lhs = add(lhs, r);
  for (auto k : block_degrees) rhs = add(rhs, k);
  return lhs == rhs;
}

}  // namespace dgap

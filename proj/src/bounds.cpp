#include "tw/bounds.hpp"

#include <stdexcept>
#include <string>

#include "tw/error.hpp"

namespace tw {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (a % b != 0) throw std::logic_error("closed form is not integral");
  return a / b;
}

void check_diameter(int n, int d) {
  if (d < 2 || d > n - 1) {
    throw Error(ErrorCode::BadDiameter,
                "need 2 <= d <= n-1, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

}  // namespace

LeafBounds leaf_bounds(int n, int d) {
  check_diameter(n, d);
  const int half = d / 2;
  const int numerator = d % 2 == 0 ? n - 1 : n - 2;
  return {static_cast<int>(ceil_div(numerator, half)), n - d + 1};
}

std::int64_t lower_bound_by_leaves(int n, int l) {
  if (l < 3 || l > n - 1) {
    throw Error(ErrorCode::BadLeafCount,
                "need 3 <= l <= n-1, got n=" + std::to_string(n) + " l=" + std::to_string(l));
  }
  return std::int64_t{n - 1} * (l - 1);
}

std::int64_t lower_bound_by_diameter(int n, int d) {
  return std::int64_t{n - 1} * (leaf_bounds(n, d).l0 - 1);
}

std::int64_t g_polynomial(std::int64_t x, std::int64_t n) {
  return x * (x - 1) + (n - x - 1) * (x / 2) * ((x + 1) / 2);
}

std::int64_t g_value(int x, int n) {
  if (x < 2 || x > n - 1) {
    throw Error(ErrorCode::BadArg,
                "need 2 <= x <= n-1, got x=" + std::to_string(x) + " n=" + std::to_string(n));
  }
  return g_polynomial(x, n);
}

GMax g_max(int n) {
  if (n < 3) throw Error(ErrorCode::BadArg, "g_max needs n >= 3");
  const std::int64_t m = n;
  const std::int64_t cube = m * m * m + 9 * m * m;
  GMax out;
  const int low = 2 * n / 3 + 2;
  switch (n % 3) {
    case 0:
      out.value = exact_div(cube + 9 * m - 27, 27);
      out.argmax = {low};
      break;
    case 1:
      out.value = exact_div(cube + 6 * m - 16, 27);
      out.argmax = {low, (2 * n + 1) / 3 + 2};
      break;
    default:
      out.value = exact_div(cube + 6 * m - 2, 27);
      out.argmax = {low};
      break;
  }
  return out;
}

DiameterUpperBound upper_bound_by_diameter(int n, int d) {
  check_diameter(n, d);
  const std::int64_t m = n - d + 1;
  return {m * (m - 1) + std::int64_t{d - 2} * (m / 2) * ((m + 1) / 2), d >= (n - 2) / 3};
}

namespace {

Rational cubic_part(Rational x) { return (x - 1) * (x * x + 7 * x - 12) / 6; }

}  // namespace

Rational g1_value(Rational x, int n) {
  return cubic_part(x) + x * x / 4 * (Rational(n) + 2 - 2 * x);
}

Rational g2_value(Rational x, int n) {
  return cubic_part(x) + (x * x - 1) / 4 * (Rational(n) + 2 - 2 * x);
}

namespace {

void check_spine3(int n, int k, int t) {
  const int l = n - k;
  if (k < 1 || l < 4 || n + 2 - 2 * l < 0 || t < 1 || t > l - 2) {
    throw Error(ErrorCode::InfeasibleShape, "no degree-3 spine caterpillar with n=" +
                                                std::to_string(n) + " k=" + std::to_string(k) +
                                                " t=" + std::to_string(t));
  }
}

}  // namespace

std::int64_t spine3_closed_form(int n, int k, int t, int shift) {
  check_spine3(n, k, t);
  if (shift != 1 && shift != 2) throw Error(ErrorCode::BadArg, "shift must be 1 or 2");
  const std::int64_t l = n - k;
  const std::int64_t a = t + shift;
  return exact_div((l - 1) * (l * l + 7 * l - 12), 6) + a * (l - a) * (n + 2 - 2 * l);
}

BackboneVector spine3_backbone(int n, int k, int t) {
  check_spine3(n, k, t);
  const int l = n - k;
  BackboneVector b;
  b.x.assign(t, 1);
  b.x.insert(b.x.end(), n + 2 - 2 * l, 0);
  b.x.insert(b.x.end(), l - 2 - t, 1);
  return b;
}

Delta3Max delta3_max(int n) {
  if (n < 6) throw Error(ErrorCode::OrderTooSmall, "need n >= 6, got " + std::to_string(n));
  const std::int64_t p = n / 4;
  Delta3Max out{0, static_cast<int>(p), n % 4};
  const std::int64_t even_case = exact_div((2 * p + 1) * (2 * p * p + 11 * p + 3), 3);
  switch (out.residue) {
    case 0: out.value = exact_div(p * (4 * p * p + 18 * p - 4), 3); break;
    case 1: out.value = exact_div(p * (4 * p * p + 21 * p - 1), 3); break;
    case 2: out.value = even_case; break;
    default: out.value = even_case + (p + 1) * (p + 1); break;
  }
  return out;
}

}  // namespace tw

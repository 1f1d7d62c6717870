#pragma once
// Independent reference implementations used only by the tests: a plain
// numerator/denominator fraction type, a direct fixed-point enumerator, and
// seeded numeric spot checks.

#include <random>
#include <vector>

#include "gkmcycle/factored.hpp"
#include "gkmcycle/fixed_points.hpp"
#include "gkmcycle/polynomial.hpp"
#include "gkmcycle/rep.hpp"

namespace oracle {

using gkmcycle::FactoredRational;
using gkmcycle::Polynomial;
using gkmcycle::Rational;
using gkmcycle::Rep;

// Fractions of expanded polynomials; equality by cross-multiplication.
struct PolyFraction {
  Polynomial num;
  Polynomial den;

  static PolyFraction of(const Polynomial& p) {
    return {p, Polynomial::constant(p.nvars(), 1)};
  }
  static PolyFraction of(const FactoredRational& f) {
    return {f.num(), f.den_product()};
  }
  PolyFraction operator+(const PolyFraction& o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  PolyFraction operator*(const PolyFraction& o) const {
    return {num * o.num, den * o.den};
  }
  PolyFraction inverse() const { return {den, num}; }
  bool same_value(const PolyFraction& o) const {
    return num * o.den == o.num * den;
  }
};

// All tail tuples whose level counts match e, by walking the whole odometer.
inline std::vector<gkmcycle::FixedPoint> brute_force_fixed_points(
    const Rep& rep) {
  std::vector<gkmcycle::FixedPoint> out;
  const std::vector<int>& e = *rep.e;
  size_t nsegs = rep.segments.size();
  std::vector<int> tails(nsegs, 0);
  while (true) {
    std::vector<int> count(rep.n, 0);
    for (size_t j = 0; j < nsegs; ++j) {
      const auto& s = rep.segments[j];
      for (int t = 1; t <= tails[j]; ++t) {
        count[gkmcycle::level_of(rep, (int)j + 1, s.len - t) - 1] += 1;
      }
    }
    if (count == e) out.push_back({tails});
    size_t j = 0;
    while (j < nsegs && tails[j] == rep.segments[j].len) {
      tails[j] = 0;
      ++j;
    }
    if (j == nsegs) break;
    tails[j] += 1;
  }
  return out;
}

// Integer points (d, e_1, ..., e_s) at which none of the guards vanish.
inline std::vector<std::vector<Rational>> sample_points(
    int nvars, const std::vector<Polynomial>& guards, int count,
    unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-50, 50);
  std::vector<std::vector<Rational>> points;
  while ((int)points.size() < count) {
    std::vector<Rational> p;
    for (int v = 0; v <= nvars; ++v) p.push_back(pick(rng));
    bool ok = true;
    for (const auto& guard : guards) {
      if (guard.evaluate(p) == 0) ok = false;
    }
    if (ok) points.push_back(std::move(p));
  }
  return points;
}

}  // namespace oracle

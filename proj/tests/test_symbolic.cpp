#include <sstream>

#include "doctest.h"
#include "gkmcycle/factored.hpp"
#include "gkmcycle/polynomial.hpp"
#include "oracles.hpp"

using gkmcycle::Exponents;
using gkmcycle::FactoredRational;
using gkmcycle::Polynomial;
using gkmcycle::Rational;

namespace {
Polynomial eps(int nvars, int v) { return Polynomial::variable(nvars, v); }
Polynomial dlt(int nvars) { return Polynomial::variable(nvars, 0); }
Polynomial cst(int nvars, const Rational& c) {
  return Polynomial::constant(nvars, c);
}
}  // namespace

TEST_CASE("term order ranks by degree then by earlier variables") {
  gkmcycle::TermOrder before;
  CHECK(before({0, 2, 0, 0}, {0, 1, 1, 0}));  // e1^2 before e1e2
  CHECK(before({0, 1, 1, 0}, {0, 0, 2, 0}));  // e1e2 before e2^2
  CHECK(before({1, 1, 0, 0}, {0, 0, 2, 0}));  // e1d before e2^2
  CHECK(before({0, 0, 2, 0}, {1, 0, 1, 0}));  // e2^2 before e2d
  CHECK(before({2, 0, 0, 0}, {1, 0, 0, 0}));  // d^2 before d
  CHECK(!before({0, 1, 0, 0}, {0, 1, 0, 0}));
}

TEST_CASE("polynomial arithmetic and printing") {
  int nv = 3;
  Polynomial a = eps(nv, 1), b = eps(nv, 2);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a - a).zero());
  CHECK((eps(nv, 3) - eps(nv, 1) - dlt(nv)).str() == "-e1+e3-d");
  CHECK((a * a * 2 + cst(nv, Rational(1, 2))).str() == "2e1^2+1/2");
  CHECK(Polynomial(nv).str() == "0");
  Polynomial p = a * b * b * 3;
  CHECK(p.degree() == 3);
  CHECK(p.homogeneous());
  CHECK_FALSE((a * a + b).homogeneous());
}

TEST_CASE("delta projection and evaluation") {
  int nv = 2;
  Polynomial p = eps(nv, 1) * dlt(nv) + eps(nv, 2) * 3;
  CHECK(p.with_delta_zero() == eps(nv, 2) * 3);
  CHECK(p.evaluate({2, 5, 7}) == Rational(10 + 21));
}

TEST_CASE("exact division succeeds exactly on multiples") {
  int nv = 2;
  Polynomial a = eps(nv, 1), b = eps(nv, 2);
  auto q = exact_divide(a * a - b * b, a - b);
  REQUIRE(q.has_value());
  CHECK(*q == a + b);
  CHECK_FALSE(exact_divide(a * a + b * b, a - b).has_value());
  CHECK_FALSE(exact_divide(a * b + b, a).has_value());
}

TEST_CASE("linear form helpers") {
  int nv = 3;
  Polynomial L = eps(nv, 1) * 4 - eps(nv, 2) * 2;
  auto [scale, prim] = primitive_linear(L);
  CHECK(prim == eps(nv, 1) * 2 - eps(nv, 2));
  CHECK(scale == 2);
  CHECK(prim * scale == L);
  auto [scale2, prim2] = primitive_linear(-L);
  CHECK(prim2 == prim);
  CHECK(scale2 == -2);

  Polynomial p = (eps(nv, 1) - eps(nv, 2)) * (eps(nv, 1) + eps(nv, 3));
  auto q = divide_by_linear(p, eps(nv, 1) - eps(nv, 2));
  REQUIRE(q.has_value());
  CHECK(*q == eps(nv, 1) + eps(nv, 3));
  CHECK_FALSE(divide_by_linear(p, eps(nv, 1) - eps(nv, 3)).has_value());
  Polynomial r = reduce_mod_linear(p, eps(nv, 1) + eps(nv, 3));
  CHECK(r.zero());
  Polynomial r2 = reduce_mod_linear(eps(nv, 1) * eps(nv, 1),
                                    eps(nv, 1) - eps(nv, 2));
  CHECK(r2 == eps(nv, 2) * eps(nv, 2));
}

TEST_CASE("factoring products of linear forms") {
  int nv = 3;
  Polynomial f1 = eps(nv, 1) - eps(nv, 2);
  Polynomial f2 = eps(nv, 1) - eps(nv, 3);
  Polynomial f3 = eps(nv, 1) * 2 - eps(nv, 2) - eps(nv, 3) + dlt(nv);
  Polynomial p = f1 * f2 * f3 * Rational(5, 3);
  auto fac = factor_into_linear_forms(p);
  REQUIRE(fac.has_value());
  CHECK(fac->first == Rational(5, 3));
  REQUIRE(fac->second.size() == 3);
  Polynomial back = cst(nv, fac->first);
  for (const auto& L : fac->second) back = back * L;
  CHECK(back == p);

  CHECK_FALSE(factor_into_linear_forms(eps(nv, 1) * eps(nv, 1) +
                                       eps(nv, 2) * eps(nv, 2))
                  .has_value());
  CHECK_FALSE(factor_into_linear_forms(eps(nv, 1) + cst(nv, 1)).has_value());
  auto unit = factor_into_linear_forms(cst(nv, Rational(7, 2)));
  REQUIRE(unit.has_value());
  CHECK(unit->first == Rational(7, 2));
  CHECK(unit->second.empty());
}

TEST_CASE("factored rationals cancel and compare canonically") {
  int nv = 3;
  Polynomial a = eps(nv, 1), b = eps(nv, 2), c = eps(nv, 3);
  FactoredRational f((a - b) * (a - c), {a - b});
  CHECK(f.is_polynomial());
  CHECK(f.polynomial() == a - c);
  FactoredRational g(a - c);
  CHECK(f == g);
  FactoredRational h(a * a - b * b, {(a - b) * 2});
  CHECK(h.is_polynomial());
  CHECK(h.polynomial() == (a + b) * Rational(1, 2));
}

TEST_CASE("sum of inverse Euler classes along a small chain vanishes") {
  int nv = 3;
  Polynomial one = cst(nv, 1);
  Polynomial e1 = eps(nv, 1), e2 = eps(nv, 2), e3 = eps(nv, 3), d = dlt(nv);
  FactoredRational t1(one, {e3 - e2, e3 - e1 - d});
  FactoredRational t2(one, {e2 - e3, e2 - e1 - d});
  FactoredRational t3(one, {e2 - e1 - d, e3 - e1 - d});
  CHECK((t1 + t2 + t3).is_zero());
}

TEST_CASE("inverse of a fiber sum reproduces the expanded quotient") {
  int nv = 3;
  Polynomial e1 = eps(nv, 1), e2 = eps(nv, 2), e3 = eps(nv, 3);
  FactoredRational u(cst(nv, 1), {e1 - e2});
  FactoredRational v(cst(nv, 1), {e1 - e3});
  FactoredRational sum = u + v;
  FactoredRational inv = sum.inverse();
  CHECK(inv.num() == (e1 - e2) * (e1 - e3));
  REQUIRE(inv.den_factors().size() == 1);
  CHECK(inv.den_factors()[0] == e1 * 2 - e2 - e3);
  CHECK((inv * sum).polynomial() == cst(nv, 1));
}

TEST_CASE("factored arithmetic agrees with the plain fraction oracle") {
  int nv = 3;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_linear = [&]() {
    Polynomial p(nv);
    while (p.zero()) {
      p = Polynomial(nv);
      for (int v = 0; v <= nv; ++v) {
        int c = coeff(rng);
        if (c != 0) p += Polynomial::variable(nv, v) * Rational(c);
      }
    }
    return p;
  };
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial l1 = random_linear(), l2 = random_linear(),
               l3 = random_linear();
    Polynomial n1 = random_linear() * random_linear();
    Polynomial n2 = random_linear();
    FactoredRational f(n1, {l1, l2});
    FactoredRational g(n2, {l2, l3});
    auto fo = oracle::PolyFraction::of(f), go = oracle::PolyFraction::of(g);
    CHECK(oracle::PolyFraction::of(f + g).same_value(fo + go));
    CHECK(oracle::PolyFraction::of(f * g).same_value(fo * go));
    auto pts = oracle::sample_points(nv, {l1, l2, l3}, 3, 99 + trial);
    for (const auto& pt : pts) {
      CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
      CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    }
  }
}

TEST_CASE("json round trips") {
  int nv = 3;
  Polynomial p = eps(nv, 1) * eps(nv, 2) - dlt(nv) * dlt(nv) * Rational(7, 3);
  nlohmann::json pj;
  to_json(pj, p);
  CHECK(pj.at("terms").size() == 2);
  CHECK(pj.at("terms")[0].at("num").get<std::string>() == "1");
  Polynomial p2 = pj.get<Polynomial>();
  CHECK(p2 == p);

  FactoredRational f(p * (eps(nv, 1) - eps(nv, 2)),
                     {eps(nv, 1) - eps(nv, 3)});
  nlohmann::json fj;
  to_json(fj, f);
  FactoredRational f2 = fj.get<FactoredRational>();
  CHECK(f2 == f);

  nlohmann::json bad = {{"terms", {{{"exp", {0, 1}}, {"num", "x"},
                                    {"den", "1"}}}}};
  CHECK_THROWS(bad.get<Polynomial>());
  nlohmann::json bad2 = {{"terms", {{{"exp", {0, -1}}, {"num", "1"},
                                     {"den", "1"}}}}};
  CHECK_THROWS(bad2.get<Polynomial>());
}

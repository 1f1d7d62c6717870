#pragma once
// Exact multivariate polynomials over Q in the loop variable d and one
// variable e_j per segment, ordered by total degree and then lexicographically
// with e_1 > e_2 > ... > e_s > d.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gkmcycle {

using Rational = mpq_class;

// Exponent vector of a monomial; slot 0 is d, slot v (1 <= v <= s) is e_v.
using Exponents = std::vector<int>;

int total_degree(const Exponents& m);

// true when a precedes b in the canonical term order.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  // slot 0 is d, slots 1..nvars are e_1..e_nvars.
  static Polynomial variable(int nvars, int slot);

  int nvars() const { return nvars_; }
  bool zero() const { return terms_.empty(); }
  int degree() const;  // total degree, -1 for the zero polynomial
  bool homogeneous() const;
  const std::map<Exponents, Rational, TermOrder>& terms() const {
    return terms_;
  }

  Rational coeff(const Exponents& m) const;
  void add_term(const Exponents& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Orders polynomials; used only to sort factor lists deterministically.
  static int compare(const Polynomial& a, const Polynomial& b);

  Polynomial with_delta_zero() const;
  // point[0] is the value of d, point[v] the value of e_v.
  Rational evaluate(const std::vector<Rational>& point) const;
  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational, TermOrder> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Quotient p/q when the division is exact, nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& p,
                                       const Polynomial& q);

// A linear form is a nonzero homogeneous polynomial of degree 1.
bool is_linear_form(const Polynomial& p);

// Scales a linear form to integer coprime coefficients with positive leading
// coefficient; returns (scale, primitive) with p == scale * primitive.
std::pair<Rational, Polynomial> primitive_linear(const Polynomial& p);

// Remainder of p modulo the hyperplane L == 0, i.e. p with the leading
// variable of L substituted by the solution of L == 0.
Polynomial reduce_mod_linear(const Polynomial& p, const Polynomial& L);

// Exact quotient p/L for a linear form L, nullopt when L does not divide p.
std::optional<Polynomial> divide_by_linear(const Polynomial& p,
                                           const Polynomial& L);

void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

}  // namespace gkmcycle

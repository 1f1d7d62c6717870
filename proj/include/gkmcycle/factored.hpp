#pragma once
// Rational functions kept in the factored shape numerator / product of
// linear forms, with exact reduction to a canonical representative.

#include <optional>
#include <utility>
#include <vector>

#include "gkmcycle/polynomial.hpp"
#include "json.hpp"

namespace gkmcycle {

class FactoredRational {
 public:
  FactoredRational() = default;
  FactoredRational(Polynomial num);  // NOLINT: converting on purpose
  FactoredRational(Polynomial num, std::vector<Polynomial> den_factors);

  static FactoredRational zero(int nvars) {
    return FactoredRational(Polynomial(nvars));
  }

  const Polynomial& num() const { return num_; }
  const std::vector<Polynomial>& den_factors() const { return den_; }
  bool is_zero() const { return num_.zero(); }
  bool is_polynomial() const { return den_.empty(); }
  // The value as a polynomial; throws unless the denominator is trivial.
  const Polynomial& polynomial() const;
  Polynomial den_product() const;

  FactoredRational operator-() const;
  FactoredRational operator+(const FactoredRational& o) const;
  FactoredRational operator-(const FactoredRational& o) const;
  FactoredRational operator*(const FactoredRational& o) const;
  FactoredRational inverse() const;
  bool operator==(const FactoredRational& o) const;
  bool operator!=(const FactoredRational& o) const { return !(*this == o); }

  Rational evaluate(const std::vector<Rational>& point) const;
  std::string str() const;

 private:
  void reduce();

  Polynomial num_;
  std::vector<Polynomial> den_;  // primitive linear forms, sorted
};

// Writes a homogeneous polynomial as scale * product of primitive linear
// forms; nullopt when no such factorisation exists over Q.
std::optional<std::pair<Rational, std::vector<Polynomial>>>
factor_into_linear_forms(const Polynomial& p);

void to_json(nlohmann::json& j, const FactoredRational& f);
void from_json(const nlohmann::json& j, FactoredRational& f);

}  // namespace gkmcycle

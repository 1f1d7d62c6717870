#include "gkmcycle/factored.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gkmcycle {

FactoredRational::FactoredRational(Polynomial num) : num_(std::move(num)) {}

FactoredRational::FactoredRational(Polynomial num,
                                   std::vector<Polynomial> den_factors)
    : num_(std::move(num)) {
  for (auto& L : den_factors) {
    auto [scale, prim] = primitive_linear(L);
    num_ = num_ * (Rational(1) / scale);
    den_.push_back(prim);
  }
  reduce();
}

const Polynomial& FactoredRational::polynomial() const {
  if (!den_.empty()) throw std::domain_error("denominator is not trivial");
  return num_;
}

Polynomial FactoredRational::den_product() const {
  int nv = num_.nvars();
  for (const auto& L : den_) nv = std::max(nv, L.nvars());
  Polynomial p = Polynomial::constant(nv, 1);
  for (const auto& L : den_) p = p * L;
  return p;
}

void FactoredRational::reduce() {
  if (num_.zero()) {
    den_.clear();
    return;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = den_.begin(); it != den_.end(); ++it) {
      if (auto q = divide_by_linear(num_, *it)) {
        num_ = *q;
        den_.erase(it);
        progress = true;
        break;
      }
    }
  }
  std::sort(den_.begin(), den_.end(), [](const auto& a, const auto& b) {
    return Polynomial::compare(a, b) < 0;
  });
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {
std::map<Polynomial, int, bool (*)(const Polynomial&, const Polynomial&)>
multiplicities(const std::vector<Polynomial>& factors) {
  auto less = +[](const Polynomial& a, const Polynomial& b) {
    return Polynomial::compare(a, b) < 0;
  };
  std::map<Polynomial, int, bool (*)(const Polynomial&, const Polynomial&)>
      m(less);
  for (const auto& L : factors) m[L] += 1;
  return m;
}
}  // namespace

FactoredRational FactoredRational::operator+(const FactoredRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  auto ma = multiplicities(den_), mb = multiplicities(o.den_);
  auto lcm = ma;
  for (const auto& [L, k] : mb) {
    auto it = lcm.find(L);
    if (it == lcm.end())
      lcm.emplace(L, k);
    else
      it->second = std::max(it->second, k);
  }
  Polynomial na = num_, nb = o.num_;
  std::vector<Polynomial> den;
  for (const auto& [L, k] : lcm) {
    int ka = ma.count(L) ? ma.at(L) : 0;
    int kb = mb.count(L) ? mb.at(L) : 0;
    for (int t = 0; t < k - ka; ++t) na = na * L;
    for (int t = 0; t < k - kb; ++t) nb = nb * L;
    for (int t = 0; t < k; ++t) den.push_back(L);
  }
  FactoredRational r;
  r.num_ = na + nb;
  r.den_ = den;
  r.reduce();
  return r;
}

FactoredRational FactoredRational::operator-(const FactoredRational& o) const {
  return *this + (-o);
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
  FactoredRational r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  r.reduce();
  return r;
}

FactoredRational FactoredRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  auto fac = factor_into_linear_forms(num_);
  if (!fac)
    throw std::domain_error(
        "numerator does not factor into linear forms: " + num_.str());
  const auto& [scale, factors] = *fac;
  FactoredRational r;
  r.num_ = den_product() * (Rational(1) / scale);
  r.den_ = factors;
  r.reduce();
  return r;
}

bool FactoredRational::operator==(const FactoredRational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

Rational FactoredRational::evaluate(const std::vector<Rational>& point) const {
  Rational d = 1;
  for (const auto& L : den_) {
    Rational v = L.evaluate(point);
    if (v == 0) throw std::domain_error("denominator vanishes at point");
    d *= v;
  }
  return num_.evaluate(point) / d;
}

std::string FactoredRational::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream out;
  out << "(" << num_.str() << ") / ";
  for (const auto& L : den_) out << "(" << L.str() << ")";
  return out.str();
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> divs;
  if (v == 0 || v > mpz_class("1000000000000")) return divs;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  return divs;
}

// Rational roots of sum_k a_k r^k via the rational root bound.
std::vector<Rational> rational_roots(const std::vector<Rational>& a) {
  int lo = 0, hi = (int)a.size() - 1;
  while (hi >= 0 && a[hi] == 0) --hi;
  while (lo <= hi && a[lo] == 0) ++lo;
  std::vector<Rational> roots;
  if (hi < 0 || lo > hi) return roots;
  if (lo == hi) return roots;  // only the root r = 0, handled elsewhere
  mpz_class den_lcm = 1;
  for (int k = lo; k <= hi; ++k) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            a[k].get_den().get_mpz_t());
  }
  mpz_class c0 = a[lo].get_num() * (den_lcm / a[lo].get_den());
  mpz_class cl = a[hi].get_num() * (den_lcm / a[hi].get_den());
  for (const auto& p : divisors(c0)) {
    for (const auto& q : divisors(cl)) {
      Rational r(p, q);
      r.canonicalize();
      for (int sign = 0; sign < 2; ++sign) {
        Rational cand = sign ? -r : r;
        Rational val = 0, pw = 1;
        for (int k = 0; k <= hi; ++k) {
          val += a[k] * pw;
          pw *= cand;
        }
        if (val == 0) roots.push_back(cand);
      }
    }
  }
  return roots;
}

std::optional<Polynomial> find_linear_factor(const Polynomial& q);

}  // namespace

std::optional<std::pair<Rational, std::vector<Polynomial>>>
factor_into_linear_forms(const Polynomial& p) {
  if (p.zero() || !p.homogeneous()) return std::nullopt;
  Polynomial work = p;
  std::vector<Polynomial> factors;
  while (work.degree() >= 1) {
    auto L = find_linear_factor(work);
    if (!L) return std::nullopt;
    auto quot = divide_by_linear(work, *L);
    if (!quot) return std::nullopt;
    work = *quot;
    factors.push_back(*L);
  }
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    return Polynomial::compare(a, b) < 0;
  });
  Rational scale = work.coeff(Exponents(work.nvars() + 1, 0));
  return std::make_pair(scale, factors);
}

namespace {

std::optional<Polynomial> find_linear_factor(const Polynomial& q) {
  int nv = q.nvars();
  if (q.degree() == 1) return primitive_linear(q).second;
  int pivot = -1;
  for (int v = 1; v <= nv && pivot < 0; ++v) {
    for (const auto& [m, c] : q.terms()) {
      if (m[v] > 0) {
        pivot = v;
        break;
      }
    }
  }
  if (pivot < 0) pivot = 0;
  Polynomial x = Polynomial::variable(nv, pivot);
  Polynomial q0(nv);
  int dmax = 0;
  std::vector<Polynomial> c;
  for (const auto& [m, k] : q.terms()) dmax = std::max(dmax, m[pivot]);
  c.assign(dmax + 1, Polynomial(nv));
  for (const auto& [m, k] : q.terms()) {
    Exponents base = m;
    int deg = base[pivot];
    base[pivot] = 0;
    Polynomial t(nv);
    t.add_term(base, k);
    c[deg] += t;
  }
  q0 = c[0];
  if (q0.zero()) return x;
  auto sub = factor_into_linear_forms(q0);
  if (!sub) return std::nullopt;
  std::vector<Polynomial> cands;
  for (const auto& M : sub->second) {
    bool seen = false;
    for (const auto& other : cands) seen = seen || other == M;
    if (!seen) cands.push_back(M);
  }
  for (const auto& M : cands) {
    if (divide_by_linear(q, M)) return M;
    // A factor touching the pivot variable restricts to a multiple of M;
    // search x + r*M over the rational roots of one witness coefficient.
    std::vector<Polynomial> P(dmax + 1, Polynomial(nv));
    Polynomial mk = Polynomial::constant(nv, 1);
    for (int k = 0; k <= dmax; ++k) {
      P[k] = mk * c[k];
      if (k < dmax) mk = mk * M;
    }
    std::map<Exponents, std::vector<Rational>, TermOrder> witness;
    for (int k = 0; k <= dmax; ++k) {
      for (const auto& [m, coef] : P[k].terms()) {
        auto& vec = witness[m];
        vec.resize(dmax + 1, 0);
        vec[k] = (k % 2 == 0) ? coef : -coef;
      }
    }
    if (witness.empty()) continue;
    for (const auto& r : rational_roots(witness.begin()->second)) {
      Polynomial L = x + M * r;
      if (!is_linear_form(L)) continue;
      if (divide_by_linear(q, L)) return primitive_linear(L).second;
    }
  }
  return std::nullopt;
}

}  // namespace

void to_json(nlohmann::json& j, const FactoredRational& f) {
  nlohmann::json den = nlohmann::json::array();
  for (const auto& L : f.den_factors()) {
    nlohmann::json lj;
    to_json(lj, L);
    den.push_back(lj);
  }
  nlohmann::json num;
  to_json(num, f.num());
  j = {{"num", num}, {"den_factors", den}};
}

void from_json(const nlohmann::json& j, FactoredRational& f) {
  Polynomial num = j.at("num").get<Polynomial>();
  std::vector<Polynomial> den;
  for (const auto& lj : j.at("den_factors")) {
    Polynomial L = lj.get<Polynomial>();
    if (!is_linear_form(L)) throw std::runtime_error("bad denominator factor");
    den.push_back(L);
  }
  f = FactoredRational(std::move(num), std::move(den));
}

}  // namespace gkmcycle

#include "gkmcycle/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gkmcycle {

int total_degree(const Exponents& m) {
  int d = 0;
  for (int k : m) d += k;
  return d;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  size_t n = std::max(a.size(), b.size());
  auto slot = [](const Exponents& m, size_t v) {
    return v < m.size() ? m[v] : 0;
  };
  for (size_t v = 1; v < n; ++v) {
    if (slot(a, v) != slot(b, v)) return slot(a, v) > slot(b, v);
  }
  return slot(a, 0) > slot(b, 0);
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars + 1, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int slot) {
  if (slot < 0 || slot > nvars) throw std::invalid_argument("bad variable");
  Polynomial p(nvars);
  Exponents m(nvars + 1, 0);
  m[slot] = 1;
  p.add_term(m, 1);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

bool Polynomial::homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) != d) return false;
  }
  return true;
}

Rational Polynomial::coeff(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& m, const Rational& c) {
  if ((int)m.size() != nvars_ + 1) throw std::invalid_argument("bad exponent");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {
int merged_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.zero() || b.zero() || a.nvars() == b.nvars())
    return std::max(a.nvars(), b.nvars());
  throw std::invalid_argument("variable count mismatch");
}
Exponents widen(const Exponents& m, int nvars) {
  Exponents r = m;
  r.resize(nvars + 1, 0);
  return r;
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  int nv = merged_nvars(*this, o);
  if (nv != nvars_) {
    Polynomial wide(nv);
    for (const auto& [m, c] : terms_) wide.add_term(widen(m, nv), c);
    *this = wide;
  }
  for (const auto& [m, c] : o.terms()) add_term(widen(m, nv), c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  return *this += -o;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  int nv = merged_nvars(*this, o);
  Polynomial r(nv);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms()) {
      Exponents m = widen(ma, nv);
      for (size_t v = 0; v < mb.size(); ++v) m[v] += mb[v];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  return p * c;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (zero() && o.zero()) return true;
  if (nvars_ != o.nvars_) return false;
  return terms_ == o.terms_;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  TermOrder before;
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->first != ib->first) return before(ia->first, ib->first) ? -1 : 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c < 0 ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

Polynomial Polynomial::with_delta_zero() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[0] == 0) r.add_term(m, c);
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if ((int)point.size() < nvars_ + 1)
    throw std::invalid_argument("point too short");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t v = 0; v < m.size(); ++v) {
      for (int k = 0; k < m[v]; ++k) t *= point[v];
    }
    total += t;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int v = 1; v <= nvars_; ++v) {
      if (m[v] > 0) {
        mono += "e" + std::to_string(v);
        if (m[v] > 1) mono += "^" + std::to_string(m[v]);
      }
    }
    if (m[0] > 0) {
      mono += "d";
      if (m[0] > 1) mono += "^" + std::to_string(m[0]);
    }
    if (mono.empty()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str();
      out << mono;
    }
  }
  return out.str();
}

std::optional<Polynomial> exact_divide(const Polynomial& p,
                                       const Polynomial& q) {
  if (q.zero()) throw std::invalid_argument("division by zero");
  int nv = std::max(p.nvars(), q.nvars());
  Polynomial rem = p + Polynomial(nv);
  Polynomial quot(nv);
  const auto& [mq, cq] = *q.terms().begin();
  while (!rem.zero()) {
    const auto& [mr, cr] = *rem.terms().begin();
    Exponents m = widen(mr, nv);
    bool ok = true;
    for (size_t v = 0; v < mq.size(); ++v) {
      m[v] -= mq[v];
      if (m[v] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    Polynomial t(nv);
    t.add_term(m, cr / cq);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

bool is_linear_form(const Polynomial& p) {
  return !p.zero() && p.degree() == 1 && p.homogeneous();
}

namespace {
// Slot of the leading variable in the priority order e_1, ..., e_s, d.
int leading_slot(const Polynomial& L) {
  for (int v = 1; v <= L.nvars(); ++v) {
    Exponents m(L.nvars() + 1, 0);
    m[v] = 1;
    if (L.coeff(m) != 0) return v;
  }
  return 0;
}
Rational slot_coeff(const Polynomial& L, int v) {
  Exponents m(L.nvars() + 1, 0);
  m[v] = 1;
  return L.coeff(m);
}
}  // namespace

std::pair<Rational, Polynomial> primitive_linear(const Polynomial& p) {
  if (!is_linear_form(p)) throw std::invalid_argument("not a linear form");
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  for (const auto& [m, c] : p.terms()) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(num_gcd, den_lcm);
  int lead = leading_slot(p);
  if (slot_coeff(p, lead) < 0) scale = -scale;
  return {scale, p * (Rational(1) / scale)};
}

Polynomial reduce_mod_linear(const Polynomial& p, const Polynomial& L) {
  if (!is_linear_form(L)) throw std::invalid_argument("not a linear form");
  int nv = std::max(p.nvars(), L.nvars());
  int v = leading_slot(L);
  Rational a = slot_coeff(L, v);
  Polynomial x = Polynomial::variable(nv, v);
  Polynomial sub = (x * a - (L + Polynomial(nv))) * (Rational(1) / a);
  int dmax = 0;
  for (const auto& [m, c] : p.terms()) {
    if (v < (int)m.size()) dmax = std::max(dmax, m[v]);
  }
  std::vector<Polynomial> pow(dmax + 1, Polynomial(nv));
  pow[0] = Polynomial::constant(nv, 1);
  for (int k = 1; k <= dmax; ++k) pow[k] = pow[k - 1] * sub;
  Polynomial r(nv);
  for (const auto& [m, c] : p.terms()) {
    Exponents base = widen(m, nv);
    int k = base[v];
    base[v] = 0;
    Polynomial t(nv);
    t.add_term(base, c);
    r += t * pow[k];
  }
  return r;
}

std::optional<Polynomial> divide_by_linear(const Polynomial& p,
                                           const Polynomial& L) {
  if (!is_linear_form(L)) throw std::invalid_argument("not a linear form");
  int nv = std::max(p.nvars(), L.nvars());
  if (p.zero()) return Polynomial(nv);
  int v = leading_slot(L);
  Rational a = slot_coeff(L, v);
  Polynomial x = Polynomial::variable(nv, v);
  Polynomial s = (x * a - (L + Polynomial(nv))) * (Rational(1) / a);
  int dmax = 0;
  for (const auto& [m, c] : p.terms()) {
    if (v < (int)m.size()) dmax = std::max(dmax, m[v]);
  }
  if (dmax == 0) return std::nullopt;
  std::vector<Polynomial> c(dmax + 1, Polynomial(nv));
  for (const auto& [m, k] : p.terms()) {
    Exponents base = widen(m, nv);
    int deg = base[v];
    base[v] = 0;
    Polynomial t(nv);
    t.add_term(base, k);
    c[deg] += t;
  }
  std::vector<Polynomial> b(dmax, Polynomial(nv));
  b[dmax - 1] = c[dmax];
  for (int k = dmax - 1; k >= 1; --k) b[k - 1] = c[k] + s * b[k];
  Polynomial rem = c[0] + s * b[0];
  if (!rem.zero()) return std::nullopt;
  Polynomial q(nv);
  for (int k = 0; k < dmax; ++k) {
    Polynomial xk = Polynomial::constant(nv, 1);
    for (int t = 0; t < k; ++t) xk = xk * x;
    q += xk * b[k];
  }
  return q * (Rational(1) / a);
}

void to_json(nlohmann::json& j, const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"exp", m},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  j = {{"terms", terms}};
}

void from_json(const nlohmann::json& j, Polynomial& p) {
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw std::runtime_error("terms must be an array");
  p = Polynomial();
  bool first = true;
  for (const auto& t : terms) {
    Exponents m = t.at("exp").get<Exponents>();
    if (m.empty()) throw std::runtime_error("empty exponent vector");
    for (int k : m) {
      if (k < 0) throw std::runtime_error("negative exponent");
    }
    if (first) {
      p = Polynomial((int)m.size() - 1);
      first = false;
    }
    mpz_class num, den;
    if (num.set_str(t.at("num").get<std::string>(), 10) != 0 ||
        den.set_str(t.at("den").get<std::string>(), 10) != 0 || den == 0) {
      throw std::runtime_error("bad rational coefficient");
    }
    Rational c(num, den);
    c.canonicalize();
    p.add_term(m, c);
  }
}

}  // namespace gkmcycle

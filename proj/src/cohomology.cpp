#include "gkmcycle/cohomology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gkmcycle {

bool EulerTable::has(int j, int i) const {
  return entries_.count({j, i}) > 0;
}

const EulerEntry& EulerTable::entry(int j, int i) const {
  auto it = entries_.find({j, i});
  if (it == entries_.end()) {
    throw std::runtime_error("missing Euler class (" + std::to_string(j) +
                             "," + std::to_string(i) + ")");
  }
  return it->second;
}

void EulerTable::set(int j, int i, EulerEntry e) {
  if (j > i || j < 1) throw std::invalid_argument("bad Euler table key");
  entries_[{j, i}] = std::move(e);
}

FactoredRational apex_euler(const MomentGraph& g, int i) {
  Polynomial p = Polynomial::constant(g.nsegs(), 1);
  for (const auto& e : g.edges) {
    if (e.src == i) p = p * (-label_polynomial(e.label, g.nsegs()));
  }
  return FactoredRational(p);
}

FactoredRational euler_smooth_rule(const MomentGraph& g, int j, int i) {
  Polynomial p = Polynomial::constant(g.nsegs(), 1);
  for (const auto& e : g.edges) {
    if (e.dst == j && e.src <= i) p = p * label_polynomial(e.label, g.nsegs());
    if (e.src == j) p = p * (-label_polynomial(e.label, g.nsegs()));
  }
  return FactoredRational(p);
}

FactoredRational euler_via_resolution(
    const std::vector<FactoredRational>& fiber) {
  if (fiber.empty()) throw std::invalid_argument("empty fiber");
  FactoredRational sum;
  for (const auto& eu : fiber) sum = sum + eu.inverse();
  return sum.inverse();
}

std::vector<GraphEdge> gkm_check(const MomentGraph& g, const Klass& f) {
  if (f.size() != g.points.size())
    throw std::invalid_argument("class has wrong length");
  std::vector<GraphEdge> bad;
  for (const auto& e : g.edges) {
    Polynomial diff = f[e.src - 1] - f[e.dst - 1];
    if (diff.zero()) continue;
    if (!divide_by_linear(diff, label_polynomial(e.label, g.nsegs()))) {
      bad.push_back(e);
    }
  }
  return bad;
}

namespace {

void enumerate_monomials(int nvars, int degree, Exponents& cur, size_t slot,
                         std::vector<Exponents>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = degree;
    out.push_back(cur);
    cur[slot] = 0;
    return;
  }
  for (int k = degree; k >= 0; --k) {
    cur[slot] = k;
    enumerate_monomials(nvars, degree - k, cur, slot + 1, out);
  }
  cur[slot] = 0;
}

// All exponent vectors of the given total degree, canonical term order.
std::vector<Exponents> monomials(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars + 1, 0);
  // Slot priority order is e_1..e_s then d, so fill d last.
  std::vector<Exponents> raw;
  enumerate_monomials(nvars, degree, cur, 0, raw);
  out = raw;
  std::sort(out.begin(), out.end(), TermOrder());
  return out;
}

int rref(std::vector<std::vector<Rational>>& rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < (int)rows.size(); ++c) {
    int pivot = -1;
    for (size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        pivot = (int)r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if ((int)r != rank && rows[r][c] != 0) {
        Rational f = rows[r][c];
        for (size_t x = c; x < cols; ++x) rows[r][x] -= f * rows[rank][x];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

long graded_rank(const MomentGraph& g, int degree) {
  int nv = g.nsegs();
  size_t m = g.points.size();
  std::vector<Exponents> mono = monomials(nv, degree);
  std::map<Exponents, int, TermOrder> mono_id;
  for (size_t t = 0; t < mono.size(); ++t) mono_id[mono[t]] = (int)t;
  size_t cols = m * mono.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : g.edges) {
    Polynomial alpha = label_polynomial(e.label, nv);
    std::map<Exponents, int, TermOrder> reduced_id;
    std::vector<std::vector<std::pair<int, Rational>>> expand(mono.size());
    for (size_t t = 0; t < mono.size(); ++t) {
      Polynomial p(nv);
      p.add_term(mono[t], 1);
      Polynomial r = reduce_mod_linear(p, alpha);
      for (const auto& [mm, c] : r.terms()) {
        auto [it, fresh] = reduced_id.emplace(mm, (int)reduced_id.size());
        expand[t].push_back({it->second, c});
      }
    }
    size_t base = rows.size();
    rows.resize(base + reduced_id.size(),
                std::vector<Rational>(cols, Rational(0)));
    for (size_t t = 0; t < mono.size(); ++t) {
      for (const auto& [rid, c] : expand[t]) {
        rows[base + rid][(e.src - 1) * mono.size() + t] += c;
        rows[base + rid][(e.dst - 1) * mono.size() + t] -= c;
      }
    }
  }
  int rank = rref(rows);
  return (long)cols - rank;
}

namespace {
long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}
}  // namespace

bool freeness_check(const MomentGraph& g, int max_degree, std::string* why) {
  int s = g.nsegs();
  for (int d = 0; d <= max_degree; ++d) {
    long expected = 0;
    for (int dim : g.dims) {
      if (d >= dim) expected += binomial(d - dim + s, s);
    }
    long got = graded_rank(g, d);
    if (got != expected) {
      if (why) {
        *why = "degree " + std::to_string(d) + ": rank " +
               std::to_string(got) + ", cells predict " +
               std::to_string(expected);
      }
      return false;
    }
  }
  return true;
}

std::vector<Klass> flow_up_basis(const MomentGraph& g) {
  int nv = g.nsegs();
  size_t m = g.points.size();
  std::vector<Klass> basis;
  for (size_t i = 1; i <= m; ++i) {
    Klass theta(m, Polynomial(nv));
    theta[i - 1] = apex_euler(g, (int)i).polynomial();
    int deg = g.dims[i - 1];
    std::vector<Exponents> mono = monomials(nv, deg);
    for (size_t j = i + 1; j <= m; ++j) {
      std::vector<std::vector<Rational>> rows;
      for (const auto& e : g.edges) {
        if (e.src != (int)j) continue;
        Polynomial alpha = label_polynomial(e.label, nv);
        Polynomial rhs = reduce_mod_linear(theta[e.dst - 1], alpha);
        std::map<Exponents, int, TermOrder> reduced_id;
        std::vector<std::vector<std::pair<int, Rational>>> expand(mono.size());
        for (size_t t = 0; t < mono.size(); ++t) {
          Polynomial p(nv);
          p.add_term(mono[t], 1);
          Polynomial r = reduce_mod_linear(p, alpha);
          for (const auto& [mm, c] : r.terms()) {
            auto [it, fresh] = reduced_id.emplace(mm, (int)reduced_id.size());
            expand[t].push_back({it->second, c});
          }
        }
        std::vector<Rational> rvec(reduced_id.size(), 0);
        for (const auto& [mm, c] : rhs.terms()) {
          auto it = reduced_id.find(mm);
          if (it == reduced_id.end()) {
            reduced_id.emplace(mm, (int)reduced_id.size());
            rvec.push_back(0);
            it = reduced_id.find(mm);
          }
          rvec[it->second] = c;
        }
        size_t base = rows.size();
        rows.resize(base + reduced_id.size(),
                    std::vector<Rational>(mono.size() + 1, Rational(0)));
        for (size_t t = 0; t < mono.size(); ++t) {
          for (const auto& [rid, c] : expand[t]) {
            rows[base + rid][t] += c;
          }
        }
        for (size_t rid = 0; rid < rvec.size(); ++rid) {
          rows[base + rid][mono.size()] = rvec[rid];
        }
      }
      if (rows.empty()) continue;  // no constraints: canonical choice is 0
      rref(rows);
      Polynomial value(nv);
      for (const auto& row : rows) {
        size_t lead = 0;
        while (lead < mono.size() && row[lead] == 0) ++lead;
        if (lead == mono.size()) {
          if (row[mono.size()] != 0) {
            throw std::runtime_error("flow-up congruences are inconsistent");
          }
          continue;
        }
        value.add_term(mono[lead], row[mono.size()]);
      }
      theta[j - 1] = value;
    }
    basis.push_back(std::move(theta));
  }
  return basis;
}

FactoredRational local_index(const MomentGraph& g, const EulerTable& t,
                             const Klass& f, int i) {
  FactoredRational sum = FactoredRational::zero(g.nsegs());
  for (int j = 1; j <= i; ++j) {
    if (f[j - 1].zero()) continue;
    sum = sum + FactoredRational(f[j - 1]) * t.entry(j, i).eu.inverse();
  }
  return sum;
}

std::vector<Klass> unique_basis(const MomentGraph& g, const EulerTable& t) {
  size_t m = g.points.size();
  std::vector<Klass> theta = flow_up_basis(g);
  for (size_t i = 1; i <= m; ++i) {
    const FactoredRational& diag = t.entry((int)i, (int)i).eu;
    FactoredRational apex = apex_euler(g, (int)i);
    if (diag != apex) {
      auto scale = exact_divide(diag.polynomial(), apex.polynomial());
      if (!scale || scale->degree() > 0) {
        throw std::runtime_error("table diagonal is not a multiple of apex");
      }
      Rational c = scale->coeff(Exponents(g.nsegs() + 1, 0));
      for (auto& v : theta[i - 1]) v = v * c;
    }
  }
  for (size_t i = m; i >= 1; --i) {
    for (size_t j = i + 1; j <= m; ++j) {
      FactoredRational idx = local_index(g, t, theta[i - 1], (int)j);
      if (idx.is_zero()) continue;
      Polynomial c = idx.polynomial();
      for (size_t k = 0; k < m; ++k) {
        theta[i - 1][k] -= c * theta[j - 1][k];
      }
    }
    if (i == 1) break;
  }
  return theta;
}

std::map<std::pair<int, int>, std::vector<Polynomial>> structure_constants(
    const MomentGraph& g, const std::vector<Klass>& basis) {
  size_t m = g.points.size();
  int nv = g.nsegs();
  std::map<std::pair<int, int>, std::vector<Polynomial>> out;
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = i; j <= m; ++j) {
      Klass rem(m, Polynomial(nv));
      for (size_t k = 0; k < m; ++k) {
        rem[k] = basis[i - 1][k] * basis[j - 1][k];
      }
      std::vector<Polynomial> c(m, Polynomial(nv));
      for (size_t k = 1; k <= m; ++k) {
        if (rem[k - 1].zero()) continue;
        auto q = exact_divide(rem[k - 1], basis[k - 1][k - 1]);
        if (!q) {
          throw std::runtime_error("structure constant division not exact");
        }
        c[k - 1] = *q;
        for (size_t l = 0; l < m; ++l) {
          rem[l] -= c[k - 1] * basis[k - 1][l];
        }
      }
      for (const auto& p : rem) {
        if (!p.zero()) {
          throw std::runtime_error("product does not lie in the basis span");
        }
      }
      out[{(int)i, (int)j}] = std::move(c);
    }
  }
  return out;
}

std::optional<std::string> check_euler_table(const MomentGraph& g,
                                             const EulerTable& t,
                                             bool complete_columns) {
  size_t m = g.points.size();
  for (const auto& [key, entry] : t.entries()) {
    auto [j, i] = key;
    if (j < 1 || j > i || i > (int)m) return "entry outside the filtration";
    if (entry.prov == "smooth-rule" &&
        entry.eu != euler_smooth_rule(g, j, i)) {
      return "smooth-rule entry (" + std::to_string(j) + "," +
             std::to_string(i) + ") does not recompute";
    }
  }
  for (size_t i = 1; i <= m; ++i) {
    if (!t.has((int)i, (int)i)) {
      return "missing diagonal entry " + std::to_string(i);
    }
    if (t.entry((int)i, (int)i).eu != apex_euler(g, (int)i)) {
      return "diagonal entry " + std::to_string(i) +
             " differs from the outgoing labels";
    }
  }
  if (complete_columns) {
    for (size_t i = 2; i <= m; ++i) {
      int maxdim = 0;
      for (size_t j = 1; j <= i; ++j) maxdim = std::max(maxdim, g.dims[j - 1]);
      if (maxdim == 0) continue;
      FactoredRational sum = FactoredRational::zero(g.nsegs());
      for (size_t j = 1; j <= i; ++j) {
        if (!t.has((int)j, (int)i)) {
          return "column " + std::to_string(i) + " is incomplete";
        }
        sum = sum + t.entry((int)j, (int)i).eu.inverse();
      }
      if (!sum.is_zero()) {
        return "column " + std::to_string(i) + " inverses do not sum to zero";
      }
    }
  }
  return std::nullopt;
}

void to_json(nlohmann::json& j, const EulerTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  std::vector<std::pair<int, int>> keys;
  for (const auto& [key, e] : t.entries()) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
  for (const auto& [jj, ii] : keys) {
    const EulerEntry& e = t.entry(jj, ii);
    nlohmann::json ej;
    to_json(ej, e.eu);
    entries.push_back({{"j", jj}, {"i", ii}, {"eu", ej}, {"prov", e.prov}});
  }
  j = {{"entries", entries}};
}

void from_json(const nlohmann::json& j, EulerTable& t) {
  t = EulerTable();
  for (const auto& ej : j.at("entries")) {
    EulerEntry e;
    e.eu = ej.at("eu").get<FactoredRational>();
    e.prov = ej.at("prov").get<std::string>();
    if (e.prov != "smooth-rule" && e.prov != "resolution" &&
        e.prov != "external" && e.prov != "derived") {
      throw std::runtime_error("unknown provenance " + e.prov);
    }
    t.set(ej.at("j").get<int>(), ej.at("i").get<int>(), std::move(e));
  }
}

nlohmann::json basis_to_json(const std::vector<Klass>& basis) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& theta : basis) {
    nlohmann::json values = nlohmann::json::object();
    for (size_t k = 0; k < theta.size(); ++k) {
      if (theta[k].zero()) continue;
      nlohmann::json pj;
      to_json(pj, theta[k]);
      values[std::to_string(k + 1)] = pj;
    }
    out.push_back({{"values", values}});
  }
  return out;
}

std::vector<Klass> basis_from_json(const nlohmann::json& j, int points) {
  std::vector<Klass> out;
  for (const auto& cj : j) {
    Klass theta(points, Polynomial());
    for (const auto& [key, pj] : cj.at("values").items()) {
      int pos = std::stoi(key);
      if (pos < 1 || pos > points) throw std::runtime_error("bad position");
      theta[pos - 1] = pj.get<Polynomial>();
    }
    out.push_back(std::move(theta));
  }
  return out;
}

}  // namespace gkmcycle

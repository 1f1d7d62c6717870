#include "gkmcycle/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkmcycle {

namespace {
int wrap_level(int x, int n) {
  return ((x - 1) % n + n) % n + 1;
}
}  // namespace

int start_level(const Rep& rep, int seg) {
  const Segment& s = rep.segments.at(seg - 1);
  return wrap_level(s.end - s.len + 1, rep.n);
}

int level_of(const Rep& rep, int seg, int pos) {
  const Segment& s = rep.segments.at(seg - 1);
  if (pos < 0 || pos >= s.len) throw std::out_of_range("bad position");
  return wrap_level(s.end - s.len + 1 + pos, rep.n);
}

std::vector<int> dims(const Rep& rep) {
  std::vector<int> d(rep.n, 0);
  for (size_t j = 0; j < rep.segments.size(); ++j) {
    for (int p = 0; p < rep.segments[j].len; ++p) {
      d[level_of(rep, (int)j + 1, p) - 1] += 1;
    }
  }
  return d;
}

int total_dim(const Rep& rep) {
  int t = 0;
  for (const auto& s : rep.segments) t += s.len;
  return t;
}

BTables::BTables(const Rep& rep) : rep_(rep) {
  validate(rep);
  rows_.assign(rep.n, {});
  for (size_t j = 0; j < rep.segments.size(); ++j) {
    for (int p = 0; p < rep.segments[j].len; ++p) {
      rows_[level_of(rep, (int)j + 1, p) - 1].push_back({(int)j + 1, p});
    }
  }
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [&](const BVertex& a, const BVertex& b) {
      int da = rep.segments[a.seg - 1].len - 1 - a.pos;
      int db = rep.segments[b.seg - 1].len - 1 - b.pos;
      if (da != db) return da > db;
      int la = rep.segments[a.seg - 1].len, lb = rep.segments[b.seg - 1].len;
      if (la != lb) return la > lb;
      return a.seg < b.seg;
    });
  }
  index_.resize(rep.segments.size());
  for (size_t j = 0; j < rep.segments.size(); ++j) {
    index_[j].assign(rep.segments[j].len, 0);
  }
  for (const auto& row : rows_) {
    for (size_t k = 0; k < row.size(); ++k) {
      index_[row[k].seg - 1][row[k].pos] = (int)k + 1;
    }
  }
}

const std::vector<BVertex>& BTables::row(int level) const {
  return rows_.at(level - 1);
}

int BTables::index_of(int seg, int pos) const {
  return index_.at(seg - 1).at(pos);
}

BVertex BTables::vertex(int level, int index) const {
  return rows_.at(level - 1).at(index - 1);
}

void validate(const Rep& rep) {
  if (rep.n < 1) throw std::runtime_error("n must be positive");
  if (rep.segments.empty()) throw std::runtime_error("no segments");
  for (const auto& s : rep.segments) {
    if (s.len < 1) throw std::runtime_error("segment length must be positive");
    if (s.end < 1 || s.end > rep.n)
      throw std::runtime_error("segment end outside the cycle");
  }
  if (rep.e) {
    if ((int)rep.e->size() != rep.n)
      throw std::runtime_error("dimension vector has wrong length");
    std::vector<int> d = dims(rep);
    for (int i = 0; i < rep.n; ++i) {
      if ((*rep.e)[i] < 0 || (*rep.e)[i] > d[i])
        throw std::runtime_error("dimension vector out of range");
    }
  }
}

Rep embed_type_a(int n, const std::vector<std::pair<int, int>>& intervals,
                 std::optional<std::vector<int>> e) {
  Rep rep;
  rep.n = n;
  for (const auto& [a, b] : intervals) {
    if (a < 1 || b < a || b > n)
      throw std::runtime_error("bad type A interval");
    rep.segments.push_back({b, b - a + 1});
  }
  rep.e = std::move(e);
  validate(rep);
  return rep;
}

Rep approx_grassmannian(int n, int k, int N) {
  if (n < 1 || k < 0 || k > n || N < 1)
    throw std::runtime_error("bad Grassmannian parameters");
  Rep rep;
  rep.n = 1;
  for (int t = 0; t < n - k; ++t) rep.segments.push_back({1, 2 * N});
  for (int t = 0; t < 2 * k; ++t) rep.segments.push_back({1, N});
  rep.e = std::vector<int>{n * N};
  validate(rep);
  return rep;
}

void to_json(nlohmann::json& j, const Rep& rep) {
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : rep.segments) {
    segs.push_back({{"i", s.end}, {"ell", s.len}});
  }
  j = {{"n", rep.n}, {"segments", segs}};
  if (rep.e) j["e"] = *rep.e;
}

void from_json(const nlohmann::json& j, Rep& rep) {
  rep = Rep{};
  rep.n = j.at("n").get<int>();
  rep.segments.clear();
  for (const auto& sj : j.at("segments")) {
    rep.segments.push_back(
        {sj.at("i").get<int>(), sj.at("ell").get<int>()});
  }
  if (j.contains("e")) rep.e = j.at("e").get<std::vector<int>>();
  validate(rep);
}

}  // namespace gkmcycle

#include "gkmcycle/fixed_points.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gkmcycle {

std::string FixedPoint::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t j = 0; j < tails.size(); ++j) {
    if (j) out << ",";
    out << tails[j];
  }
  out << ")";
  return out.str();
}

std::vector<FixedPoint> fixed_points(const Rep& rep) {
  validate(rep);
  if (!rep.e) throw std::runtime_error("no dimension vector");
  const std::vector<int>& e = *rep.e;
  size_t nsegs = rep.segments.size();
  // capacity[j][i] = vertices of segments j.. lying over level i+1
  std::vector<std::vector<int>> capacity(nsegs + 1,
                                         std::vector<int>(rep.n, 0));
  for (int j = (int)nsegs - 1; j >= 0; --j) {
    capacity[j] = capacity[j + 1];
    for (int p = 0; p < rep.segments[j].len; ++p) {
      capacity[j][level_of(rep, j + 1, p) - 1] += 1;
    }
  }
  std::vector<FixedPoint> out;
  std::vector<int> tails(nsegs, 0), count(rep.n, 0);
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == nsegs) {
      if (count == e) out.push_back({tails});
      return;
    }
    for (int i = 0; i < rep.n; ++i) {
      if (count[i] > e[i] || count[i] + capacity[j][i] < e[i]) return;
    }
    const Segment& s = rep.segments[j];
    for (int t = 0; t <= s.len; ++t) {
      if (t > 0) count[level_of(rep, (int)j + 1, s.len - t) - 1] += 1;
      bool feasible = true;
      for (int i = 0; i < rep.n && feasible; ++i) {
        feasible = count[i] <= e[i];
      }
      if (feasible) {
        tails[j] = t;
        self(self, j + 1);
      }
    }
    for (int t = 1; t <= s.len; ++t) {
      count[level_of(rep, (int)j + 1, s.len - t) - 1] -= 1;
    }
    tails[j] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_kept(const BTables& B, const FixedPoint& fp, int seg, int pos) {
  const Segment& s = B.rep().segments.at(seg - 1);
  return pos >= s.len - fp.tails.at(seg - 1);
}

std::vector<int> kept_indices(const BTables& B, const FixedPoint& fp,
                              int level) {
  std::vector<int> kept;
  const auto& row = B.row(level);
  for (size_t t = 0; t < row.size(); ++t) {
    if (is_kept(B, fp, row[t].seg, row[t].pos)) kept.push_back((int)t + 1);
  }
  return kept;
}

namespace {
// The relation of a triple must hold t steps up both segments as long as the
// k side is still kept; checks the step-t pair.
bool chain_ok(const BTables& B, const FixedPoint& fp, const BVertex& vj,
              const BVertex& vk, int depth) {
  if (vj.pos < depth) return false;
  for (int t = 1; t <= depth; ++t) {
    int ij = B.index_of(vj.seg, vj.pos - t);
    int ik = B.index_of(vk.seg, vk.pos - t);
    if (ij <= ik) return false;
    if (is_kept(B, fp, vj.seg, vj.pos - t)) return false;
  }
  return true;
}
}  // namespace

std::vector<Triple> terminal_triples(const BTables& B, const FixedPoint& fp) {
  const Rep& rep = B.rep();
  std::vector<Triple> out;
  for (int i = 1; i <= rep.n; ++i) {
    const auto& row = B.row(i);
    std::vector<int> kept = kept_indices(B, fp, i);
    for (int k : kept) {
      const BVertex vk = row[k - 1];
      int depth = vk.pos - (rep.segments[vk.seg - 1].len - fp.tails[vk.seg - 1]);
      for (int j = k + 1; j <= (int)row.size(); ++j) {
        const BVertex vj = row[j - 1];
        if (is_kept(B, fp, vj.seg, vj.pos)) continue;
        bool ends = vj.pos == rep.segments[vj.seg - 1].len - 1;
        bool feeds_kept = !ends && is_kept(B, fp, vj.seg, vj.pos + 1);
        if (!ends && !feeds_kept) continue;
        if (!chain_ok(B, fp, vj, vk, depth)) continue;
        out.push_back({i, j, k});
      }
    }
  }
  return out;
}

int cell_dimension(const BTables& B, const FixedPoint& fp) {
  return (int)terminal_triples(B, fp).size();
}

std::vector<int> betti_numbers(const BTables& B,
                               const std::vector<FixedPoint>& fps) {
  std::vector<int> counts;
  for (const auto& fp : fps) {
    int d = cell_dimension(B, fp);
    if ((int)counts.size() <= d) counts.resize(d + 1, 0);
    counts[d] += 1;
  }
  return counts;
}

SubRep point_subrep(const BTables& B, const FixedPoint& fp) {
  const Rep& rep = B.rep();
  SubRep sub;
  sub.by_level.resize(rep.n);
  for (int i = 1; i <= rep.n; ++i) {
    size_t m = B.row(i).size();
    for (int k : kept_indices(B, fp, i)) {
      std::vector<Rational> v(m, 0);
      v[k - 1] = 1;
      sub.by_level[i - 1].push_back(std::move(v));
    }
  }
  return sub;
}

SubRep orbit_representative(const BTables& B, const FixedPoint& fp,
                            const Triple& t) {
  const Rep& rep = B.rep();
  SubRep sub = point_subrep(B, fp);
  const BVertex vj = B.vertex(t.level, t.j);
  const BVertex vk = B.vertex(t.level, t.k);
  int depth = vk.pos - (rep.segments[vk.seg - 1].len - fp.tails[vk.seg - 1]);
  for (int s = 0; s <= depth; ++s) {
    int lvl = level_of(rep, vk.seg, vk.pos - s);
    int ik = B.index_of(vk.seg, vk.pos - s);
    int ij = B.index_of(vj.seg, vj.pos - s);
    auto& vecs = sub.by_level[lvl - 1];
    std::vector<int> kept = kept_indices(B, fp, lvl);
    auto at = std::find(kept.begin(), kept.end(), ik);
    if (at == kept.end()) throw std::logic_error("broken triple chain");
    vecs[at - kept.begin()][ij - 1] = 1;
  }
  return sub;
}

namespace {
// Reduced row echelon form over Q; returns the rank.
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
        for (size_t x = 0; x < cols; ++x) rows[r][x] -= f * rows[rank][x];
      }
    }
    ++rank;
  }
  return rank;
}
}  // namespace

bool check_subrepresentation(const BTables& B, const std::vector<int>& e,
                             const SubRep& sub, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Rep& rep = B.rep();
  if ((int)sub.by_level.size() != rep.n) return fail("wrong level count");
  for (int i = 1; i <= rep.n; ++i) {
    const auto& vecs = sub.by_level[i - 1];
    if ((int)vecs.size() != e[i - 1])
      return fail("wrong count at level " + std::to_string(i));
    for (const auto& v : vecs) {
      if (v.size() != B.row(i).size())
        return fail("wrong coordinate length at level " + std::to_string(i));
    }
    auto copy = vecs;
    if (rref(copy) != e[i - 1])
      return fail("dependent vectors at level " + std::to_string(i));
  }
  for (int i = 1; i <= rep.n; ++i) {
    int next = i % rep.n + 1;
    const auto& target = sub.by_level[next - 1];
    size_t mnext = B.row(next).size();
    std::vector<std::vector<Rational>> span = target;
    int base_rank = rref(span);
    for (const auto& v : sub.by_level[i - 1]) {
      std::vector<Rational> img(mnext, 0);
      const auto& row = B.row(i);
      for (size_t t = 0; t < row.size(); ++t) {
        if (v[t] == 0) continue;
        const Segment& s = rep.segments[row[t].seg - 1];
        if (row[t].pos + 1 >= s.len) continue;
        img[B.index_of(row[t].seg, row[t].pos + 1) - 1] += v[t];
      }
      auto extended = span;
      extended.push_back(img);
      if (rref(extended) != base_rank)
        return fail("image not contained at level " + std::to_string(i));
    }
  }
  return true;
}

void to_json(nlohmann::json& j, const FixedPoint& fp) {
  j = {{"tails", fp.tails}};
}

void from_json(const nlohmann::json& j, FixedPoint& fp) {
  fp.tails = j.at("tails").get<std::vector<int>>();
}

}  // namespace gkmcycle

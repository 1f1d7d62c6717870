#include "gkmcycle/moment_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gkmcycle {

int MomentGraph::position(const FixedPoint& fp) const {
  for (size_t t = 0; t < points.size(); ++t) {
    if (points[t] == fp) return (int)t + 1;
  }
  throw std::out_of_range("fixed point not in graph");
}

std::vector<std::pair<Mutation, FixedPoint>> mutations_from(
    const BTables& B, const FixedPoint& fp) {
  const Rep& rep = B.rep();
  int nsegs = (int)rep.segments.size();
  std::vector<std::pair<Mutation, FixedPoint>> out;
  for (int a = 1; a <= nsegs; ++a) {
    const Segment& sa = rep.segments[a - 1];
    for (int m = 1; m <= fp.tails[a - 1]; ++m) {
      for (int b = 1; b <= nsegs; ++b) {
        if (b == a) continue;
        const Segment& sb = rep.segments[b - 1];
        if (fp.tails[b - 1] + m > sb.len) continue;
        int src_pos = sa.len - fp.tails[a - 1] + m - 1;
        int dst_pos = sb.len - fp.tails[b - 1] - 1;
        if (level_of(rep, a, src_pos) != level_of(rep, b, dst_pos)) continue;
        if (B.index_of(b, dst_pos) <= B.index_of(a, src_pos)) continue;
        FixedPoint target = fp;
        target.tails[a - 1] -= m;
        target.tails[b - 1] += m;
        out.push_back({{a, m, b}, target});
      }
    }
  }
  return out;
}

namespace {

int thread_count() {
  const char* env = std::getenv("GKM_CYCLE_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  if (t == 0) t = (int)std::thread::hardware_concurrency();
  return std::min(std::max(t, 1), 64);
}

struct LocalWork {
  int dim = 0;
  std::vector<std::pair<Mutation, int>> edges;  // target index
};

}  // namespace

MomentGraph build_moment_graph(const Rep& rep) {
  validate(rep);
  BTables B(rep);
  std::vector<FixedPoint> fps = fixed_points(rep);
  std::map<FixedPoint, int> index;
  for (size_t t = 0; t < fps.size(); ++t) index[fps[t]] = (int)t;

  auto work_on = [&](size_t lo, size_t hi) {
    std::vector<LocalWork> out(hi - lo);
    for (size_t t = lo; t < hi; ++t) {
      LocalWork& w = out[t - lo];
      w.dim = cell_dimension(B, fps[t]);
      for (const auto& [mu, target] : mutations_from(B, fps[t])) {
        auto it = index.find(target);
        if (it == index.end())
          throw std::logic_error("mutation left the fixed point set");
        w.edges.push_back({mu, it->second});
      }
    }
    return out;
  };

  std::vector<LocalWork> work(fps.size());
  int threads = thread_count();
  if (threads <= 1 || fps.size() < 2) {
    work = work_on(0, fps.size());
  } else {
    size_t chunk = (fps.size() + threads - 1) / threads;
    std::vector<std::future<std::vector<LocalWork>>> parts;
    for (size_t lo = 0; lo < fps.size(); lo += chunk) {
      size_t hi = std::min(lo + chunk, fps.size());
      parts.push_back(std::async(std::launch::async, work_on, lo, hi));
    }
    size_t at = 0;
    for (auto& part : parts) {
      for (auto& w : part.get()) work[at++] = std::move(w);
    }
  }

  // Filtration: every edge target must appear before its source; ties are
  // resolved by cell dimension and then by the tails tuple.
  size_t m = fps.size();
  std::vector<int> remaining(m, 0);
  std::vector<std::vector<int>> waiting(m);  // target -> sources
  for (size_t t = 0; t < m; ++t) {
    remaining[t] = (int)work[t].edges.size();
    for (const auto& [mu, dst] : work[t].edges) waiting[dst].push_back((int)t);
  }
  auto ready_before = [&](int x, int y) {
    if (work[x].dim != work[y].dim) return work[x].dim < work[y].dim;
    return fps[x] < fps[y];
  };
  std::set<int, decltype(ready_before)> ready(ready_before);
  for (size_t t = 0; t < m; ++t) {
    if (remaining[t] == 0) ready.insert((int)t);
  }
  std::vector<int> order;  // order[pos-1] = original index
  while (!ready.empty()) {
    int t = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(t);
    for (int src : waiting[t]) {
      if (--remaining[src] == 0) ready.insert(src);
    }
  }
  if (order.size() != m)
    throw std::runtime_error("mutation digraph has a cycle");

  std::vector<int> pos(m, 0);
  for (size_t p = 0; p < m; ++p) pos[order[p]] = (int)p + 1;

  MomentGraph g;
  g.rep = rep;
  g.points.resize(m);
  g.dims.resize(m);
  for (size_t t = 0; t < m; ++t) {
    g.points[pos[t] - 1] = fps[t];
    g.dims[pos[t] - 1] = work[t].dim;
  }
  for (size_t t = 0; t < m; ++t) {
    for (const auto& [mu, dst] : work[t].edges) {
      const BVertex va{mu.a, rep.segments[mu.a - 1].len -
                                 fps[t].tails[mu.a - 1] + mu.m - 1};
      const BVertex vb{mu.b, rep.segments[mu.b - 1].len -
                                 fps[t].tails[mu.b - 1] - 1};
      EdgeLabel label{mu.a, mu.b, vb.pos - va.pos};
      g.edges.push_back({pos[t], pos[dst], label, mu});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x,
                                               const GraphEdge& y) {
    return std::tie(x.src, x.dst, x.mu.a, x.mu.m, x.mu.b) <
           std::tie(y.src, y.dst, y.mu.a, y.mu.m, y.mu.b);
  });
  return g;
}

Polynomial label_polynomial(const EdgeLabel& label, int nsegs) {
  Polynomial p = Polynomial::variable(nsegs, label.b) -
                 Polynomial::variable(nsegs, label.a);
  if (label.delta != 0) {
    p += Polynomial::variable(nsegs, 0) * Rational(label.delta);
  }
  return p;
}

std::string label_str(const EdgeLabel& label) {
  std::string s = "e" + std::to_string(label.b) + "-e" +
                  std::to_string(label.a);
  if (label.delta != 0) {
    s += label.delta > 0 ? "+" : "-";
    int mag = std::abs(label.delta);
    if (mag != 1) s += std::to_string(mag);
    s += "d";
  }
  return s;
}

MomentGraph project_delta(MomentGraph g) {
  for (auto& e : g.edges) e.label.delta = 0;
  return g;
}

std::string to_dot(const MomentGraph& g) {
  std::ostringstream out;
  out << "digraph moment_graph {\n";
  for (const auto& fp : g.points) {
    out << "  \"" << fp.str() << "\";\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << g.points[e.src - 1].str() << "\" -> \""
        << g.points[e.dst - 1].str() << "\" [label=\"" << label_str(e.label)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void to_json(nlohmann::json& j, const MomentGraph& g) {
  nlohmann::json verts = nlohmann::json::array();
  for (size_t t = 0; t < g.points.size(); ++t) {
    verts.push_back({{"tails", g.points[t].tails},
                     {"dim", g.dims[t]},
                     {"pos", (int)t + 1}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) {
    edges.push_back(
        {{"src", e.src},
         {"dst", e.dst},
         {"label",
          {{"a", e.label.a}, {"b", e.label.b}, {"delta", e.label.delta}}},
         {"mutation", {{"a", e.mu.a}, {"m", e.mu.m}, {"b", e.mu.b}}}});
  }
  j = {{"vertices", verts}, {"edges", edges}};
}

}  // namespace gkmcycle

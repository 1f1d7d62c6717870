#pragma once
// Moment graph of the quiver Grassmannian: vertices are the torus fixed
// points in filtration order, edges are the one-dimensional orbits, found as
// fundamental mutations that move a leading piece of one kept tail down onto
// another segment.

#include <string>
#include <vector>

#include "gkmcycle/fixed_points.hpp"
#include "gkmcycle/polynomial.hpp"
#include "gkmcycle/rep.hpp"
#include "json.hpp"

namespace gkmcycle {

struct Mutation {
  int a = 0;  // segment losing m vectors of its tail
  int m = 0;
  int b = 0;  // segment receiving them
  bool operator==(const Mutation&) const = default;
};

// The character e_b - e_a + delta*d of the orbit coordinate.
struct EdgeLabel {
  int a = 0;
  int b = 0;
  int delta = 0;
  bool operator==(const EdgeLabel&) const = default;
};

struct GraphEdge {
  int src = 0;  // 1-based filtration position, src flows down to dst
  int dst = 0;
  EdgeLabel label;
  Mutation mu;
  bool operator==(const GraphEdge&) const = default;
};

struct MomentGraph {
  Rep rep;
  std::vector<FixedPoint> points;  // filtration order, position = index + 1
  std::vector<int> dims;
  std::vector<GraphEdge> edges;    // sorted by (src, dst, mu)

  int nsegs() const { return (int)rep.segments.size(); }
  int position(const FixedPoint& fp) const;  // 1-based, throws if absent
};

// All mutations available at fp, with the resulting fixed point.
std::vector<std::pair<Mutation, FixedPoint>> mutations_from(
    const BTables& B, const FixedPoint& fp);

// Honors the GKM_CYCLE_THREADS environment variable; the result does not
// depend on it.
MomentGraph build_moment_graph(const Rep& rep);

Polynomial label_polynomial(const EdgeLabel& label, int nsegs);
std::string label_str(const EdgeLabel& label);

MomentGraph project_delta(MomentGraph g);

std::string to_dot(const MomentGraph& g);
void to_json(nlohmann::json& j, const MomentGraph& g);

}  // namespace gkmcycle

#pragma once
// Equivariant cohomology of the quiver Grassmannian through its moment
// graph: divisibility checks, graded ranks, flow-up bases, equivariant Euler
// classes at fixed points, local indices and the basis they single out, and
// multiplication structure constants.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkmcycle/factored.hpp"
#include "gkmcycle/moment_graph.hpp"
#include "json.hpp"

namespace gkmcycle {

// One cohomology class: a polynomial per fixed point, filtration order.
using Klass = std::vector<Polynomial>;

struct EulerEntry {
  FactoredRational eu;
  std::string prov;  // smooth-rule, resolution, external or derived
};

// Euler classes Eu(x_j, Z_i) of the filtration steps, keyed by (j, i), j <= i.
class EulerTable {
 public:
  bool has(int j, int i) const;
  const EulerEntry& entry(int j, int i) const;
  void set(int j, int i, EulerEntry e);
  const std::map<std::pair<int, int>, EulerEntry>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<int, int>, EulerEntry> entries_;
};

// Product of the negated labels of the edges leaving x_i: the Euler class at
// the open point of its own filtration step.
FactoredRational apex_euler(const MomentGraph& g, int i);

// Euler class of x_j inside Z_i when Z_i is smooth at x_j: incoming labels
// from positions <= i times negated outgoing labels.
FactoredRational euler_smooth_rule(const MomentGraph& g, int j, int i);

// Euler class of the image point from the Euler classes along the fiber of a
// resolution: the inverse of the sum of inverses.
FactoredRational euler_via_resolution(
    const std::vector<FactoredRational>& fiber);

// Edges whose label does not divide the difference of the end values.
std::vector<GraphEdge> gkm_check(const MomentGraph& g, const Klass& f);

// Dimension of the degree-d slice of the algebra of matching tuples.
long graded_rank(const MomentGraph& g, int degree);

// Compares graded ranks with the count predicted by one generator per cell
// in the dimension of that cell.
bool freeness_check(const MomentGraph& g, int max_degree,
                    std::string* why = nullptr);

// Classes theta_i supported on positions >= i with apex_euler at position i;
// the canonical solution zeroes every free coefficient.
std::vector<Klass> flow_up_basis(const MomentGraph& g);

// Sum over j <= i of f_j / Eu(x_j, Z_i).
FactoredRational local_index(const MomentGraph& g, const EulerTable& t,
                             const Klass& f, int i);

// The flow-up basis with every off-apex local index removed; each class has
// local index 1 at its own position and 0 elsewhere.
std::vector<Klass> unique_basis(const MomentGraph& g, const EulerTable& t);

// c[k] with theta_i * theta_j = sum_k c[k] theta_k, divisions exact.
std::map<std::pair<int, int>, std::vector<Polynomial>> structure_constants(
    const MomentGraph& g, const std::vector<Klass>& basis);

// Structural checks a table must pass: diagonal entries equal apex_euler,
// smooth-rule entries recompute, and when complete_columns is set the
// inverses in each column of a positive-dimensional step sum to zero.
std::optional<std::string> check_euler_table(const MomentGraph& g,
                                             const EulerTable& t,
                                             bool complete_columns);

void to_json(nlohmann::json& j, const EulerTable& t);
void from_json(const nlohmann::json& j, EulerTable& t);

nlohmann::json basis_to_json(const std::vector<Klass>& basis);
std::vector<Klass> basis_from_json(const nlohmann::json& j, int points);

}  // namespace gkmcycle

#pragma once
// Torus fixed points of the quiver Grassmannian: tuples recording how many
// trailing vectors of each segment are kept. Terminal triples count the
// coordinates of the attracting cell around a fixed point.

#include <string>
#include <vector>

#include "gkmcycle/rep.hpp"
#include "json.hpp"

namespace gkmcycle {

struct FixedPoint {
  std::vector<int> tails;  // tails[j] in 0..len of segment j+1
  bool operator==(const FixedPoint&) const = default;
  bool operator<(const FixedPoint& o) const { return tails < o.tails; }
  std::string str() const;
};

// All fixed points for rep.e, sorted lexicographically by tails.
std::vector<FixedPoint> fixed_points(const Rep& rep);

bool is_kept(const BTables& B, const FixedPoint& fp, int seg, int pos);
// Ascending 1-based indices of kept vectors inside B^(level).
std::vector<int> kept_indices(const BTables& B, const FixedPoint& fp,
                              int level);

// Cell coordinate at `level`: row j feeds row k of the kept tail there, and
// the same relation propagates up both segments while the k side stays kept.
struct Triple {
  int level = 1;
  int j = 0;  // 1-based index in B^(level), not kept
  int k = 0;  // 1-based index in B^(level), kept
  bool operator==(const Triple&) const = default;
};

std::vector<Triple> terminal_triples(const BTables& B, const FixedPoint& fp);
int cell_dimension(const BTables& B, const FixedPoint& fp);

// Number of fixed points with each cell dimension, index = dimension.
std::vector<int> betti_numbers(const BTables& B,
                               const std::vector<FixedPoint>& fps);

// Bases of a candidate subrepresentation, one list of coordinate vectors per
// cycle vertex, coordinates in the order of B^(i).
struct SubRep {
  std::vector<std::vector<std::vector<Rational>>> by_level;
};

SubRep point_subrep(const BTables& B, const FixedPoint& fp);
// Point of the one-dimensional orbit attached to a terminal triple.
SubRep orbit_representative(const BTables& B, const FixedPoint& fp,
                            const Triple& t);
bool check_subrepresentation(const BTables& B, const std::vector<int>& e,
                             const SubRep& sub, std::string* why = nullptr);

void to_json(nlohmann::json& j, const FixedPoint& fp);
void from_json(const nlohmann::json& j, FixedPoint& fp);

}  // namespace gkmcycle

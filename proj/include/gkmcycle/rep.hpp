#pragma once
// Nilpotent representations of the equioriented cycle quiver with n vertices,
// presented as direct sums of segment modules U(i; ell): ell basis vectors
// ending at cycle vertex i, each arrow mapping a vector to its successor.

#include <optional>
#include <string>
#include <vector>

#include "gkmcycle/polynomial.hpp"
#include "json.hpp"

namespace gkmcycle {

struct Segment {
  int end = 1;  // cycle vertex where the segment dies (1-based)
  int len = 1;
  bool operator==(const Segment&) const = default;
};

struct Rep {
  int n = 1;
  std::vector<Segment> segments;          // segment ids are 1-based
  std::optional<std::vector<int>> e;      // subrepresentation dimension vector
  bool operator==(const Rep&) const = default;
};

// Cycle vertex carrying position pos (0-based from the segment start).
int level_of(const Rep& rep, int seg, int pos);
int start_level(const Rep& rep, int seg);
// Dimension of the representation at each cycle vertex (index 0 = vertex 1).
std::vector<int> dims(const Rep& rep);
int total_dim(const Rep& rep);

// One basis vector of the representation, drawn as a coefficient quiver node.
struct BVertex {
  int seg = 0;  // 1-based
  int pos = 0;
  bool operator==(const BVertex&) const = default;
};

// Ordered bases B^(i): vertices far from their segment end come first, ties
// broken by longer segment first and then by smaller segment id, so that
// ending points sit at the bottom with longer segments above shorter ones.
class BTables {
 public:
  explicit BTables(const Rep& rep);

  const Rep& rep() const { return rep_; }
  int levels() const { return (int)rows_.size(); }
  const std::vector<BVertex>& row(int level) const;  // level is 1-based
  // 1-based index of (seg, pos) inside B^(level_of(seg, pos)).
  int index_of(int seg, int pos) const;
  BVertex vertex(int level, int index) const;  // index is 1-based

 private:
  Rep rep_;
  std::vector<std::vector<BVertex>> rows_;
  std::vector<std::vector<int>> index_;  // [seg-1][pos] -> 1-based index
};

// Validates segment data and e (when present) against the level dimensions.
void validate(const Rep& rep);

// Interval module of the equioriented type A quiver on vertices a..b, read
// as the cycle segment ending at b with length b-a+1.
Rep embed_type_a(int n, const std::vector<std::pair<int, int>>& intervals,
                 std::optional<std::vector<int>> e);

// One-vertex cycle model whose fixed-point theory approximates the
// Grassmannian of k-planes in n-space up to degree N.
Rep approx_grassmannian(int n, int k, int N);

void to_json(nlohmann::json& j, const Rep& rep);
void from_json(const nlohmann::json& j, Rep& rep);

}  // namespace gkmcycle

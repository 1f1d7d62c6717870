#pragma once
// Attractive grading on the basis of a nilpotent cycle representation: basis
// weights that strictly increase along every ordered level row and grow by a
// fixed step D along every segment, so the associated cocharacter contracts
// each cell onto its fixed point.

#include <string>
#include <vector>

#include "gkmcycle/rep.hpp"
#include "json.hpp"

namespace gkmcycle {

struct Grading {
  int D = 1;
  std::vector<std::vector<int>> wt;  // wt[seg-1][pos]

  int weight(int seg, int pos) const { return wt.at(seg - 1).at(pos); }
};

Grading attractive_grading(const Rep& rep);

// Checks that weights strictly increase along every level row and that each
// arrow of the coefficient quiver raises the weight by exactly D.
bool verify_attractive(const BTables& B, const Grading& g,
                       std::string* why = nullptr);

// Exponents (D; weight of each segment start) of a one-parameter subgroup
// with the same fixed points as the whole torus.
std::vector<int> generic_cocharacter(const Rep& rep, const Grading& g);

nlohmann::json grading_to_json(const BTables& B, const Grading& g);
Grading grading_from_json(const BTables& B, const nlohmann::json& j);

}  // namespace gkmcycle

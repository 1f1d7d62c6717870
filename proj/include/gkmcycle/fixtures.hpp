#pragma once
// Built-in example representations and the location of their golden files.

#include <string>
#include <vector>

#include "gkmcycle/rep.hpp"

namespace gkmcycle {

struct FixtureInfo {
  std::string name;
  std::string description;
  bool bundled_euler_table = false;
};

const std::vector<FixtureInfo>& fixtures();

// Accepts the named fixtures and approx:n,k,N; throws on anything else.
Rep fixture_rep(const std::string& name);

// Directory with golden files; GKM_CYCLE_FIXTURES overrides the built-in
// location.
std::string fixtures_dir();

}  // namespace gkmcycle

#include "gkmcycle/fixtures.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gkmcycle {

const std::vector<FixtureInfo>& fixtures() {
  static const std::vector<FixtureInfo> list = {
      {"loop-gr",
       "three loop segments of lengths 2,1,1 with e=(2): the degree-2 "
       "Grassmannian model on one vertex",
       true},
      {"fl3", "three segments of length 2 on a 2-cycle with e=(1,2): the "
              "complete flag variety of rank 3",
       true},
      {"fl3a", "four segments on a 2-cycle with e=(1,2): a degeneration of "
               "the rank-3 flag variety",
       false},
      {"ex47", "six segments on a 4-cycle, no dimension vector: grading and "
               "basis ordering showcase",
       false},
  };
  return list;
}

Rep fixture_rep(const std::string& name) {
  if (name == "loop-gr") {
    Rep rep;
    rep.n = 1;
    rep.segments = {{1, 2}, {1, 1}, {1, 1}};
    rep.e = std::vector<int>{2};
    return rep;
  }
  if (name == "fl3") {
    Rep rep;
    rep.n = 2;
    rep.segments = {{2, 2}, {2, 2}, {2, 2}};
    rep.e = std::vector<int>{1, 2};
    return rep;
  }
  if (name == "fl3a") {
    Rep rep;
    rep.n = 2;
    rep.segments = {{2, 1}, {2, 2}, {2, 2}, {1, 1}};
    rep.e = std::vector<int>{1, 2};
    return rep;
  }
  if (name == "ex47") {
    Rep rep;
    rep.n = 4;
    rep.segments = {{1, 4}, {1, 2}, {2, 3}, {2, 2}, {2, 1}, {4, 6}};
    return rep;
  }
  if (name.rfind("approx:", 0) == 0) {
    std::istringstream in(name.substr(7));
    int n = 0, k = 0, N = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> n >> c1 >> k >> c2 >> N) || c1 != ',' || c2 != ',' ||
        !in.eof()) {
      throw std::runtime_error("expected approx:n,k,N");
    }
    return approx_grassmannian(n, k, N);
  }
  throw std::runtime_error("unknown fixture " + name);
}

std::string fixtures_dir() {
  if (const char* env = std::getenv("GKM_CYCLE_FIXTURES")) return env;
  return GKM_CYCLE_FIXTURE_DIR;
}

}  // namespace gkmcycle

// Command line front end: computes fixed points, moment graphs and
// equivariant cohomology bases of quiver Grassmannians for nilpotent cycle
// representations, and verifies the bundled fixtures against their goldens.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gkmcycle/cohomology.hpp"
#include "gkmcycle/fixed_points.hpp"
#include "gkmcycle/fixtures.hpp"
#include "gkmcycle/grading.hpp"
#include "gkmcycle/moment_graph.hpp"
#include "gkmcycle/polynomial.hpp"
#include "gkmcycle/rep.hpp"
#include "json.hpp"

namespace {

using gkmcycle::BTables;
using gkmcycle::EulerTable;
using gkmcycle::FactoredRational;
using gkmcycle::Grading;
using gkmcycle::Klass;
using gkmcycle::MomentGraph;
using gkmcycle::Polynomial;
using gkmcycle::Rational;
using gkmcycle::Rep;

// Thrown once inputs parsed cleanly but a mathematical check failed.
struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string fixture;
  std::string format;
  std::string euler_table;
  std::string out;
  bool unique = false;
  bool project = false;
  int max_degree = 2;
  unsigned seed = 1;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::runtime_error("cannot open " + opt.out);
  out << text;
}

Rep load_rep(const Options& opt) {
  Rep rep;
  if (!opt.input.empty()) {
    rep = read_json_file(opt.input).get<Rep>();
  } else {
    rep = gkmcycle::fixture_rep(opt.fixture);
  }
  gkmcycle::validate(rep);
  return rep;
}

const Rep& require_e(const Rep& rep) {
  if (!rep.e) {
    throw std::runtime_error("representation has no dimension vector e");
  }
  return rep;
}

std::string golden_path(const std::string& fixture, const std::string& kind) {
  return gkmcycle::fixtures_dir() + "/" + fixture + "." + kind + ".json";
}

bool has_bundled_table(const std::string& fixture) {
  for (const auto& f : gkmcycle::fixtures()) {
    if (f.name == fixture) return f.bundled_euler_table;
  }
  return false;
}

std::string segments_str(const Rep& rep) {
  std::string s;
  for (const auto& seg : rep.segments) {
    if (!s.empty()) s += " ";
    s += "U(" + std::to_string(seg.end) + ";" + std::to_string(seg.len) + ")";
  }
  return s;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (size_t t = 0; t < v.size(); ++t) {
    if (t) s += sep;
    s += std::to_string(v[t]);
  }
  return s;
}

int run_describe(const Options& opt) {
  Rep rep = load_rep(opt);
  std::ostringstream out;
  out << "name: " << (opt.fixture.empty() ? "input" : opt.fixture) << "\n";
  out << "cycle vertices: " << rep.n << "\n";
  out << "segments: " << segments_str(rep) << "\n";
  out << "level dimensions: " << join_ints(gkmcycle::dims(rep), " ") << "\n";
  out << "total dimension: " << gkmcycle::total_dim(rep) << "\n";
  out << "subspace dimensions: "
      << (rep.e ? join_ints(*rep.e, " ") : std::string("none")) << "\n";
  Grading gr = gkmcycle::attractive_grading(rep);
  out << "grading step D: " << gr.D << "\n";
  BTables B(rep);
  for (int level = 1; level <= rep.n; ++level) {
    if (B.row(level).empty()) continue;
    out << "weights level " << level << ":";
    for (const auto& v : B.row(level)) {
      out << " " << gr.weight(v.seg, v.pos);
    }
    out << "\n";
  }
  std::vector<int> cochar = gkmcycle::generic_cocharacter(rep, gr);
  out << "cocharacter: (" << cochar[0] << "; "
      << join_ints({cochar.begin() + 1, cochar.end()}, ",") << ")\n";
  if (rep.e) {
    auto fps = gkmcycle::fixed_points(rep);
    out << "fixed points: " << fps.size() << "\n";
    out << "betti numbers: "
        << join_ints(gkmcycle::betti_numbers(B, fps), " ") << "\n";
  }
  write_output(opt, out.str());
  return 0;
}

int run_fixed_points(const Options& opt) {
  Rep rep = load_rep(opt);
  require_e(rep);
  BTables B(rep);
  auto fps = gkmcycle::fixed_points(rep);
  std::string format = opt.format.empty() ? "table" : opt.format;
  if (format == "table") {
    std::ostringstream out;
    for (const auto& fp : fps) {
      out << fp.str() << " dim " << gkmcycle::cell_dimension(B, fp) << "\n";
    }
    write_output(opt, out.str());
    return 0;
  }
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& fp : fps) {
      j.push_back({{"tails", fp.tails},
                   {"dim", gkmcycle::cell_dimension(B, fp)}});
    }
    write_output(opt, j.dump(2) + "\n");
    return 0;
  }
  throw std::runtime_error("fixed-points supports --format table|json");
}

int run_moment_graph(const Options& opt) {
  Rep rep = load_rep(opt);
  require_e(rep);
  MomentGraph g = gkmcycle::build_moment_graph(rep);
  if (opt.project) g = gkmcycle::project_delta(g);
  std::string format = opt.format.empty() ? "dot" : opt.format;
  if (format == "dot") {
    write_output(opt, gkmcycle::to_dot(g));
    return 0;
  }
  if (format == "json") {
    nlohmann::json j;
    to_json(j, g);
    write_output(opt, j.dump(2) + "\n");
    return 0;
  }
  throw std::runtime_error("moment-graph supports --format dot|json");
}

int run_betti(const Options& opt) {
  Rep rep = load_rep(opt);
  require_e(rep);
  BTables B(rep);
  auto fps = gkmcycle::fixed_points(rep);
  write_output(opt, join_ints(gkmcycle::betti_numbers(B, fps), " ") + "\n");
  return 0;
}

EulerTable load_euler_table(const Options& opt) {
  if (!opt.euler_table.empty()) {
    return read_json_file(opt.euler_table).get<EulerTable>();
  }
  if (!opt.fixture.empty() && has_bundled_table(opt.fixture)) {
    return read_json_file(golden_path(opt.fixture, "euler")).get<EulerTable>();
  }
  throw std::runtime_error(
      "--unique needs --euler-table or a fixture with a bundled table");
}

int run_basis(const Options& opt) {
  Rep rep = load_rep(opt);
  require_e(rep);
  std::optional<EulerTable> table;
  if (opt.unique) table = load_euler_table(opt);

  MomentGraph g = gkmcycle::build_moment_graph(rep);
  std::vector<Klass> basis;
  if (opt.unique) {
    if (auto why = gkmcycle::check_euler_table(g, *table, true)) {
      throw Violation("Euler table: " + *why);
    }
    basis = gkmcycle::unique_basis(g, *table);
  } else {
    basis = gkmcycle::flow_up_basis(g);
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!gkmcycle::gkm_check(g, basis[i]).empty()) {
      throw Violation("class " + std::to_string(i + 1) +
                      " fails the divisibility conditions");
    }
  }

  std::string format = opt.format.empty() ? "table" : opt.format;
  if (format == "table") {
    std::ostringstream out;
    for (size_t i = 0; i < basis.size(); ++i) {
      out << "theta_" << i + 1 << ":\n";
      for (size_t k = 0; k < basis[i].size(); ++k) {
        if (basis[i][k].zero()) continue;
        out << "  " << g.points[k].str() << ": " << basis[i][k].str() << "\n";
      }
    }
    write_output(opt, out.str());
    return 0;
  }
  if (format == "json") {
    write_output(opt, gkmcycle::basis_to_json(basis).dump(2) + "\n");
    return 0;
  }
  throw std::runtime_error("basis supports --format table|json");
}

int run_examples(const Options& opt) {
  std::ostringstream out;
  for (const auto& f : gkmcycle::fixtures()) {
    out << f.name << ": " << f.description;
    if (f.bundled_euler_table) out << " (bundled Euler table)";
    out << "\n";
  }
  out << "approx:n,k,N: one-vertex model approximating the Grassmannian of "
         "k-planes in n-space up to degree N\n";
  write_output(opt, out.str());
  return 0;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Integer points at which no guard polynomial vanishes.
std::vector<std::vector<Rational>> sample_points(
    int nvars, const std::vector<Polynomial>& guards, int count,
    unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-40, 40);
  std::vector<std::vector<Rational>> points;
  while ((int)points.size() < count) {
    std::vector<Rational> p;
    for (int v = 0; v <= nvars; ++v) p.push_back(pick(rng));
    bool ok = true;
    for (const auto& guard : guards) {
      if (guard.evaluate(p) == 0) ok = false;
    }
    if (ok) points.push_back(std::move(p));
  }
  return points;
}

int verify_loaded(const Options& opt, const Rep& rep);

int run_verify(const Options& opt) {
  Rep rep = load_rep(opt);
  try {
    return verify_loaded(opt, rep);
  } catch (const Violation&) {
    throw;
  } catch (const std::exception& e) {
    // Anything else at this stage means a golden file is broken.
    throw Violation(e.what());
  }
}

int verify_loaded(const Options& opt, const Rep& rep) {
  std::ostringstream out;
  auto ok = [&](const std::string& what) { out << "ok: " << what << "\n"; };
  auto skipped = [&](const std::string& what) {
    out << "skipped: " << what << "\n";
  };

  BTables B(rep);
  Grading gr = gkmcycle::attractive_grading(rep);
  std::string why;
  if (!gkmcycle::verify_attractive(B, gr, &why)) {
    throw Violation("attractive grading: " + why);
  }
  ok("attractive grading");
  std::vector<int> cochar = gkmcycle::generic_cocharacter(rep, gr);
  if ((int)cochar.size() != (int)rep.segments.size() + 1 ||
      cochar[0] != gr.D) {
    throw Violation("cocharacter is inconsistent with the grading");
  }
  ok("generic cocharacter");

  std::optional<MomentGraph> graph;
  if (rep.e) {
    graph = gkmcycle::build_moment_graph(rep);
    const MomentGraph& g = *graph;
    size_t m = g.points.size();
    std::vector<int> outdeg(m, 0);
    for (const auto& e : g.edges) {
      if (e.src <= e.dst) throw Violation("edge against the filtration");
      outdeg[e.src - 1] += 1;
    }
    ok("filtration order");
    for (size_t t = 0; t < m; ++t) {
      if (outdeg[t] != gkmcycle::cell_dimension(B, g.points[t]) ||
          outdeg[t] != g.dims[t]) {
        throw Violation("out-degree differs from the cell dimension at " +
                        g.points[t].str());
      }
    }
    ok("cell dimensions match out-degrees");
    for (const auto& fp : g.points) {
      if (!gkmcycle::check_subrepresentation(
              B, *rep.e, gkmcycle::point_subrep(B, fp), &why)) {
        throw Violation("fixed point " + fp.str() + ": " + why);
      }
      for (const auto& t : gkmcycle::terminal_triples(B, fp)) {
        auto sub = gkmcycle::orbit_representative(B, fp, t);
        if (!gkmcycle::check_subrepresentation(B, *rep.e, sub, &why)) {
          throw Violation("orbit representative at " + fp.str() + ": " + why);
        }
      }
    }
    ok("fixed points and orbit representatives are subrepresentations");

    int s = (int)rep.segments.size();
    int maxdim = 0;
    for (int d : g.dims) maxdim = std::max(maxdim, d);
    if (m <= 24 && binomial(maxdim + s, s) <= 400) {
      auto basis = gkmcycle::flow_up_basis(g);
      for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
          if (!basis[i][j].zero()) throw Violation("basis is not triangular");
        }
        if (!gkmcycle::gkm_check(g, basis[i]).empty()) {
          throw Violation("flow-up class " + std::to_string(i + 1) +
                          " fails the divisibility conditions");
        }
      }
      ok("flow-up basis");
    } else {
      skipped("flow-up basis (size)");
    }
    if ((long)m * binomial(opt.max_degree + s, s) <= 1200) {
      if (!gkmcycle::freeness_check(g, opt.max_degree, &why)) {
        throw Violation("freeness: " + why);
      }
      ok("freeness through degree " + std::to_string(opt.max_degree));
    } else {
      skipped("freeness (size)");
    }
  }

  bool named = !opt.fixture.empty() && opt.fixture.rfind("approx:", 0) != 0;
  if (named) {
    Rep golden_rep = read_json_file(golden_path(opt.fixture, "rep")).get<Rep>();
    if (!(golden_rep == rep)) throw Violation("rep golden differs");
    ok("rep golden");

    if (opt.fixture == "ex47") {
      Grading gg = gkmcycle::grading_from_json(
          B, read_json_file(golden_path(opt.fixture, "grading")));
      if (gg.D != gr.D || gg.wt != gr.wt) {
        throw Violation("grading golden differs");
      }
      ok("grading golden");
    }

    if (rep.e) {
      const MomentGraph& g = *graph;
      nlohmann::json want_graph = read_json_file(golden_path(opt.fixture,
                                                             "graph"));
      nlohmann::json got_graph;
      to_json(got_graph, g);
      if (got_graph != want_graph) throw Violation("graph golden differs");
      ok("graph golden");

      std::optional<EulerTable> table;
      if (has_bundled_table(opt.fixture)) {
        table = read_json_file(golden_path(opt.fixture, "euler"))
                    .get<EulerTable>();
        if (auto bad = gkmcycle::check_euler_table(g, *table, true)) {
          throw Violation("Euler table: " + *bad);
        }
        ok("Euler table golden");
      }
      if (opt.fixture == "loop-gr") {
        nlohmann::json fj = read_json_file(golden_path(opt.fixture, "fibers"));
        for (const auto& entry : fj.at("fibers")) {
          int j = entry.at("j").get<int>();
          int i = entry.at("i").get<int>();
          std::vector<FactoredRational> fiber;
          for (const auto& ej : entry.at("fiber")) {
            fiber.push_back(ej.get<FactoredRational>());
          }
          if (!table->has(j, i) ||
              table->entry(j, i).prov != "resolution" ||
              gkmcycle::euler_via_resolution(fiber) != table->entry(j, i).eu) {
            throw Violation("resolution fiber over position " +
                            std::to_string(j) + " does not match the table");
          }
        }
        ok("resolution fibers");
      }

      nlohmann::json want_basis = read_json_file(golden_path(opt.fixture,
                                                             "basis"));
      auto golden = gkmcycle::basis_from_json(want_basis, (int)g.points.size());
      for (size_t i = 0; i < golden.size(); ++i) {
        if (!gkmcycle::gkm_check(g, golden[i]).empty()) {
          throw Violation("golden class " + std::to_string(i + 1) +
                          " fails the divisibility conditions");
        }
      }
      std::vector<Klass> expected = table ? gkmcycle::unique_basis(g, *table)
                                          : gkmcycle::flow_up_basis(g);
      if (gkmcycle::basis_to_json(expected) != want_basis) {
        throw Violation("basis golden differs");
      }
      ok("basis golden");

      if (table) {
        int s = (int)rep.segments.size();
        std::vector<Polynomial> guards;
        for (const auto& [key, e] : table->entries()) {
          guards.push_back(e.eu.num());
          for (const auto& f : e.eu.den_factors()) guards.push_back(f);
        }
        auto pts = sample_points(s, guards, 3, opt.seed);
        auto mult = gkmcycle::structure_constants(g, expected);
        for (const auto& pt : pts) {
          for (size_t i = 2; i <= g.points.size(); ++i) {
            int mxd = 0;
            for (size_t j = 1; j <= i; ++j) {
              mxd = std::max(mxd, g.dims[j - 1]);
            }
            if (mxd == 0) continue;
            Rational sum = 0;
            for (size_t j = 1; j <= i; ++j) {
              sum += 1 / table->entry((int)j, (int)i).eu.evaluate(pt);
            }
            if (sum != 0) {
              throw Violation("numeric column sum at step " +
                              std::to_string(i));
            }
          }
          for (const auto& [key, c] : mult) {
            auto [i, j] = key;
            for (size_t k = 0; k < g.points.size(); ++k) {
              Rational lhs = expected[i - 1][k].evaluate(pt) *
                             expected[j - 1][k].evaluate(pt);
              Rational rhs = 0;
              for (size_t l = 0; l < g.points.size(); ++l) {
                rhs += c[l].evaluate(pt) * expected[l][k].evaluate(pt);
              }
              if (lhs != rhs) {
                throw Violation("numeric product check at (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
              }
            }
          }
        }
        ok("numeric spot checks (seed " + std::to_string(opt.seed) + ")");
      }
    }
  }

  out << "all checks passed\n";
  write_output(opt, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment graphs and equivariant cohomology of quiver "
               "Grassmannians for nilpotent cycle representations"};
  app.require_subcommand(1);

  Options opt;
  auto add_source = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", opt.input,
                               "representation as a JSON file");
    auto* fx = sub->add_option("--fixture", opt.fixture,
                               "bundled fixture name");
    in->excludes(fx);
    fx->excludes(in);
    sub->callback([in, fx]() {
      if (in->count() == 0 && fx->count() == 0) {
        throw CLI::RequiredError("--input or --fixture");
      }
    });
  };

  CLI::App* describe = app.add_subcommand("describe",
                                          "summarize a representation");
  add_source(describe);
  describe->add_option("--out", opt.out, "write output to a file");

  CLI::App* fixed = app.add_subcommand("fixed-points",
                                       "list torus fixed points");
  add_source(fixed);
  fixed->add_option("--format", opt.format, "table or json");
  fixed->add_option("--out", opt.out, "write output to a file");

  CLI::App* graph = app.add_subcommand("moment-graph",
                                       "compute the moment graph");
  add_source(graph);
  graph->add_option("--format", opt.format, "dot or json");
  graph->add_flag("--project-delta", opt.project,
                  "set the loop character to zero in the labels");
  graph->add_option("--out", opt.out, "write output to a file");

  CLI::App* betti = app.add_subcommand("betti",
                                       "count cells by dimension");
  add_source(betti);
  betti->add_option("--out", opt.out, "write output to a file");

  CLI::App* basis = app.add_subcommand("basis",
                                       "compute a flow-up module basis");
  add_source(basis);
  basis->add_option("--format", opt.format, "table or json");
  basis->add_flag("--unique", opt.unique,
                  "normalize all local indices with an Euler table");
  basis->add_option("--euler-table", opt.euler_table,
                    "Euler class table as a JSON file");
  basis->add_option("--out", opt.out, "write output to a file");

  CLI::App* verify = app.add_subcommand("verify",
                                        "run the invariant suite");
  add_source(verify);
  verify->add_option("--max-degree", opt.max_degree,
                     "largest degree for the freeness check");
  verify->add_option("--seed", opt.seed, "seed for numeric spot checks");
  verify->add_option("--out", opt.out, "write output to a file");

  CLI::App* examples = app.add_subcommand("examples",
                                          "list bundled fixtures");
  examples->add_option("--out", opt.out, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (describe->parsed()) return run_describe(opt);
    if (fixed->parsed()) return run_fixed_points(opt);
    if (graph->parsed()) return run_moment_graph(opt);
    if (betti->parsed()) return run_betti(opt);
    if (basis->parsed()) return run_basis(opt);
    if (verify->parsed()) return run_verify(opt);
    if (examples->parsed()) return run_examples(opt);
  } catch (const Violation& v) {
    std::cerr << "fail: " << v.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

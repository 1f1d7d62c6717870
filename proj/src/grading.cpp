#include "gkmcycle/grading.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkmcycle {

Grading attractive_grading(const Rep& rep) {
  validate(rep);
  BTables B(rep);
  int n = rep.n;
  std::vector<int> ends(n, 0), short_ends(n, 0);
  int maxlen = 0;
  for (const auto& s : rep.segments) {
    ends[s.end - 1] += 1;
    if (s.len == 1) short_ends[s.end - 1] += 1;
    maxlen = std::max(maxlen, s.len);
  }
  int D = 1;
  for (int i = 0; i < n; ++i) D = std::max(D, ends[i] - short_ends[i]);
  int i0 = 0, best = 0;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (const auto& s : rep.segments) {
      if (s.end == i + 1 && s.len == maxlen) ++count;
    }
    if (count > best) {
      best = count;
      i0 = i;
    }
  }
  int w = 1 + D * (maxlen - 1);
  int k = w + ends[i0] - short_ends[i0];

  Grading g;
  g.D = D;
  g.wt.resize(rep.segments.size());
  for (size_t j = 0; j < rep.segments.size(); ++j) {
    g.wt[j].assign(rep.segments[j].len, 0);
  }
  for (int i = 1; i <= n; ++i) {
    const auto& row = B.row(i);
    int m = (int)row.size();
    int q = m - ends[i - 1];
    for (int p = 1; p <= ends[i - 1]; ++p) {
      const BVertex& v = row[q + p - 1];
      g.wt[v.seg - 1][v.pos] = k + p - 1 + short_ends[i - 1] - ends[i - 1];
    }
  }
  for (size_t j = 0; j < rep.segments.size(); ++j) {
    for (int p = rep.segments[j].len - 2; p >= 0; --p) {
      g.wt[j][p] = g.wt[j][p + 1] - D;
    }
  }
  return g;
}

bool verify_attractive(const BTables& B, const Grading& g, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Rep& rep = B.rep();
  for (int i = 1; i <= rep.n; ++i) {
    const auto& row = B.row(i);
    for (size_t t = 0; t + 1 < row.size(); ++t) {
      if (g.weight(row[t].seg, row[t].pos) >=
          g.weight(row[t + 1].seg, row[t + 1].pos)) {
        return fail("weights not strictly increasing along level " +
                    std::to_string(i));
      }
    }
  }
  for (size_t j = 0; j < rep.segments.size(); ++j) {
    for (int p = 0; p + 1 < rep.segments[j].len; ++p) {
      if (g.weight((int)j + 1, p + 1) - g.weight((int)j + 1, p) != g.D) {
        return fail("arrow step is not D on segment " + std::to_string(j + 1));
      }
    }
  }
  return true;
}

std::vector<int> generic_cocharacter(const Rep& rep, const Grading& g) {
  std::vector<int> chi;
  chi.push_back(g.D);
  for (size_t j = 0; j < rep.segments.size(); ++j) {
    chi.push_back(g.weight((int)j + 1, 0));
  }
  return chi;
}

nlohmann::json grading_to_json(const BTables& B, const Grading& g) {
  nlohmann::json wt = nlohmann::json::object();
  const Rep& rep = B.rep();
  for (int i = 1; i <= rep.n; ++i) {
    const auto& row = B.row(i);
    for (size_t t = 0; t < row.size(); ++t) {
      std::string key =
          "(" + std::to_string(i) + "," + std::to_string(t + 1) + ")";
      wt[key] = g.weight(row[t].seg, row[t].pos);
    }
  }
  return {{"D", g.D}, {"wt", wt}};
}

Grading grading_from_json(const BTables& B, const nlohmann::json& j) {
  Grading g;
  g.D = j.at("D").get<int>();
  const Rep& rep = B.rep();
  g.wt.resize(rep.segments.size());
  for (size_t s = 0; s < rep.segments.size(); ++s) {
    g.wt[s].assign(rep.segments[s].len, 0);
  }
  const auto& wt = j.at("wt");
  size_t seen = 0;
  for (int i = 1; i <= rep.n; ++i) {
    const auto& row = B.row(i);
    for (size_t t = 0; t < row.size(); ++t) {
      std::string key =
          "(" + std::to_string(i) + "," + std::to_string(t + 1) + ")";
      if (!wt.contains(key)) throw std::runtime_error("missing weight " + key);
      g.wt[row[t].seg - 1][row[t].pos] = wt.at(key).get<int>();
      ++seen;
    }
  }
  if (seen != wt.size()) throw std::runtime_error("extra weight entries");
  return g;
}

}  // namespace gkmcycle

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace steiner;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome check_oracle_equivalence() {
  std::size_t checked = 0, mismatches = 0;
  for (const Tree& t : enumerate_trees(1, 9)) {
    const Graph g = t.to_graph();
    for (int k = 1; k <= std::min<int>(4, static_cast<int>(t.order())); ++k)
      for (const auto& s : oracle::k_subsets(t.order(), k)) {
        ++checked;
        mismatches += steiner_distance(t, s).value != dw_steiner(g, s);
      }
  }
  return {mismatches == 0, std::to_string(checked) + " (tree, S) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome check_greedy() {
  std::size_t checked = 0, mismatches = 0;
  for (const Tree& t : enumerate_trees(2, 10))
    for (int k = 2; k <= std::min<int>(6, static_cast<int>(t.order())); ++k) {
      ++checked;
      mismatches += sd_k(t, k).value != sd_k_brute(t, k).value;
    }
  return {mismatches == 0, std::to_string(checked) + " (tree, k) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome check_fast_paths() {
  std::size_t checked = 0, mismatches = 0;
  for (const Tree& t : enumerate_trees(1, 10)) {
    const auto profile = center_profile(t);
    for (int k = 3; k <= std::min<int>(6, static_cast<int>(t.order())); ++k) {
      const int brute2 = sr_kk_brute(t, k, 2).value;
      ++checked;
      mismatches += sr_k2_fast(t, k) != brute2;
      if (profile.diameter >= 1) mismatches += ecc_kk(t, central_pair(profile), k).value != brute2;
      if (k >= 4) {
        const int brute3 = sr_kk_brute(t, k, 3).value;
        ++checked;
        mismatches += sr_k3_fast(t, k) != brute3;
        if (profile.diameter >= 2) mismatches += ecc_kk(t, central_triple(profile), k).value != brute3;
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " (tree, k, k') triples, " + std::to_string(mismatches) + " mismatches"};
}

Outcome check_suites() {
  const auto corpus = make_corpus(enumerate_trees(1, 10));
  Outcome out;
  for (const char* suite : {"thm32", "thm33", "thm34", "thm_k1", "thm_k2", "thm_k3", "chain", "lemma31"}) {
    const Report r = run_suite(suite, corpus, "free trees n=1..10", {2, 6}, {1, 5});
    out.ok = out.ok && r.passed() && r.instances > 0;
    out.detail += std::string(out.detail.empty() ? "" : ", ") + suite + " " + std::to_string(r.instances) + "/" +
                  std::to_string(r.violations.size());
  }
  out.detail = "instances/violations: " + out.detail;
  return out;
}

Outcome check_equalities() {
  struct Case {
    const char* label;
    const char* suite;
    FamilySpec spec;
    int k, kprime;
    Rational lhs;
  };
  const std::vector<Case> cases{
      {"K_{1,5} k=3", "thm_k1", FamilySpec::star_graph(5), 3, 1, 3},
      {"starlike(3,2) k=3 k'=1", "thm34", FamilySpec::starlike_tree(3, 2), 3, 1, 6},
      {"P_2(2,2;3) k=4", "thm_k2", FamilySpec::p_l_abx_tree(2, 2, 2, 3), 4, 2, 13},
      {"P_3(2,2;2) k=4", "thm_k3", FamilySpec::p_l_abx_tree(3, 2, 2, 2), 4, 3, 10},
  };
  Outcome out;
  for (const auto& c : cases) {
    const Report r = run_suite(c.suite, make_corpus({generate_tree(c.spec)}), c.spec.to_string(), {c.k, c.k}, {c.kprime, c.kprime});
    const bool ok = r.instances == 1 && r.equalities.size() == 1 && r.equalities[0].equality && r.equalities[0].lhs == c.lhs;
    out.ok = out.ok && ok;
    out.detail += std::string(out.detail.empty() ? "" : "; ") + c.label + (ok ? " " + to_string(c.lhs) + " = rhs" : " MISSING");
  }
  return out;
}

void part_vectors(int max_total, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  const int used = std::accumulate(current.begin(), current.end(), 0);
  if (current.size() >= 2) out.push_back(current);
  for (int p = current.empty() ? 1 : current.back(); used + p <= max_total; ++p) {
    current.push_back(p);
    part_vectors(max_total, current, out);
    current.pop_back();
  }
}

Outcome check_formulas() {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 7; ++n) specs.push_back(FamilySpec::complete_graph(n));
  for (int n = 2; n <= 10; ++n) specs.push_back(FamilySpec::path_graph(n));
  std::vector<std::vector<int>> vectors;
  std::vector<int> current;
  part_vectors(8, current, vectors);
  for (auto& v : vectors) specs.push_back(FamilySpec::multipartite_graph(v));
  std::size_t checked = 0, mismatches = 0;
  for (const auto& spec : specs) {
    const Graph g = generate_graph(spec);
    for (int k = 2; k <= spec.order(); ++k) {
      ++checked;
      mismatches += sd_k_formula(spec, k) != brute_sd_k(g, k).value;
      for (int kp = 1; kp <= k; ++kp) {
        ++checked;
        mismatches += sr_kk_formula(spec, k, kp) != brute_sr_kk(g, k, kp).value;
      }
    }
  }
  return {mismatches == 0, std::to_string(specs.size()) + " graphs, " + std::to_string(checked) + " values, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome check_hunt() {
  const auto start = std::chrono::steady_clock::now();
  const Report r = hunt_conjecture(11, {3, 6}, {1, 5}, {8, false});
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start).count();
  std::size_t proved = 0, open = 0;
  for (const auto& v : r.violations) {
    (v.kprime <= 3 ? proved : open) += 1;
    if (v.kprime >= 4) std::cout << "  finding: " << verdict_to_json(v).dump() << "\n";
  }
  std::size_t equalities = 0;
  for (const auto& e : r.equality_counts) equalities += e.count;
  return {proved == 0 && seconds < 600,
          std::to_string(r.trees) + " trees, " + std::to_string(r.instances) + " instances, violations k'<=3: " +
              std::to_string(proved) + ", k'>=4: " + std::to_string(open) + ", equalities " + std::to_string(equalities) +
              ", " + std::to_string(seconds) + "s"};
}

Outcome check_corpus() {
  Outcome out;
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto trees = enumerate_trees(n);
    std::set<std::string> codes;
    for (const Tree& t : trees) codes.insert(canonical_code(t).text);
    const auto classes = oracle::prufer_classes(n);
    const bool ok = codes.size() == trees.size() && codes == classes;
    out.ok = out.ok && ok;
    if (n >= 7) out.detail += "n=" + std::to_string(n) + ": " + std::to_string(trees.size()) + "/" + std::to_string(classes.size()) + " ";
  }
  std::size_t round_trips = 0;
  for (const Tree& t : enumerate_trees(1, 10)) {
    const std::string line = graph6_encode(t);
    const bool ok = graph6_encode(graph6_decode(line)) == line && Tree::from_edges(graph6_decode(line)).edges() == t.edges();
    out.ok = out.ok && ok;
    round_trips += ok;
  }
  out.detail += "(enumerated/oracle), graph6 round trips " + std::to_string(round_trips);
  return out;
}

Outcome check_determinism() {
  const auto corpus = make_corpus(enumerate_trees(1, 10));
  Outcome out;
  for (const auto& suite : suite_names()) {
    const std::string one = report_to_json(run_suite(suite, corpus, "free trees n=1..10", {2, 6}, {1, 5}, {1, false}));
    const std::string many = report_to_json(run_suite(suite, corpus, "free trees n=1..10", {2, 6}, {1, 5}, {8, false}));
    out.ok = out.ok && one == many;
  }
  out.detail = std::to_string(suite_names().size()) + " suites, jobs 1 vs 8";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence (n<=9, |S|<=4)", check_oracle_equivalence},
      {"greedy Sd_k equals brute force (n<=10, k<=6)", check_greedy},
      {"fast paths equal brute radius (n<=10, k<=6)", check_fast_paths},
      {"theorem suites zero violations (n<=10, k<=6)", check_suites},
      {"equality instances reproduced", check_equalities},
      {"closed forms equal oracle", check_formulas},
      {"conjecture hunt (n<=11, k 3:6, k' 1:5)", check_hunt},
      {"corpus integrity (n<=9 classes, n<=10 graph6)", check_corpus},
      {"determinism across worker counts", check_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

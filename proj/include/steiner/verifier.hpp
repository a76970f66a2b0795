#pragma once

// Corpus-wide checking of the diameter/radius inequalities and identities for
// trees, and the exhaustive conjecture hunt. Every comparison is an exact
// rational one. Work is sharded per tree and merged in corpus order, so a
// report depends only on (suite, corpus, ranges), never on the worker count.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "steiner/closed_forms.hpp"
#include "steiner/corpus.hpp"
#include "steiner/error.hpp"
#include "steiner/graph6.hpp"
#include "steiner/params.hpp"
#include "steiner/rational.hpp"
#include "steiner/tree.hpp"
#include "steiner/verdict.hpp"
#include "steiner/version.hpp"

namespace steiner {

/// Inclusive integer range, written "lo:hi" (or a single "v").
struct IntRange {
  int lo = 0;
  int hi = 0;

  static IntRange parse(const std::string& text) {
    const auto colon = text.find(':');
    try {
      std::size_t used = 0;
      if (colon == std::string::npos) {
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return IntRange{v, v};
      }
      const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
      IntRange r{std::stoi(lo, &used), 0};
      if (used != lo.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(hi, &used);
      if (used != hi.size()) throw std::invalid_argument(text);
      if (r.lo > r.hi) throw std::invalid_argument(text);
      return r;
    } catch (const std::exception&) {
      fail(Errc::bad_spec, "expected a range 'lo:hi', got '" + text + "'");
    }
  }

  std::string to_string() const { return std::to_string(lo) + ":" + std::to_string(hi); }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// One input tree with its identifiers precomputed.
struct CorpusTree {
  Tree tree;
  std::string code;
  std::string graph6;

  explicit CorpusTree(Tree t) : tree(std::move(t)), code(canonical_code(tree).text), graph6(graph6_encode(tree)) {}
};

inline std::vector<CorpusTree> make_corpus(std::vector<Tree> trees) {
  std::vector<CorpusTree> out;
  out.reserve(trees.size());
  for (auto& t : trees) out.emplace_back(std::move(t));
  return out;
}

struct SkipRecord {
  int k = 0;
  int kprime = 0;
  std::string reason;
  std::size_t count = 0;
  friend bool operator==(const SkipRecord&, const SkipRecord&) = default;
};

struct EqualityCount {
  int k = 0;
  int kprime = 0;
  std::size_t count = 0;
  friend bool operator==(const EqualityCount&, const EqualityCount&) = default;
};

struct Report {
  std::string tool = "steinerkit";
  std::string version = kToolkitVersion;
  std::string suite;
  int n_min = 0;
  int n_max = 0;
  IntRange k_range;
  IntRange kprime_range;
  std::string corpus;
  std::optional<std::uint64_t> seed;
  std::size_t trees = 0;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::vector<Verdict> violations;
  std::vector<EqualityCount> equality_counts;
  std::vector<Verdict> equalities;
  std::vector<SkipRecord> skips;
  std::optional<std::int64_t> runtime_ms;

  bool passed() const { return violations.empty(); }
  friend bool operator==(const Report&, const Report&) = default;
};

struct RunOptions {
  unsigned jobs = 1;
  bool timing = false;  // runtime makes a report non-reproducible, so it is opt-in
};

/// Suites that check an identity encode it as |a - b| <= 0; their equality
/// instances are the expected outcome and are counted but not listed.
enum class SuiteKind { bound, identity };

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm32", "thm33", "thm34", "thm_k1", "thm_k2",
                                              "thm_k3", "fastpath", "chain", "lemma31", "conjecture"};
  return names;
}

inline SuiteKind suite_kind(const std::string& suite) {
  return suite == "fastpath" || suite == "lemma31" ? SuiteKind::identity : SuiteKind::bound;
}

namespace detail {

// Memoized parameters of a single tree; owned by one worker.
class TreeFacts {
 public:
  explicit TreeFacts(const CorpusTree& item) : item_(item), leaf_count_(item.tree.leaves().size()) {}

  const Tree& tree() const { return item_.tree; }
  int order() const { return static_cast<int>(item_.tree.order()); }
  std::size_t leaf_count() const { return leaf_count_; }

  const SetValue& sd(int k) {
    auto it = sd_.find(k);
    if (it == sd_.end()) it = sd_.emplace(k, sd_k(item_.tree, k)).first;
    return it->second;
  }

  const CoreRadius& sr(int k, int kprime) {
    auto key = std::make_pair(k, kprime);
    auto it = sr_.find(key);
    if (it == sr_.end()) it = sr_.emplace(key, sr_kk_brute(item_.tree, k, kprime)).first;
    return it->second;
  }

  Verdict verdict(const std::string& suite, int k, int kprime) const {
    Verdict v;
    v.suite = suite;
    v.code = item_.code;
    v.graph6 = item_.graph6;
    v.n = order();
    v.k = k;
    v.kprime = kprime;
    return v;
  }

 private:
  const CorpusTree& item_;
  std::size_t leaf_count_;
  std::map<int, SetValue> sd_;
  std::map<std::pair<int, int>, CoreRadius> sr_;
};

using Outcome = std::variant<std::string, Verdict>;  // skip reason or verdict

inline const std::string kSkipOrder = "k > n";
inline const std::string kSkipHypothesis = "outside hypothesis";
inline const std::string kSkipLeaves = "fewer than k pendant vertices";

inline Verdict radius_bound(TreeFacts& f, const std::string& suite, BoundKind bound, int k, int kprime) {
  Verdict v = f.verdict(suite, k, kprime);
  const auto& sd = f.sd(k);
  const auto& sr = f.sr(k, kprime);
  settle(v, Rational(sd.value), bound_value(bound, k, kprime, Rational(sr.value)));
  v.witnesses = {{"sd", sd.witness}, {"sr_core", sr.core}, {"sr_witness", sr.witness}};
  v.values = {{"sd", sd.value}, {"sr", sr.value}};
  return v;
}

inline Outcome evaluate(const std::string& suite, TreeFacts& f, int k, int kprime) {
  if (k > f.order()) return kSkipOrder;
  if (suite == "thm34" || suite == "conjecture") {
    if (k < 3 || kprime < 1 || kprime >= k) return kSkipHypothesis;
    return radius_bound(f, suite, suite == "thm34" ? BoundKind::thm34 : BoundKind::conjecture, k, kprime);
  }
  if (suite == "thm32" || suite == "thm33") {
    if (k < 3 || kprime < 1 || k - kprime < 2) return kSkipHypothesis;
    Verdict v = f.verdict(suite, k, kprime);
    const auto& small = f.sd(k - kprime);
    if (suite == "thm32") {
      const auto& sd = f.sd(k);
      settle(v, Rational(sd.value), Rational(k, k - kprime) * Rational(small.value));
      v.witnesses = {{"sd", sd.witness}, {"sd_small", small.witness}};
      v.values = {{"sd", sd.value}, {"sd_small", small.value}};
    } else {
      const auto& sr = f.sr(k, kprime);
      settle(v, Rational(small.value), Rational(sr.value));
      v.witnesses = {{"sd_small", small.witness}, {"sr_core", sr.core}, {"sr_witness", sr.witness}};
      v.values = {{"sd_small", small.value}, {"sr", sr.value}};
    }
    return v;
  }
  if (suite == "thm_k1") {
    if (k < 2) return kSkipHypothesis;
    return radius_bound(f, suite, BoundKind::tree_k1, k, 1);
  }
  if (suite == "thm_k2") {
    if (k < 3) return kSkipHypothesis;
    return radius_bound(f, suite, BoundKind::thm_k2, k, 2);
  }
  if (suite == "thm_k3") {
    if (k < 4) return kSkipHypothesis;
    return radius_bound(f, suite, BoundKind::thm_k3, k, 3);
  }
  if (suite == "chain") {
    if (k < 2 || kprime < 1 || kprime >= k) return kSkipHypothesis;
    Verdict v = f.verdict(suite, k, kprime);
    const auto& upper = f.sr(k, kprime);
    const auto& lower = f.sr(k, kprime + 1);
    settle(v, Rational(lower.value), Rational(upper.value));
    v.witnesses = {{"sr_core", upper.core}, {"sr_next_core", lower.core}};
    v.values = {{"sr", upper.value}, {"sr_next", lower.value}};
    return v;
  }
  if (suite == "fastpath") {
    if (!((kprime == 2 && k >= 3) || (kprime == 3 && k >= 4))) return kSkipHypothesis;
    const Tree& t = f.tree();
    const auto& brute = f.sr(k, kprime);
    const int fast = kprime == 2 ? sr_k2_fast(t, k) : sr_k3_fast(t, k);
    const auto profile = center_profile(t);
    Verdict v = f.verdict(suite, k, kprime);
    std::int64_t gap = std::abs(fast - brute.value);
    v.values = {{"fast", fast}, {"brute", brute.value}, {"a_size", static_cast<std::int64_t>(a_set(t, profile).members.size())}};
    if (profile.diameter >= kprime - 1) {
      const VertexSet central = kprime == 2 ? central_pair(profile) : central_triple(profile);
      const int at_center = ecc_kk(t, central, k).value;
      gap += std::abs(at_center - brute.value);
      v.values.emplace_back("central", at_center);
      v.witnesses.emplace_back("central", central);
    }
    v.witnesses.emplace_back("sr_core", brute.core);
    settle(v, Rational(gap), Rational(0));
    return v;
  }
  if (suite == "lemma31") {
    if (k < 3) return kSkipHypothesis;
    if (f.leaf_count() < static_cast<std::size_t>(k)) return kSkipLeaves;
    const Tree& t = f.tree();
    const auto leaves = t.leaves();
    std::int64_t mismatches = 0, checked = 0;
    VertexSet first_bad;
    for_each_combination(std::span<const Vertex>(leaves.members()), k, [&](std::span<const Vertex> members) {
      const VertexSet s(std::vector<Vertex>(members.begin(), members.end()));
      const int whole = steiner_distance(t, s).value;
      for (Vertex v : s) {
        ++checked;
        if (whole != steiner_distance(t, s.without(v)).value + leaf_branch_length(t, s, v)) {
          if (mismatches++ == 0) first_bad = s;
        }
      }
    });
    Verdict v = f.verdict(suite, k, kprime);
    settle(v, Rational(mismatches), Rational(0));
    v.values = {{"checked", checked}, {"mismatches", mismatches}};
    if (mismatches) v.witnesses.emplace_back("first_mismatch", first_bad);
    return v;
  }
  fail(Errc::unknown_suite, "unknown suite '" + suite + "'");
}

// Suites with a fixed k' ignore the requested k' range; lemma31 has no k'.
inline IntRange effective_kprime_range(const std::string& suite, IntRange requested) {
  if (suite == "thm_k1") return {1, 1};
  if (suite == "thm_k2") return {2, 2};
  if (suite == "thm_k3") return {3, 3};
  if (suite == "lemma31") return {0, 0};
  return requested;
}

inline std::vector<std::pair<int, int>> suite_pairs(const std::string& suite, IntRange k_range, IntRange kprime_range) {
  const IntRange kp_range = effective_kprime_range(suite, kprime_range);
  std::vector<std::pair<int, int>> out;
  for (int k = k_range.lo; k <= k_range.hi; ++k)
    for (int kp = kp_range.lo; kp <= kp_range.hi; ++kp) out.emplace_back(k, kp);
  return out;
}

struct TreeOutcome {
  std::size_t instances = 0;
  std::vector<Verdict> violations;
  std::vector<Verdict> equalities;
  std::map<std::pair<int, int>, std::size_t> equality_counts;
  std::map<std::tuple<int, int, std::string>, std::size_t> skips;
};

/// Runs `work(i)` for i in [0, count) on `jobs` threads; results keep index order.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, const std::function<Result(std::size_t)>& work) {
  std::vector<Result> results(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = work(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j)
    workers.emplace_back([&, j] {
      try {
        for (std::size_t i = next++; i < count; i = next++) results[i] = work(i);
      } catch (...) {
        errors[j] = std::current_exception();
        next = count;
      }
    });
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace detail

/// Environment default for the worker count (STEINER_KIT_JOBS), else 1.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("STEINER_KIT_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

inline Report run_suite(const std::string& suite, std::span<const CorpusTree> corpus, const std::string& corpus_description,
                        IntRange k_range, IntRange kprime_range, const RunOptions& options = {}) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    fail(Errc::unknown_suite, "unknown suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  const auto pairs = detail::suite_pairs(suite, k_range, kprime_range);
  const bool list_equalities = suite_kind(suite) == SuiteKind::bound;

  auto outcomes = detail::parallel_map<detail::TreeOutcome>(corpus.size(), options.jobs, [&](std::size_t i) {
    detail::TreeFacts facts(corpus[i]);
    detail::TreeOutcome out;
    for (auto [k, kp] : pairs) {
      auto outcome = detail::evaluate(suite, facts, k, kp);
      if (auto* reason = std::get_if<std::string>(&outcome)) {
        ++out.skips[{k, kp, *reason}];
        continue;
      }
      auto& v = std::get<Verdict>(outcome);
      ++out.instances;
      if (!v.holds) out.violations.push_back(v);
      if (v.equality) {
        ++out.equality_counts[{k, kp}];
        if (list_equalities) out.equalities.push_back(std::move(v));
      }
    }
    return out;
  });

  Report r;
  r.suite = suite;
  r.k_range = k_range;
  r.kprime_range = detail::effective_kprime_range(suite, kprime_range);
  r.corpus = corpus_description;
  r.trees = corpus.size();
  if (!corpus.empty()) {
    r.n_min = r.n_max = static_cast<int>(corpus.front().tree.order());
    for (const auto& c : corpus) {
      r.n_min = std::min(r.n_min, static_cast<int>(c.tree.order()));
      r.n_max = std::max(r.n_max, static_cast<int>(c.tree.order()));
    }
  }
  std::map<std::pair<int, int>, std::size_t> eq;
  std::map<std::tuple<int, int, std::string>, std::size_t> skips;
  for (auto& o : outcomes) {
    r.instances += o.instances;
    std::move(o.violations.begin(), o.violations.end(), std::back_inserter(r.violations));
    std::move(o.equalities.begin(), o.equalities.end(), std::back_inserter(r.equalities));
    for (auto& [key, c] : o.equality_counts) eq[key] += c;
    for (auto& [key, c] : o.skips) skips[key] += c;
  }
  for (auto& [key, c] : eq) r.equality_counts.push_back(EqualityCount{key.first, key.second, c});
  for (auto& [key, c] : skips) {
    r.skips.push_back(SkipRecord{std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    r.skipped += c;
  }
  if (options.timing)
    r.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Checks Sd_k <= k/(k-k') Sr_{k,k'} - k'(k'-1)/(k-k') on every free tree up to
/// `n_max`; violations carry the graph6 line, both sides and all witnesses.
inline Report hunt_conjecture(int n_max, IntRange k_range, IntRange kprime_range, const RunOptions& options = {}) {
  if (n_max < 1) fail(Errc::precondition, "n_max must be >= 1");
  if (n_max > static_cast<int>(kMaxEnumerationOrder))
    fail(Errc::too_large, "hunt supports n_max <= " + std::to_string(kMaxEnumerationOrder));
  const auto corpus = make_corpus(enumerate_trees(1, static_cast<std::size_t>(n_max)));
  return run_suite("conjecture", corpus, "free trees n=1.." + std::to_string(n_max), k_range, kprime_range, options);
}

// ---------------------------------------------------------------------------
// Serialization

using ordered_json = nlohmann::ordered_json;

inline ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["suite"] = v.suite;
  j["code"] = v.code;
  j["graph6"] = v.graph6;
  j["n"] = v.n;
  j["k"] = v.k;
  j["kprime"] = v.kprime;
  j["lhs"] = to_string(v.lhs);
  j["rhs"] = to_string(v.rhs);
  j["holds"] = v.holds;
  j["equality"] = v.equality;
  ordered_json w = ordered_json::object();
  for (const auto& [name, set] : v.witnesses) w[name] = set.members();
  j["witnesses"] = std::move(w);
  ordered_json vals = ordered_json::object();
  for (const auto& [name, value] : v.values) vals[name] = value;
  j["values"] = std::move(vals);
  return j;
}

inline Verdict verdict_from_json(const ordered_json& j) {
  Verdict v;
  v.suite = j.at("suite").get<std::string>();
  v.code = j.at("code").get<std::string>();
  v.graph6 = j.at("graph6").get<std::string>();
  v.n = j.at("n").get<int>();
  v.k = j.at("k").get<int>();
  v.kprime = j.at("kprime").get<int>();
  v.lhs = parse_rational(j.at("lhs").get<std::string>());
  v.rhs = parse_rational(j.at("rhs").get<std::string>());
  v.holds = j.at("holds").get<bool>();
  v.equality = j.at("equality").get<bool>();
  for (const auto& [name, set] : j.at("witnesses").items())
    v.witnesses.emplace_back(name, VertexSet(set.get<std::vector<Vertex>>()));
  for (const auto& [name, value] : j.at("values").items()) v.values.emplace_back(name, value.get<std::int64_t>());
  return v;
}

inline ordered_json report_to_json_value(const Report& r) {
  ordered_json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["suite"] = r.suite;
  j["parameters"] = {{"n_min", r.n_min}, {"n_max", r.n_max}, {"k", r.k_range.to_string()},
                     {"kprime", r.kprime_range.to_string()}};
  j["corpus"] = {{"description", r.corpus}, {"seed", r.seed ? ordered_json(*r.seed) : ordered_json(nullptr)}};
  j["status"] = r.passed() ? "pass" : "fail";
  j["trees"] = r.trees;
  j["instances"] = r.instances;
  j["skipped"] = r.skipped;
  j["violations"] = ordered_json::array();
  for (const auto& v : r.violations) j["violations"].push_back(verdict_to_json(v));
  j["equality_counts"] = ordered_json::array();
  for (const auto& e : r.equality_counts) j["equality_counts"].push_back({{"k", e.k}, {"kprime", e.kprime}, {"count", e.count}});
  j["equalities"] = ordered_json::array();
  for (const auto& v : r.equalities) j["equalities"].push_back(verdict_to_json(v));
  j["skips"] = ordered_json::array();
  for (const auto& s : r.skips)
    j["skips"].push_back({{"k", s.k}, {"kprime", s.kprime}, {"reason", s.reason}, {"count", s.count}});
  if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
  return j;
}

inline std::string report_to_json(const Report& r) { return report_to_json_value(r).dump(2) + "\n"; }

inline Report report_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  Report r;
  r.tool = j.at("tool").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.suite = j.at("suite").get<std::string>();
  const auto& p = j.at("parameters");
  r.n_min = p.at("n_min").get<int>();
  r.n_max = p.at("n_max").get<int>();
  r.k_range = IntRange::parse(p.at("k").get<std::string>());
  r.kprime_range = IntRange::parse(p.at("kprime").get<std::string>());
  r.corpus = j.at("corpus").at("description").get<std::string>();
  if (!j.at("corpus").at("seed").is_null()) r.seed = j.at("corpus").at("seed").get<std::uint64_t>();
  r.trees = j.at("trees").get<std::size_t>();
  r.instances = j.at("instances").get<std::size_t>();
  r.skipped = j.at("skipped").get<std::size_t>();
  for (const auto& v : j.at("violations")) r.violations.push_back(verdict_from_json(v));
  for (const auto& e : j.at("equality_counts"))
    r.equality_counts.push_back(EqualityCount{e.at("k").get<int>(), e.at("kprime").get<int>(), e.at("count").get<std::size_t>()});
  for (const auto& v : j.at("equalities")) r.equalities.push_back(verdict_from_json(v));
  for (const auto& s : j.at("skips"))
    r.skips.push_back(SkipRecord{s.at("k").get<int>(), s.at("kprime").get<int>(), s.at("reason").get<std::string>(),
                                 s.at("count").get<std::size_t>()});
  if (j.contains("runtime_ms")) r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  return r;
}

/// One verdict per row: violations first, then listed equality instances.
inline std::string report_to_csv(const Report& r) {
  std::string out = "kind,suite,code,graph6,n,k,kprime,lhs,rhs,holds,equality\n";
  auto row = [&](const char* kind, const Verdict& v) {
    out += std::string(kind) + "," + v.suite + "," + v.code + "," + v.graph6 + "," + std::to_string(v.n) + "," +
           std::to_string(v.k) + "," + std::to_string(v.kprime) + "," + to_string(v.lhs) + "," + to_string(v.rhs) +
           "," + (v.holds ? "true" : "false") + "," + (v.equality ? "true" : "false") + "\n";
  };
  for (const auto& v : r.violations) row("violation", v);
  for (const auto& v : r.equalities) row("equality", v);
  return out;
}

enum class ReportFormat { json, csv };

inline void emit_report(const Report& r, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << (format == ReportFormat::json ? report_to_json(r) : report_to_csv(r));
  if (!out) fail(Errc::io_error, "write failed for " + path);
}

}  // namespace steiner

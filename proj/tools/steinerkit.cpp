// steinerkit: command-line front end for the steiner library.
//
// Exit status: 0 ok / suite passed, 1 violation found (report still written),
// 2 usage or input error, 3 resource guard tripped.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/steiner.hpp"

namespace {

using namespace steiner;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << text;
  if (!out) fail(Errc::io_error, "write failed for " + path);
}

VertexSet parse_set(const std::string& text) {
  std::vector<Vertex> members;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item[0] == '-' || v > 0xffffffffUL)
      fail(Errc::bad_vertex, "bad vertex id '" + item + "' in set '" + text + "'");
    members.push_back(static_cast<Vertex>(v));
  }
  if (members.empty()) fail(Errc::empty_set, "empty vertex set");
  return VertexSet(std::move(members));
}

ordered_json record_json(std::size_t line, const std::string& g6, const ParamRecord& r) {
  ordered_json j;
  j["line"] = line;
  j["graph6"] = g6;
  j["n"] = r.n;
  j["k"] = r.k;
  j["kprime"] = r.kprime;
  j["sd_k"] = r.sd_k;
  j["sr_k"] = r.sr_k;
  j["sr_kk"] = r.sr_kk;
  j["diam"] = r.diam;
  j["a_size"] = r.a_size;
  j["route"] = to_string(r.route);
  j["sd_witness"] = r.sd_witness.members();
  j["sr_center"] = r.sr_center;
  j["sr_kk_core"] = r.sr_kk_core.members();
  return j;
}

struct ComputeArgs {
  std::string in, out = "-";
  int k = 0;
  std::optional<int> kprime;
  bool all = false;
};

int run_compute(const ComputeArgs& a) {
  ordered_json records = ordered_json::array();
  std::size_t line = 0;
  for (const auto& list : read_graph6_file(a.in)) {
    ++line;
    const Tree tree = Tree::from_edges(list);
    const std::string g6 = graph6_encode(list);
    if (a.all) {
      const int k_max = std::min<int>(a.k, static_cast<int>(tree.order()));
      for (int k = 2; k <= k_max; ++k)
        for (int kp = 1; kp <= k; ++kp) records.push_back(record_json(line, g6, param_record(tree, k, kp)));
    } else {
      records.push_back(record_json(line, g6, param_record(tree, a.k, a.kprime.value_or(1))));
    }
  }
  write_text(a.out, records.dump(2) + "\n");
  return kExitOk;
}

int run_enumerate(int n, const std::string& out) {
  std::string text;
  FreeTreeGenerator gen(static_cast<std::size_t>(n < 1 ? 0 : n));
  while (auto t = gen.next()) text += graph6_encode(*t) + "\n";
  write_text(out, text);
  return kExitOk;
}

int run_family(const std::string& spec, const std::string& out) {
  const auto g = generate(FamilySpec::parse(spec));
  write_text(out, std::visit([](const auto& x) { return graph6_encode(x); }, g) + "\n");
  return kExitOk;
}

struct VerifyArgs {
  std::string suite, in, family, out = "-", format = "json", k = "3:6", kprime = "1:5";
  int n_min = 1, n_max = 0;
  unsigned jobs = 1;
  bool timing = false;
};

int finish_report(const Report& r, const std::string& format, const std::string& out) {
  write_text(out, format == "csv" ? report_to_csv(r) : report_to_json(r));
  return r.passed() ? kExitOk : kExitViolation;
}

int run_verify(const VerifyArgs& a) {
  const IntRange k = IntRange::parse(a.k), kp = IntRange::parse(a.kprime);
  std::vector<Tree> trees;
  std::string description;
  if (!a.in.empty()) {
    for (const auto& list : read_graph6_file(a.in)) trees.push_back(Tree::from_edges(list));
    description = "graph6 file " + a.in;
  } else if (!a.family.empty()) {
    const auto spec = FamilySpec::parse(a.family);
    trees.push_back(generate_tree(spec));
    description = "family " + spec.to_string();
  } else {
    if (a.n_max < 1) fail(Errc::precondition, "--n-max is required without --in/--family");
    if (a.n_min < 1 || a.n_min > a.n_max) fail(Errc::precondition, "--n-min must lie in [1, n-max]");
    trees = enumerate_trees(static_cast<std::size_t>(a.n_min), static_cast<std::size_t>(a.n_max));
    description = "free trees n=" + std::to_string(a.n_min) + ".." + std::to_string(a.n_max);
  }
  const auto corpus = make_corpus(std::move(trees));
  return finish_report(run_suite(a.suite, corpus, description, k, kp, {a.jobs, a.timing}), a.format, a.out);
}

int run_formula(const std::string& spec_text, int k, std::optional<int> kprime) {
  const auto spec = FamilySpec::parse(spec_text);
  std::cout << (kprime ? sr_kk_formula(spec, k, *kprime) : sd_k_formula(spec, k)) << "\n";
  return kExitOk;
}

int run_oracle(const std::string& in, const std::string& set_text) {
  const VertexSet set = parse_set(set_text);
  for (const auto& list : read_graph6_file(in)) std::cout << dw_steiner(Graph::from_edges(list), set) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner distance parameters of trees and graphs"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "parameters for every tree in a graph6 file");
  c->add_option("--in", compute.in, "graph6 input, - for stdin")->required();
  c->add_option("--k", compute.k, "k")->required();
  c->add_option("--kprime", compute.kprime, "k' (default 1)");
  c->add_flag("--all", compute.all, "sweep 2 <= k <= K, 1 <= k' <= k");
  c->add_option("--out", compute.out, "output JSON (default stdout)");

  int enum_n = 0;
  std::string enum_out = "-";
  auto* e = app.add_subcommand("enumerate", "all free trees of order n as graph6");
  e->add_option("--n", enum_n, "order")->required();
  e->add_option("--out", enum_out, "output file (default stdout)");

  std::string family_spec, family_out = "-";
  auto* f = app.add_subcommand("family", "one family member as graph6");
  f->add_option("--spec", family_spec, "family spec, e.g. p2ab:l=2,a=2,b=2,x=3")->required();
  f->add_option("--out", family_out, "output file (default stdout)");

  VerifyArgs verify;
  verify.jobs = default_jobs();
  auto* v = app.add_subcommand("verify", "run a verification suite over a corpus");
  v->add_option("--suite", verify.suite, "suite name")->required();
  v->add_option("--n-max", verify.n_max, "largest tree order");
  v->add_option("--n-min", verify.n_min, "smallest tree order (default 1)");
  v->add_option("--k", verify.k, "k range lo:hi");
  v->add_option("--kprime", verify.kprime, "k' range lo:hi");
  v->add_option("--jobs", verify.jobs, "worker threads (default $STEINER_KIT_JOBS or 1)")->check(CLI::PositiveNumber);
  v->add_option("--in", verify.in, "graph6 corpus instead of enumeration");
  v->add_option("--family", verify.family, "single family tree instead of enumeration");
  v->add_option("--format", verify.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  v->add_option("--out", verify.out, "report file (default stdout)");
  v->add_flag("--timing", verify.timing, "record runtime_ms (report is then not reproducible)");
  v->get_option("--in")->excludes(v->get_option("--family"));

  int hunt_n = 0;
  std::string hunt_k, hunt_kprime, hunt_out = "-", hunt_format = "json";
  unsigned hunt_jobs = default_jobs();
  bool hunt_timing = false;
  auto* h = app.add_subcommand("hunt", "exhaustive conjecture check over all free trees");
  h->add_option("--n-max", hunt_n, "largest tree order")->required();
  h->add_option("--k", hunt_k, "k range lo:hi")->required();
  h->add_option("--kprime", hunt_kprime, "k' range lo:hi")->required();
  h->add_option("--jobs", hunt_jobs, "worker threads")->check(CLI::PositiveNumber);
  h->add_option("--format", hunt_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  h->add_option("--out", hunt_out, "report file (default stdout)");
  h->add_flag("--timing", hunt_timing, "record runtime_ms");

  std::string formula_spec;
  int formula_k = 0;
  std::optional<int> formula_kprime;
  auto* fo = app.add_subcommand("formula", "closed form: Sd_k, or Sr_{k,k'} when --kprime is given");
  fo->add_option("--spec", formula_spec, "complete:n=, path:n= or multipartite:parts=a+b+...")->required();
  fo->add_option("--k", formula_k, "k")->required();
  fo->add_option("--kprime", formula_kprime, "k'");

  std::string oracle_in, oracle_set;
  auto* o = app.add_subcommand("oracle", "exact Steiner distance in general graphs");
  o->add_option("--in", oracle_in, "graph6 input, - for stdin")->required();
  o->add_option("--set", oracle_set, "comma-separated vertex ids")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ok) {
    return app.exit(ok);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (e->parsed()) return run_enumerate(enum_n, enum_out);
    if (f->parsed()) return run_family(family_spec, family_out);
    if (v->parsed()) return run_verify(verify);
    if (h->parsed())
      return finish_report(hunt_conjecture(hunt_n, IntRange::parse(hunt_k), IntRange::parse(hunt_kprime),
                                           {hunt_jobs, hunt_timing}),
                           hunt_format, hunt_out);
    if (fo->parsed()) return run_formula(formula_spec, formula_k, formula_kprime);
    if (o->parsed()) return run_oracle(oracle_in, oracle_set);
  } catch (const Error& err) {
    std::cerr << "steinerkit: " << err.what() << "\n";
    return err.code() == Errc::too_large ? kExitResource : kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "steinerkit: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

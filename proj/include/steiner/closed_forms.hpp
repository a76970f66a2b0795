#pragma once

// Closed-form Steiner parameters of complete graphs, paths and complete
// multipartite graphs; the right-hand sides of the diameter/radius bounds; and
// deterministic generators for the extremal families.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/graph.hpp"
#include "steiner/rational.hpp"
#include "steiner/tree.hpp"

namespace steiner {

enum class FamilyKind { complete, path, multipartite, star, starlike, p_l_abx };

/// A named graph family instance. Serialized as "kind:key=value,...", e.g.
/// "path:n=7", "multipartite:parts=2+3+3", "starlike:m=3,l=2",
/// "p2ab:l=2,a=2,b=2,x=3".
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int n = 0;               // complete, path
  std::vector<int> parts;  // multipartite, ascending
  int m = 0;               // star leaves / starlike legs
  int l = 0;               // starlike leg length / spine order
  int a = 0, b = 0, x = 0; // p_l_abx pendant path counts and length

  int order() const {
    switch (kind) {
      case FamilyKind::complete:
      case FamilyKind::path: return n;
      case FamilyKind::multipartite: return std::accumulate(parts.begin(), parts.end(), 0);
      case FamilyKind::star: return m + 1;
      case FamilyKind::starlike: return 1 + m * l;
      case FamilyKind::p_l_abx: return l + (a + b) * x;
    }
    return 0;
  }

  bool is_tree_family() const { return kind != FamilyKind::complete && kind != FamilyKind::multipartite; }

  std::string to_string() const {
    auto num = [](int v) { return std::to_string(v); };
    switch (kind) {
      case FamilyKind::complete: return "complete:n=" + num(n);
      case FamilyKind::path: return "path:n=" + num(n);
      case FamilyKind::multipartite: {
        std::string out = "multipartite:parts=";
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + num(parts[i]);
        return out;
      }
      case FamilyKind::star: return "star:m=" + num(m);
      case FamilyKind::starlike: return "starlike:m=" + num(m) + ",l=" + num(l);
      case FamilyKind::p_l_abx: {
        const std::string head = l == 2 ? "p2ab" : l == 3 ? "p3ab" : "plab";
        return head + ":l=" + num(l) + ",a=" + num(a) + ",b=" + num(b) + ",x=" + num(x);
      }
    }
    return {};
  }

  static FamilySpec parse(std::string_view text);

  static FamilySpec of(FamilyKind kind, int n = 0) {
    FamilySpec s;
    s.kind = kind;
    s.n = n;
    return s;
  }

  static FamilySpec complete_graph(int n) { return checked(of(FamilyKind::complete, n)); }
  static FamilySpec path_graph(int n) { return checked(of(FamilyKind::path, n)); }
  static FamilySpec multipartite_graph(std::vector<int> parts) {
    FamilySpec s = of(FamilyKind::multipartite);
    s.parts = std::move(parts);
    std::sort(s.parts.begin(), s.parts.end());
    return checked(std::move(s));
  }
  static FamilySpec star_graph(int m) {
    FamilySpec s = of(FamilyKind::star);
    s.m = m;
    return checked(std::move(s));
  }
  static FamilySpec starlike_tree(int legs, int length) {
    FamilySpec s = of(FamilyKind::starlike);
    s.m = legs;
    s.l = length;
    return checked(std::move(s));
  }
  static FamilySpec p_l_abx_tree(int l, int a, int b, int x) {
    FamilySpec s = of(FamilyKind::p_l_abx);
    s.l = l;
    s.a = a;
    s.b = b;
    s.x = x;
    return checked(std::move(s));
  }

  static FamilySpec checked(FamilySpec s) {
    auto positive = [&](int v, const char* name) {
      if (v < 1) fail(Errc::bad_spec, s.to_string() + ": parameter " + name + " must be >= 1");
    };
    switch (s.kind) {
      case FamilyKind::complete:
      case FamilyKind::path: positive(s.n, "n"); break;
      case FamilyKind::multipartite:
        if (s.parts.size() < 2) fail(Errc::bad_spec, "multipartite needs at least two parts");
        for (int p : s.parts) positive(p, "part");
        if (!std::is_sorted(s.parts.begin(), s.parts.end())) fail(Errc::bad_spec, "multipartite parts must ascend");
        break;
      case FamilyKind::star: positive(s.m, "m"); break;
      case FamilyKind::starlike:
        positive(s.m, "m");
        positive(s.l, "l");
        break;
      case FamilyKind::p_l_abx:
        positive(s.l, "l");
        positive(s.a, "a");
        positive(s.b, "b");
        positive(s.x, "x");
        break;
    }
    return s;
  }
};

namespace detail {

inline int parse_positive(std::string_view text, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail(Errc::bad_spec, "bad integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  return value;
}

}  // namespace detail

inline FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(Errc::bad_spec, "expected kind:key=value in '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);

  std::vector<std::pair<std::string, std::string_view>> fields;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(Errc::bad_spec, "expected key=value, got '" + std::string(item) + "'");
    fields.emplace_back(std::string(item.substr(0, eq)), item.substr(eq + 1));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  auto take = [&](const char* key) -> int {
    for (auto it = fields.begin(); it != fields.end(); ++it)
      if (it->first == key) {
        const int v = detail::parse_positive(it->second, text);
        fields.erase(it);
        return v;
      }
    fail(Errc::bad_spec, "missing parameter '" + std::string(key) + "' in '" + std::string(text) + "'");
  };
  auto finish = [&](FamilySpec s) {
    if (!fields.empty()) fail(Errc::bad_spec, "unknown parameter '" + fields.front().first + "' in '" + std::string(text) + "'");
    return checked(std::move(s));
  };

  FamilySpec s;
  if (head == "complete" || head == "path") {
    s.kind = head == "complete" ? FamilyKind::complete : FamilyKind::path;
    s.n = take("n");
  } else if (head == "multipartite") {
    s.kind = FamilyKind::multipartite;
    auto it = std::find_if(fields.begin(), fields.end(), [](const auto& f) { return f.first == "parts"; });
    if (it == fields.end()) fail(Errc::bad_spec, "multipartite needs parts=n1+n2+...");
    std::string_view list = it->second;
    while (!list.empty()) {
      const auto plus = list.find('+');
      s.parts.push_back(detail::parse_positive(list.substr(0, plus), text));
      list = plus == std::string_view::npos ? std::string_view{} : list.substr(plus + 1);
    }
    fields.erase(it);
    std::sort(s.parts.begin(), s.parts.end());
  } else if (head == "star") {
    s.kind = FamilyKind::star;
    s.m = take("m");
  } else if (head == "starlike") {
    s.kind = FamilyKind::starlike;
    s.m = take("m");
    s.l = take("l");
  } else if (head == "plab" || head == "p2ab" || head == "p3ab") {
    s.kind = FamilyKind::p_l_abx;
    const int implied = head == "p2ab" ? 2 : head == "p3ab" ? 3 : 0;
    const bool has_l = std::any_of(fields.begin(), fields.end(), [](const auto& f) { return f.first == "l"; });
    s.l = has_l || implied == 0 ? take("l") : implied;
    if (implied != 0 && s.l != implied)
      fail(Errc::bad_spec, std::string(head) + " requires l=" + std::to_string(implied));
    s.a = take("a");
    s.b = take("b");
    s.x = take("x");
  } else {
    fail(Errc::bad_spec, "unknown family kind '" + std::string(head) + "'");
  }
  return finish(std::move(s));
}

/// Labelings: paths 0..n-1 in order; star and starlike hub 0 with legs labeled
/// outward one after another; P_l(a,b;x) spine 0..l-1, then the a pendant paths
/// at spine vertex 0, then the b paths at spine vertex l-1, each outward.
/// Complete and multipartite graphs number their parts consecutively.
inline std::variant<Tree, Graph> generate(const FamilySpec& raw) {
  const FamilySpec spec = FamilySpec::checked(raw);
  std::vector<Edge> edges;
  const auto n = static_cast<std::size_t>(spec.order());
  auto chain_from = [&](Vertex anchor, int length, Vertex& next) {
    Vertex prev = anchor;
    for (int i = 0; i < length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  };
  switch (spec.kind) {
    case FamilyKind::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(n, std::move(edges));
    case FamilyKind::multipartite: {
      std::vector<int> part_of;
      for (std::size_t p = 0; p < spec.parts.size(); ++p) part_of.insert(part_of.end(), spec.parts[p], static_cast<int>(p));
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
      return Graph::from_edges(n, std::move(edges));
    }
    case FamilyKind::path:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case FamilyKind::star:
    case FamilyKind::starlike: {
      const int length = spec.kind == FamilyKind::star ? 1 : spec.l;
      Vertex next = 1;
      for (int leg = 0; leg < spec.m; ++leg) chain_from(0, length, next);
      break;
    }
    case FamilyKind::p_l_abx: {
      for (int v = 1; v < spec.l; ++v) edges.emplace_back(v - 1, v);
      Vertex next = static_cast<Vertex>(spec.l);
      for (int i = 0; i < spec.a; ++i) chain_from(0, spec.x, next);
      for (int i = 0; i < spec.b; ++i) chain_from(static_cast<Vertex>(spec.l - 1), spec.x, next);
      break;
    }
  }
  return Tree::from_edges(n, std::move(edges));
}

inline Graph generate_graph(const FamilySpec& spec) {
  auto g = generate(spec);
  if (auto* t = std::get_if<Tree>(&g)) return t->to_graph();
  return std::get<Graph>(std::move(g));
}

/// Throws BadSpec for families that are not trees.
inline Tree generate_tree(const FamilySpec& spec) {
  auto g = generate(spec);
  if (auto* t = std::get_if<Tree>(&g)) return std::move(*t);
  return Tree::from_graph(std::get<Graph>(g));
}

/// Steiner k-diameter of K_n, P_n or a complete multipartite graph.
inline int sd_k_formula(const FamilySpec& spec, int k) {
  const int n = spec.order();
  if (k < 2 || k > n) fail(Errc::bad_k, "sd_k_formula: k=" + std::to_string(k) + " outside [2, " + std::to_string(n) + "]");
  switch (spec.kind) {
    case FamilyKind::complete: return k - 1;
    case FamilyKind::path: return n - 1;
    case FamilyKind::multipartite: return spec.parts.back() >= k ? k : k - 1;
    default: fail(Errc::unsupported_kind, "no closed-form Steiner diameter for " + spec.to_string());
  }
}

/// Steiner (k,k')-radius of K_n, P_n or a complete multipartite graph.
inline int sr_kk_formula(const FamilySpec& spec, int k, int kprime) {
  const int n = spec.order();
  if (k < 2 || k > n) fail(Errc::bad_k, "sr_kk_formula: k=" + std::to_string(k) + " outside [2, " + std::to_string(n) + "]");
  if (kprime < 1 || kprime > k)
    fail(Errc::bad_k, "sr_kk_formula: k'=" + std::to_string(kprime) + " outside [1, " + std::to_string(k) + "]");
  switch (spec.kind) {
    case FamilyKind::complete: return k - 1;
    case FamilyKind::path:
      if (k == kprime) return k - 1;
      if (k - kprime == 1) return (n + kprime - 2 + 1) / 2;
      return n - 1;
    case FamilyKind::multipartite:
      if (kprime >= 2) return k - 1;
      return spec.parts.front() >= k ? k : k - 1;
    default: fail(Errc::unsupported_kind, "no closed-form Steiner radius for " + spec.to_string());
  }
}

enum class BoundKind { thm34, thm_k2, thm_k3, conjecture, tree_k1, general_hos, general_reiswig };

inline const char* to_string(BoundKind b) {
  switch (b) {
    case BoundKind::thm34: return "thm34";
    case BoundKind::thm_k2: return "thm_k2";
    case BoundKind::thm_k3: return "thm_k3";
    case BoundKind::conjecture: return "conjecture";
    case BoundKind::tree_k1: return "tree_k1";
    case BoundKind::general_hos: return "general_hos";
    case BoundKind::general_reiswig: return "general_reiswig";
  }
  return "";
}

inline BoundKind parse_bound_kind(std::string_view name) {
  for (BoundKind b : {BoundKind::thm34, BoundKind::thm_k2, BoundKind::thm_k3, BoundKind::conjecture,
                      BoundKind::tree_k1, BoundKind::general_hos, BoundKind::general_reiswig})
    if (name == to_string(b)) return b;
  fail(Errc::bad_spec, "unknown bound '" + std::string(name) + "'");
}

/// Exact right-hand side of the named upper bound on the Steiner k-diameter,
/// given the radius-type quantity `sr` it is stated in terms of.
inline Rational bound_value(BoundKind bound, int k, int kprime, const Rational& sr) {
  auto require = [&](bool ok, const char* hypothesis) {
    if (!ok)
      fail(Errc::bad_k, std::string(to_string(bound)) + " requires " + hypothesis + " (k=" + std::to_string(k) +
                            ", k'=" + std::to_string(kprime) + ")");
  };
  using R = Rational;
  switch (bound) {
    case BoundKind::thm34:
      require(k >= 3 && kprime >= 1 && kprime < k, "k >= 3 and k > k' >= 1");
      return R(k, k - kprime) * sr;
    case BoundKind::thm_k2:
      require(k >= 3, "k >= 3");
      return R(k, k - 2) * sr - R(2, k - 2);
    case BoundKind::thm_k3:
      require(k >= 4, "k >= 4");
      return R(k, k - 3) * sr - R(6, k - 3);
    case BoundKind::conjecture:
      require(k >= 3 && kprime >= 1 && kprime < k, "k >= 3 and k > k' >= 1");
      return R(k, k - kprime) * sr - R(static_cast<std::int64_t>(kprime) * (kprime - 1), k - kprime);
    case BoundKind::tree_k1:
      require(k >= 2, "k >= 2");
      return R(k, k - 1) * sr;
    case BoundKind::general_hos:
      require(k >= 2, "k >= 2");
      return R(2 * (k + 1), 2 * k - 1) * sr;
    case BoundKind::general_reiswig:
      require(k >= 5, "k >= 5");
      return R(k + 3, k + 1) * sr;
  }
  return sr;
}

}  // namespace steiner

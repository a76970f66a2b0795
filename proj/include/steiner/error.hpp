#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

enum class Errc {
  not_a_tree,
  bad_graph,
  bad_vertex,
  empty_set,
  bad_k,
  precondition,
  unsupported_kind,
  bad_spec,
  too_large,
  malformed_graph6,
  unknown_suite,
  io_error,
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_a_tree: return "NotATree";
    case Errc::bad_graph: return "BadGraph";
    case Errc::bad_vertex: return "BadVertex";
    case Errc::empty_set: return "EmptySet";
    case Errc::bad_k: return "BadK";
    case Errc::precondition: return "PreconditionViolation";
    case Errc::unsupported_kind: return "UnsupportedKind";
    case Errc::bad_spec: return "BadSpec";
    case Errc::too_large: return "TooLarge";
    case Errc::malformed_graph6: return "MalformedGraph6";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

// Every failure in the toolkit surfaces as an Error carrying a code, so callers
// (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace steiner

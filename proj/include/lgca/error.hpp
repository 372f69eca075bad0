#pragma once

#include <stdexcept>
#include <string>

namespace lgca {

// Machine-checkable failure categories. The CLI maps parse-class codes to
// exit status 2 and everything else to 1.
enum class Errc {
  parse,
  unknown_vertex,
  unknown_label,
  empty_word,
  infinite_language,
  closure_cap,
  cyclic_graph,
  sinks_not_in_family,
  no_sinks,
  not_normal,
  not_weakly_left_resolving,
  family_membership,
  bad_family,
  precondition,
  too_many_vertices,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lgca

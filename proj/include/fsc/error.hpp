#pragma once

#include <stdexcept>
#include <string>

namespace fsc {

// Every failure the library can raise. Codes with a line number attached
// come from document parsing; the rest are raised by library operations.
enum class Errc {
  duplicate_vertex,
  unknown_endpoint,
  self_loop,
  membership_out_of_range,
  edge_exceeds_vertex_cap,
  duplicate_edge,
  empty_vertex_set,
  not_proper,
  unknown_vertex,
  not_disjoint,
  host_mismatch,
  not_a_path,
  vertex_inside_subgraph,
  no_crossing_edge,
  not_a_bridge,
  not_a_fuzzy_tree,
  vertex_not_in_subgraph,
  edgeless_graph,
  budget_exceeded,
  syntax_error,
  semantic_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        code_(code),
        line_(line) {}

  Errc code() const noexcept { return code_; }

  // 1-based source line for document errors, 0 otherwise.
  int line() const noexcept { return line_; }

 private:
  Errc code_;
  int line_;
};

}  // namespace fsc

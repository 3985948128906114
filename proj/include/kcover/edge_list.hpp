#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kcover/graph.hpp"

namespace kcover {

enum class EdgeListErrorKind {
  parse,         // malformed header/line, wrong edge count, trailing junk
  vertex_range,  // endpoint outside 0..n-1
  self_loop,
  duplicate_edge,
};

class EdgeListError : public std::runtime_error {
public:
  EdgeListError(EdgeListErrorKind kind, int line, const std::string& what)
      : std::runtime_error("edge list, line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  EdgeListErrorKind kind() const { return kind_; }
  int line() const { return line_; }

private:
  EdgeListErrorKind kind_;
  int line_;
};

/**
 * Text format: header line "n m", then m lines "u v". The explicit header
 * keeps isolated vertices across round-trips. save emits each edge once as
 * "u v" with u < v, in ascending lexicographic order, so
 * load(save(g)) == g bit for bit.
 */
Graph load_edge_list(std::string_view text);
std::string save_edge_list(const Graph& g);

Graph load_edge_list_file(const std::filesystem::path& path);
void save_edge_list_file(const Graph& g, const std::filesystem::path& path);

}  // namespace kcover

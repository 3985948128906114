#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kcover/bitset.hpp"
#include "kcover/rational.hpp"

namespace kcover {

/**
 * Undirected simple graph over vertices 0..n-1, adjacency stored as n
 * fixed-width bit rows in one flat word array (row-major, stride
 * row_words()). Symmetry and a zero diagonal are maintained by add_edge;
 * the edge count is cached. Immutable after construction by convention:
 * generators and loaders build it, everything else only reads, so a Graph
 * can be shared freely across parallel workers.
 */
class Graph {
public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  int row_words() const { return words_per_row_; }

  bool has_edge(int u, int v) const;

  /// Adds the undirected edge {u,v}. Throws std::invalid_argument on a
  /// self-loop or out-of-range endpoint, std::logic_error on a duplicate.
  void add_edge(int u, int v);

  /// Adjacency row of u as a word span (hot path, no copy).
  std::span<const BitWord> row(int u) const {
    return {words_.data() + static_cast<std::size_t>(u) * words_per_row_,
            static_cast<std::size_t>(words_per_row_)};
  }

  int degree(int u) const;
  std::vector<int> degrees() const;
  int max_degree() const;

  /// N(u) as an owned bitset; u itself is never a member.
  /// Throws std::out_of_range for an invalid vertex.
  Bitset neighborhood(int u) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check_vertex(int u) const;

  int n_ = 0;
  int words_per_row_ = 0;
  std::int64_t m_ = 0;
  std::vector<BitWord> words_;
};

/// The proof's split of V around a maximum-degree vertex:
/// S = N(u0), T = V \ S, |S| = delta. Note u0 itself lies in T.
struct SeedDecomposition {
  int u0 = 0;
  int delta = 0;
  Bitset S;
  Bitset T;
};

/// Maximum-degree vertex with smallest-id tie-break, plus the (S, T) split.
SeedDecomposition max_degree_seed(const Graph& g);

/// Exact density c = 2m/n^2, so c*n is the average degree.
Rational average_degree(const Graph& g);

/// |N(t0) u ... u N(t_{j-1})| for a tuple of vertices, repeats allowed.
/// Empty tuple covers nothing. Throws std::out_of_range on a bad vertex.
std::int64_t union_coverage(const Graph& g, std::span<const int> tuple);

/// Complement graph: edge iff u != v and {u,v} not an edge of g.
Graph complement(const Graph& g);

}  // namespace kcover

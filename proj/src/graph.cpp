#include "kcover/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace kcover {

Graph::Graph(int n)
    : n_(n),
      words_per_row_((n + kBitsPerWord - 1) / kBitsPerWord),
      words_(static_cast<std::size_t>(n) * ((n + kBitsPerWord - 1) / kBitsPerWord), 0) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw std::out_of_range("vertex " + std::to_string(u) + " out of range [0," +
                            std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (words_[static_cast<std::size_t>(u) * words_per_row_ + (v >> 6)] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& bit_uv = words_[static_cast<std::size_t>(u) * words_per_row_ + (v >> 6)];
  if ((bit_uv >> (v & 63)) & 1)
    throw std::logic_error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  bit_uv |= BitWord{1} << (v & 63);
  words_[static_cast<std::size_t>(v) * words_per_row_ + (u >> 6)] |= BitWord{1} << (u & 63);
  ++m_;
}

int Graph::degree(int u) const {
  check_vertex(u);
  int d = 0;
  for (BitWord w : row(u)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int u = 0; u < n_; ++u) out[u] = degree(u);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

Bitset Graph::neighborhood(int u) const {
  check_vertex(u);
  return Bitset::from_words(row(u), n_);
}

SeedDecomposition max_degree_seed(const Graph& g) {
  const int n = g.vertex_count();
  int u0 = 0;
  int delta = g.degree(0);
  for (int u = 1; u < n; ++u) {
    const int d = g.degree(u);
    if (d > delta) {
      delta = d;
      u0 = u;
    }
  }
  SeedDecomposition out;
  out.u0 = u0;
  out.delta = delta;
  out.S = g.neighborhood(u0);
  out.T = out.S;
  out.T.flip_all();
  return out;
}

Rational average_degree(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  return Rational(BigInt(2 * g.edge_count()), BigInt(n) * n);
}

std::int64_t union_coverage(const Graph& g, std::span<const int> tuple) {
  const int n = g.vertex_count();
  for (int v : tuple)
    if (v < 0 || v >= n)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n) + ")");
  std::int64_t covered = 0;
  const int words = g.row_words();
  for (int w = 0; w < words; ++w) {
    BitWord acc = 0;
    for (int v : tuple) acc |= g.row(v)[w];
    covered += std::popcount(acc);
  }
  return covered;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

}  // namespace kcover

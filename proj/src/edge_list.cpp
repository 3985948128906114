#include "kcover/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace kcover {
namespace {

// Splits off the next line (without trailing '\n'); returns false at end.
bool next_line(std::string_view& rest, std::string_view& line) {
  if (rest.empty()) return false;
  const auto nl = rest.find('\n');
  if (nl == std::string_view::npos) {
    line = rest;
    rest = {};
  } else {
    line = rest.substr(0, nl);
    rest.remove_prefix(nl + 1);
  }
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return true;
}

// Parses exactly two whitespace-separated nonnegative integers.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  auto parse_int = [&](long long& out) {
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{} || next == p) return false;
    p = next;
    return true;
  };
  skip_ws();
  if (!parse_int(a)) return false;
  skip_ws();
  if (!parse_int(b)) return false;
  skip_ws();
  return p == end;
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Graph load_edge_list(std::string_view text) {
  std::string_view rest = text;
  std::string_view line;
  int line_no = 1;
  if (!next_line(rest, line))
    throw EdgeListError(EdgeListErrorKind::parse, line_no, "missing \"n m\" header");

  long long n = 0, m = 0;
  if (!parse_pair(line, n, m) || n < 1 || m < 0)
    throw EdgeListError(EdgeListErrorKind::parse, line_no,
                        "bad header, expected \"n m\" with n >= 1");

  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    ++line_no;
    if (!next_line(rest, line))
      throw EdgeListError(EdgeListErrorKind::parse, line_no,
                          "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    long long u = 0, v = 0;
    if (!parse_pair(line, u, v))
      throw EdgeListError(EdgeListErrorKind::parse, line_no, "expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw EdgeListError(EdgeListErrorKind::vertex_range, line_no,
                          "vertex out of range [0," + std::to_string(n) + ")");
    if (u == v)
      throw EdgeListError(EdgeListErrorKind::self_loop, line_no,
                          "self-loop at vertex " + std::to_string(u));
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw EdgeListError(EdgeListErrorKind::duplicate_edge, line_no,
                          "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  while (next_line(rest, line)) {
    ++line_no;
    if (!blank(line))
      throw EdgeListError(EdgeListErrorKind::parse, line_no, "trailing content after last edge");
  }
  return g;
}

std::string save_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    const Bitset row = g.neighborhood(u);
    row.for_each_set([&](int v) {
      if (v > u) out << u << ' ' << v << '\n';
    });
  }
  return out.str();
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

void save_edge_list_file(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << save_edge_list(g);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace kcover

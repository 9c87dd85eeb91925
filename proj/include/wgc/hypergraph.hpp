#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgc/binary_matrix.hpp"

namespace wgc {

/// s-partite, s-uniform, c-regular hypergraph with n vertices per partition.
/// Hyperedge e holds one vertex index (0..n-1) for each partition.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t s, std::size_t c, std::size_t n, std::vector<std::vector<std::size_t>> edges)
      : s_(s), c_(c), n_(n), edges_(std::move(edges)) {
    validate();
    incident_.assign(s_ * n_, {});
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (std::size_t p = 0; p < s_; ++p) incident_[p * n_ + edges_[e][p]].push_back(e);
  }

  /// Reads an incidence matrix whose rows are ordered partition-major.
  static Hypergraph from_incidence(const BinaryMatrix& m, std::size_t s) {
    if (s == 0 || m.rows() % s != 0) throw std::invalid_argument("Hypergraph: row count not divisible by s");
    const std::size_t n = m.rows() / s;
    if (n == 0 || m.cols() % n != 0) throw std::invalid_argument("Hypergraph: column count not divisible by n");
    const std::size_t c = m.cols() / n;
    std::vector<std::vector<std::size_t>> edges(m.cols(), std::vector<std::size_t>(s));
    for (std::size_t e = 0; e < m.cols(); ++e)
      for (std::size_t p = 0; p < s; ++p) {
        std::size_t hits = 0;
        for (std::size_t v = 0; v < n; ++v)
          if (m.get(p * n + v, e)) {
            edges[e][p] = v;
            ++hits;
          }
        if (hits != 1) throw std::invalid_argument("Hypergraph: column must meet each partition exactly once");
      }
    return Hypergraph(s, c, n, std::move(edges));
  }

  std::size_t s() const { return s_; }
  std::size_t c() const { return c_; }
  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t vertex_count() const { return s_ * n_; }
  const std::vector<std::size_t>& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }

  /// Global vertex id p*n + v.
  std::size_t vertex_id(std::size_t partition, std::size_t v) const { return partition * n_ + v; }
  /// Edges through vertex v of partition p, ascending.
  const std::vector<std::size_t>& incident_edges(std::size_t partition, std::size_t v) const {
    return incident_.at(vertex_id(partition, v));
  }

  BinaryMatrix incidence_matrix() const {
    BinaryMatrix m(s_ * n_, edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (std::size_t p = 0; p < s_; ++p) m.set(p * n_ + edges_[e][p], e, true);
    return m;
  }

  /// Text format: "s c n", then one line per hyperedge of "p:index" labels.
  void write(std::ostream& os) const {
    os << s_ << ' ' << c_ << ' ' << n_ << '\n';
    for (const auto& e : edges_) {
      for (std::size_t p = 0; p < s_; ++p) os << (p ? " " : "") << p << ':' << e[p];
      os << '\n';
    }
  }
  static Hypergraph read(std::istream& is) {
    std::size_t s = 0, c = 0, n = 0;
    if (!(is >> s >> c >> n)) throw std::invalid_argument("Hypergraph: missing 's c n' header");
    std::vector<std::vector<std::size_t>> edges(n * c, std::vector<std::size_t>(s));
    for (auto& e : edges) {
      std::vector<bool> seen(s, false);
      for (std::size_t i = 0; i < s; ++i) {
        std::string tok;
        if (!(is >> tok)) throw std::invalid_argument("Hypergraph: truncated edge list");
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("Hypergraph: expected p:index, got '" + tok + "'");
        std::size_t p = 0, v = 0;
        try {
          p = std::stoul(tok.substr(0, colon));
          v = std::stoul(tok.substr(colon + 1));
        } catch (const std::exception&) {
          throw std::invalid_argument("Hypergraph: expected p:index, got '" + tok + "'");
        }
        if (p >= s || seen[p]) throw std::invalid_argument("Hypergraph: bad or repeated partition in '" + tok + "'");
        seen[p] = true;
        e[p] = v;
      }
    }
    return Hypergraph(s, c, n, std::move(edges));
  }
  static Hypergraph parse(const std::string& text) {
    std::istringstream is(text);
    return read(is);
  }
  std::string to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

  /// Tanner-style rendering: vertices as nodes, hyperedges as small boxes.
  std::string to_dot(const std::string& name = "G") const {
    static const char* const kShapes[] = {"triangle", "box", "ellipse", "diamond", "hexagon", "circle"};
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t p = 0; p < s_; ++p)
      for (std::size_t v = 0; v < n_; ++v)
        os << "  v" << p << '_' << v << " [label=\"" << p << ':' << v << "\", shape=" << kShapes[p % 6] << "];\n";
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      os << "  e" << e << " [label=\"" << e << "\", shape=point];\n";
      for (std::size_t p = 0; p < s_; ++p) os << "  e" << e << " -- v" << p << '_' << edges_[e][p] << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.s_ == b.s_ && a.c_ == b.c_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void validate() const {
    if (s_ < 2) throw std::invalid_argument("Hypergraph: need at least two partitions");
    if (c_ < 1 || n_ < 1) throw std::invalid_argument("Hypergraph: degree and partition size must be positive");
    if (edges_.size() != n_ * c_) throw std::invalid_argument("Hypergraph: edge count must equal n*c");
    std::vector<std::size_t> degree(s_ * n_, 0);
    for (const auto& e : edges_) {
      if (e.size() != s_) throw std::invalid_argument("Hypergraph: every edge needs one vertex per partition");
      for (std::size_t p = 0; p < s_; ++p) {
        if (e[p] >= n_) throw std::invalid_argument("Hypergraph: vertex index out of range");
        ++degree[p * n_ + e[p]];
      }
    }
    for (std::size_t d : degree)
      if (d != c_) throw std::invalid_argument("Hypergraph: graph is not c-regular");
  }

  std::size_t s_ = 0, c_ = 0, n_ = 0;
  std::vector<std::vector<std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Heawood graph; the first partition holds the even vertices 0,2,...,12 of the
/// drawing and the second the odd vertices 1,3,...,13.
inline Hypergraph build_heawood() {
  return Hypergraph::from_incidence(BinaryMatrix::from_rows({
                                        "111000000000000000000",
                                        "000111000000000000000",
                                        "000000111000000000000",
                                        "000000000111000000000",
                                        "000000000000111000000",
                                        "000000000000000111000",
                                        "000000000000000000111",
                                        "100010000001000000000",
                                        "000100010000001000000",
                                        "000000100010000001000",
                                        "000000000100010000001",
                                        "001000000000100010000",
                                        "000001000000000100010",
                                        "010000001000000000100",
                                    }),
                                    2);
}

/// Complete bipartite graph K(3,3).
inline Hypergraph build_utility() {
  return Hypergraph::from_incidence(BinaryMatrix::from_rows({
                                        "111000000",
                                        "000111000",
                                        "000000111",
                                        "100010001",
                                        "001100010",
                                        "010001100",
                                    }),
                                    2);
}

/// 3-partite, 3-uniform, 4-regular hypergraph on 12 vertices.
inline Hypergraph build_3partite_example() {
  return Hypergraph::from_incidence(BinaryMatrix::from_rows({
                                        "1111000000000000",
                                        "0000111100000000",
                                        "0000000011110000",
                                        "0000000000001111",
                                        "1000010000100001",
                                        "0100001000011000",
                                        "0010000110000100",
                                        "0001100001000010",
                                        "1000100010001000",
                                        "0100010001000100",
                                        "0010001000010001",
                                        "0001000100100010",
                                    }),
                                    3);
}

/// Permutation-model random hypergraph: partition 0 vertex k owns edge slots
/// k*c .. k*c+c-1, and partition p >= 1 sees the slots through a seeded
/// uniform permutation.
inline Hypergraph random_regular(std::size_t s, std::size_t c, std::size_t n, std::uint64_t seed) {
  if (s < 2 || c < 2 || n < 1) throw std::invalid_argument("random_regular: need s >= 2, c >= 2, n >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t slots = n * c;
  std::vector<std::vector<std::size_t>> edges(slots, std::vector<std::size_t>(s));
  for (std::size_t e = 0; e < slots; ++e) edges[e][0] = e / c;
  for (std::size_t p = 1; p < s; ++p) {
    std::vector<std::size_t> perm(slots);
    for (std::size_t i = 0; i < slots; ++i) perm[i] = i;
    for (std::size_t i = slots; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    for (std::size_t e = 0; e < slots; ++e) edges[e][p] = perm[e] / c;
  }
  return Hypergraph(s, c, n, std::move(edges));
}

/// Girth in hyperedges: half the length of the shortest cycle of the
/// vertex/hyperedge incidence graph. Two hyperedges sharing two vertices give 2.
/// Empty for hypergraphs without cycles.
inline std::optional<std::size_t> girth(const Hypergraph& g) {
  const std::size_t nv = g.vertex_count(), ne = g.edge_count(), total = nv + ne;
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t e = 0; e < ne; ++e)
    for (std::size_t p = 0; p < g.s(); ++p) {
      const std::size_t v = g.vertex_id(p, g.edge(e)[p]);
      adj[v].push_back(nv + e);
      adj[nv + e].push_back(v);
    }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(total), parent(total);
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  for (std::size_t root = 0; root < nv; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = kUnseen;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;
      for (std::size_t w : adj[u]) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best / 2;
}

namespace detail {

class CompactSearch {
 public:
  CompactSearch(const Hypergraph& g, std::size_t d) : g_(g), d_(d), deg_(g.vertex_count(), 0), in_(g.edge_count(), false) {}

  bool exists_with(std::size_t anchor, std::size_t limit) {
    anchor_ = anchor;
    limit_ = limit;
    add(anchor);
    const bool found = grow(1);
    remove(anchor);
    return found;
  }

 private:
  void add(std::size_t e) {
    in_[e] = true;
    for (std::size_t p = 0; p < g_.s(); ++p) ++deg_[g_.vertex_id(p, g_.edge(e)[p])];
  }
  void remove(std::size_t e) {
    in_[e] = false;
    for (std::size_t p = 0; p < g_.s(); ++p) --deg_[g_.vertex_id(p, g_.edge(e)[p])];
  }

  bool grow(std::size_t size) {
    std::size_t deficit = 0;
    std::size_t pick_v = 0, pick_p = 0, pick_options = std::numeric_limits<std::size_t>::max();
    for (std::size_t p = 0; p < g_.s(); ++p)
      for (std::size_t v = 0; v < g_.n(); ++v) {
        const std::size_t dv = deg_[g_.vertex_id(p, v)];
        if (dv == 0 || dv >= d_) continue;
        deficit += d_ - dv;
        std::size_t options = 0;
        for (std::size_t e : g_.incident_edges(p, v)) options += (e > anchor_ && !in_[e]);
        if (options + dv < d_) return false;
        if (options < pick_options) {
          pick_options = options;
          pick_v = v;
          pick_p = p;
        }
      }
    if (deficit == 0) return true;
    if (size + (deficit + g_.s() - 1) / g_.s() > limit_) return false;
    for (std::size_t e : g_.incident_edges(pick_p, pick_v)) {
      if (e <= anchor_ || in_[e]) continue;
      add(e);
      const bool found = grow(size + 1);
      remove(e);
      if (found) return true;
    }
    return false;
  }

  const Hypergraph& g_;
  std::size_t d_;
  std::vector<std::size_t> deg_;
  std::vector<bool> in_;
  std::size_t anchor_ = 0, limit_ = 0;
};

}  // namespace detail

/// (s,d)-girth: fewest hyperedges in a connected subgraph where every touched
/// vertex meets at least d of its hyperedges. Empty when no such subgraph exists.
inline std::optional<std::size_t> sd_girth(const Hypergraph& g, std::size_t d) {
  if (d < 2) throw std::invalid_argument("sd_girth: d must be at least 2");
  if (d > g.c()) return std::nullopt;
  detail::CompactSearch search(g, d);
  for (std::size_t k = 1; k <= g.edge_count(); ++k)
    for (std::size_t anchor = 0; anchor < g.edge_count(); ++anchor)
      if (search.exists_with(anchor, k)) return k;
  return std::nullopt;
}

/// Checks column sums s and row sums c of the incidence matrix.
inline bool incidence_is_regular(const Hypergraph& g) {
  const BinaryMatrix m = g.incidence_matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.row_weight(r) != g.c()) return false;
  const BinaryMatrix t = m.transpose();
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.row_weight(r) != g.s()) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const Hypergraph& g) {
  g.write(os);
  return os;
}

}  // namespace wgc

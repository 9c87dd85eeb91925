#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wgc/binary_matrix.hpp"
#include "wgc/hypergraph.hpp"

namespace wgc {

/// Exact fraction with a positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(Rational a, Rational b) { return a.num * b.den <=> b.num * a.den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/// Binary linear code given by a parity-check matrix; dependent checks are allowed.
class LinearBlockCode {
 public:
  LinearBlockCode() = default;
  explicit LinearBlockCode(BinaryMatrix h) : h_(std::move(h)), g_(nullspace_basis(h_)) {}

  static LinearBlockCode from_generator(const BinaryMatrix& g) {
    LinearBlockCode code(nullspace_basis(g));
    return code;
  }

  const BinaryMatrix& parity_check() const { return h_; }
  /// Rows form a basis of the code.
  const BinaryMatrix& generator() const { return g_; }
  std::size_t length() const { return h_.cols(); }
  std::size_t dimension() const { return g_.rows(); }
  Rational rate() const {
    return length() == 0 ? Rational(0) : Rational(static_cast<long long>(dimension()), static_cast<long long>(length()));
  }

  bool contains(const std::vector<BinaryMatrix::Word>& word) const {
    for (std::size_t r = 0; r < h_.rows(); ++r) {
      const auto* row = h_.row_ptr(r);
      int parity = 0;
      for (std::size_t w = 0; w < h_.words_per_row(); ++w) parity ^= std::popcount(row[w] & word.at(w)) & 1;
      if (parity) return false;
    }
    return true;
  }

 private:
  BinaryMatrix h_;
  BinaryMatrix g_;
};

/// Codeword split into c sub-blocks of l consecutive bits.
struct BlockStructure {
  std::size_t l = 1;
  std::size_t c = 1;
  std::size_t length() const { return l * c; }
};

struct MinDistanceOptions {
  std::size_t enumeration_limit = 26;  ///< largest k handled by full enumeration
  std::size_t threads = 1;
};

struct DistanceResult {
  std::size_t upper = 0;  ///< weight of the lightest codeword found
  std::size_t lower = 0;  ///< certified lower bound
  bool exact = false;
  std::vector<BinaryMatrix::Word> witness;
};

namespace detail {

inline std::size_t word_weight(const std::vector<BinaryMatrix::Word>& w) {
  std::size_t s = 0;
  for (auto x : w) s += static_cast<std::size_t>(std::popcount(x));
  return s;
}

// Gray-code walk over messages whose top `fixed` bits equal `prefix`.
inline void gray_walk(const BinaryMatrix& g, std::size_t fixed, std::uint64_t prefix, std::size_t& best,
                      std::vector<BinaryMatrix::Word>& best_word) {
  const std::size_t k = g.rows(), wpr = g.words_per_row(), free = k - fixed;
  std::vector<BinaryMatrix::Word> acc(wpr, 0);
  for (std::size_t i = 0; i < fixed; ++i)
    if ((prefix >> i) & 1U)
      for (std::size_t w = 0; w < wpr; ++w) acc[w] ^= g.row_ptr(free + i)[w];
  auto consider = [&] {
    const std::size_t wt = word_weight(acc);
    if (wt > 0 && wt < best) {
      best = wt;
      best_word = acc;
    }
  };
  if (prefix != 0) consider();
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << free); ++step) {
    const auto* row = g.row_ptr(static_cast<std::size_t>(std::countr_zero(step)));
    for (std::size_t w = 0; w < wpr; ++w) acc[w] ^= row[w];
    consider();
  }
}

inline DistanceResult enumerate_distance(const BinaryMatrix& g, std::size_t threads) {
  const std::size_t k = g.rows();
  const std::size_t fixed = threads > 1 ? std::min<std::size_t>(k, std::bit_width(threads - 1) + 2) : 0;
  const std::uint64_t parts = std::uint64_t{1} << fixed;
  std::vector<std::size_t> best(parts, g.cols() + 1);
  std::vector<std::vector<BinaryMatrix::Word>> words(parts);
  if (fixed == 0) {
    gray_walk(g, 0, 0, best[0], words[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t p = t; p < parts; p += threads) gray_walk(g, fixed, p, best[p], words[p]);
      });
    for (auto& th : pool) th.join();
  }
  DistanceResult r;
  r.upper = g.cols() + 1;
  for (std::uint64_t p = 0; p < parts; ++p)
    if (best[p] < r.upper || (best[p] == r.upper && words[p] < r.witness)) {
      r.upper = best[p];
      r.witness = words[p];
    }
  r.lower = r.upper;
  r.exact = true;
  return r;
}

// Disjoint information sets: systematic generators whose identity parts use disjoint columns.
inline std::vector<BinaryMatrix> disjoint_systematic_generators(const BinaryMatrix& g) {
  std::vector<BinaryMatrix> out;
  std::vector<bool> used(g.cols(), false);
  for (;;) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (!used[c]) order.push_back(c);
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (used[c]) order.push_back(c);
    const EchelonForm e = echelon(g.select_cols(order));
    if (e.rank() < g.rows()) break;
    bool fresh = true;
    for (std::size_t p : e.pivots) fresh = fresh && !used[order[p]];
    if (!fresh) break;
    // undo the column reordering so all generators share coordinates
    std::vector<std::size_t> inverse(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) inverse[order[i]] = i;
    out.push_back(e.rref.select_cols(inverse));
    for (std::size_t p : e.pivots) used[order[p]] = true;
  }
  return out;
}

inline DistanceResult information_set_distance(const BinaryMatrix& g) {
  const auto gens = disjoint_systematic_generators(g);
  DistanceResult r;
  r.upper = g.cols() + 1;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::vector<BinaryMatrix::Word> w = g.row(i);
    if (const auto wt = word_weight(w); wt < r.upper) {
      r.upper = wt;
      r.witness = w;
    }
  }
  const std::size_t k = g.rows(), wpr = g.words_per_row();
  for (std::size_t w = 1; w <= k && r.lower < r.upper; ++w) {
    for (const auto& gamma : gens) {
      std::vector<std::size_t> idx(w);
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        std::vector<BinaryMatrix::Word> acc(wpr, 0);
        for (std::size_t i : idx)
          for (std::size_t x = 0; x < wpr; ++x) acc[x] ^= gamma.row_ptr(i)[x];
        if (const auto wt = word_weight(acc); wt < r.upper) {
          r.upper = wt;
          r.witness = acc;
        }
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == k - w + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    // every codeword of weight below this has at most w information bits in each disjoint set
    r.lower = std::max(r.lower, gens.size() * (w + 1));
  }
  r.lower = std::min(r.lower, r.upper);
  r.exact = r.lower == r.upper;
  return r;
}

}  // namespace detail

/// Minimum distance of a nonzero code. Full Gray-code enumeration for small
/// dimension; otherwise a disjoint information set search reports an upper
/// bound with a certified floor.
inline DistanceResult min_distance(const LinearBlockCode& code, const MinDistanceOptions& opt = {}) {
  if (code.dimension() == 0) throw std::invalid_argument("min_distance: code has dimension zero");
  if (code.dimension() <= opt.enumeration_limit && code.dimension() < 63)
    return detail::enumerate_distance(code.generator(), std::max<std::size_t>(1, opt.threads));
  return detail::information_set_distance(code.generator());
}

/// Smallest number of nonzero sub-blocks in a nonzero codeword: the fewest
/// blocks whose parity-check columns are linearly dependent.
inline std::size_t block_distance(const LinearBlockCode& code, const BlockStructure& bs) {
  if (bs.length() != code.length()) throw std::invalid_argument("block_distance: n must equal l*c");
  if (code.dimension() == 0) throw std::invalid_argument("block_distance: code has dimension zero");
  if (bs.c >= 31) throw std::invalid_argument("block_distance: too many blocks for subset search");
  std::size_t best = bs.c;
  for (std::uint32_t mask = 1; mask < (1U << bs.c); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<std::size_t> cols;
    for (std::size_t b = 0; b < bs.c; ++b)
      if ((mask >> b) & 1U)
        for (std::size_t j = 0; j < bs.l; ++j) cols.push_back(b * bs.l + j);
    if (rank(code.parity_check().select_cols(cols)) < cols.size()) best = size;
  }
  return best;
}

/// Graph-based code: every vertex of every partition checks its incident
/// hyperedges (in ascending edge order) with the constituent matrix hc.
inline LinearBlockCode build_graph_code(const Hypergraph& g, const BinaryMatrix& hc) {
  if (hc.cols() != g.c()) throw std::invalid_argument("build_graph_code: constituent length must equal graph degree");
  const std::size_t r = hc.rows();
  BinaryMatrix h(g.s() * g.n() * r, g.edge_count());
  for (std::size_t p = 0; p < g.s(); ++p)
    for (std::size_t v = 0; v < g.n(); ++v) {
      const auto& inc = g.incident_edges(p, v);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t slot = 0; slot < inc.size(); ++slot)
          if (hc.get(i, slot)) h.set((p * g.n() + v) * r + i, inc[slot], true);
    }
  return LinearBlockCode(std::move(h));
}

/// For each partition, vertex and incident-edge slot (ascending edge order),
/// the constituent column block placed on that edge.
using Assignment = std::vector<std::vector<std::vector<std::size_t>>>;

inline Assignment identity_assignment(const Hypergraph& g) {
  std::vector<std::size_t> id(g.c());
  std::iota(id.begin(), id.end(), 0);
  return Assignment(g.s(), std::vector<std::vector<std::size_t>>(g.n(), id));
}

/// Bipartite graphs only: the first partition uses blocks in slot order; an
/// edge at the second partition gets block_of_position[i] where i is the
/// edge's slot at its first-partition vertex.
inline Assignment assignment_by_first_partition_slot(const Hypergraph& g, const std::vector<std::size_t>& block_of_position) {
  if (g.s() != 2) throw std::invalid_argument("assignment_by_first_partition_slot: graph must be bipartite");
  if (block_of_position.size() != g.c()) throw std::invalid_argument("assignment_by_first_partition_slot: need c entries");
  Assignment a = identity_assignment(g);
  for (std::size_t v = 0; v < g.n(); ++v) {
    const auto& inc = g.incident_edges(1, v);
    for (std::size_t slot = 0; slot < inc.size(); ++slot) {
      const auto& left = g.incident_edges(0, g.edge(inc[slot])[0]);
      const auto pos = static_cast<std::size_t>(std::find(left.begin(), left.end(), inc[slot]) - left.begin());
      a[1][v][slot] = block_of_position[pos];
    }
  }
  return a;
}

struct WovenBlockCode {
  Hypergraph graph;
  BinaryMatrix constituent;
  BlockStructure blocks;
  Assignment assignment;
  LinearBlockCode code;
};

/// Woven graph code with a block constituent of c column blocks, each l wide:
/// each hyperedge carries l code symbols and each vertex applies the
/// constituent to its incident edges with the blocks permuted by the assignment.
inline WovenBlockCode build_woven_block(const Hypergraph& g, const BinaryMatrix& hc, const BlockStructure& bs,
                                        const Assignment& assignment) {
  if (bs.c != g.c()) throw std::invalid_argument("build_woven_block: constituent block count must equal graph degree");
  if (hc.cols() != bs.length()) throw std::invalid_argument("build_woven_block: constituent width must be l*c");
  if (assignment.size() != g.s()) throw std::invalid_argument("build_woven_block: assignment needs one entry per partition");
  const std::size_t r = hc.rows(), l = bs.l;
  BinaryMatrix h(g.s() * g.n() * r, g.edge_count() * l);
  for (std::size_t p = 0; p < g.s(); ++p) {
    if (assignment[p].size() != g.n()) throw std::invalid_argument("build_woven_block: assignment needs one entry per vertex");
    for (std::size_t v = 0; v < g.n(); ++v) {
      const auto& inc = g.incident_edges(p, v);
      const auto& blocks = assignment[p][v];
      std::vector<std::size_t> sorted = blocks;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw std::invalid_argument("build_woven_block: vertex assignment is not a permutation");
      if (blocks.size() != inc.size()) throw std::invalid_argument("build_woven_block: assignment size mismatch");
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t slot = 0; slot < inc.size(); ++slot)
          for (std::size_t j = 0; j < l; ++j)
            if (hc.get(i, blocks[slot] * l + j)) h.set((p * g.n() + v) * r + i, inc[slot] * l + j, true);
    }
  }
  return {g, hc, bs, assignment, LinearBlockCode(std::move(h))};
}

/// Lower bound on the rate of a graph-based code: s(Rc - 1) + 1.
inline Rational rate_bound(std::size_t s, Rational rc) { return Rational(static_cast<long long>(s)) * (rc - 1) + 1; }

struct GirthDistanceCheck {
  std::optional<std::size_t> predicted;
  std::size_t actual = 0;
};

/// Predicted distance = (s, d_min^c)-girth of the graph against the measured distance.
inline GirthDistanceCheck girth_distance_check(const Hypergraph& g, const BinaryMatrix& hc, const MinDistanceOptions& opt = {}) {
  const LinearBlockCode constituent(hc);
  const std::size_t dc = min_distance(constituent).upper;
  if (dc < 2) throw std::invalid_argument("girth_distance_check: constituent distance must be at least 2");
  return {sd_girth(g, dc), min_distance(build_graph_code(g, hc), opt).upper};
}

/// max(ceil(g_{s,d_block} / c), s) * d_min of the constituent.
inline std::size_t woven_block_distance_bound(const Hypergraph& g, const BinaryMatrix& hc, const BlockStructure& bs) {
  const LinearBlockCode constituent(hc);
  const std::size_t db = block_distance(constituent, bs);
  if (db < 2) throw std::invalid_argument("woven_block_distance_bound: constituent block distance is " + std::to_string(db) + ", need at least 2");
  const std::size_t dc = min_distance(constituent).upper;
  const auto gsd = sd_girth(g, db);
  const std::size_t graph_term = gsd ? (*gsd + g.c() - 1) / g.c() : 0;
  return std::max(graph_term, g.s()) * dc;
}

/// Line-oriented summary of a code.
struct CodeReport {
  std::string graph;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d_min = 0;
  std::size_t d_lower = 0;
  bool exact = false;
  std::optional<Rational> rate_lower_bound;
  std::optional<std::size_t> distance_bound;

  static CodeReport make(std::string graph, const LinearBlockCode& code, const DistanceResult& d) {
    CodeReport r;
    r.graph = std::move(graph);
    r.n = code.length();
    r.k = code.dimension();
    r.d_min = d.upper;
    r.d_lower = d.lower;
    r.exact = d.exact;
    return r;
  }

  std::string key_value() const {
    std::ostringstream os;
    os << "graph=" << graph << "\nn=" << n << "\nk=" << k << "\nd_min=" << d_min << "\nd_lower=" << d_lower
       << "\nexact=" << (exact ? "true" : "false") << '\n';
    if (rate_lower_bound) os << "rate_bound=" << rate_lower_bound->to_string() << '\n';
    if (distance_bound) os << "distance_bound=" << *distance_bound << '\n';
    return os.str();
  }
  static std::string csv_header() { return "graph,n,k,d_min,d_lower,exact,rate_bound,distance_bound\n"; }
  std::string csv_row() const {
    std::ostringstream os;
    os << graph << ',' << n << ',' << k << ',' << d_min << ',' << d_lower << ',' << (exact ? "true" : "false") << ','
       << (rate_lower_bound ? rate_lower_bound->to_string() : "") << ','
       << (distance_bound ? std::to_string(*distance_bound) : "") << '\n';
    return os.str();
  }
};

}  // namespace wgc

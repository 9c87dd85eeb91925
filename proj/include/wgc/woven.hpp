#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgc/binary_matrix.hpp"
#include "wgc/block_codes.hpp"
#include "wgc/canonical_form.hpp"
#include "wgc/convolutional.hpp"
#include "wgc/hypergraph.hpp"
#include "wgc/poly_matrix.hpp"

namespace wgc {

/// Woven graph code with a convolutional constituent on every vertex.
///
/// Columns follow the edge order of the graph. A vertex of partition 0 applies
/// the constituent checks to its edges in ascending order. A vertex of any
/// other partition applies, on edge e, check column perm[p(e)], where p(e) is
/// the slot of e at its partition-0 vertex.
struct WovenConvCode {
  Hypergraph graph;
  PolyMatrix constituent_check;
  std::vector<std::size_t> perm;  ///< t_i = h_{perm[i]}, zero based
  PolyMatrix h_wg;

  std::size_t length() const { return h_wg.cols(); }
  std::size_t check_rank() const { return rank_over_rational_field(h_wg); }
  Rational rate() const {
    const auto n = static_cast<long long>(h_wg.cols());
    return Rational(n - static_cast<long long>(check_rank()), n);
  }
  ConvCode constituent() const { return ConvCode::from_parity_check(constituent_check); }
};

inline std::vector<std::size_t> identity_permutation(std::size_t c) {
  std::vector<std::size_t> p(c);
  for (std::size_t i = 0; i < c; ++i) p[i] = i;
  return p;
}

/// Parses a one-based list such as "1,3,2".
inline std::vector<std::size_t> parse_permutation(const std::string& text) {
  std::vector<std::size_t> p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("permutation: bad entry '" + item + "'");
    }
    if (pos != item.size() || v == 0) throw std::invalid_argument("permutation: bad entry '" + item + "'");
    p.push_back(v - 1);
  }
  std::vector<std::size_t> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_permutation(p.size())) throw std::invalid_argument("permutation: not a permutation of 1..c");
  return p;
}

inline std::string permutation_to_string(const std::vector<std::size_t>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
  return s;
}

inline WovenConvCode build_woven_conv(const Hypergraph& g, const PolyMatrix& hc, const std::vector<std::size_t>& perm) {
  const std::size_t c = g.c(), n = g.n(), s = g.s();
  if (hc.cols() != c) throw std::invalid_argument("build_woven_conv: constituent length differs from vertex degree");
  if (hc.rows() == 0 || hc.rows() >= c) throw std::invalid_argument("build_woven_conv: constituent needs 1..c-1 checks");
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_permutation(c)) throw std::invalid_argument("build_woven_conv: perm is not a permutation of 0..c-1");

  std::vector<std::size_t> slot(g.edge_count());
  for (std::size_t v = 0; v < n; ++v) {
    const auto& inc = g.incident_edges(0, v);
    for (std::size_t k = 0; k < inc.size(); ++k) slot[inc[k]] = k;
  }
  const std::size_t r = hc.rows();
  PolyMatrix h(s * n * r, g.edge_count());
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t v = 0; v < n; ++v) {
      const auto& inc = g.incident_edges(p, v);
      for (std::size_t k = 0; k < inc.size(); ++k) {
        const std::size_t e = inc[k];
        const std::size_t col = p == 0 ? k : perm[slot[e]];
        for (std::size_t i = 0; i < r; ++i) h((p * n + v) * r + i, e) = hc(i, col);
      }
    }
  return WovenConvCode{g, hc, perm, std::move(h)};
}

/// True when shifting every vertex label by one (mod n) maps edge e to edge e + c.
inline bool is_circulant(const Hypergraph& g) {
  const std::size_t m = g.edge_count(), c = g.c(), n = g.n();
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t p = 0; p < g.s(); ++p)
      if (g.edge((e + c) % m)[p] != (g.edge(e)[p] + 1) % n) return false;
  return true;
}

struct TwoDimForms {
  BivariatePolyMatrix h;  ///< H(D,Z)
  BivariatePolyMatrix g;  ///< G(D,Z)
  std::size_t length;     ///< Z is taken modulo Z^length - 1
};

/// Two-dimensional parity-check and generator matrices of a circulant bipartite
/// woven code with a single-check constituent of length 3.
inline TwoDimForms two_dim_forms(const WovenConvCode& code) {
  const Hypergraph& g = code.graph;
  if (g.s() != 2) throw std::invalid_argument("two_dim_forms: graph must be bipartite");
  if (code.constituent_check.rows() != 1 || g.c() != 3)
    throw std::invalid_argument("two_dim_forms: constituent must have one check of length 3");
  if (!is_circulant(g)) throw std::invalid_argument("two_dim_forms: graph is not circulant");
  const std::size_t c = g.c();
  BivariatePolyMatrix h(2, c);
  for (std::size_t p = 0; p < 2; ++p)
    for (const std::size_t e : g.incident_edges(p, 0))
      h(p, e % c).add_term(code.h_wg(p * g.n(), e), e / c);

  // rows of G(D,Z) span the kernel of the two rows of H(D,Z): their cross product
  BivariatePolyMatrix gz(1, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t a = (j + 1) % 3, b = (j + 2) % 3;
    gz(0, j) = h(0, a) * h(1, b) + h(0, b) * h(1, a);
  }
  return TwoDimForms{std::move(h), std::move(gz), g.n()};
}

struct ExpandedGenerator {
  PolyMatrix raw;                     ///< G(D,Z) tailbitten over Z
  int nu_raw = 0;
  bool raw_full_rank = false;
  std::optional<PolyMatrix> minimal;  ///< minimal-basic form of raw, when full rank
  PolyMatrix code_basis;              ///< minimal basis of the whole code
  int nu_min = 0;                     ///< overall constraint length of code_basis
};

inline ExpandedGenerator expanded_generator(const WovenConvCode& code) {
  const TwoDimForms f = two_dim_forms(code);
  ExpandedGenerator out;
  out.raw = tailbite_z(f.g, f.length, TailbiteOrientation::kReversed);
  out.nu_raw = out.raw.constraint_length();
  out.raw_full_rank = rank_over_rational_field(out.raw) == out.raw.rows();
  if (out.raw_full_rank && out.raw.rows() == code.length() - code.check_rank()) {
    out.minimal = minimal_basic(out.raw);
    out.code_basis = *out.minimal;
  } else {
    std::vector<std::vector<BinaryPoly>> prefer;
    for (std::size_t r = 0; r < out.raw.rows(); ++r) prefer.push_back(out.raw.row(r));
    out.code_basis = minimal_kernel_basis(code.h_wg, prefer);
  }
  out.nu_min = out.code_basis.constraint_length();
  return out;
}

/// Row (g_p, g_q, g_q) repeated over all n vertices.
inline std::vector<BinaryPoly> repeated_row(const BinaryPoly& gp, const BinaryPoly& gq, std::size_t n) {
  std::vector<BinaryPoly> row;
  for (std::size_t v = 0; v < n; ++v) {
    row.push_back(gp);
    row.push_back(gq);
    row.push_back(gq);
  }
  return row;
}

struct DistanceReport {
  std::size_t constituent_free_distance = 0;
  std::size_t constituent_block_distance = 0;
  std::optional<std::size_t> girth;
  std::size_t active_constituents = 0;  ///< lower bound on nonzero constituents per partition
  std::optional<std::size_t> subcode_free_distance;
  std::size_t product_bound = 0;
  std::size_t improved_bound = 0;
  std::optional<std::size_t> witness_weight;
  std::vector<BinaryPoly> witness_codeword;
  bool exhaustive = false;
};

inline DistanceReport distance_bounds(const WovenConvCode& code) {
  DistanceReport r;
  const ConvCode cc = code.constituent();
  r.constituent_block_distance = block_distance_conv(cc);
  if (r.constituent_block_distance < 2)
    throw std::invalid_argument("distance_bounds: constituent block distance must be at least 2");
  r.constituent_free_distance = free_distance(cc);
  const Hypergraph& g = code.graph;
  r.girth = girth(g);
  const std::size_t s = g.s(), c = g.c(), df = r.constituent_free_distance;
  if (s == 2) {
    r.active_constituents = std::max<std::size_t>(r.girth ? *r.girth / 2 : 0, 2);
  } else {
    const auto gsd = sd_girth(g, r.constituent_block_distance);
    r.active_constituents = std::max<std::size_t>(gsd ? (*gsd + c - 1) / c : 0, s);
  }
  r.product_bound = r.active_constituents * df;
  r.improved_bound = r.product_bound;
  if (s == 2 && c == 3 && r.constituent_block_distance == 2 && cc.parity_check().rows() == 1) {
    std::size_t dsub = std::numeric_limits<std::size_t>::max();
    for (const auto& sub : rate_half_subcodes(cc)) dsub = std::min(dsub, free_distance(sub.code));
    r.subcode_free_distance = dsub;
    const std::size_t a = r.active_constituents;
    r.improved_bound = std::max(r.product_bound, std::min(a * dsub, (a + 1) * df));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Low-weight codewords

struct WitnessOptions {
  std::size_t max_terms = 3;        ///< monomials D^k e_i per information vector
  std::size_t max_shift = 6;        ///< largest k
  std::size_t search_budget = 10000000;  ///< map entries of the bidirectional pass; 0 skips it
  std::optional<std::size_t> target;
};

struct WitnessResult {
  std::size_t weight = 0;
  std::vector<BinaryPoly> information;
  std::vector<BinaryPoly> codeword;
  bool found = false;
  bool meets_target = true;
  bool search_complete = false;  ///< true when no lighter codeword exists
  std::size_t search_entries = 0;
};

namespace detail {

/// Open-addressing map from nonzero trellis states to small weights.
class StateWeightMap {
 public:
  using State = Trellis::State;
  std::size_t size() const { return size_; }

  std::optional<std::uint16_t> get(State s) const {
    if (keys_.empty()) return std::nullopt;
    for (std::size_t i = slot(s);; i = (i + 1) & mask_) {
      if (keys_[i] == s) return vals_[i];
      if (keys_[i] == 0) return std::nullopt;
    }
  }
  /// Stores min(current, w); returns true when the stored weight dropped.
  bool relax(State s, std::uint16_t w) {
    if ((size_ + 1) * 2 > keys_.size()) grow();
    for (std::size_t i = slot(s);; i = (i + 1) & mask_) {
      if (keys_[i] == s) {
        if (w >= vals_[i]) return false;
        vals_[i] = w;
        return true;
      }
      if (keys_[i] == 0) {
        keys_[i] = s;
        vals_[i] = w;
        ++size_;
        return true;
      }
    }
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != 0) f(keys_[i], vals_[i]);
  }

 private:
  std::size_t slot(State s) const {
    const auto lo = static_cast<std::uint64_t>(s), hi = static_cast<std::uint64_t>(s >> 64);
    std::uint64_t h = (lo ^ (hi * 0x9e3779b97f4a7c15ULL)) * 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
    return static_cast<std::size_t>(h) & mask_;
  }
  void grow() {
    std::vector<State> old_k = std::move(keys_);
    std::vector<std::uint16_t> old_v = std::move(vals_);
    const std::size_t cap = old_k.empty() ? 1024 : old_k.size() * 2;
    keys_.assign(cap, 0);
    vals_.assign(cap, 0);
    mask_ = cap - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_k.size(); ++i)
      if (old_k[i] != 0) relax(old_k[i], old_v[i]);
  }
  std::vector<State> keys_;
  std::vector<std::uint16_t> vals_;
  std::size_t mask_ = 0, size_ = 0;
};

struct TrellisPath {
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint64_t> outputs;
};

inline void path_to_polys(const TrellisPath& p, std::size_t b, std::size_t c, std::vector<BinaryPoly>& info,
                          std::vector<BinaryPoly>& word) {
  info.assign(b, BinaryPoly{});
  word.assign(c, BinaryPoly{});
  for (std::size_t t = 0; t < p.inputs.size(); ++t) {
    for (std::size_t i = 0; i < b; ++i)
      if ((p.inputs[t] >> i) & 1U) info[i].set(t, true);
    for (std::size_t j = 0; j < c; ++j)
      if ((p.outputs[t] >> j) & 1U) word[j].set(t, true);
  }
}

/// Weight-bounded bidirectional search for codewords of weight <= limit.
/// Returns the lightest such path, if any; `complete` reports whether every
/// path within the limit was covered before the entry budget ran out.
inline std::optional<TrellisPath> bidirectional_search(const Trellis& t, std::size_t limit, std::size_t budget,
                                                       bool& complete, std::size_t& entries) {
  using State = Trellis::State;
  complete = false;
  entries = 0;
  const std::size_t wf = limit / 2, wb = limit - wf;
  const std::uint32_t inputs = static_cast<std::uint32_t>(t.input_count());

  StateWeightMap fwd, bwd;
  std::optional<std::size_t> best;
  State best_state = 0, best_exit = 0;
  std::uint32_t best_exit_u = 0;

  // forward: states reachable from zero by prefixes of weight <= wf, plus the endpoints of branches crossing wf
  std::vector<std::vector<State>> buckets(limit + 1);
  auto fwd_weight = [&](State s) -> std::size_t { return s == 0 ? 0 : *fwd.get(s); };
  auto expand_forward = [&](State s, std::size_t d) {
    for (std::uint32_t u = (s == 0 ? 1 : 0); u < inputs; ++u) {
      const State nx = t.next(s, u);
      const std::size_t w = d + t.branch_weight(s, u);
      if (w > limit) continue;
      if (nx == 0) {
        if (!best || w < *best) {
          best = w;
          best_state = 0;
          best_exit = s;
          best_exit_u = u;
        }
        continue;
      }
      if (fwd.relax(nx, static_cast<std::uint16_t>(w)) && w <= wf) buckets[w].push_back(nx);
    }
  };
  expand_forward(0, 0);
  for (std::size_t d = 0; d <= wf; ++d)
    for (std::size_t k = 0; k < buckets[d].size(); ++k) {
      const State s = buckets[d][k];
      if (*fwd.get(s) != d) continue;
      expand_forward(s, d);
      if (fwd.size() > budget) {
        entries = fwd.size();
        return std::nullopt;
      }
    }

  // backward: states that reach zero with suffix weight <= wb - 1
  if (wb >= 1) {
    const std::size_t bl = wb - 1;
    std::vector<std::vector<State>> bb(bl + 1);
    auto expand_backward = [&](State s, std::size_t d) {
      t.for_each_predecessor(s, [&](State prev, std::uint32_t u) {
        if (prev == 0) return;
        const std::size_t w = d + t.branch_weight(prev, u);
        if (w > bl) return;
        if (bwd.relax(prev, static_cast<std::uint16_t>(w))) bb[w].push_back(prev);
      });
    };
    expand_backward(0, 0);
    for (std::size_t d = 0; d <= bl; ++d)
      for (std::size_t k = 0; k < bb[d].size(); ++k) {
        const State s = bb[d][k];
        if (*bwd.get(s) != d) continue;
        expand_backward(s, d);
        if (fwd.size() + bwd.size() > budget) {
          entries = fwd.size() + bwd.size();
          return std::nullopt;
        }
      }
  }
  entries = fwd.size() + bwd.size();
  complete = true;

  fwd.for_each([&](State s, std::uint16_t f) {
    const auto b = bwd.get(s);
    if (!b) return;
    const std::size_t w = std::size_t{f} + *b;
    if (w <= limit && (!best || w < *best)) {
      best = w;
      best_state = s;
    }
  });
  if (!best) return std::nullopt;

  // rebuild the path from the exact weights held in the two maps
  TrellisPath path;
  State cur = best_state == 0 ? best_exit : best_state;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> head;
  while (cur != 0) {
    const std::size_t target = fwd_weight(cur);
    bool stepped = false;
    t.for_each_predecessor(cur, [&](State prev, std::uint32_t u) {
      if (stepped) return;
      if (prev != 0) {
        const auto fp = fwd.get(prev);
        if (!fp || *fp > wf) return;
      }
      if (prev == 0 && u == 0) return;
      if (fwd_weight(prev) + t.branch_weight(prev, u) != target) return;
      head.emplace_back(u, t.output(prev, u));
      cur = prev;
      stepped = true;
    });
    if (!stepped) throw std::logic_error("bidirectional_search: broken forward chain");
  }
  std::reverse(head.begin(), head.end());
  for (const auto& [u, o] : head) {
    path.inputs.push_back(u);
    path.outputs.push_back(o);
  }
  if (best_state == 0) {
    path.inputs.push_back(best_exit_u);
    path.outputs.push_back(t.output(best_exit, best_exit_u));
    return path;
  }
  cur = best_state;
  while (cur != 0) {
    const std::size_t target = *bwd.get(cur);
    bool stepped = false;
    for (std::uint32_t u = 0; u < inputs && !stepped; ++u) {
      const State nx = t.next(cur, u);
      const std::size_t bw = t.branch_weight(cur, u);
      if (nx == 0 ? bw != target : (!bwd.get(nx) || *bwd.get(nx) + bw != target)) continue;
      path.inputs.push_back(u);
      path.outputs.push_back(t.output(cur, u));
      cur = nx;
      stepped = true;
    }
    if (!stepped) throw std::logic_error("bidirectional_search: broken backward chain");
  }
  return path;
}

inline std::size_t poly_vector_weight(const std::vector<BinaryPoly>& v) {
  std::size_t w = 0;
  for (const auto& p : v) w += p.weight();
  return w;
}

}  // namespace detail

/// Lowest-weight codeword among u(D) G(D) with u a sum of at most max_terms
/// monomials D^k e_i (one of them with k = 0), then a bidirectional trellis
/// pass looking for anything lighter.
inline WitnessResult witness_search(const PolyMatrix& generator, const WitnessOptions& opt = {}) {
  const std::size_t b = generator.rows(), c = generator.cols();
  WitnessResult res;
  std::vector<std::vector<BinaryPoly>> rows;
  for (std::size_t i = 0; i < b; ++i) rows.push_back(generator.row(i));

  struct Term {
    std::size_t row, shift;
  };
  std::vector<Term> terms;
  for (std::size_t k = 0; k <= opt.max_shift; ++k)
    for (std::size_t i = 0; i < b; ++i) terms.push_back({i, k});

  std::vector<std::size_t> pick;
  std::vector<std::vector<BinaryPoly>> partial{std::vector<BinaryPoly>(c)};
  auto consider = [&]() {
    bool anchored = false;
    for (const auto idx : pick) anchored |= terms[idx].shift == 0;
    if (!anchored) return;
    const auto& word = partial.back();
    const std::size_t w = detail::poly_vector_weight(word);
    if (w == 0) return;
    if (!res.found || w < res.weight || (w == res.weight && word < res.codeword)) {
      res.found = true;
      res.weight = w;
      res.codeword = word;
      res.information.assign(b, BinaryPoly{});
      for (const auto idx : pick) res.information[terms[idx].row] += BinaryPoly::monomial(terms[idx].shift);
    }
  };
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) consider();
    if (pick.size() == opt.max_terms) return;
    for (std::size_t idx = start; idx < terms.size(); ++idx) {
      auto next = partial.back();
      for (std::size_t j = 0; j < c; ++j) next[j] += rows[terms[idx].row][j].shifted(terms[idx].shift);
      pick.push_back(idx);
      partial.push_back(std::move(next));
      self(self, idx + 1);
      partial.pop_back();
      pick.pop_back();
    }
  };
  recurse(recurse, 0);

  if (opt.search_budget > 0) {
    const Trellis t(generator);
    const std::size_t limit = res.found ? res.weight - 1 : 4 * c * (static_cast<std::size_t>(generator.memory()) + 1);
    bool complete = false;
    const auto path = detail::bidirectional_search(t, limit, opt.search_budget, complete, res.search_entries);
    res.search_complete = complete;
    if (path) {
      std::vector<BinaryPoly> info, word;
      detail::path_to_polys(*path, b, c, info, word);
      res.found = true;
      res.weight = detail::poly_vector_weight(word);
      res.codeword = std::move(word);
      res.information = std::move(info);
    }
  }
  if (opt.target) res.meets_target = res.found && res.weight <= *opt.target;
  return res;
}

/// True when v(D) satisfies every parity check of the code.
inline bool is_codeword(const WovenConvCode& code, const std::vector<BinaryPoly>& v) {
  return v.size() == code.length() && detail::annihilates(code.h_wg, v);
}

/// Number of distinct codewords among the n shifts of v by one vertex step
/// (c coordinates). Each shift is checked against the parity checks.
inline std::size_t orbit_multiplicity(const WovenConvCode& code, const std::vector<BinaryPoly>& v) {
  if (!is_codeword(code, v)) throw std::invalid_argument("orbit_multiplicity: not a codeword");
  const std::size_t c = code.graph.c(), n = code.graph.n(), len = code.length();
  std::vector<std::vector<BinaryPoly>> seen;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<BinaryPoly> w(len);
    for (std::size_t e = 0; e < len; ++e) w[(e + k * c) % len] = v[e];
    if (!is_codeword(code, w)) throw std::logic_error("orbit_multiplicity: shifted word violates a check");
    if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(std::move(w));
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Encoder

struct EncodeOptions {
  bool pad = false;         ///< append zeros up to a whole number of cycles
  bool tailbiting = true;   ///< start from the state left by the end of the frame
};

/// Ring of n register banks. Bank i remembers the past inputs u_i; at every
/// time instant the banks move to the next position on the ring and the fixed
/// taps at each position emit the c symbols of one vertex.
class RingEncoder {
 public:
  explicit RingEncoder(const WovenConvCode& code) : n_(code.graph.n()), c_(code.graph.c()) {
    const PolyMatrix g = expanded_generator(code).raw;
    memory_ = static_cast<std::size_t>(std::max(0, g.row_degree(0)));
    if (memory_ >= 64) throw std::invalid_argument("RingEncoder: memory too large");
    taps_.assign(n_, std::vector<std::uint64_t>(c_, 0));
    for (std::size_t r = 0; r < n_; ++r) {
      bool any = false;
      for (std::size_t j = 0; j < c_; ++j) {
        const BinaryPoly& p = g(0, r * c_ + j);
        for (int k = 0; k <= p.degree(); ++k)
          if (p.coeff(static_cast<std::size_t>(k))) taps_[r][j] |= std::uint64_t{1} << k;
        any |= taps_[r][j] != 0;
      }
      if (any) active_.push_back(r);
    }
  }

  std::size_t inputs_per_cycle() const { return n_; }
  std::size_t outputs_per_cycle() const { return n_ * c_; }

  std::vector<std::uint8_t> encode(std::vector<std::uint8_t> info, const EncodeOptions& opt = {}) const {
    if (info.size() % n_ != 0) {
      if (!opt.pad) throw std::invalid_argument("encode_stream: frame length is not a multiple of " + std::to_string(n_));
      info.resize((info.size() / n_ + 1) * n_, 0);
    }
    const std::size_t cycles = info.size() / n_;
    auto input = [&](std::size_t bank, long long t) -> std::uint64_t {
      const auto k = static_cast<long long>(cycles);
      return info[static_cast<std::size_t>(((t % k) + k) % k) * n_ + bank] & 1U;
    };
    // slot r holds bank (tau - r) mod n at instant tau; bit k of a slot is the input k cycles back
    std::vector<std::uint64_t> slots(n_, 0);
    auto slot_of = [&](std::size_t bank) { return (n_ - bank % n_) % n_; };
    const std::uint64_t mask = (std::uint64_t{2} << memory_) - 1;
    if (opt.tailbiting && cycles > 0)
      for (long long t = -static_cast<long long>(memory_); t < 0; ++t)
        for (std::size_t i = 0; i < n_; ++i) slots[slot_of(i)] = ((slots[slot_of(i)] << 1) | input(i, t)) & mask;

    std::vector<std::uint8_t> out;
    out.reserve(cycles * n_ * c_);
    for (std::size_t t = 0; t < cycles; ++t) {
      for (std::size_t i = 0; i < n_; ++i)
        slots[slot_of(i)] = ((slots[slot_of(i)] << 1) | input(i, static_cast<long long>(t))) & mask;
      for (std::size_t tau = 0; tau < n_; ++tau) {
        for (std::size_t j = 0; j < c_; ++j) {
          std::uint64_t acc = 0;
          for (const std::size_t r : active_) acc ^= taps_[r][j] & slots[r];
          out.push_back(static_cast<std::uint8_t>(std::popcount(acc) & 1));
        }
        std::rotate(slots.rbegin(), slots.rbegin() + 1, slots.rend());
      }
    }
    return out;
  }

 private:
  std::size_t n_, c_, memory_ = 0;
  std::vector<std::vector<std::uint64_t>> taps_;
  std::vector<std::size_t> active_;
};

inline std::vector<std::uint8_t> encode_stream(const WovenConvCode& code, const std::vector<std::uint8_t>& info,
                                               const EncodeOptions& opt = {}) {
  return RingEncoder(code).encode(info, opt);
}

// ---------------------------------------------------------------------------
// Permutation sweep

struct SweepOptions {
  WitnessOptions witness;
};

struct SweepRow {
  std::vector<std::size_t> perm;
  std::size_t check_rank = 0;
  int nu_raw = 0;
  int nu_min = 0;
  std::size_t product_bound = 0;
  std::size_t improved_bound = 0;
  std::optional<std::size_t> witness;
  std::optional<std::size_t> orbit;
  std::optional<std::vector<std::size_t>> equivalent_to;  ///< earlier permutation with a permutation-equivalent H
};

inline std::vector<SweepRow> permutation_sweep(const Hypergraph& g, const PolyMatrix& hc, const SweepOptions& opt = {}) {
  if (g.c() != 3) throw std::invalid_argument("permutation_sweep: vertex degree must be 3");
  std::vector<std::size_t> p = identity_permutation(3);
  std::vector<SweepRow> rows;
  std::vector<CanonicalForm> forms;
  do {
    const WovenConvCode code = build_woven_conv(g, hc, p);
    SweepRow row;
    row.perm = p;
    row.check_rank = code.check_rank();
    const ExpandedGenerator eg = expanded_generator(code);
    row.nu_raw = eg.nu_raw;
    row.nu_min = eg.nu_min;
    const DistanceReport dr = distance_bounds(code);
    row.product_bound = dr.product_bound;
    row.improved_bound = dr.improved_bound;
    const WitnessResult w = witness_search(eg.code_basis, opt.witness);
    if (w.found) {
      row.witness = w.weight;
      row.orbit = orbit_multiplicity(code, w.codeword);
    }
    const CanonicalForm cf = canonical_form(code.h_wg);
    for (std::size_t k = 0; k < forms.size(); ++k)
      if (forms[k] == cf) {
        row.equivalent_to = rows[k].perm;
        break;
      }
    forms.push_back(cf);
    rows.push_back(std::move(row));
  } while (std::next_permutation(p.begin(), p.end()));
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "perm,nu_raw,nu_min,product_bound,improved_bound,witness,orbit,equivalent_to\n";
  for (const auto& r : rows) {
    os << '"' << permutation_to_string(r.perm) << "\"," << r.nu_raw << ',' << r.nu_min << ',' << r.product_bound << ','
       << r.improved_bound << ',' << (r.witness ? std::to_string(*r.witness) : "") << ','
       << (r.orbit ? std::to_string(*r.orbit) : "") << ','
       << (r.equivalent_to ? '"' + permutation_to_string(*r.equivalent_to) + '"' : "") << '\n';
  }
  return os.str();
}

}  // namespace wgc

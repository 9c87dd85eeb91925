#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wgc/binary_matrix.hpp"
#include "wgc/block_codes.hpp"
#include "wgc/poly_matrix.hpp"

namespace wgc {

/// Convolutional code given by a polynomial generator and/or parity-check matrix.
/// A missing matrix is derived as a minimal kernel basis of the other one.
class ConvCode {
 public:
  ConvCode() = default;

  static ConvCode from_generator(const PolyMatrix& g) {
    if (g.rows() == 0 || g.rows() >= g.cols()) throw std::invalid_argument("ConvCode: generator must be b x c with 0 < b < c");
    if (rank_over_rational_field(g) != g.rows()) throw std::invalid_argument("ConvCode: generator is rank deficient");
    return ConvCode(g, minimal_kernel_basis(g));
  }
  static ConvCode from_parity_check(const PolyMatrix& h) {
    if (h.rows() == 0 || h.cols() == 0) throw std::invalid_argument("ConvCode: empty parity-check matrix");
    const PolyMatrix g = minimal_kernel_basis(h);
    if (g.rows() == 0) throw std::invalid_argument("ConvCode: parity checks leave no codewords");
    return ConvCode(g, h);
  }
  static ConvCode from_pair(const PolyMatrix& g, const PolyMatrix& h) {
    if (g.cols() != h.cols()) throw std::invalid_argument("ConvCode: G and H widths differ");
    if (!(g * h.transpose()).is_zero()) throw std::invalid_argument("ConvCode: G H^T is not zero");
    return ConvCode(g, h);
  }

  const PolyMatrix& generator() const { return g_; }
  const PolyMatrix& parity_check() const { return h_; }
  std::size_t b() const { return g_.rows(); }
  std::size_t c() const { return g_.cols(); }
  int memory() const { return g_.memory(); }
  int constraint_length() const { return g_.constraint_length(); }

 private:
  ConvCode(PolyMatrix g, PolyMatrix h) : g_(std::move(g)), h_(std::move(h)) {}
  PolyMatrix g_;
  PolyMatrix h_;
};

/// Controller-canonical trellis of a polynomial generator matrix. Row i keeps
/// its last nu_i inputs; the state packs the rows one after another.
class Trellis {
 public:
  using State = unsigned __int128;
  static constexpr std::size_t kMaxStateBits = 128;

  explicit Trellis(const PolyMatrix& g) : b_(g.rows()), c_(g.cols()) {
    if (b_ == 0 || b_ > 16) throw std::invalid_argument("Trellis: need 1..16 inputs");
    if (c_ == 0 || c_ > 64) throw std::invalid_argument("Trellis: need 1..64 outputs");
    std::size_t off = 0;
    for (std::size_t i = 0; i < b_; ++i) {
      const int d = g.row_degree(i);
      if (d == BinaryPoly::kDegreeOfZero) throw std::invalid_argument("Trellis: zero generator row");
      offsets_.push_back(off);
      degrees_.push_back(static_cast<std::size_t>(d));
      off += static_cast<std::size_t>(d);
    }
    nu_ = off;
    if (nu_ > kMaxStateBits) throw std::invalid_argument("Trellis: more than 128 state bits");
    width_mask_ = nu_ == kMaxStateBits ? ~State{0} : ((State{1} << nu_) - 1);
    std::vector<std::uint64_t> state_bit_out(nu_, 0);
    input_out_.assign(std::size_t{1} << b_, 0);
    std::vector<std::uint64_t> single_input(b_, 0);
    for (std::size_t i = 0; i < b_; ++i) {
      if (degrees_[i] > 0) {
        front_mask_ |= State{1} << offsets_[i];
        top_mask_ |= State{1} << (offsets_[i] + degrees_[i] - 1);
      }
      for (std::size_t j = 0; j < c_; ++j) {
        const BinaryPoly& p = g(i, j);
        if (p.coeff(0)) single_input[i] |= std::uint64_t{1} << j;
        for (std::size_t k = 1; k <= degrees_[i]; ++k)
          if (p.coeff(k)) state_bit_out[offsets_[i] + k - 1] |= std::uint64_t{1} << j;
      }
    }
    for (std::size_t u = 0; u < input_out_.size(); ++u)
      for (std::size_t i = 0; i < b_; ++i)
        if ((u >> i) & 1U) input_out_[u] ^= single_input[i];
    const std::size_t bytes = (nu_ + 7) / 8;
    state_out_.assign(bytes, std::array<std::uint64_t, 256>{});
    for (std::size_t byte = 0; byte < bytes; ++byte)
      for (std::size_t v = 0; v < 256; ++v) {
        std::uint64_t acc = 0;
        for (std::size_t bit = 0; bit < 8; ++bit)
          if (((v >> bit) & 1U) && byte * 8 + bit < nu_) acc ^= state_bit_out[byte * 8 + bit];
        state_out_[byte][v] = acc;
      }
  }

  std::size_t inputs() const { return b_; }
  std::size_t outputs() const { return c_; }
  std::size_t state_bits() const { return nu_; }
  std::size_t input_count() const { return std::size_t{1} << b_; }

  State next(State s, std::uint32_t u) const {
    State n = (s << 1) & ~front_mask_ & width_mask_;
    for (std::size_t i = 0; i < b_; ++i)
      if (((u >> i) & 1U) && degrees_[i] > 0) n |= State{1} << offsets_[i];
    return n;
  }

  /// Output bits of the branch (bit j = code symbol j).
  std::uint64_t output(State s, std::uint32_t u) const {
    std::uint64_t out = input_out_[u];
    for (std::size_t byte = 0; s != 0; ++byte, s >>= 8) out ^= state_out_[byte][static_cast<std::size_t>(s & 0xFF)];
    return out;
  }

  std::size_t branch_weight(State s, std::uint32_t u) const { return static_cast<std::size_t>(std::popcount(output(s, u))); }

  /// Calls f(prev, u) for every branch prev --u--> s.
  template <class F>
  void for_each_predecessor(State s, F&& f) const {
    std::uint32_t fixed_u = 0, free_u = 0;
    for (std::size_t i = 0; i < b_; ++i) {
      if (degrees_[i] == 0) free_u |= 1U << i;
      else if ((s >> offsets_[i]) & 1U) fixed_u |= 1U << i;
    }
    const State base = (s >> 1) & ~top_mask_;
    std::vector<State> tops;
    for (std::size_t i = 0; i < b_; ++i)
      if (degrees_[i] > 0) tops.push_back(State{1} << (offsets_[i] + degrees_[i] - 1));
    const std::uint32_t top_choices = 1U << tops.size();
    for (std::uint32_t t = 0; t < top_choices; ++t) {
      State prev = base;
      for (std::size_t k = 0; k < tops.size(); ++k)
        if ((t >> k) & 1U) prev |= tops[k];
      // enumerate subsets of the free inputs
      std::uint32_t sub = 0;
      do {
        f(prev, fixed_u | sub);
        sub = (sub - free_u) & free_u;
      } while (sub != 0);
    }
  }

 private:
  std::size_t b_, c_, nu_ = 0;
  std::vector<std::size_t> offsets_, degrees_;
  State width_mask_ = 0, front_mask_ = 0, top_mask_ = 0;
  std::vector<std::uint64_t> input_out_;
  std::vector<std::array<std::uint64_t, 256>> state_out_;
};

struct TrellisLimits {
  std::size_t max_state_bits = 24;  ///< exact searches visit 2^nu states
};

namespace detail {

inline void require_exact_mode(const Trellis& t, const TrellisLimits& lim) {
  if (t.state_bits() > lim.max_state_bits)
    throw std::invalid_argument("trellis has 2^" + std::to_string(t.state_bits()) +
                                " states, above the exact-search limit 2^" + std::to_string(lim.max_state_bits));
}

// Zero-weight cycle among nonzero states: Kahn's algorithm on zero-weight branches.
inline bool has_zero_weight_cycle(const Trellis& t) {
  const std::size_t states = std::size_t{1} << t.state_bits();
  std::vector<std::uint32_t> indeg(states, 0);
  for (std::size_t s = 1; s < states; ++s)
    for (std::uint32_t u = 0; u < t.input_count(); ++u) {
      const auto n = static_cast<std::size_t>(t.next(s, u));
      if (n != 0 && t.branch_weight(s, u) == 0) ++indeg[n];
    }
  std::vector<std::size_t> stack;
  for (std::size_t s = 1; s < states; ++s)
    if (indeg[s] == 0) stack.push_back(s);
  std::size_t removed = 0;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    ++removed;
    for (std::uint32_t u = 0; u < t.input_count(); ++u) {
      const auto n = static_cast<std::size_t>(t.next(s, u));
      if (n != 0 && t.branch_weight(s, u) == 0 && --indeg[n] == 0) stack.push_back(n);
    }
  }
  return removed != states - 1;
}

}  // namespace detail

/// Free distance by a lowest-weight search over the 2^nu trellis states: paths
/// leave the zero state with a nonzero input and stop when they first return.
/// Throws std::domain_error for a catastrophic encoder.
inline std::size_t free_distance(const ConvCode& code, const TrellisLimits& lim = {}) {
  const Trellis t(code.generator());
  detail::require_exact_mode(t, lim);
  if (detail::has_zero_weight_cycle(t)) throw std::domain_error("free_distance: catastrophic encoder (zero-weight cycle)");
  const std::size_t states = std::size_t{1} << t.state_bits();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(states, kInf);
  std::size_t best = kInf;
  using Item = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (std::uint32_t u = 1; u < t.input_count(); ++u) {
    const auto n = static_cast<std::size_t>(t.next(0, u));
    const std::size_t w = t.branch_weight(0, u);
    if (n == 0) best = std::min(best, w);
    else if (w < dist[n]) pq.push({dist[n] = w, n});
  }
  while (!pq.empty()) {
    const auto [d, s] = pq.top();
    pq.pop();
    if (d != dist[s] || d >= best) continue;
    for (std::uint32_t u = 0; u < t.input_count(); ++u) {
      const auto n = static_cast<std::size_t>(t.next(s, u));
      const std::size_t w = d + t.branch_weight(s, u);
      if (n == 0) best = std::min(best, w);
      else if (w < dist[n]) pq.push({dist[n] = w, n});
    }
  }
  return best;
}

/// First-event path counts by weight, from the free distance to free distance + depth.
inline std::vector<std::pair<std::size_t, std::uint64_t>> spectrum(const ConvCode& code, std::size_t depth,
                                                                   const TrellisLimits& lim = {}) {
  const std::size_t dfree = free_distance(code, lim);
  const Trellis t(code.generator());
  const std::size_t top = dfree + depth;
  std::vector<std::uint64_t> counts(top + 1, 0);
  // live[s][w]: paths not yet merged, currently in state s with weight w
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> live;
  auto advance = [&](std::uint64_t s, std::size_t w, std::uint64_t mult, std::uint32_t u,
                     std::unordered_map<std::uint64_t, std::vector<std::uint64_t>>& out) {
    const std::size_t nw = w + t.branch_weight(s, u);
    if (nw > top) return;
    const auto n = static_cast<std::uint64_t>(t.next(s, u));
    if (n == 0) {
      counts[nw] += mult;
      return;
    }
    auto& v = out[n];
    if (v.empty()) v.assign(top + 1, 0);
    v[nw] += mult;
  };
  for (std::uint32_t u = 1; u < t.input_count(); ++u) advance(0, 0, 1, u, live);
  while (!live.empty()) {
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> next;
    for (const auto& [s, ws] : live)
      for (std::size_t w = 0; w <= top; ++w)
        if (ws[w] != 0)
          for (std::uint32_t u = 0; u < t.input_count(); ++u) advance(s, w, ws[w], u, next);
    live = std::move(next);
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t w = dfree; w <= top; ++w) out.push_back({w, counts[w]});
  return out;
}

/// Fewest nonzero code sequences in a nonzero codeword: the smallest set of
/// coordinates whose parity-check columns are dependent over GF(2)(D).
inline std::size_t block_distance_conv(const ConvCode& code) {
  const PolyMatrix& h = code.parity_check();
  const std::size_t c = h.cols();
  if (c > 24) throw std::invalid_argument("block_distance_conv: too many coordinates for subset search");
  std::size_t best = c;
  for (std::uint32_t mask = 1; mask < (1U << c); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < c; ++j)
      if ((mask >> j) & 1U) cols.push_back(j);
    if (rank_over_rational_field(h.select_cols(cols)) < size) best = size;
  }
  return best;
}

/// Rate-1/2 subcode living on a pair of coordinates of a rate-2/3 code.
struct RateHalfSubcode {
  std::size_t first = 0;   ///< coordinate carrying generator entry 0
  std::size_t second = 0;  ///< coordinate carrying generator entry 1
  ConvCode code;
};

/// For a single check (h_0, h_1, h_2): the codewords vanishing on coordinate k
/// form the code generated by (h_j, h_i) / gcd(h_i, h_j) on coordinates (i, j).
inline std::vector<RateHalfSubcode> rate_half_subcodes(const ConvCode& code) {
  const PolyMatrix& h = code.parity_check();
  if (h.cols() != 3 || h.rows() != 1) throw std::invalid_argument("rate_half_subcodes: need one check on three coordinates");
  std::vector<RateHalfSubcode> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const BinaryPoly g = BinaryPoly::gcd(h(0, i), h(0, j));
      PolyMatrix gen(1, 2);
      gen(0, 0) = g.is_zero() ? h(0, j) : h(0, j) / g;
      gen(0, 1) = g.is_zero() ? h(0, i) : h(0, i) / g;
      if (gen(0, 0).is_zero() && gen(0, 1).is_zero()) gen(0, 0) = BinaryPoly::one();
      out.push_back({i, j, ConvCode::from_generator(gen)});
    }
  return out;
}

/// Embeds a subcode generator into the parent coordinates (zero elsewhere).
inline PolyMatrix embed_subcode(const RateHalfSubcode& s, std::size_t c) {
  PolyMatrix g(1, c);
  g(0, s.first) = s.code.generator()(0, 0);
  g(0, s.second) = s.code.generator()(0, 1);
  return g;
}

/// Zero-tail termination: inputs in the first l time steps, then m zero steps.
/// Length (l + m) c, codewords are the terminated code sequences.
inline LinearBlockCode zt_block_code(const ConvCode& code, std::size_t l) {
  const PolyMatrix& g = code.generator();
  const std::size_t m = static_cast<std::size_t>(g.memory()), c = g.cols(), b = g.rows();
  BinaryMatrix gen(l * b, (l + m) * c);
  for (std::size_t t = 0; t < l; ++t)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const BinaryPoly& p = g(i, j);
        for (int k = 0; k <= p.degree(); ++k)
          if (p.coeff(static_cast<std::size_t>(k))) gen.set(t * b + i, (t + static_cast<std::size_t>(k)) * c + j, true);
      }
  return LinearBlockCode::from_generator(gen);
}

/// Tailbiting at length L: the row space of the circularly wrapped generator.
inline LinearBlockCode tb_block_code(const ConvCode& code, std::size_t length) {
  return LinearBlockCode::from_generator(tailbite(code.generator(), length, TailbiteOrientation::kReversed));
}

}  // namespace wgc

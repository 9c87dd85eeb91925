#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgc/block_codes.hpp"

namespace wgc {

struct RootOptions {
  double f_tol = 1e-12;
  double x_tol = 1e-10;
};

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must have opposite signs.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, const RootOptions& opt = {}) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw std::runtime_error("bisect: root is not bracketed");
  for (;;) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) return std::fabs(flo) < std::fabs(fhi) ? lo : hi;
    const double fm = f(mid);
    if (std::fabs(fm) <= opt.f_tol && hi - lo <= opt.x_tol) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
}

inline double binary_entropy(double x) {
  if (!(x >= 0 && x <= 1)) throw std::domain_error("binary_entropy: argument outside [0,1]");
  if (x == 0 || x == 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

/// Root of h(delta) + R - 1 in (0, 1/2].
inline double vg_delta(double rate, const RootOptions& opt = {}) {
  if (!(rate >= 0 && rate < 1)) throw std::domain_error("vg_delta: rate outside [0,1)");
  if (rate == 0) return 0.5;
  return bisect([&](double d) { return binary_entropy(d) + rate - 1; }, 0, 0.5, opt);
}

/// 1 - 2^((R-1)/s): above it the exponent is maximized at gamma = 1.
inline double gamma_threshold(double rate, std::size_t s) {
  return 1 - std::exp2((rate - 1) / static_cast<double>(s));
}

namespace detail {

inline void check_rate_and_s(double rate, std::size_t s, const char* who) {
  if (!(rate > 0 && rate < 1)) throw std::domain_error(std::string(who) + ": rate outside (0,1)");
  if (s < 2) throw std::domain_error(std::string(who) + ": need s >= 2");
}

/// (1-s) h(delta) - delta s log2(2^{-(R-1)/s} - 1), the exponent at gamma < 1.
inline double fhat_partial_branch(double delta, double rate, std::size_t s) {
  const double sd = static_cast<double>(s);
  return (1 - sd) * binary_entropy(delta) - delta * sd * std::log2(std::exp2((1 - rate) / sd) - 1);
}

}  // namespace detail

/// Upper bound on the exponent of P(v H^T = 0 | weight delta) after maximizing over gamma.
inline double fhat(double delta, double rate, std::size_t s) {
  detail::check_rate_and_s(rate, s, "fhat");
  if (!(delta > 0 && delta < 1)) throw std::domain_error("fhat: delta outside (0,1)");
  if (delta >= gamma_threshold(rate, s)) return binary_entropy(delta) + rate - 1;
  return detail::fhat_partial_branch(delta, rate, s);
}

inline double gamma_opt_block(double delta, double rate, std::size_t s) {
  return std::min(1.0, delta / gamma_threshold(rate, s));
}

enum class BoundRegime { kVg, kGraphLimited };

inline const char* to_string(BoundRegime r) { return r == BoundRegime::kVg ? "vg" : "graph-limited"; }

struct BoundPoint {
  double rate = 0;
  std::size_t s = 0;
  double delta = 0;
  double delta_vg = 0;
  BoundRegime regime = BoundRegime::kVg;
};

/// Relative distance guaranteed in the woven ensemble with block constituents.
/// The VG value is reached when delta_VG lies where gamma = 1 is optimal,
/// that is when R >= 1 + s log2(1 - delta_VG); otherwise the root of the
/// gamma < 1 branch below the threshold is returned.
inline BoundPoint woven_vg_bound(double rate, std::size_t s, const RootOptions& opt = {}) {
  detail::check_rate_and_s(rate, s, "woven_vg_bound");
  BoundPoint p;
  p.rate = rate;
  p.s = s;
  p.delta_vg = vg_delta(rate, opt);
  const double edge = 1 + static_cast<double>(s) * std::log2(1 - p.delta_vg);
  if (rate >= edge - opt.f_tol) {
    p.regime = BoundRegime::kVg;
    p.delta = p.delta_vg;
    return p;
  }
  p.regime = BoundRegime::kGraphLimited;
  const double hi = gamma_threshold(rate, s);
  auto f = [&](double d) { return detail::fhat_partial_branch(d, rate, s); };
  double lo = hi / 2;
  for (int k = 0; k < 1000 && f(lo) >= 0; ++k) lo /= 2;
  if (f(lo) >= 0 || f(hi) <= 0) throw std::runtime_error("woven_vg_bound: cannot bracket the root");
  p.delta = bisect(f, lo, hi, opt);
  return p;
}

/// Largest rate whose guaranteed relative distance reaches delta.
inline double woven_rate_for_distance(double delta, std::size_t s, const RootOptions& opt = {}) {
  if (!(delta > 0 && delta < 0.5)) throw std::domain_error("woven_rate_for_distance: delta outside (0,1/2)");
  auto f = [&](double r) { return fhat(delta, r, s); };
  double lo = 1e-15, hi = 1 - 1e-15;
  if (f(lo) >= 0) return 0;
  return bisect(f, lo, hi, opt);
}

/// R_VG(delta) - R_wg(delta).
inline double vg_rate_gap(double delta, std::size_t s, const RootOptions& opt = {}) {
  return 1 - binary_entropy(delta) - woven_rate_for_distance(delta, s, opt);
}

/// Free-distance bound -R / log2(2^{1-R} - 1).
inline double costello_delta(double rate) {
  if (!(rate > 0 && rate < 1)) throw std::domain_error("costello_delta: rate outside (0,1)");
  return -rate / std::log2(std::exp2(1 - rate) - 1);
}

/// Exponent at gamma = 1 as a function of mu = l / m.
inline double conv_exponent(double delta, double mu, double rate) {
  return (1 + mu) * binary_entropy(delta / (1 + mu)) - 1 - mu + mu * rate;
}

/// Exponent after maximizing over mu.
inline double conv_exponent_opt(double delta, double rate) {
  return -delta * std::log2(std::exp2(1 - rate) - 1) - rate;
}

struct ConvOptimizers {
  double gamma_opt;
  double mu_opt;
};

inline ConvOptimizers mu_gamma_optimizers(double delta, double rate, std::size_t s) {
  detail::check_rate_and_s(rate, s, "mu_gamma_optimizers");
  if (!(delta > 0 && delta < 1)) throw std::domain_error("mu_gamma_optimizers: delta outside (0,1)");
  const double mu = delta / (1 - std::exp2(rate - 1)) - 1;
  if (mu < 0) throw std::domain_error("mu_gamma_optimizers: optimal mu is negative, outside the model");
  const double x = (1 + mu * (1 - rate)) / (static_cast<double>(s) * (1 + mu));
  const double gamma = std::min(1.0, delta / ((1 + mu) * (1 - std::exp2(-x))));
  return {gamma, mu};
}

// ---------------------------------------------------------------------------
// Two-row example with n = 1, c = 2, b = 1

/// P(x H^T = 0) over H = [H1; pi(H2)], H1, H2 random 1x2 rows and pi a random
/// column permutation. With `identical` set, H2 = H1.
inline Rational shared_row_check_probability(unsigned x, bool identical, std::size_t* space_size = nullptr) {
  long long hits = 0, total = 0;
  for (unsigned h1 = 0; h1 < 4; ++h1)
    for (unsigned h2 = 0; h2 < 4; ++h2) {
      if (identical && h2 != h1) continue;
      for (unsigned swap = 0; swap < 2; ++swap) {
        const unsigned row2 = swap ? (((h2 & 1U) << 1) | (h2 >> 1)) : h2;
        const bool zero = std::popcount(h1 & x) % 2 == 0 && std::popcount(row2 & x) % 2 == 0;
        hits += zero;
        ++total;
      }
    }
  if (space_size) *space_size = static_cast<std::size_t>(total);
  return Rational(hits, total);
}

struct RowSharingResult {
  Rational p_identical;
  Rational p_independent;
  std::size_t identical_space;
  std::size_t independent_space;
};

inline RowSharingResult shared_vs_independent_rows() {
  RowSharingResult r{Rational(0), Rational(0), 0, 0};
  r.p_identical = shared_row_check_probability(1, true, &r.identical_space);
  r.p_independent = shared_row_check_probability(1, false, &r.independent_space);
  return r;
}

// ---------------------------------------------------------------------------
// Curves

enum class CurveKind { kVg, kCostello };

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

/// Rates step, 2 step, ... strictly inside (0, 1).
inline std::vector<double> rate_grid(double step) {
  if (!(step > 0 && step <= 0.5)) throw std::domain_error("rate_grid: step outside (0, 0.5]");
  std::vector<double> r;
  for (std::size_t k = 1;; ++k) {
    const double v = static_cast<double>(k) * step;
    if (v >= 1 - 1e-12) break;
    r.push_back(v);
  }
  return r;
}

/// CSV of the bound curves. Points that fail are kept as rows with an error tag.
inline std::string emit_curves(const std::vector<std::size_t>& s_list, double step, CurveKind kind,
                               const RootOptions& opt = {}) {
  std::string out;
  if (kind == CurveKind::kVg) {
    out = "s,R,delta,regime\n";
    for (const std::size_t s : s_list)
      for (const double r : rate_grid(step)) {
        try {
          const BoundPoint p = woven_vg_bound(r, s, opt);
          out += std::to_string(s) + ',' + format_number(r) + ',' + format_number(p.delta) + ',' + to_string(p.regime) + '\n';
        } catch (const std::exception&) {
          out += std::to_string(s) + ',' + format_number(r) + ",,error\n";
        }
      }
  } else {
    out = "R,delta\n";
    for (const double r : rate_grid(step)) {
      try {
        out += format_number(r) + ',' + format_number(costello_delta(r)) + '\n';
      } catch (const std::exception&) {
        out += format_number(r) + ",error\n";
      }
    }
  }
  return out;
}

}  // namespace wgc

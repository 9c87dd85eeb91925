#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgc/binary_matrix.hpp"
#include "wgc/binary_poly.hpp"

namespace wgc {

/// Matrix of polynomials in D over GF(2), row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<BinaryPoly> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw std::invalid_argument("PolyMatrix: entry count mismatch");
  }
  /// Rows given as coefficient strings (lowest degree first).
  static PolyMatrix from_strings(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    PolyMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("PolyMatrix: ragged row");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = BinaryPoly::parse(rows[r][c]);
    }
    return m;
  }
  static PolyMatrix from_binary(const BinaryMatrix& b) {
    PolyMatrix m(b.rows(), b.cols());
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b.get(r, c)) m(r, c) = BinaryPoly::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BinaryPoly& operator()(std::size_t r, std::size_t c) { return e_.at(index(r, c)); }
  const BinaryPoly& operator()(std::size_t r, std::size_t c) const { return e_.at(index(r, c)); }

  std::vector<BinaryPoly> row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("PolyMatrix: row index");
    return {e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }
  void append_row(const std::vector<BinaryPoly>& row) {
    if (row.size() != cols_) throw std::invalid_argument("PolyMatrix: row width mismatch");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
  }

  /// Largest entry degree (the memory m); 0 for the zero matrix.
  int memory() const {
    int m = 0;
    for (const auto& p : e_) m = std::max(m, p.degree());
    return m;
  }
  /// Maximum degree over row r; kDegreeOfZero for a zero row.
  int row_degree(std::size_t r) const {
    int d = BinaryPoly::kDegreeOfZero;
    for (std::size_t c = 0; c < cols_; ++c) d = std::max(d, (*this)(r, c).degree());
    return d;
  }
  /// Overall constraint length: sum over nonzero rows of the row degree.
  int constraint_length() const {
    int nu = 0;
    for (std::size_t r = 0; r < rows_; ++r) nu += std::max(0, row_degree(r));
    return nu;
  }
  std::vector<int> row_degrees() const {
    std::vector<int> d(rows_);
    for (std::size_t r = 0; r < rows_; ++r) d[r] = row_degree(r);
    return d;
  }

  /// Coefficients of D^{row degree} in each row.
  BinaryMatrix high_order_coefficients() const {
    BinaryMatrix h(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const int d = row_degree(r);
      if (d < 0) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c).coeff(static_cast<std::size_t>(d))) h.set(r, c, true);
    }
    return h;
  }

  /// Coefficient matrix of D^k.
  BinaryMatrix coefficient(std::size_t k) const {
    BinaryMatrix h(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c).coeff(k)) h.set(r, c, true);
    return h;
  }

  /// Value at D = 1.
  BinaryMatrix at_one() const {
    BinaryMatrix h(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c).eval_one()) h.set(r, c, true);
    return h;
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const BinaryPoly& p) { return p.is_zero(); });
  }

  PolyMatrix transpose() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  PolyMatrix select_cols(const std::vector<std::size_t>& idx) const {
    PolyMatrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t i = 0; i < idx.size(); ++i) m(r, i) = (*this)(r, idx.at(i));
    return m;
  }
  PolyMatrix vstack(const PolyMatrix& o) const {
    if (o.cols_ != cols_) throw std::invalid_argument("PolyMatrix: vstack width mismatch");
    PolyMatrix m = *this;
    m.e_.insert(m.e_.end(), o.e_.begin(), o.e_.end());
    m.rows_ += o.rows_;
    return m;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: product shape mismatch");
    PolyMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BinaryPoly& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
      }
    return p;
  }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// Text format: "rows cols", then one coefficient string per entry, row-major.
  void write(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << '\n';
    for (const auto& p : e_) os << p.to_string() << '\n';
  }
  static PolyMatrix read(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::invalid_argument("PolyMatrix: missing 'rows cols' header");
    PolyMatrix m(rows, cols);
    for (auto& p : m.e_) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("PolyMatrix: truncated body");
      p = BinaryPoly::parse(tok);
    }
    return m;
  }
  static PolyMatrix parse(const std::string& text) {
    std::istringstream is(text);
    return read(is);
  }
  std::string to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

 private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix: index out of range");
    return r * cols_ + c;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BinaryPoly> e_;
};

/// Finite sum of terms p_k(D) Z^k, k >= 0, stored densely by Z exponent.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  static BivariatePoly term(BinaryPoly p, std::size_t z_exp) {
    BivariatePoly b;
    b.add_term(std::move(p), z_exp);
    return b;
  }

  bool is_zero() const { return t_.empty(); }
  /// Highest Z exponent; -1 for zero.
  int z_degree() const { return static_cast<int>(t_.size()) - 1; }
  const BinaryPoly& coeff(std::size_t z_exp) const {
    static const BinaryPoly kZero;
    return z_exp < t_.size() ? t_[z_exp] : kZero;
  }
  void add_term(const BinaryPoly& p, std::size_t z_exp) {
    if (p.is_zero()) return;
    if (z_exp >= t_.size()) t_.resize(z_exp + 1);
    t_[z_exp] += p;
    trim();
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (std::size_t k = 0; k < o.t_.size(); ++k) add_term(o.t_[k], k);
    return *this;
  }
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly p;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      for (std::size_t j = 0; j < b.t_.size(); ++j)
        if (!a.t_[i].is_zero() && !b.t_[j].is_zero()) p.add_term(a.t_[i] * b.t_[j], i + j);
    return p;
  }

  /// Reduction modulo Z^L - 1.
  BivariatePoly mod_z(std::size_t length) const {
    if (length == 0) throw std::invalid_argument("BivariatePoly: modulus length must be positive");
    BivariatePoly r;
    for (std::size_t k = 0; k < t_.size(); ++k) r.add_term(t_[k], k % length);
    return r;
  }
  /// Value at Z = 1.
  BinaryPoly at_z_one() const {
    BinaryPoly s;
    for (const auto& p : t_) s += p;
    return s;
  }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < t_.size(); ++k) {
      if (t_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + t_[k].to_algebraic() + ")";
      if (k == 1) s += "Z";
      else if (k > 1) s += "Z^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!t_.empty() && t_.back().is_zero()) t_.pop_back();
  }
  std::vector<BinaryPoly> t_;
};

class BivariatePolyMatrix {
 public:
  BivariatePolyMatrix() = default;
  BivariatePolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BivariatePoly& operator()(std::size_t r, std::size_t c) { return e_.at(index(r, c)); }
  const BivariatePoly& operator()(std::size_t r, std::size_t c) const { return e_.at(index(r, c)); }

  int z_degree() const {
    int d = 0;
    for (const auto& p : e_) d = std::max(d, p.z_degree());
    return d;
  }
  PolyMatrix at_z_one() const {
    PolyMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).at_z_one();
    return m;
  }
  friend BivariatePolyMatrix operator*(const BivariatePolyMatrix& a, const BivariatePolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("BivariatePolyMatrix: product shape mismatch");
    BivariatePolyMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    return p;
  }
  BivariatePolyMatrix transpose() const {
    BivariatePolyMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  friend bool operator==(const BivariatePolyMatrix&, const BivariatePolyMatrix&) = default;

 private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BivariatePolyMatrix: index out of range");
    return r * cols_ + c;
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BivariatePoly> e_;
};

// ---------------------------------------------------------------------------
// Rank over the rational function field GF(2)(D)

/// Rank of M over GF(2)(D) by fraction-free elimination. Rows are kept
/// primitive by dividing out the gcd of their entries (an exact division).
inline std::size_t rank_over_rational_field(const PolyMatrix& m) {
  std::vector<std::vector<BinaryPoly>> a;
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const BinaryPoly pivot = a[rank][c];
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      const BinaryPoly f = a[i][c];
      BinaryPoly content;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        a[i][j] = pivot * a[i][j] + f * a[rank][j];
        content = BinaryPoly::gcd(content, a[i][j]);
      }
      if (!content.is_zero() && !content.is_one())
        for (auto& x : a[i]) x = x / content;
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Tailbiting

/// Placement of the coefficient of X^t of a row-s entry in a tailbitten matrix.
enum class TailbiteOrientation {
  kForward,   ///< block column (s + t) mod L
  kReversed,  ///< block column (s + m - t) mod L, m the largest exponent present
};

/// Binary block-circulant expansion of a polynomial matrix at length L.
/// Coefficients that wrap onto the same block column (L <= memory) are XORed.
inline BinaryMatrix tailbite(const PolyMatrix& h, std::size_t length,
                             TailbiteOrientation orientation = TailbiteOrientation::kForward) {
  if (length == 0) throw std::invalid_argument("tailbite: length must be at least 1");
  const std::size_t rows = h.rows(), cols = h.cols();
  const std::size_t m = static_cast<std::size_t>(h.memory());
  BinaryMatrix out(rows * length, cols * length);
  for (std::size_t s = 0; s < length; ++s)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const BinaryPoly& p = h(i, j);
        for (int t = 0; t <= p.degree(); ++t) {
          if (!p.coeff(static_cast<std::size_t>(t))) continue;
          const std::size_t tt = static_cast<std::size_t>(t);
          const std::size_t blk = orientation == TailbiteOrientation::kForward
                                      ? (s + tt) % length
                                      : (s + m - tt) % length;
          out.flip(s * rows + i, blk * cols + j);
        }
      }
  return out;
}

/// Tailbiting over Z of a bivariate matrix; the result is a polynomial matrix in D.
inline PolyMatrix tailbite_z(const BivariatePolyMatrix& g, std::size_t length,
                             TailbiteOrientation orientation = TailbiteOrientation::kForward) {
  if (length == 0) throw std::invalid_argument("tailbite_z: length must be at least 1");
  const std::size_t rows = g.rows(), cols = g.cols();
  const std::size_t m = static_cast<std::size_t>(std::max(0, g.z_degree()));
  PolyMatrix out(rows * length, cols * length);
  for (std::size_t s = 0; s < length; ++s)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const BivariatePoly& p = g(i, j);
        for (int t = 0; t <= p.z_degree(); ++t) {
          const std::size_t tt = static_cast<std::size_t>(t);
          if (p.coeff(tt).is_zero()) continue;
          const std::size_t blk = orientation == TailbiteOrientation::kForward
                                      ? (s + tt) % length
                                      : (s + m - tt) % length;
          out(s * rows + i, blk * cols + j) += p.coeff(tt);
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// Minimal polynomial bases

namespace detail {

inline std::vector<BinaryMatrix::Word> pack_poly_vector(const std::vector<BinaryPoly>& v, std::size_t span) {
  const std::size_t n = v.size();
  std::vector<BinaryMatrix::Word> w(BinaryMatrix::word_count(n * span), 0);
  for (std::size_t j = 0; j < n; ++j)
    for (int k = 0; k <= v[j].degree(); ++k)
      if (v[j].coeff(static_cast<std::size_t>(k))) {
        const std::size_t bit = j * span + static_cast<std::size_t>(k);
        w[bit / 64] |= BinaryMatrix::Word{1} << (bit % 64);
      }
  return w;
}

inline int vector_degree(const std::vector<BinaryPoly>& v) {
  int d = BinaryPoly::kDegreeOfZero;
  for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

inline bool annihilates(const PolyMatrix& m, const std::vector<BinaryPoly>& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BinaryPoly acc;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) acc += m(i, j) * v[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// Minimal polynomial basis of the right kernel {v(D) : M v(D)^T = 0}.
///
/// Degree-by-degree construction over the GF(2) spaces K_d of kernel vectors
/// of degree <= d: at each d the vectors added complete the span of the
/// D-shifts of earlier choices. Vectors in `prefer` (which must lie in the
/// kernel) are tried before the generic basis of K_d, so a caller can keep
/// rows of an existing basis wherever they are already minimal. The result
/// is row reduced and basic, with row degrees equal to the minimal indices.
inline PolyMatrix minimal_kernel_basis(const PolyMatrix& m, const std::vector<std::vector<BinaryPoly>>& prefer = {}) {
  const std::size_t n = m.cols();
  const std::size_t target = n - rank_over_rational_field(m);
  PolyMatrix basis(0, n);
  if (target == 0) return basis;
  const std::size_t dm = static_cast<std::size_t>(m.memory());
  std::size_t limit = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) limit += static_cast<std::size_t>(std::max(0, m.row_degree(r)));

  std::vector<std::vector<BinaryPoly>> chosen;
  for (std::size_t d = 0; d <= limit && chosen.size() < target; ++d) {
    const std::size_t span = d + 1;
    const std::size_t eq_per_row = d + dm + 1;
    BinaryMatrix system(m.rows() * eq_per_row, n * span);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const BinaryPoly& p = m(i, j);
        for (int t = 0; t <= p.degree(); ++t) {
          if (!p.coeff(static_cast<std::size_t>(t))) continue;
          for (std::size_t k = 0; k < span; ++k)
            system.flip(i * eq_per_row + static_cast<std::size_t>(t) + k, j * span + k);
        }
      }
    const BinaryMatrix kernel = nullspace_basis(system);

    Gf2Span covered(n * span);
    for (const auto& g : chosen) {
      const int dg = detail::vector_degree(g);
      for (std::size_t sh = 0; sh + static_cast<std::size_t>(dg) <= d; ++sh) {
        std::vector<BinaryPoly> shifted;
        for (const auto& p : g) shifted.push_back(p.shifted(sh));
        covered.insert(detail::pack_poly_vector(shifted, span));
      }
    }

    std::vector<std::vector<BinaryPoly>> candidates;
    for (const auto& v : prefer)
      if (v.size() == n && detail::vector_degree(v) == static_cast<int>(d) && detail::annihilates(m, v))
        candidates.push_back(v);
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
      std::vector<BinaryPoly> v(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < span; ++k)
          if (kernel.get(r, j * span + k)) v[j].set(k, true);
      candidates.push_back(std::move(v));
    }
    for (auto& v : candidates) {
      if (chosen.size() == target) break;
      if (covered.insert(detail::pack_poly_vector(v, span))) chosen.push_back(v);
    }
  }
  if (chosen.size() != target) throw std::logic_error("minimal_kernel_basis: degree limit reached");
  for (const auto& v : chosen) basis.append_row(v);
  return basis;
}

/// Minimal-basic generator matrix for the row space of G over GF(2)(D).
///
/// Returns G itself when its overall constraint length is already minimal.
/// Otherwise rows of G are kept where possible and the remaining slots are
/// filled with lower-degree rows of the minimal basis.
inline PolyMatrix minimal_basic(const PolyMatrix& g) {
  if (rank_over_rational_field(g) != g.rows())
    throw std::invalid_argument("minimal_basic: generator matrix is rank deficient over GF(2)(D)");
  if (g.rows() == 0) return g;
  const PolyMatrix checks = minimal_kernel_basis(g);
  if (checks.rows() == 0) {
    // full row space: the identity is minimal-basic
    if (g.constraint_length() == 0) return g;
    PolyMatrix id(g.cols(), g.cols());
    for (std::size_t i = 0; i < g.cols(); ++i) id(i, i) = BinaryPoly::one();
    return id;
  }
  std::vector<std::vector<BinaryPoly>> rows;
  for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(g.row(r));
  const PolyMatrix reduced = minimal_kernel_basis(checks, rows);
  if (reduced.constraint_length() >= g.constraint_length()) return g;

  // keep surviving rows of g in place, fill the gaps with the new rows in order
  std::vector<bool> kept(g.rows(), false);
  std::vector<std::vector<BinaryPoly>> fresh;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    const auto v = reduced.row(r);
    const auto it = std::find(rows.begin(), rows.end(), v);
    if (it != rows.end() && !kept[static_cast<std::size_t>(it - rows.begin())])
      kept[static_cast<std::size_t>(it - rows.begin())] = true;
    else
      fresh.push_back(v);
  }
  PolyMatrix out(0, g.cols());
  std::size_t next = 0;
  for (std::size_t r = 0; r < g.rows(); ++r) out.append_row(kept[r] ? rows[r] : fresh.at(next++));
  return out;
}

/// True when every row of `a` lies in the GF(2)(D) row space of `b` and vice versa.
inline bool same_rational_row_space(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank_over_rational_field(a);
  return ra == rank_over_rational_field(b) && rank_over_rational_field(a.vstack(b)) == ra;
}

inline std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
  m.write(os);
  return os;
}

}  // namespace wgc

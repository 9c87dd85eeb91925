#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgc {

/// Bit-packed row-major matrix over GF(2).
///
/// Row r occupies `words_per_row()` consecutive 64-bit words; bit c of the row
/// is bit (c % 64) of word (c / 64). Padding bits beyond `cols()` are kept zero.
class BinaryMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(word_count(cols)), data_(rows * wpr_, 0) {}

  static BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  /// Builds a matrix from strings of '0'/'1' characters, one per row.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("BinaryMatrix: ragged row");
      for (std::size_t c = 0; c < cols; ++c) {
        const char ch = rows[r][c];
        if (ch != '0' && ch != '1') throw std::invalid_argument("BinaryMatrix: expected 0/1");
        m.set(r, c, ch == '1');
      }
    }
    return m;
  }

  static constexpr std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    check(r, c);
    return (row_ptr(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    check(r, c);
    Word& w = row_ptr(r)[c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    check(r, c);
    row_ptr(r)[c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  Word* row_ptr(std::size_t r) { return data_.data() + r * wpr_; }
  const Word* row_ptr(std::size_t r) const { return data_.data() + r * wpr_; }
  std::vector<Word> row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("BinaryMatrix: row index");
    return {row_ptr(r), row_ptr(r) + wpr_};
  }

  void xor_row_into(std::size_t src, std::size_t dst) {
    const Word* s = row_ptr(src);
    Word* d = row_ptr(dst);
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + wpr_, row_ptr(b));
  }

  /// Appends a row given as packed words (length must equal words_per_row()).
  void append_row(const std::vector<Word>& words) {
    if (words.size() != wpr_) throw std::invalid_argument("BinaryMatrix: row width mismatch");
    data_.insert(data_.end(), words.begin(), words.end());
    if (wpr_ && cols_ % kWordBits) data_.back() &= (Word{1} << (cols_ % kWordBits)) - 1;
    ++rows_;
  }

  std::size_t row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < wpr_; ++i) w += std::popcount(row_ptr(r)[i]);
    return w;
  }
  bool row_is_zero(std::size_t r) const {
    return std::all_of(row_ptr(r), row_ptr(r) + wpr_, [](Word w) { return w == 0; });
  }
  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
  }

  BinaryMatrix transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  /// Matrix with the selected rows, in the given order.
  BinaryMatrix select_rows(const std::vector<std::size_t>& idx) const {
    BinaryMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= rows_) throw std::out_of_range("BinaryMatrix: row index");
      std::copy(row_ptr(idx[i]), row_ptr(idx[i]) + wpr_, m.row_ptr(i));
    }
    return m;
  }
  BinaryMatrix select_cols(const std::vector<std::size_t>& idx) const {
    BinaryMatrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (get(r, idx[i])) m.set(r, i, true);
    return m;
  }

  /// Stacks `other` below this matrix.
  BinaryMatrix vstack(const BinaryMatrix& other) const {
    if (other.cols_ != cols_) throw std::invalid_argument("BinaryMatrix: vstack width mismatch");
    BinaryMatrix m = *this;
    m.data_.insert(m.data_.end(), other.data_.begin(), other.data_.end());
    m.rows_ += other.rows_;
    return m;
  }

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("BinaryMatrix: product shape mismatch");
    BinaryMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      Word* out = p.row_ptr(r);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a.get(r, k)) continue;
        const Word* in = b.row_ptr(k);
        for (std::size_t i = 0; i < p.wpr_; ++i) out[i] ^= in[i];
      }
    }
    return p;
  }

  std::string to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

  /// Text format: "rows cols" then one line of 0/1 characters per row.
  void write(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
      os << '\n';
    }
  }
  static BinaryMatrix read(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::invalid_argument("BinaryMatrix: missing 'rows cols' header");
    std::vector<std::string> lines;
    for (std::size_t r = 0; r < rows; ++r) {
      std::string line;
      if (!(is >> line)) throw std::invalid_argument("BinaryMatrix: truncated body");
      if (line.size() != cols) throw std::invalid_argument("BinaryMatrix: row length differs from header");
      lines.push_back(line);
    }
    BinaryMatrix m = rows == 0 ? BinaryMatrix(0, cols) : from_rows(lines);
    return m;
  }
  static BinaryMatrix parse(const std::string& text) {
    std::istringstream is(text);
    return read(is);
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BinaryMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

/// Result of Gauss-Jordan elimination: reduced row echelon form plus pivot columns.
struct EchelonForm {
  BinaryMatrix rref;                 // nonzero rows first, rank rows total are meaningful
  std::vector<std::size_t> pivots;   // pivot column of row i, i < rank
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivot choice: first row (in current order) holding
/// a one in the leftmost not-yet-pivoted column.
inline EchelonForm echelon(BinaryMatrix m) {
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c)) m.xor_row_into(r, i);
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

inline std::size_t rank(const BinaryMatrix& m) { return echelon(m).rank(); }

/// Basis of the right kernel {v : M v^T = 0}, one basis vector per row.
/// Row count equals cols - rank(M).
inline BinaryMatrix nullspace_basis(const BinaryMatrix& m) {
  const EchelonForm e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  BinaryMatrix basis(m.cols() - e.rank(), m.cols());
  std::size_t b = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(b, f, true);
    for (std::size_t i = 0; i < e.rank(); ++i)
      if (e.rref.get(i, f)) basis.set(b, e.pivots[i], true);
    ++b;
  }
  return basis;
}

/// Incrementally maintained GF(2) row space with membership queries.
class Gf2Span {
 public:
  explicit Gf2Span(std::size_t bits) : bits_(bits), words_(BinaryMatrix::word_count(bits)) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t bits() const { return bits_; }

  /// Reduces `v` against the stored basis in place; returns true if the
  /// remainder is nonzero (so v is independent of the span).
  bool reduce(std::vector<BinaryMatrix::Word>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if ((v[p / 64] >> (p % 64)) & 1U)
        for (std::size_t w = 0; w < words_; ++w) v[w] ^= rows_[i][w];
    }
    return std::any_of(v.begin(), v.end(), [](auto w) { return w != 0; });
  }
  bool contains(std::vector<BinaryMatrix::Word> v) const { return !reduce(v); }

  /// Inserts `v`; returns false when it was already in the span.
  bool insert(std::vector<BinaryMatrix::Word> v) {
    if (v.size() != words_) throw std::invalid_argument("Gf2Span: width mismatch");
    if (!reduce(v)) return false;
    std::size_t p = 0;
    while (((v[p / 64] >> (p % 64)) & 1U) == 0) ++p;
    // keep the basis fully reduced on pivot columns
    for (auto& row : rows_)
      if ((row[p / 64] >> (p % 64)) & 1U)
        for (std::size_t w = 0; w < words_; ++w) row[w] ^= v[w];
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t bits_;
  std::size_t words_;
  std::vector<std::vector<BinaryMatrix::Word>> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::ostream& operator<<(std::ostream& os, const BinaryMatrix& m) {
  m.write(os);
  return os;
}

}  // namespace wgc

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wgc/binary_matrix.hpp"
#include "wgc/poly_matrix.hpp"

namespace wgc {

/// Representative of a labelled matrix under independent row and column
/// permutations. Label 0 marks an empty entry.
struct CanonicalForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> labels;   // row-major after canonical reordering
  std::vector<std::string> alphabet;   // text of each label, index = label

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

class CanonicalSearch {
 public:
  CanonicalSearch(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> labels)
      : rows_(rows), cols_(cols), labels_(std::move(labels)) {
    row_entries_.resize(rows);
    col_entries_.resize(cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (const auto l = labels_[r * cols + c]; l != 0) {
          row_entries_[r].push_back({c, l});
          col_entries_[c].push_back({r, l});
        }
    row_twin_ = twin_leaders(row_entries_);
    col_twin_ = twin_leaders(col_entries_);
  }

  std::vector<std::uint32_t> run() {
    std::vector<int> rc(rows_, 0), cc(cols_, 0);
    refine(rc, cc);
    search(rc, cc);
    return best_;
  }

 private:
  using Entry = std::pair<std::size_t, std::uint32_t>;

  static void renumber(std::vector<int>& colors, const std::vector<std::vector<long long>>& sigs) {
    std::vector<std::size_t> order(colors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sigs[a] < sigs[b]; });
    int next = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || sigs[order[i]] != sigs[order[i - 1]]) ++next;
      colors[order[i]] = next;
    }
  }

  // identical rows (or columns) are interchangeable, so one branch per class suffices
  static std::vector<std::size_t> twin_leaders(const std::vector<std::vector<Entry>>& lines) {
    std::vector<std::size_t> leader(lines.size());
    std::map<std::vector<Entry>, std::size_t> first;
    for (std::size_t i = 0; i < lines.size(); ++i) leader[i] = first.emplace(lines[i], i).first->second;
    return leader;
  }

  static std::size_t count_colors(const std::vector<int>& c) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  void refine(std::vector<int>& rc, std::vector<int>& cc) const {
    std::size_t before = count_colors(rc) + count_colors(cc);
    for (;;) {
      std::vector<std::vector<long long>> rs(rows_), cs(cols_);
      for (std::size_t r = 0; r < rows_; ++r) {
        std::vector<long long> nb;
        for (const auto& [c, l] : row_entries_[r]) nb.push_back((static_cast<long long>(l) << 32) | cc[c]);
        std::sort(nb.begin(), nb.end());
        rs[r].push_back(rc[r]);
        rs[r].insert(rs[r].end(), nb.begin(), nb.end());
      }
      for (std::size_t c = 0; c < cols_; ++c) {
        std::vector<long long> nb;
        for (const auto& [r, l] : col_entries_[c]) nb.push_back((static_cast<long long>(l) << 32) | rc[r]);
        std::sort(nb.begin(), nb.end());
        cs[c].push_back(cc[c]);
        cs[c].insert(cs[c].end(), nb.begin(), nb.end());
      }
      renumber(rc, rs);
      renumber(cc, cs);
      const std::size_t after = count_colors(rc) + count_colors(cc);
      if (after == before) return;
      before = after;
    }
  }

  // first smallest non-singleton cell; returns (is_row, color) or color -1 when discrete
  static int pick_cell(const std::vector<int>& colors) {
    std::vector<int> count(colors.size(), 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];
    for (std::size_t c = 0; c < count.size(); ++c)
      if (count[c] > 1) return static_cast<int>(c);
    return -1;
  }

  void search(const std::vector<int>& rc, const std::vector<int>& cc) {
    const int rcell = pick_cell(rc);
    const int ccell = rcell < 0 ? pick_cell(cc) : -1;
    if (rcell < 0 && ccell < 0) {
      leaf(rc, cc);
      return;
    }
    const bool on_rows = rcell >= 0;
    const std::vector<int>& colors = on_rows ? rc : cc;
    const int cell = on_rows ? rcell : ccell;
    const std::vector<std::size_t>& twin = on_rows ? row_twin_ : col_twin_;
    std::vector<bool> tried(colors.size(), false);
    for (std::size_t v = 0; v < colors.size(); ++v) {
      if (colors[v] != cell || tried[twin[v]]) continue;
      tried[twin[v]] = true;
      std::vector<int> r2 = rc, c2 = cc;
      std::vector<int>& target = on_rows ? r2 : c2;
      for (auto& x : target) x *= 2;
      target[v] -= 1;
      refine(r2, c2);
      search(r2, c2);
    }
  }

  void leaf(const std::vector<int>& rc, const std::vector<int>& cc) {
    std::vector<std::size_t> rpos(rows_), cpos(cols_);
    for (std::size_t r = 0; r < rows_; ++r) rpos[static_cast<std::size_t>(rc[r])] = r;
    for (std::size_t c = 0; c < cols_; ++c) cpos[static_cast<std::size_t>(cc[c])] = c;
    std::vector<std::uint32_t> m(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m[i * cols_ + j] = labels_[rpos[i] * cols_ + cpos[j]];
    if (best_.empty() || m < best_) best_ = std::move(m);
  }

  std::size_t rows_, cols_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::vector<Entry>> row_entries_, col_entries_;
  std::vector<std::size_t> row_twin_, col_twin_;
  std::vector<std::uint32_t> best_;
};

}  // namespace detail

/// Canonical form of a matrix with arbitrary nonzero labels (0 = empty).
inline CanonicalForm canonical_form(std::size_t rows, std::size_t cols, const std::vector<std::uint32_t>& labels,
                                    std::vector<std::string> alphabet) {
  CanonicalForm f;
  f.rows = rows;
  f.cols = cols;
  f.alphabet = std::move(alphabet);
  if (rows == 0 || cols == 0) return f;
  f.labels = detail::CanonicalSearch(rows, cols, labels).run();
  return f;
}

inline CanonicalForm canonical_form(const BinaryMatrix& m) {
  std::vector<std::uint32_t> labels(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) labels[r * m.cols() + c] = m.get(r, c) ? 1 : 0;
  return canonical_form(m.rows(), m.cols(), labels, {"0", "1"});
}

inline CanonicalForm canonical_form(const PolyMatrix& m) {
  std::map<BinaryPoly, std::uint32_t> index;
  index[BinaryPoly()] = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) index.emplace(m(r, c), 0);
  std::vector<std::string> alphabet;
  std::uint32_t next = 0;
  for (auto& [p, l] : index) {
    l = next++;
    alphabet.push_back(p.to_string());
  }
  std::vector<std::uint32_t> labels(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) labels[r * m.cols() + c] = index.at(m(r, c));
  return canonical_form(m.rows(), m.cols(), labels, std::move(alphabet));
}

/// True when b is obtained from a by permuting rows and columns.
template <class Matrix>
bool permutation_equivalent(const Matrix& a, const Matrix& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace wgc

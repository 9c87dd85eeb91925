#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wgc/binary_matrix.hpp"
#include "wgc/binary_poly.hpp"
#include "wgc/poly_matrix.hpp"

namespace wgc::testing {

inline BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

inline BinaryPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::bernoulli_distribution bit(0.5);
  BinaryPoly p;
  for (int i = 0; i <= max_degree; ++i)
    if (bit(rng)) p.set(static_cast<std::size_t>(i), true);
  return p;
}

inline PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int max_degree) {
  PolyMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_poly(rng, max_degree);
  return m;
}

/// Schoolbook convolution on plain bit vectors, independent of BinaryPoly.
inline std::vector<int> convolve_bits(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline std::vector<int> bits_of(const std::string& s) {
  std::vector<int> v;
  for (char ch : s) v.push_back(ch == '1');
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

/// Rank by elimination on vectors of bool, written without BinaryMatrix internals.
inline std::size_t naive_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] ^ rows[rank][j];
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<bool>> to_bool_rows(const BinaryMatrix& m) {
  std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.get(r, c);
  return rows;
}

/// Minimum nonzero codeword weight by enumerating all 2^k combinations of generator rows.
inline std::size_t enumerate_min_weight(const BinaryMatrix& generator) {
  const std::size_t k = generator.rows(), n = generator.cols();
  std::size_t best = n + 1;
  for (std::uint64_t msg = 1; msg < (std::uint64_t{1} << k); ++msg) {
    std::vector<bool> word(n, false);
    for (std::size_t i = 0; i < k; ++i)
      if ((msg >> i) & 1U)
        for (std::size_t c = 0; c < n; ++c) word[c] = word[c] ^ generator.get(i, c);
    std::size_t w = 0;
    for (bool b : word) w += b;
    if (w < best) best = w;
  }
  return best;
}

}  // namespace wgc::testing

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wgc {

/// Polynomial in D over GF(2). Coefficients are packed LSB = degree 0;
/// the word vector never carries trailing zero words.
class BinaryPoly {
 public:
  using Word = std::uint64_t;
  /// Degree reported for the zero polynomial.
  static constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

  BinaryPoly() = default;
  /// Polynomial whose coefficient bits are the bits of `bits`.
  static BinaryPoly from_bits(Word bits) {
    BinaryPoly p;
    if (bits) p.w_.push_back(bits);
    return p;
  }
  static BinaryPoly one() { return from_bits(1); }
  static BinaryPoly monomial(std::size_t k) {
    BinaryPoly p;
    p.set(k, true);
    return p;
  }

  /// Parses a 0/1 coefficient string, lowest degree first ("11001" = 1+D+D^4),
  /// or octal shorthand "o:<digits>", read left to right with the most
  /// significant bit of the first digit as the constant term.
  static BinaryPoly parse(const std::string& text) {
    BinaryPoly p;
    if (text.rfind("o:", 0) == 0) {
      std::string bits;
      for (std::size_t i = 2; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < '0' || ch > '7') throw std::invalid_argument("BinaryPoly: bad octal digit in '" + text + "'");
        const int d = ch - '0';
        for (int b = 2; b >= 0; --b) bits += ((d >> b) & 1) ? '1' : '0';
      }
      // the most significant set bit is the constant term
      const std::size_t first = bits.find('1');
      if (first != std::string::npos)
        for (std::size_t k = first; k < bits.size(); ++k)
          if (bits[k] == '1') p.set(k - first, true);
      if (text.size() == 2) throw std::invalid_argument("BinaryPoly: empty octal literal");
      return p;
    }
    if (text.empty()) throw std::invalid_argument("BinaryPoly: empty coefficient string");
    for (std::size_t k = 0; k < text.size(); ++k) {
      if (text[k] == '1') p.set(k, true);
      else if (text[k] != '0') throw std::invalid_argument("BinaryPoly: bad coefficient string '" + text + "'");
    }
    return p;
  }

  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

  int degree() const {
    if (w_.empty()) return kDegreeOfZero;
    return static_cast<int>((w_.size() - 1) * 64 + (63 - std::countl_zero(w_.back())));
  }

  bool coeff(std::size_t k) const {
    const std::size_t i = k / 64;
    return i < w_.size() && ((w_[i] >> (k % 64)) & 1U);
  }
  void set(std::size_t k, bool v) {
    const std::size_t i = k / 64;
    if (i >= w_.size()) {
      if (!v) return;
      w_.resize(i + 1, 0);
    }
    const Word bit = Word{1} << (k % 64);
    w_[i] = v ? (w_[i] | bit) : (w_[i] & ~bit);
    trim();
  }

  std::size_t weight() const {
    std::size_t n = 0;
    for (Word w : w_) n += std::popcount(w);
    return n;
  }
  /// Value at D = 1.
  bool eval_one() const { return weight() & 1U; }

  const std::vector<Word>& words() const { return w_; }
  /// Low 64 coefficients; throws if the degree exceeds 63.
  Word low_word() const {
    if (w_.size() > 1) throw std::overflow_error("BinaryPoly: degree exceeds 63");
    return w_.empty() ? 0 : w_[0];
  }

  BinaryPoly& operator+=(const BinaryPoly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
  }
  friend BinaryPoly operator+(BinaryPoly a, const BinaryPoly& b) { return a += b; }

  /// Multiplication by D^k.
  BinaryPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    BinaryPoly p;
    const std::size_t ws = k / 64, bs = k % 64;
    p.w_.assign(w_.size() + ws + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      p.w_[i + ws] ^= w_[i] << bs;
      if (bs) p.w_[i + ws + 1] ^= w_[i] >> (64 - bs);
    }
    p.trim();
    return p;
  }

  /// Carry-less product by shift-XOR.
  friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BinaryPoly p;
    p.w_.assign(a.w_.size() + b.w_.size(), 0);
    for (std::size_t j = 0; j < b.w_.size(); ++j) {
      Word bw = b.w_[j];
      while (bw) {
        const int bit = std::countr_zero(bw);
        bw &= bw - 1;
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
          p.w_[i + j] ^= a.w_[i] << bit;
          if (bit) p.w_[i + j + 1] ^= a.w_[i] >> (64 - bit);
        }
      }
    }
    p.trim();
    return p;
  }
  BinaryPoly& operator*=(const BinaryPoly& o) { return *this = *this * o; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<BinaryPoly, BinaryPoly> divmod(const BinaryPoly& a, const BinaryPoly& b) {
    if (b.is_zero()) throw std::domain_error("BinaryPoly: division by zero polynomial");
    BinaryPoly q, r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      const std::size_t s = static_cast<std::size_t>(r.degree() - db);
      q.set(s, true);
      r += b.shifted(s);
    }
    return {q, r};
  }
  friend BinaryPoly operator/(const BinaryPoly& a, const BinaryPoly& b) { return divmod(a, b).first; }
  friend BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b) { return divmod(a, b).second; }

  static BinaryPoly gcd(BinaryPoly a, BinaryPoly b) {
    while (!b.is_zero()) {
      BinaryPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  /// Coefficient string, lowest degree first; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) s.push_back(coeff(static_cast<std::size_t>(k)) ? '1' : '0');
    return s;
  }
  /// Human-readable form such as "1+D+D^4".
  std::string to_algebraic() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
      if (!coeff(static_cast<std::size_t>(k))) continue;
      if (!s.empty()) s += '+';
      s += k == 0 ? "1" : (k == 1 ? "D" : "D^" + std::to_string(k));
    }
    return s;
  }

  friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;
  /// Total order: by degree, then by coefficients from the top.
  friend std::strong_ordering operator<=>(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.w_.size() != b.w_.size()) return a.w_.size() <=> b.w_.size();
    for (std::size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] <=> b.w_[i];
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }

  std::vector<Word> w_;
};

inline BinaryPoly poly_mul(const BinaryPoly& a, const BinaryPoly& b) { return a * b; }

inline std::ostream& operator<<(std::ostream& os, const BinaryPoly& p) { return os << p.to_algebraic(); }

struct BinaryPolyHash {
  std::size_t operator()(const BinaryPoly& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : p.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace wgc

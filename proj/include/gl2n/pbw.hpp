#pragma once

// Exact arithmetic in U(gl_n) on the row-major PBW basis
//   e_11^{l_11} e_12^{l_12} ... e_1n^{l_1n} e_21^{l_21} ... e_nn^{l_nn}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gl2n/scalar.hpp"

namespace gl2n {

using Rank = std::uint32_t;

/// Basis element e_{row,col} of gl_n, 1-based. The defaulted ordering is the
/// row-major PBW order.
struct Generator {
  std::uint32_t row = 1;
  std::uint32_t col = 1;

  auto operator<=>(const Generator&) const = default;

  /// Row-major position in [0, n^2).
  std::size_t slot(Rank n) const noexcept { return (row - 1) * std::size_t{n} + (col - 1); }
  static Generator from_slot(Rank n, std::size_t slot) noexcept {
    return {static_cast<std::uint32_t>(slot / n + 1), static_cast<std::uint32_t>(slot % n + 1)};
  }
  bool valid_for(Rank n) const noexcept {
    return row >= 1 && col >= 1 && row <= n && col <= n;
  }
};

/// A PBW monomial over rank n. Exponents are held densely in row-major slots;
/// the monomial 1 is the all-zero vector.
class Monomial {
 public:
  explicit Monomial(Rank n = 1);
  static Monomial of(Rank n, Generator g, std::uint32_t exponent = 1);
  static Monomial from_exponents(Rank n, std::vector<std::uint32_t> exponents);

  Rank rank() const noexcept { return rank_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  std::uint32_t exponent(Generator g) const;
  std::uint32_t exponent_at(std::size_t slot) const { return exponents_[slot]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }

  /// Nonzero (generator, exponent) pairs in PBW order.
  std::vector<std::pair<Generator, std::uint32_t>> factors() const;
  /// The PBW word with each generator repeated by its exponent.
  std::vector<Generator> word() const;

  /// Largest occupied slot, if any.
  std::optional<std::size_t> last_slot() const noexcept;

  /// Exponent bumps; these never straighten, they only edit the exponent vector.
  Monomial incremented(std::size_t slot) const;
  Monomial decremented(std::size_t slot) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Rank rank_;
  std::uint32_t degree_ = 0;
  std::vector<std::uint32_t> exponents_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Degree first, then lexicographic on the PBW word.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse linear combination of PBW monomials with exact coefficients.
class UeaElement {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

  explicit UeaElement(Rank n = 1) : rank_(n) {}
  UeaElement(Rank n, TermMap terms);

  static UeaElement constant(Rank n, const Scalar& c);
  static UeaElement generator(Rank n, Generator g);
  static UeaElement generator(Rank n, std::uint32_t row, std::uint32_t col) {
    return generator(n, Generator{row, col});
  }
  static UeaElement monomial(const Monomial& m, const Scalar& c = 1);

  Rank rank() const noexcept { return rank_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Total degree; std::nullopt is the bottom degree of 0.
  std::optional<std::uint32_t> degree() const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const { return coefficient(Monomial(rank_)); }

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  UeaElement& operator+=(const UeaElement& other);
  UeaElement& operator-=(const UeaElement& other);
  UeaElement& operator*=(const Scalar& c);

  friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
  friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
  friend UeaElement operator-(UeaElement a) { return a *= Scalar(-1); }
  friend UeaElement operator*(UeaElement a, const Scalar& c) { return a *= c; }
  friend UeaElement operator*(const Scalar& c, UeaElement a) { return a *= c; }
  friend UeaElement operator*(const UeaElement& a, const UeaElement& b);

  friend bool operator==(const UeaElement& a, const UeaElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  Rank rank_;
  TermMap terms_;
};

/// Normal form of the concatenated word m1 m2.
UeaElement mono_mul(const Monomial& m1, const Monomial& m2);
UeaElement mul(const UeaElement& a, const UeaElement& b);
UeaElement commutator(const UeaElement& a, const UeaElement& b);
UeaElement power(const UeaElement& a, std::uint32_t exponent);

inline std::optional<std::uint32_t> degree(const UeaElement& a) { return a.degree(); }

/// [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb as an element of gl_n.
UeaElement generator_bracket(Rank n, Generator x, Generator y);

/// Number of PBW monomials of degree <= d over rank n, i.e. C(n^2+d, n^2).
std::size_t pbw_dimension(Rank n, std::uint32_t d);

/// Every PBW monomial of degree <= d in MonomialOrder.
std::vector<Monomial> monomials_up_to(Rank n, std::uint32_t d);

/// Cached right multiplications m * e_slot currently held.
std::size_t straightening_cache_size();

}  // namespace gl2n

#pragma once

// gl_2n-module structures on U(gl_n).
//
// A block matrix X = (A B; C D) acts on a in U(gl_n) by
//   X.a = Aa - aD + tr(psi(a).B^T) - tr(phi(a).F^2.C) - tr(phi(a).C) tr(F)
// for Q = I. General nonsingular Q is obtained by twisting with the
// automorphism phi_S(X) = (A, B.S^-1; S.C, S.D.S^-1) at S = Q^-T.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gl2n/matrix.hpp"
#include "gl2n/pbw.hpp"

namespace gl2n {

/// An element of gl_2n as a 2n x 2n rational matrix with n x n block views.
class Gl2nElement {
 public:
  explicit Gl2nElement(RationalMatrix m);

  static Gl2nElement zero(Rank n);
  /// e_{row,col}, 1-based in [1, 2n].
  static Gl2nElement unit(Rank n, std::size_t row, std::size_t col);
  static Gl2nElement from_blocks(const RationalMatrix& a, const RationalMatrix& b,
                                 const RationalMatrix& c, const RationalMatrix& d);

  Rank rank() const noexcept { return rank_; }
  const RationalMatrix& matrix() const noexcept { return m_; }
  RationalMatrix a() const { return m_.block(0, 0, rank_, rank_); }
  RationalMatrix b() const { return m_.block(0, rank_, rank_, rank_); }
  RationalMatrix c() const { return m_.block(rank_, 0, rank_, rank_); }
  RationalMatrix d() const { return m_.block(rank_, rank_, rank_, rank_); }

  Gl2nElement& operator+=(const Gl2nElement& o);
  Gl2nElement& operator*=(const Scalar& s);
  friend Gl2nElement operator+(Gl2nElement x, const Gl2nElement& y) { return x += y; }
  friend Gl2nElement operator*(const Scalar& s, Gl2nElement x) { return x *= s; }
  friend bool operator==(const Gl2nElement&, const Gl2nElement&) = default;

 private:
  Rank rank_;
  RationalMatrix m_;
};

/// [X, Y] = XY - YX in gl_2n.
Gl2nElement bracket(const Gl2nElement& x, const Gl2nElement& y);

/// All (2n)^2 units e_{r,c} in row-major order.
std::vector<Gl2nElement> gl2n_basis(Rank n);

enum class Block { a, b, c, d };
/// Block containing unit e_{row,col} (1-based).
Block block_of_unit(Rank n, std::size_t row, std::size_t col);

/// Deliberate corruptions of the action formula, used only to show the
/// module-axiom check has teeth.
enum class Mutation {
  none,
  flip_trace_sign,  // + tr(phi(a).C') tr(F)
  drop_f_squared,   // tr(phi(a).C') in place of tr(phi(a).F^2.C')
  q_for_q_inv_t,    // C' = Q.C instead of Q^-T.C
  literal_d_term,   // -aD instead of -a(Q^-T.D.Q^T)
};

std::optional<Mutation> parse_mutation(std::string_view name);
std::string_view to_string(Mutation m);

/// The pair (n, Q) fixing M_Q, with Q^-T cached when Q is nonsingular.
class ModuleSpec {
 public:
  explicit ModuleSpec(RationalMatrix q);
  static ModuleSpec identity(Rank n) { return ModuleSpec(RationalMatrix::identity(n)); }

  Rank rank() const noexcept { return rank_; }
  const RationalMatrix& q() const noexcept { return q_; }
  bool nonsingular() const noexcept { return q_inv_t_.has_value(); }
  const std::optional<RationalMatrix>& q_inv_t() const noexcept { return q_inv_t_; }
  /// Q^-T, or SingularMatrix.
  const RationalMatrix& require_q_inv_t() const;

 private:
  Rank rank_;
  RationalMatrix q_;
  std::optional<RationalMatrix> q_inv_t_;
};

/// Vectors of M_Q are elements of U(gl_n); the generator v is 1.
using ModuleVector = UeaElement;

/// The Q = I action.
ModuleVector act_identity(const Gl2nElement& x, const ModuleVector& a,
                          Mutation mutation = Mutation::none);

/// phi_S; throws SingularMatrix for singular S.
Gl2nElement twist(const RationalMatrix& s, const Gl2nElement& x);

/// The M_Q action, evaluated directly as
///   Aa - a(Q^-T.D.Q^T) + tr(psi(a).Q.B^T) - tr(phi(a).F^2.Q^-T.C) - tr(phi(a).Q^-T.C) tr(F).
/// Agrees with act_identity(twist(Q^-T, X), a). Throws SingularMatrix.
ModuleVector act(const ModuleSpec& spec, const Gl2nElement& x, const ModuleVector& a,
                 Mutation mutation = Mutation::none);

/// The A+B action Aa + tr(psi(a).Q.B^T), valid for every Q. Throws
/// InvalidArgument if X has a nonzero C or D block.
ModuleVector act_parabolic(const ModuleSpec& spec, const Gl2nElement& x, const ModuleVector& a);

/// Subset-sum formula for a = A_1 ... A_k given as numeric factors.
ModuleVector act_alternative(const ModuleSpec& spec, const Gl2nElement& x,
                             std::span<const RationalMatrix> factors);

/// Factor list of a PBW monomial: E_g repeated by exponent, in PBW order.
std::vector<RationalMatrix> monomial_factors(const Monomial& m);

/// (e_{i,n+j} . 1)_{ij}; equals Q.
RationalMatrix b_eigenvalues(const ModuleSpec& spec);

}  // namespace gl2n

#pragma once

// Exhaustive desk-scale checks of the identities behind M_Q. Every suite
// enumerates deterministically (row-major units, MonomialOrder monomials),
// so attempted counts depend only on the parameters and counterexamples
// are reproducible.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gl2n/matrix.hpp"
#include "gl2n/module_action.hpp"
#include "gl2n/pbw.hpp"

namespace gl2n {

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
};

/// At most this many failures are stored; `failed` keeps the full count.
inline constexpr std::size_t kMaxRecordedFailures = 50;

struct VerificationReport {
  std::string suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::size_t attempted = 0;
  std::size_t failed = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failed == 0; }
  void record(std::string input, std::string expected, std::string got);
  /// {suite, params, attempted, failed, failures: [{input, expected, got}], notes}
  nlohmann::ordered_json to_json() const;
};

/// X.(Y.a) - Y.(X.a) = [X,Y].a over all unit pairs and monomials of degree
/// <= deg_bound. Throws SingularMatrix.
VerificationReport check_bracket_axiom(const ModuleSpec& spec, std::uint32_t deg_bound,
                                       Mutation mutation = Mutation::none);

/// [e_ij, tr(e_kl.F^m)] = tr([e_ij, e_kl].F^m), 1 <= m <= m_max.
VerificationReport check_glemma(Rank n, std::uint32_t m_max);

/// [e_ij, tr(F^k)] = 0, 1 <= k <= k_max.
VerificationReport check_gelfand_central(Rank n, std::uint32_t k_max);

/// On M_I, for all i,j,k and m <= m_max:
///   e_{j,k+n}.(e_ij^m a) - e_ij^m (e_{j,k+n}.a)
///     = -m e_ij^{m-1} (e_{i,k+n}.a)                  if i != j
///     = ((e_ii - 1)^m - e_ii^m) (e_{i,k+n}.a)        if i == j
VerificationReport check_rel_operator(Rank n, std::uint32_t m_max, std::uint32_t deg_bound);

/// On M_I, g = (e_{j,k+n} - delta_jk).f has degree <= d-1 and
/// g + l_kj f/e_kj has degree <= d-2, for every monomial f of degree d.
VerificationReport check_mod_leading(Rank n, std::uint32_t deg_bound);

struct Reduction {
  Monomial pivot;
  /// Operators applied, e.g. "(e[1,2]-1)^2" or "e[1,4]e[2,3]"; "" for none.
  std::string word;
  /// B_p applied to f.
  UeaElement result;
  /// coeff_f(p) * prod (-1)^l l!, the value predicted by the leading terms.
  Scalar predicted;

  /// A valid witness: result is a nonzero constant.
  bool is_witness() const { return result.size() == 1 && result.constant_term() != 0; }
  Scalar scalar() const { return result.constant_term(); }
};

/// Applies B_p = prod_ij (e_{j,n+i} - delta_ij)^{l_ij} on M_I, where p is the
/// first maximal-degree monomial of f. Throws InvalidArgument for f = 0.
Reduction reduce_to_constant(const UeaElement& f);

struct SocleLayers {
  std::vector<std::size_t> layers;      // dim K_k / K_{k-1}
  std::vector<std::size_t> cumulative;  // dim K_k
};

/// K_k = {v : (e_{i,n+j} - q_ij).v in K_{k-1} for all i,j}, K_0 = 0, computed
/// by exact linear algebra on M^(k_max). Throws SingularMatrix.
SocleLayers socle_layers(const ModuleSpec& spec, std::uint32_t k_max);

/// Compares socle_layers against C(n^2+k-2, k-1) (layer reading) and notes
/// whether the cumulative reading C(n^2+k-1, n^2) also matches.
VerificationReport check_socle(const ModuleSpec& spec, std::uint32_t k_max);

/// For singular Q: alpha = sum (A0)_ij e_ij with Q^T A0 = 0, A0 != 0, and for
/// all B-units and monomials a, B.(a alpha) = tr(Q.B^T.psi(a)) alpha.
/// Throws InvalidArgument when Q is nonsingular.
VerificationReport check_singular_submodule(const ModuleSpec& spec, std::uint32_t deg_bound);

/// Nonzero A0 = v e_1^T with v the first kernel vector of Q^T.
RationalMatrix singular_annihilator(const RationalMatrix& q);

/// act = act_alternative = act_identity o twist(Q^-T) on units x monomials.
VerificationReport check_equivalence(const ModuleSpec& spec, std::uint32_t deg_bound);

/// deg(X.a) <= deg(a) + (1, 0, 2, 1) for A, B, C, D units, and
/// deg((e_{i,n+j} - q_ij).a) < deg(a).
VerificationReport check_degree_contract(const ModuleSpec& spec, std::uint32_t deg_bound);

/// (e_{i,n+j}.1)_ij = Q.
VerificationReport check_eigenvalues(const ModuleSpec& spec);

/// dim M^(d) = C(n^2+d, n^2) for d <= d_max.
VerificationReport check_filtration_dimension(Rank n, std::uint32_t d_max);

/// C(top, bottom) as size_t.
std::size_t binomial(std::size_t top, std::size_t bottom);

}  // namespace gl2n

#include <doctest.h>

#include <random>

#include "gl2n/errors.hpp"
#include "gl2n/module_action.hpp"
#include "support/random.hpp"

using namespace gl2n;

namespace {

UeaElement e(Rank n, std::uint32_t i, std::uint32_t j) { return UeaElement::generator(n, i, j); }
UeaElement c(Rank n, const Scalar& v) { return UeaElement::constant(n, v); }

// U(gl_1) = Q[x] with x = e_11; polynomials as dense coefficient vectors.
using Poly = std::vector<Scalar>;

Poly to_poly(const UeaElement& a) {
  Poly p(a.degree().value_or(0) + 1, Scalar(0));
  for (const auto& [m, coeff] : a.terms()) p[m.degree()] = coeff;
  return p;
}

UeaElement from_poly(const Poly& p) {
  UeaElement out(1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) out.add_term(Monomial::of(1, {1, 1}, static_cast<std::uint32_t>(k)), p[k]);
  }
  return out;
}

Poly poly_add(Poly a, const Poly& b, const Scalar& s = 1) {
  if (a.size() < b.size()) a.resize(b.size(), Scalar(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += s * b[k];
  return a;
}

Poly times_x(const Poly& p) {
  Poly out(p.size() + 1, Scalar(0));
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p[k];
  return out;
}

/// p(x + s) by Horner.
Poly shift(const Poly& p, const Scalar& s) {
  Poly out{Scalar(0)};
  for (std::size_t k = p.size(); k-- > 0;) {
    out = poly_add(times_x(out), out, s);
    out[0] += p[k];
  }
  return out;
}

/// X.p on M_(q) for n = 1, written out by hand:
///   (alpha - delta) x p + q beta p(x-1) - (gamma/q)(x^2 + x) p(x+1).
Poly oracle_action(const Scalar& q, const RationalMatrix& x, const Poly& p) {
  const Scalar alpha = x.at(0, 0), beta = x.at(0, 1), gamma = x.at(1, 0), delta = x.at(1, 1);
  Poly out = poly_add(Poly{}, times_x(p), alpha - delta);
  out = poly_add(out, shift(p, -1), q * beta);
  const Poly up = shift(p, 1);
  out = poly_add(out, times_x(times_x(up)), -gamma / q);
  out = poly_add(out, times_x(up), -gamma / q);
  return out;
}

}  // namespace

TEST_CASE("Gl2nElement blocks") {
  const auto x = Gl2nElement::unit(2, 1, 4);
  CHECK(x.b() == RationalMatrix::unit(2, 1, 2));
  CHECK(x.a().is_zero());
  CHECK(block_of_unit(2, 1, 4) == Block::b);
  CHECK(block_of_unit(2, 3, 1) == Block::c);
  CHECK(block_of_unit(2, 4, 4) == Block::d);
  CHECK(block_of_unit(2, 2, 2) == Block::a);
  const auto y = Gl2nElement::from_blocks(RationalMatrix{{1}}, RationalMatrix{{2}},
                                          RationalMatrix{{3}}, RationalMatrix{{4}});
  CHECK(y.matrix() == RationalMatrix{{1, 2}, {3, 4}});
  CHECK(gl2n_basis(2).size() == 16);
  CHECK_THROWS_AS(Gl2nElement(RationalMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), InvalidArgument);
  CHECK(bracket(Gl2nElement::unit(1, 1, 2), Gl2nElement::unit(1, 2, 1)).matrix() ==
        RationalMatrix{{1, 0}, {0, -1}});
}

TEST_CASE("action on the generator for n = 1") {
  const auto spec = ModuleSpec::identity(1);
  const auto one = c(1, 1);
  CHECK(act(spec, Gl2nElement::unit(1, 1, 2), one) == one);
  CHECK(act(spec, Gl2nElement::unit(1, 2, 1), one) == -power(e(1, 1, 1), 2) - e(1, 1, 1));
  CHECK(act(spec, Gl2nElement::unit(1, 2, 2), one) == -e(1, 1, 1));
  CHECK(act(spec, Gl2nElement::unit(1, 1, 1), e(1, 1, 1)) == power(e(1, 1, 1), 2));
  for (std::uint32_t m = 0; m <= 4; ++m) {
    CHECK(act(spec, Gl2nElement::unit(1, 1, 2), power(e(1, 1, 1), m)) ==
          power(e(1, 1, 1) - one, m));
  }
}

TEST_CASE("n = 1 action matches the polynomial oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar q = 0;
    while (q == 0) q = testing_support::random_rational(rng, 9);
    const ModuleSpec spec(RationalMatrix{{q}});
    const auto x = Gl2nElement(testing_support::random_matrix(rng, 2, 9));
    const auto a = testing_support::random_element(rng, 1, 5, 4, 9);
    const auto expected = from_poly(oracle_action(q, x.matrix(), to_poly(a)));
    CHECK(act(spec, x, a) == expected);
  }
}

TEST_CASE("B-units on the generator give the entries of Q") {
  const ModuleSpec spec(RationalMatrix{{1, 2}, {3, 5}});
  const auto one = c(2, 1);
  CHECK(act(spec, Gl2nElement::unit(2, 1, 4), one) == c(2, 2));
  for (std::uint32_t i = 1; i <= 2; ++i)
    for (std::uint32_t j = 1; j <= 2; ++j)
      CHECK(act(spec, Gl2nElement::unit(2, i, 2 + j), one) == c(2, spec.q().at(i - 1, j - 1)));
  CHECK(b_eigenvalues(spec) == spec.q());
  CHECK(b_eigenvalues(ModuleSpec::identity(2)) == RationalMatrix::identity(2));
  const ModuleSpec singular(RationalMatrix{{0, 1}, {0, 0}});
  CHECK(b_eigenvalues(singular) == singular.q());
}

TEST_CASE("A-block acts by left multiplication") {
  std::mt19937_64 rng(3);
  const ModuleSpec spec(RationalMatrix{{1, 2}, {3, 5}});
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing_support::random_element(rng, 2, 3, 3, 9);
    const auto m = testing_support::random_matrix(rng, 2, 9);
    const auto x = Gl2nElement::from_blocks(m, RationalMatrix(2, 2), RationalMatrix(2, 2),
                                            RationalMatrix(2, 2));
    CHECK(act(spec, x, a) == mul(to_uea(m), a));
  }
}

TEST_CASE("twists") {
  std::mt19937_64 rng(17);
  const auto x = Gl2nElement(testing_support::random_matrix(rng, 4, 9));
  CHECK(twist(RationalMatrix::identity(2), x) == x);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testing_support::random_nonsingular(rng, 2, 5);
    const auto t = testing_support::random_nonsingular(rng, 2, 5);
    const auto y = Gl2nElement(testing_support::random_matrix(rng, 4, 9));
    CHECK(twist(s, twist(t, x)) == twist(s * t, x));
    CHECK(twist(s, bracket(x, y)) == bracket(twist(s, x), twist(s, y)));
  }
  CHECK_THROWS_AS(twist(RationalMatrix{{1, 1}, {1, 1}}, x), SingularMatrix);
}

TEST_CASE("general Q is the Q = I action twisted by Q^-T") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const ModuleSpec spec(testing_support::random_nonsingular(rng, 2, 5));
    const auto x = Gl2nElement(testing_support::random_matrix(rng, 4, 5));
    const auto a = testing_support::random_element(rng, 2, 2, 3, 5);
    CHECK(act(spec, x, a) == act_identity(twist(*spec.q_inv_t(), x), a));
  }
}

TEST_CASE("subset-sum formula") {
  const auto spec = ModuleSpec::identity(1);
  const std::vector<RationalMatrix> factors{RationalMatrix::unit(1, 1, 1)};
  const auto x11 = e(1, 1, 1);
  const auto expected = -power(x11, 3) - power(x11, 2) * Scalar(2) - x11;
  CHECK(act_alternative(spec, Gl2nElement::unit(1, 2, 1), factors) == expected);
  CHECK(act(spec, Gl2nElement::unit(1, 2, 1), x11) == expected);

  const ModuleSpec q(RationalMatrix{{1, 2}, {3, 5}});
  CHECK(act_alternative(q, Gl2nElement::unit(2, 2, 3), {}) == c(2, 3));
  const auto m = Monomial::from_exponents(2, {1, 0, 2, 0});
  CHECK(monomial_factors(m).size() == 3);
  CHECK(monomial_factors(m)[1] == RationalMatrix::unit(2, 2, 1));
}

TEST_CASE("parabolic action is defined for singular Q") {
  const ModuleSpec spec(RationalMatrix{{0, 1}, {0, 0}});
  CHECK_FALSE(spec.nonsingular());
  const auto one = c(2, 1);
  CHECK(act_parabolic(spec, Gl2nElement::unit(2, 1, 4), one) == one);
  CHECK(act_parabolic(spec, Gl2nElement::unit(2, 1, 3), one).is_zero());
  CHECK_THROWS_AS(act_parabolic(spec, Gl2nElement::unit(2, 3, 1), one), InvalidArgument);
  CHECK_THROWS_AS(act(spec, Gl2nElement::unit(2, 3, 1), one), SingularMatrix);
  CHECK_THROWS_AS(spec.require_q_inv_t(), SingularMatrix);
}

TEST_CASE("parabolic action agrees with act on A + B") {
  std::mt19937_64 rng(8);
  const ModuleSpec spec(RationalMatrix{{1, 2}, {3, 5}});
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = Gl2nElement::from_blocks(testing_support::random_matrix(rng, 2, 5),
                                            testing_support::random_matrix(rng, 2, 5),
                                            RationalMatrix(2, 2), RationalMatrix(2, 2));
    const auto a = testing_support::random_element(rng, 2, 3, 3, 5);
    CHECK(act_parabolic(spec, x, a) == act(spec, x, a));
  }
}

TEST_CASE("mutation names") {
  for (auto m : {Mutation::none, Mutation::flip_trace_sign, Mutation::drop_f_squared,
                 Mutation::q_for_q_inv_t, Mutation::literal_d_term}) {
    CHECK(parse_mutation(to_string(m)) == m);
  }
  CHECK(parse_mutation("literal-d-term") == Mutation::literal_d_term);
  CHECK_FALSE(parse_mutation("bogus").has_value());
}

TEST_CASE("rank checks") {
  const auto spec = ModuleSpec::identity(2);
  CHECK_THROWS_AS(act(spec, Gl2nElement::unit(1, 1, 1), c(2, 1)), RankMismatch);
  CHECK_THROWS_AS(act(spec, Gl2nElement::unit(2, 1, 1), c(1, 1)), RankMismatch);
}

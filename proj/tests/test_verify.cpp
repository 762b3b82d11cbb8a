#include <doctest.h>

#include "gl2n/errors.hpp"
#include "gl2n/expr.hpp"
#include "gl2n/verify.hpp"

using namespace gl2n;

namespace {

const RationalMatrix kQ{{1, 2}, {3, 5}};

UeaElement e(Rank n, std::uint32_t i, std::uint32_t j) { return UeaElement::generator(n, i, j); }

}  // namespace

TEST_CASE("bracket axiom") {
  auto r = check_bracket_axiom(ModuleSpec::identity(1), 3);
  CHECK(r.passed());
  CHECK(r.attempted == 64);

  r = check_bracket_axiom(ModuleSpec(kQ), 2);
  CHECK(r.passed());
  CHECK(r.attempted == 16 * 16 * 15);

  CHECK_THROWS_AS(check_bracket_axiom(ModuleSpec(RationalMatrix{{1, 1}, {1, 1}}), 1),
                  SingularMatrix);
}

TEST_CASE("every mutation breaks the bracket axiom") {
  for (auto m : {Mutation::flip_trace_sign, Mutation::drop_f_squared, Mutation::q_for_q_inv_t,
                 Mutation::literal_d_term}) {
    const auto r = check_bracket_axiom(ModuleSpec(kQ), 2, m);
    CAPTURE(to_string(m));
    CHECK_FALSE(r.passed());
    CHECK(r.failed > 0);
    CHECK(r.failures.size() == std::min<std::size_t>(r.failed, kMaxRecordedFailures));
  }
}

TEST_CASE("literal D-term fails on a (D-unit, C-unit) pair") {
  const ModuleSpec spec(kQ);
  const Rank n = 2;
  bool found = false;
  for (std::size_t dr = 3; dr <= 4; ++dr)
    for (std::size_t dc = 3; dc <= 4; ++dc)
      for (std::size_t cr = 3; cr <= 4; ++cr)
        for (std::size_t cc = 1; cc <= 2; ++cc) {
          const auto x = Gl2nElement::unit(n, dr, dc);
          const auto y = Gl2nElement::unit(n, cr, cc);
          for (const auto& m : monomials_up_to(n, 2)) {
            const auto a = UeaElement::monomial(m);
            const auto lhs = act(spec, x, act(spec, y, a, Mutation::literal_d_term),
                                 Mutation::literal_d_term) -
                             act(spec, y, act(spec, x, a, Mutation::literal_d_term),
                                 Mutation::literal_d_term);
            if (lhs != act(spec, bracket(x, y), a, Mutation::literal_d_term)) found = true;
          }
        }
  CHECK(found);
}

TEST_CASE("trace lemma and central invariants") {
  auto r = check_glemma(2, 3);
  CHECK(r.passed());
  CHECK(r.attempted == 48);
  CHECK(check_glemma(1, 4).passed());
  CHECK(check_glemma(3, 2).passed());

  r = check_gelfand_central(2, 3);
  CHECK(r.passed());
  CHECK(r.attempted == 12);
  CHECK(check_gelfand_central(1, 5).passed());
  CHECK(check_gelfand_central(3, 2).passed());
}

TEST_CASE("commutation relation with powers") {
  // n = 1: [e_12, e_11^2] acts as ((e_11 - 1)^2 - e_11^2)(e_12 .), giving 1 - 2 e_11 on 1.
  const auto one = UeaElement::constant(1, 1);
  const auto b = Gl2nElement::unit(1, 1, 2);
  const auto sq = power(e(1, 1, 1), 2);
  const auto lhs = act_identity(b, sq) - mul(sq, act_identity(b, one));
  CHECK(lhs == one - e(1, 1, 1) * Scalar(2));

  const auto r = check_rel_operator(2, 3, 2);
  CHECK(r.passed());
  CHECK(r.attempted == 8 * 3 * 15);
  CHECK(check_rel_operator(1, 3, 3).passed());
}

TEST_CASE("leading term of the lowering operators") {
  // n = 1, f = e_11^3: (e_12 - 1).f = (e_11 - 1)^3 - e_11^3.
  const auto f = power(e(1, 1, 1), 3);
  const auto one = UeaElement::constant(1, 1);
  CHECK(act_identity(Gl2nElement::unit(1, 1, 2), f) - f == power(e(1, 1, 1) - one, 3) - f);

  // n = 2, f = e_12 e_21, operator e_{1,4}: leading term -e_12.
  const auto f2 = mul(e(2, 1, 2), e(2, 2, 1));
  const auto g = act_identity(Gl2nElement::unit(2, 1, 4), f2);
  CHECK(g.degree() == 1u);
  CHECK(g.coefficient(Monomial::of(2, {1, 2})) == -1);
  CHECK(g.coefficient(Monomial::of(2, {2, 1})) == 0);

  const auto r = check_mod_leading(2, 3);
  CHECK(r.passed());
  CHECK(r.attempted == 4 * 35);
}

TEST_CASE("reduction to a constant") {
  auto r = reduce_to_constant(UeaElement::constant(2, 1));
  CHECK(r.word.empty());
  CHECK(r.scalar() == 1);

  r = reduce_to_constant(power(e(1, 1, 1), 2));
  CHECK(r.word == "(e[1,2]-1)^2");
  CHECK(r.scalar() == 2);
  CHECK(r.is_witness());
  CHECK(r.predicted == 2);

  r = reduce_to_constant(e(2, 1, 2) + mul(e(2, 1, 1), e(2, 2, 2)));
  CHECK(r.pivot == Monomial::from_exponents(2, {1, 0, 0, 1}));
  CHECK(r.word == "(e[1,3]-1)(e[2,4]-1)");
  CHECK(r.is_witness());
  CHECK(r.scalar() == r.predicted);

  r = reduce_to_constant(power(e(2, 2, 1), 2) * Scalar(3));
  CHECK(r.word == "e[1,4]^2");
  CHECK(r.scalar() == 6);

  CHECK_THROWS_AS(reduce_to_constant(UeaElement(2)), InvalidArgument);
}

TEST_CASE("socle layers") {
  auto s = socle_layers(ModuleSpec::identity(1), 4);
  CHECK(s.layers == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(s.cumulative == std::vector<std::size_t>{1, 2, 3, 4});

  s = socle_layers(ModuleSpec(kQ), 3);
  CHECK(s.layers == std::vector<std::size_t>{1, 4, 10});

  s = socle_layers(ModuleSpec::identity(2), 2);
  CHECK(s.layers[1] == 4);

  const auto r = check_socle(ModuleSpec(kQ), 3);
  CHECK(r.passed());
  CHECK(r.attempted == 3);
  CHECK_FALSE(r.notes.empty());
  CHECK_THROWS_AS(socle_layers(ModuleSpec(RationalMatrix{{0}}), 2), SingularMatrix);
}

TEST_CASE("singular Q has a proper B-stable subspace") {
  const RationalMatrix q{{1, 0}, {0, 0}};
  CHECK(singular_annihilator(q) == RationalMatrix::unit(2, 2, 1));
  CHECK(singular_annihilator(RationalMatrix(2, 2)) == RationalMatrix::unit(2, 1, 1));

  auto r = check_singular_submodule(ModuleSpec(q), 2);
  CHECK(r.passed());
  CHECK(r.attempted == 4 * 15);
  r = check_singular_submodule(ModuleSpec(RationalMatrix(2, 2)), 2);
  CHECK(r.passed());
  CHECK_THROWS_AS(check_singular_submodule(ModuleSpec(kQ), 1), InvalidArgument);
}

TEST_CASE("three routes to the action agree") {
  auto r = check_equivalence(ModuleSpec::identity(1), 3);
  CHECK(r.passed());
  CHECK(r.attempted == 16);
  CHECK(check_equivalence(ModuleSpec::identity(2), 2).passed());
  CHECK(check_equivalence(ModuleSpec(kQ), 2).passed());
}

TEST_CASE("degree contract, eigenvalues, filtration") {
  CHECK(check_degree_contract(ModuleSpec(kQ), 3).passed());
  CHECK(check_degree_contract(ModuleSpec::identity(1), 3).passed());
  CHECK(check_eigenvalues(ModuleSpec(kQ)).passed());
  const auto r = check_filtration_dimension(2, 4);
  CHECK(r.passed());
  CHECK(r.attempted == 5);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, 3) == 0);
}

TEST_CASE("report JSON shape") {
  const auto r = check_bracket_axiom(ModuleSpec(kQ), 1, Mutation::flip_trace_sign);
  const auto j = r.to_json();
  CHECK(j["suite"] == "bracket");
  CHECK(j["params"]["n"] == 2);
  CHECK(j["params"]["q"] == nlohmann::json::parse(R"([["1","2"],["3","5"]])"));
  CHECK(j["attempted"] == r.attempted);
  REQUIRE(j["failures"].is_array());
  REQUIRE_FALSE(j["failures"].empty());
  CHECK(j["failures"][0].contains("input"));
  CHECK(j["failures"][0].contains("expected"));
  CHECK(j["failures"][0].contains("got"));
}

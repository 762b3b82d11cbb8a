#include <doctest.h>

#include <random>

#include "gl2n/errors.hpp"
#include "gl2n/expr.hpp"
#include "support/random.hpp"

using namespace gl2n;

namespace {

UeaElement e(Rank n, std::uint32_t i, std::uint32_t j) { return UeaElement::generator(n, i, j); }

ParseError::Kind parse_kind(std::string_view text, Rank n, bool gl2n_context = false) {
  try {
    if (gl2n_context) {
      parse_gl2n(text, n);
    } else {
      parse_uea(text, n);
    }
  } catch (const ParseError& err) {
    return err.kind();
  }
  FAIL("expected a parse error for " << text);
  return ParseError::Kind::syntax;
}

}  // namespace

TEST_CASE("parse U(gl_n) elements") {
  CHECK(parse_uea("e[1,1]^2 * e[2,1] + 5", 2) ==
        mul(power(e(2, 1, 1), 2), e(2, 2, 1)) + UeaElement::constant(2, 5));
  CHECK(parse_uea("e[1,2] e[2,1]", 2) == mul(e(2, 2, 1), e(2, 1, 2)) + e(2, 1, 1) - e(2, 2, 2));
  CHECK(parse_uea("e[2,1]e[1,2]", 2) == mul(e(2, 2, 1), e(2, 1, 2)));
  CHECK(parse_uea("  -3/6 (e[1,1] - 1)^2 ", 1) ==
        power(e(1, 1, 1) - UeaElement::constant(1, 1), 2) * Scalar(-1, 2));
  CHECK(parse_uea("0", 3).is_zero());
  CHECK(parse_uea("e[1,1]^0", 2) == UeaElement::constant(2, 1));
  CHECK(parse_uea("2*3 e[1,1]", 1) == e(1, 1, 1) * Scalar(6));
}

TEST_CASE("parse errors carry kind and position") {
  CHECK(parse_kind("e[1,3]", 2) == ParseError::Kind::index_out_of_range);
  CHECK(parse_kind("e[0,1]", 2) == ParseError::Kind::index_out_of_range);
  CHECK(parse_kind("e[1,1]^99999999999", 2) == ParseError::Kind::exponent_overflow);
  CHECK(parse_kind("e[1,1] +", 2) == ParseError::Kind::syntax);
  CHECK(parse_kind("e[1 1]", 2) == ParseError::Kind::syntax);
  CHECK(parse_kind("(e[1,1]", 2) == ParseError::Kind::syntax);
  CHECK(parse_kind("1/0", 2) == ParseError::Kind::syntax);
  CHECK(parse_kind("", 2) == ParseError::Kind::syntax);
  CHECK(parse_kind("1.5", 2) == ParseError::Kind::syntax);
  try {
    parse_uea("e[1,1] + e[1,3]", 2);
    FAIL("no error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 9);
  }
  try {
    parse_uea("e[1,1] ) ", 2);
    FAIL("no error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 7);
  }
}

TEST_CASE("parse gl_2n elements") {
  CHECK(parse_gl2n("e[1,3]", 2) == Gl2nElement::unit(2, 1, 3));
  CHECK(parse_gl2n("e[1,3]", 2).b() == RationalMatrix::unit(2, 1, 1));
  const auto x = parse_gl2n("2 e[3,1] - e[4,4]", 2);
  CHECK(x.c() == RationalMatrix{{2, 0}, {0, 0}});
  CHECK(x.d() == RationalMatrix{{0, 0}, {0, -1}});
  CHECK(parse_gl2n("3 (e[1,1] + e[2,2])", 1).matrix() == RationalMatrix{{3, 0}, {0, 3}});
  CHECK(parse_gl2n("(1/2)(e[1,2] + e[2,1])", 1).matrix() ==
        RationalMatrix{{0, Scalar(1, 2)}, {Scalar(1, 2), 0}});
  CHECK(parse_kind("e[1,1]^2", 2, true) == ParseError::Kind::nonlinear);
  CHECK(parse_kind("e[1,1] e[2,2]", 2, true) == ParseError::Kind::nonlinear);
  CHECK(parse_kind("e[1,1] + 1", 2, true) == ParseError::Kind::nonlinear);
  CHECK(parse_kind("e[5,1]", 2, true) == ParseError::Kind::index_out_of_range);
}

TEST_CASE("printing") {
  CHECK(print_normal(UeaElement(2)) == "0");
  CHECK(print_normal(mul(e(2, 2, 1), e(2, 1, 2)) + e(2, 1, 1) - e(2, 2, 2)) == "e[1,2]e[2,1]");
  CHECK(print_normal(mul(e(2, 2, 1), e(2, 1, 2))) == "-e[1,1] + e[2,2] + e[1,2]e[2,1]");
  const auto x = e(1, 1, 1);
  CHECK(print_normal(-power(x, 3) - power(x, 2) * Scalar(2) - x) ==
        "-e[1,1] - 2 e[1,1]^2 - e[1,1]^3");
  CHECK(print_normal(UeaElement::constant(2, Scalar(-3, 4))) == "-3/4");
  CHECK(print_normal(e(2, 1, 1) * Scalar(5, 7) + UeaElement::constant(2, 1)) ==
        "1 + 5/7 e[1,1]");
  CHECK(print_gl2n(parse_gl2n("2 e[3,1] - e[4,4]", 2)) == "2 e[3,1] - e[4,4]");
  CHECK(print_gl2n(Gl2nElement::zero(1)) == "0");
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const Rank n = 1 + static_cast<Rank>(trial % 3);
    const auto a = testing_support::random_element(rng, n, 4, 5, 1000000);
    const auto text = print_normal(a);
    CHECK(parse_uea(text, n) == a);
    CHECK(print_normal(parse_uea(text, n)) == text);
  }
}

TEST_CASE("JSON encodings") {
  const auto a = parse_uea("3/2 e[1,1]^2 e[2,1] - 4", 2);
  const auto j = uea_to_json(a);
  CHECK(j == nlohmann::json::parse(R"([[[], "-4"], [[[1,1,2],[2,1,1]], "3/2"]])"));
  CHECK(uea_from_json(j, 2) == a);
  // Factor lists are words and get straightened.
  CHECK(uea_from_json(nlohmann::json::parse(R"([[[[1,2,1],[2,1,1]], 1]])"), 2) ==
        mul(e(2, 1, 2), e(2, 2, 1)));
  CHECK_THROWS_AS(uea_from_json(nlohmann::json::parse(R"([[[[3,1,1]], "1"]])"), 2),
                  InvalidArgument);

  const auto q = matrix_from_json(nlohmann::json::parse(R"([["1","2/4"],[3,-5]])"));
  CHECK(q == RationalMatrix{{1, Scalar(1, 2)}, {3, -5}});
  CHECK(matrix_to_json(q) == nlohmann::json::parse(R"([["1","1/2"],["3","-5"]])"));
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[[1.5]]")), InvalidArgument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[[1],[2,3]]")), InvalidArgument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"([["1/0"]])")), InvalidArgument);
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(parse_scalar("7") == 7);
  CHECK_THROWS_AS(parse_scalar("1.0"), InvalidArgument);
  CHECK_THROWS_AS(parse_scalar(""), InvalidArgument);
  CHECK(to_string(Scalar(4, 6)) == "2/3");
}

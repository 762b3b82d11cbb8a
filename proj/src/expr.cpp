#include "gl2n/expr.hpp"

#include <cctype>
#include <limits>
#include <memory>
#include <variant>
#include <vector>

#include "gl2n/errors.hpp"

namespace gl2n {

namespace {

// ---------------------------------------------------------------------------
// Syntax tree

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct NumberNode {
  Scalar value;
};
struct UnitNode {
  std::uint64_t row;
  std::uint64_t col;
};
struct SumNode {
  std::vector<std::pair<int, NodePtr>> terms;  // (sign, term)
};
struct ProductNode {
  std::vector<NodePtr> factors;
};
struct PowerNode {
  NodePtr base;
  std::uint32_t exponent;
};

struct Node {
  std::size_t pos;
  std::variant<NumberNode, UnitNode, SumNode, ProductNode, PowerNode> body;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = element();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::syntax, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Indices are range-checked later against n; anything beyond 64 bits is
  // already out of range.
  std::uint64_t index() {
    const std::size_t start = (skip_space(), pos_);
    const std::string d = digits();
    if (d.size() > 18) throw ParseError(ParseError::Kind::index_out_of_range, start, "index too large");
    return std::stoull(d);
  }

  NodePtr make(std::size_t pos, auto body) {
    return std::make_unique<Node>(Node{pos, std::move(body)});
  }

  NodePtr element() {
    const std::size_t start = (skip_space(), pos_);
    SumNode sum;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    sum.terms.emplace_back(sign, term());
    while (peek() == '+' || peek() == '-') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      sum.terms.emplace_back(sign, term());
    }
    if (sum.terms.size() == 1 && sum.terms.front().first == 1) {
      return std::move(sum.terms.front().second);
    }
    return make(start, std::move(sum));
  }

  bool starts_factor(char c) const {
    return c == 'e' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  NodePtr term() {
    const std::size_t start = (skip_space(), pos_);
    ProductNode product;
    product.factors.push_back(factor());
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        product.factors.push_back(factor());
      } else if (starts_factor(c)) {
        product.factors.push_back(factor());
      } else {
        break;
      }
    }
    if (product.factors.size() == 1) return std::move(product.factors.front());
    return make(start, std::move(product));
  }

  NodePtr factor() {
    const std::size_t start = (skip_space(), pos_);
    NodePtr base = atom();
    if (peek() != '^') return base;
    ++pos_;
    const std::size_t exp_pos = (skip_space(), pos_);
    const std::string d = digits();
    if (d.size() > 10 || std::stoull(d) > kMaxExponent) {
      throw ParseError(ParseError::Kind::exponent_overflow, exp_pos,
                       "exponent exceeds " + std::to_string(kMaxExponent));
    }
    return make(start, PowerNode{std::move(base), static_cast<std::uint32_t>(std::stoul(d))});
  }

  NodePtr atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      NodePtr inner = element();
      expect(')');
      return inner;
    }
    if (c == 'e') {
      ++pos_;
      expect('[');
      const std::uint64_t row = index();
      expect(',');
      const std::uint64_t col = index();
      expect(']');
      return make(start, UnitNode{row, col});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
      }
      mpz_class d(den, 10);
      if (d == 0) {
        throw ParseError(ParseError::Kind::syntax, start, "zero denominator");
      }
      Scalar value(mpz_class(num, 10), d);
      value.canonicalize();
      return make(start, NumberNode{value});
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation into U(gl_n)

UeaElement eval_uea(const Node& node, Rank n) {
  return std::visit(
      [&](const auto& body) -> UeaElement {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          return UeaElement::constant(n, body.value);
        } else if constexpr (std::is_same_v<T, UnitNode>) {
          if (body.row < 1 || body.col < 1 || body.row > n || body.col > n) {
            throw ParseError(ParseError::Kind::index_out_of_range, node.pos,
                             "index outside [1," + std::to_string(n) + "]");
          }
          return UeaElement::generator(n, static_cast<std::uint32_t>(body.row),
                                       static_cast<std::uint32_t>(body.col));
        } else if constexpr (std::is_same_v<T, SumNode>) {
          UeaElement out(n);
          for (const auto& [sign, t] : body.terms) {
            if (sign < 0) {
              out -= eval_uea(*t, n);
            } else {
              out += eval_uea(*t, n);
            }
          }
          return out;
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          UeaElement out = eval_uea(*body.factors.front(), n);
          for (std::size_t k = 1; k < body.factors.size(); ++k) {
            out = mul(out, eval_uea(*body.factors[k], n));
          }
          return out;
        } else {
          return power(eval_uea(*body.base, n), body.exponent);
        }
      },
      node.body);
}

// ---------------------------------------------------------------------------
// Evaluation into gl_2n: affine values c + L with L linear in the units.

struct Affine {
  Scalar constant;
  RationalMatrix linear;
  bool has_linear() const { return !linear.is_zero(); }
};

Affine eval_affine(const Node& node, Rank n) {
  const std::size_t dim = 2 * std::size_t{n};
  return std::visit(
      [&](const auto& body) -> Affine {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          return {body.value, RationalMatrix(dim, dim)};
        } else if constexpr (std::is_same_v<T, UnitNode>) {
          if (body.row < 1 || body.col < 1 || body.row > dim || body.col > dim) {
            throw ParseError(ParseError::Kind::index_out_of_range, node.pos,
                             "index outside [1," + std::to_string(dim) + "]");
          }
          return {Scalar(0), RationalMatrix::unit(dim, body.row, body.col)};
        } else if constexpr (std::is_same_v<T, SumNode>) {
          Affine out{Scalar(0), RationalMatrix(dim, dim)};
          for (const auto& [sign, t] : body.terms) {
            Affine v = eval_affine(*t, n);
            out.constant += sign * v.constant;
            out.linear += v.linear * Scalar(sign);
          }
          return out;
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          Affine out = eval_affine(*body.factors.front(), n);
          for (std::size_t k = 1; k < body.factors.size(); ++k) {
            Affine rhs = eval_affine(*body.factors[k], n);
            if (out.has_linear() && rhs.has_linear()) {
              throw ParseError(ParseError::Kind::nonlinear, body.factors[k]->pos,
                               "product of two gl_2n elements is not in gl_2n");
            }
            out = {out.constant * rhs.constant,
                   out.linear * rhs.constant + rhs.linear * out.constant};
          }
          return out;
        } else {
          Affine base = eval_affine(*body.base, n);
          if (body.exponent == 0) return {Scalar(1), RationalMatrix(dim, dim)};
          if (body.exponent == 1) return base;
          if (base.has_linear()) {
            throw ParseError(ParseError::Kind::nonlinear, node.pos,
                             "power of a gl_2n element is not in gl_2n");
          }
          Scalar c = 1;
          for (std::uint32_t k = 0; k < body.exponent; ++k) c *= base.constant;
          return {c, RationalMatrix(dim, dim)};
        }
      },
      node.body);
}

std::string coefficient_prefix(const Scalar& magnitude) {
  return magnitude == 1 ? std::string{} : magnitude.get_str() + " ";
}

void append_signed(std::string& out, bool first, const Scalar& c, const std::string& body_unit,
                   bool is_constant) {
  const bool negative = c < 0;
  const Scalar magnitude = negative ? Scalar(-c) : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += is_constant ? magnitude.get_str() : coefficient_prefix(magnitude) + body_unit;
}

Scalar json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(mpz_class(v.dump(), 10));
  throw InvalidArgument("expected a rational string or integer, got " + v.dump());
}

}  // namespace

UeaElement parse_uea(std::string_view text, Rank n) {
  const NodePtr root = Parser(text).parse();
  return eval_uea(*root, n);
}

Gl2nElement parse_gl2n(std::string_view text, Rank n) {
  const NodePtr root = Parser(text).parse();
  Affine v = eval_affine(*root, n);
  if (v.constant != 0) {
    throw ParseError(ParseError::Kind::nonlinear, 0, "constant term is not an element of gl_2n");
  }
  return Gl2nElement(std::move(v.linear));
}

std::string print_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [g, e] : m.factors()) {
    out += "e[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string print_normal(const UeaElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    append_signed(out, first, c, print_monomial(m), m.is_one());
    first = false;
  }
  return out;
}

std::string print_gl2n(const Gl2nElement& x) {
  const auto& m = x.matrix();
  std::string out;
  bool first = true;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) == 0) continue;
      append_signed(out, first, m.at(r, c),
                    "e[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]", false);
      first = false;
    }
  }
  return first ? "0" : out;
}

std::string print_matrix(const RationalMatrix& m) { return matrix_to_json(m).dump(); }

nlohmann::json uea_to_json(const UeaElement& a) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : a.terms()) {
    auto factors = nlohmann::json::array();
    for (const auto& [g, e] : m.factors()) factors.push_back({g.row, g.col, e});
    out.push_back({factors, c.get_str()});
  }
  return out;
}

UeaElement uea_from_json(const nlohmann::json& j, Rank n) {
  if (!j.is_array()) throw InvalidArgument("element JSON must be an array of terms");
  UeaElement out(n);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array()) {
      throw InvalidArgument("each term must be [[[i,j,exp],...], \"p/q\"]");
    }
    UeaElement word = UeaElement::constant(n, json_scalar(term[1]));
    for (const auto& f : term[0]) {
      if (!f.is_array() || f.size() != 3 || !f[0].is_number_unsigned() ||
          !f[1].is_number_unsigned() || !f[2].is_number_unsigned()) {
        throw InvalidArgument("factor must be [i,j,exp] with unsigned integers");
      }
      const auto row = f[0].get<std::uint64_t>();
      const auto col = f[1].get<std::uint64_t>();
      const auto exp = f[2].get<std::uint64_t>();
      if (row < 1 || col < 1 || row > n || col > n) {
        throw InvalidArgument("factor index outside [1," + std::to_string(n) + "]");
      }
      if (exp > kMaxExponent) throw InvalidArgument("factor exponent too large");
      const auto g = UeaElement::generator(n, static_cast<std::uint32_t>(row),
                                           static_cast<std::uint32_t>(col));
      word = mul(word, power(g, static_cast<std::uint32_t>(exp)));
    }
    out += word;
  }
  return out;
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    out.push_back(row);
  }
  return out;
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidArgument("matrix row must be an array");
    std::vector<Scalar> values;
    for (const auto& v : row) values.push_back(json_scalar(v));
    rows.push_back(std::move(values));
  }
  return RationalMatrix::from_rows(rows);
}

}  // namespace gl2n

#include "gl2n/module_action.hpp"

#include <string>

#include "gl2n/errors.hpp"

namespace gl2n {

// ---------------------------------------------------------------------------
// Gl2nElement

Gl2nElement::Gl2nElement(RationalMatrix m) : rank_(0), m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() == 0 || m_.rows() % 2 != 0) {
    throw InvalidArgument("gl_2n element must be a nonempty 2n x 2n matrix");
  }
  rank_ = static_cast<Rank>(m_.rows() / 2);
}

Gl2nElement Gl2nElement::zero(Rank n) { return Gl2nElement(RationalMatrix(2 * n, 2 * n)); }

Gl2nElement Gl2nElement::unit(Rank n, std::size_t row, std::size_t col) {
  return Gl2nElement(RationalMatrix::unit(2 * std::size_t{n}, row, col));
}

Gl2nElement Gl2nElement::from_blocks(const RationalMatrix& a, const RationalMatrix& b,
                                     const RationalMatrix& c, const RationalMatrix& d) {
  const std::size_t n = a.rows();
  for (const auto* blk : {&a, &b, &c, &d}) {
    if (blk->rows() != n || blk->cols() != n) throw InvalidArgument("blocks must all be n x n");
  }
  RationalMatrix m(2 * n, 2 * n);
  m.set_block(0, 0, a);
  m.set_block(0, n, b);
  m.set_block(n, 0, c);
  m.set_block(n, n, d);
  return Gl2nElement(std::move(m));
}

Gl2nElement& Gl2nElement::operator+=(const Gl2nElement& o) {
  if (o.rank_ != rank_) throw RankMismatch("gl_2n elements of different rank");
  m_ += o.m_;
  return *this;
}

Gl2nElement& Gl2nElement::operator*=(const Scalar& s) {
  m_ *= s;
  return *this;
}

Gl2nElement bracket(const Gl2nElement& x, const Gl2nElement& y) {
  if (x.rank() != y.rank()) throw RankMismatch("bracket of gl_2n elements of different rank");
  return Gl2nElement(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

std::vector<Gl2nElement> gl2n_basis(Rank n) {
  std::vector<Gl2nElement> out;
  for (std::size_t r = 1; r <= 2 * std::size_t{n}; ++r) {
    for (std::size_t c = 1; c <= 2 * std::size_t{n}; ++c) out.push_back(Gl2nElement::unit(n, r, c));
  }
  return out;
}

Block block_of_unit(Rank n, std::size_t row, std::size_t col) {
  const bool top = row <= n;
  const bool left = col <= n;
  if (top) return left ? Block::a : Block::b;
  return left ? Block::c : Block::d;
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  if (name == "none") return Mutation::none;
  if (name == "flip-trace-sign") return Mutation::flip_trace_sign;
  if (name == "drop-f-squared") return Mutation::drop_f_squared;
  if (name == "q-for-q-inv-t") return Mutation::q_for_q_inv_t;
  if (name == "literal-d-term") return Mutation::literal_d_term;
  return std::nullopt;
}

std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::flip_trace_sign: return "flip-trace-sign";
    case Mutation::drop_f_squared: return "drop-f-squared";
    case Mutation::q_for_q_inv_t: return "q-for-q-inv-t";
    case Mutation::literal_d_term: return "literal-d-term";
  }
  return "none";
}

// ---------------------------------------------------------------------------
// ModuleSpec

ModuleSpec::ModuleSpec(RationalMatrix q) : rank_(0), q_(std::move(q)) {
  if (!q_.is_square() || q_.rows() == 0) throw InvalidArgument("Q must be a nonempty n x n matrix");
  rank_ = static_cast<Rank>(q_.rows());
  if (determinant(q_) != 0) q_inv_t_ = inverse(q_).transpose();
}

const RationalMatrix& ModuleSpec::require_q_inv_t() const {
  if (!q_inv_t_) throw SingularMatrix("Q is singular");
  return *q_inv_t_;
}

// ---------------------------------------------------------------------------
// Actions

namespace {

void require_rank(Rank expected, Rank got, const char* what) {
  if (expected != got) {
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(expected) + " vs " +
                       std::to_string(got));
  }
}

// tr(P . R . N) with P, R over U(gl_n) and N numeric; only entries of P.R
// paired with nonzero entries of N are formed.
UeaElement trace_triple(const UeaMatrix& p, const UeaMatrix& r, const RationalMatrix& num) {
  const Rank n = p.rank();
  UeaElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& w = num.at(j, i);
      if (w == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.at(i, k).is_zero() || r.at(k, j).is_zero()) continue;
        out += mul(p.at(i, k), r.at(k, j)) * w;
      }
    }
  }
  return out;
}

// Five-term formula with already transformed blocks:
//   left.a - a.right + tr(psi(a).pairing) - tr(phi(a).F^2.c_eff) - tr(phi(a).c_eff) tr(F)
ModuleVector evaluate_formula(const ModuleVector& a, const RationalMatrix& left,
                              const RationalMatrix& right, const RationalMatrix& pairing,
                              const RationalMatrix& c_eff, Mutation mutation) {
  const Rank n = a.rank();
  ModuleVector out(n);
  if (a.is_zero()) return out;
  if (!left.is_zero()) out += mul(to_uea(left), a);
  if (!right.is_zero()) out -= mul(a, to_uea(right));
  if (!pairing.is_zero()) out += trace_product(psi(a), pairing);
  if (!c_eff.is_zero()) {
    const UeaMatrix image = phi(a);
    const UeaElement linear = trace_product(image, c_eff);
    if (mutation == Mutation::drop_f_squared) {
      out -= linear;
    } else {
      out -= trace_triple(image, f_power(n, 2), c_eff);
    }
    const UeaElement with_trace = mul(linear, gelfand(n, 1));
    if (mutation == Mutation::flip_trace_sign) {
      out += with_trace;
    } else {
      out -= with_trace;
    }
  }
  return out;
}

}  // namespace

ModuleVector act_identity(const Gl2nElement& x, const ModuleVector& a, Mutation mutation) {
  require_rank(x.rank(), a.rank(), "act_identity");
  return evaluate_formula(a, x.a(), x.d(), x.b().transpose(), x.c(), mutation);
}

Gl2nElement twist(const RationalMatrix& s, const Gl2nElement& x) {
  if (s.rows() != x.rank() || s.cols() != x.rank()) throw RankMismatch("twist: S has wrong size");
  if (determinant(s) == 0) throw SingularMatrix("twist: S is singular");
  const RationalMatrix s_inv = inverse(s);
  return Gl2nElement::from_blocks(x.a(), x.b() * s_inv, s * x.c(), s * x.d() * s_inv);
}

ModuleVector act(const ModuleSpec& spec, const Gl2nElement& x, const ModuleVector& a,
                 Mutation mutation) {
  require_rank(spec.rank(), x.rank(), "act");
  require_rank(spec.rank(), a.rank(), "act");
  const RationalMatrix& q = spec.q();
  const RationalMatrix& q_inv_t = spec.require_q_inv_t();
  const RationalMatrix d = x.d();
  const RationalMatrix right =
      mutation == Mutation::literal_d_term ? d : q_inv_t * d * q.transpose();
  const RationalMatrix c_eff = (mutation == Mutation::q_for_q_inv_t ? q : q_inv_t) * x.c();
  return evaluate_formula(a, x.a(), right, q * x.b().transpose(), c_eff, mutation);
}

ModuleVector act_parabolic(const ModuleSpec& spec, const Gl2nElement& x, const ModuleVector& a) {
  require_rank(spec.rank(), x.rank(), "act_parabolic");
  require_rank(spec.rank(), a.rank(), "act_parabolic");
  if (!x.c().is_zero() || !x.d().is_zero()) {
    throw InvalidArgument("act_parabolic: element has a nonzero C or D block");
  }
  const RationalMatrix zero(spec.rank(), spec.rank());
  return evaluate_formula(a, x.a(), zero, spec.q() * x.b().transpose(), zero, Mutation::none);
}

ModuleVector act_alternative(const ModuleSpec& spec, const Gl2nElement& x,
                             std::span<const RationalMatrix> factors) {
  const Rank n = spec.rank();
  require_rank(n, x.rank(), "act_alternative");
  for (const auto& f : factors) {
    if (f.rows() != n || f.cols() != n) throw RankMismatch("act_alternative: factor size");
  }
  if (factors.size() > 24) throw InvalidArgument("act_alternative: too many factors");
  const RationalMatrix& q = spec.q();
  const RationalMatrix& q_inv_t = spec.require_q_inv_t();
  const RationalMatrix a_blk = x.a();
  const RationalMatrix b_t = x.b().transpose();
  const RationalMatrix qc = q_inv_t * x.c();
  const RationalMatrix d_eff = q_inv_t * x.d() * q.transpose();

  std::vector<UeaElement> images;
  for (const auto& f : factors) images.push_back(to_uea(f));
  UeaElement product = UeaElement::constant(n, 1);
  for (const auto& img : images) product = mul(product, img);

  ModuleVector out(n);
  if (!a_blk.is_zero()) out += mul(to_uea(a_blk), product);
  if (!d_eff.is_zero()) out -= mul(product, to_uea(d_eff));
  if (b_t.is_zero() && qc.is_zero()) return out;

  const UeaMatrix f2 = f_power(n, 2);
  const UeaElement tr_f = gelfand(n, 1);
  const std::size_t k = factors.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    UeaElement prefix = UeaElement::constant(n, 1);
    RationalMatrix chosen = RationalMatrix::identity(n);
    RationalMatrix chosen_t = RationalMatrix::identity(n);
    int size = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1u) {
        chosen = chosen * factors[i];
        chosen_t = chosen_t * factors[i].transpose();
        ++size;
      } else {
        prefix = mul(prefix, images[i]);
      }
    }
    UeaElement inner(n);
    if (!b_t.is_zero()) {
      const Scalar sign = size % 2 == 0 ? 1 : -1;
      inner += UeaElement::constant(n, sign * trace(b_t * chosen_t * q));
    }
    if (!qc.is_zero()) {
      const RationalMatrix weight = qc * chosen;
      inner -= trace_product(f2, weight);
      inner -= tr_f * trace(weight);
    }
    out += mul(prefix, inner);
  }
  return out;
}

std::vector<RationalMatrix> monomial_factors(const Monomial& m) {
  std::vector<RationalMatrix> out;
  for (const auto& g : m.word()) out.push_back(RationalMatrix::unit(m.rank(), g.row, g.col));
  return out;
}

RationalMatrix b_eigenvalues(const ModuleSpec& spec) {
  const Rank n = spec.rank();
  RationalMatrix out(n, n);
  const auto one = UeaElement::constant(n, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const auto v = act_parabolic(spec, Gl2nElement::unit(n, i, n + j), one);
      out.at(i - 1, j - 1) = v.constant_term();
    }
  }
  return out;
}

}  // namespace gl2n

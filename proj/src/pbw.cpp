#include "gl2n/pbw.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <string>

#include "gl2n/errors.hpp"
#include "gl2n/memo.hpp"

namespace gl2n {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Rank n) : rank_(n), exponents_(std::size_t{n} * n, 0) {
  if (n == 0) throw InvalidArgument("rank n must be at least 1");
}

Monomial Monomial::of(Rank n, Generator g, std::uint32_t exponent) {
  Monomial m(n);
  if (!g.valid_for(n)) {
    throw InvalidArgument("generator e[" + std::to_string(g.row) + "," + std::to_string(g.col) +
                          "] outside rank " + std::to_string(n));
  }
  m.exponents_[g.slot(n)] = exponent;
  m.degree_ = exponent;
  return m;
}

Monomial Monomial::from_exponents(Rank n, std::vector<std::uint32_t> exponents) {
  Monomial m(n);
  if (exponents.size() != m.exponents_.size()) {
    throw InvalidArgument("exponent vector has wrong length for rank " + std::to_string(n));
  }
  m.exponents_ = std::move(exponents);
  m.degree_ = 0;
  for (auto e : m.exponents_) m.degree_ += e;
  return m;
}

std::uint32_t Monomial::exponent(Generator g) const {
  if (!g.valid_for(rank_)) throw InvalidArgument("generator outside rank");
  return exponents_[g.slot(rank_)];
}

std::vector<std::pair<Generator, std::uint32_t>> Monomial::factors() const {
  std::vector<std::pair<Generator, std::uint32_t>> out;
  for (std::size_t s = 0; s < exponents_.size(); ++s) {
    if (exponents_[s] != 0) out.emplace_back(Generator::from_slot(rank_, s), exponents_[s]);
  }
  return out;
}

std::vector<Generator> Monomial::word() const {
  std::vector<Generator> out;
  out.reserve(degree_);
  for (std::size_t s = 0; s < exponents_.size(); ++s) {
    for (std::uint32_t k = 0; k < exponents_[s]; ++k) out.push_back(Generator::from_slot(rank_, s));
  }
  return out;
}

std::optional<std::size_t> Monomial::last_slot() const noexcept {
  for (std::size_t s = exponents_.size(); s-- > 0;) {
    if (exponents_[s] != 0) return s;
  }
  return std::nullopt;
}

Monomial Monomial::incremented(std::size_t slot) const {
  Monomial out = *this;
  ++out.exponents_.at(slot);
  ++out.degree_;
  return out;
}

Monomial Monomial::decremented(std::size_t slot) const {
  Monomial out = *this;
  if (out.exponents_.at(slot) == 0) throw InvalidArgument("cannot decrement a zero exponent");
  --out.exponents_[slot];
  --out.degree_;
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(rank_);
  for (auto e : exponents_) h = h * 1000003u ^ std::hash<std::uint32_t>{}(e);
  return h;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Equal length words: at the first slot where exponents differ, the word with
  // the larger exponent keeps the smaller generator there and sorts first.
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t s = 0; s < ea.size(); ++s) {
    if (ea[s] != eb[s]) return ea[s] > eb[s];
  }
  return false;
}

// ---------------------------------------------------------------------------
// UeaElement

UeaElement::UeaElement(Rank n, TermMap terms) : rank_(n), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [m, c] : terms_) {
    if (m.rank() != n) throw RankMismatch("monomial rank differs from element rank");
  }
}

UeaElement UeaElement::constant(Rank n, const Scalar& c) {
  UeaElement out(n);
  out.add_term(Monomial(n), c);
  return out;
}

UeaElement UeaElement::generator(Rank n, Generator g) {
  return monomial(Monomial::of(n, g));
}

UeaElement UeaElement::monomial(const Monomial& m, const Scalar& c) {
  UeaElement out(m.rank());
  out.add_term(m, c);
  return out;
}

std::optional<std::uint32_t> UeaElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  // MonomialOrder sorts by degree first.
  return terms_.rbegin()->first.degree();
}

Scalar UeaElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void UeaElement::add_term(const Monomial& m, const Scalar& c) {
  if (m.rank() != rank_) throw RankMismatch("monomial rank differs from element rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UeaElement& UeaElement::operator+=(const UeaElement& other) {
  if (other.rank_ != rank_) throw RankMismatch("adding elements of different rank");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& other) {
  if (other.rank_ != rank_) throw RankMismatch("subtracting elements of different rank");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

UeaElement& UeaElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Straightening

namespace {

using TermMap = UeaElement::TermMap;
using TermsPtr = std::shared_ptr<const TermMap>;

struct RightMulKey {
  Monomial monomial;
  std::size_t slot;
  friend bool operator==(const RightMulKey&, const RightMulKey&) = default;
};

struct RightMulKeyHash {
  std::size_t operator()(const RightMulKey& k) const noexcept {
    return k.monomial.hash() * 31u + k.slot;
  }
};

MemoCache<RightMulKey, TermsPtr, RightMulKeyHash>& right_mul_cache() {
  static MemoCache<RightMulKey, TermsPtr, RightMulKeyHash> cache;
  static const bool registered = [] {
    detail::register_memo_clearer([] { right_mul_cache().clear(); });
    return true;
  }();
  (void)registered;
  return cache;
}

void accumulate(TermMap& out, const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// [e_x, e_y] for row-major slots x, y as (slot, coefficient) pairs.
std::vector<std::pair<std::size_t, int>> slot_bracket(Rank n, std::size_t x, std::size_t y) {
  const auto gx = Generator::from_slot(n, x);
  const auto gy = Generator::from_slot(n, y);
  std::vector<std::pair<std::size_t, int>> out;
  if (gx.col == gy.row) out.emplace_back(Generator{gx.row, gy.col}.slot(n), 1);
  if (gy.col == gx.row) out.emplace_back(Generator{gy.row, gx.col}.slot(n), -1);
  if (out.size() == 2 && out[0].first == out[1].first) out.clear();
  return out;
}

// Normal form of m * e_slot. Writes m = m' x with x its largest generator; when
// x > e_slot, m' x e = (m' e) x + m' [x, e]. The bracket term has lower degree
// and m' e is shorter, so the recursion terminates.
TermsPtr right_mul(const Monomial& m, std::size_t slot) {
  const auto last = m.last_slot();
  if (!last || *last <= slot) {
    auto out = std::make_shared<TermMap>();
    out->emplace(m.incremented(slot), Scalar(1));
    return out;
  }
  RightMulKey key{m, slot};
  auto& cache = right_mul_cache();
  if (auto hit = cache.find(key)) return *hit;

  const Monomial head = m.decremented(*last);
  auto out = std::make_shared<TermMap>();
  const TermsPtr moved = right_mul(head, slot);
  for (const auto& [mono, c] : *moved) {
    const TermsPtr tail = right_mul(mono, *last);
    for (const auto& [mono2, c2] : *tail) accumulate(*out, mono2, c * c2);
  }
  for (const auto& [gen_slot, coeff] : slot_bracket(m.rank(), *last, slot)) {
    const TermsPtr lower = right_mul(head, gen_slot);
    for (const auto& [mono2, c2] : *lower) accumulate(*out, mono2, c2 * coeff);
  }
  TermsPtr result = std::move(out);
  cache.insert(key, result);
  return result;
}

void require_same_rank(Rank a, Rank b, const char* what) {
  if (a != b) {
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(a) + " vs " +
                       std::to_string(b));
  }
}

}  // namespace

UeaElement mono_mul(const Monomial& m1, const Monomial& m2) {
  require_same_rank(m1.rank(), m2.rank(), "mono_mul");
  TermMap current;
  current.emplace(m1, Scalar(1));
  const auto exps = m2.exponents();
  for (std::size_t s = 0; s < exps.size(); ++s) {
    for (std::uint32_t k = 0; k < exps[s]; ++k) {
      TermMap next;
      for (const auto& [mono, c] : current) {
        const TermsPtr product = right_mul(mono, s);
        for (const auto& [mono2, c2] : *product) accumulate(next, mono2, c * c2);
      }
      current = std::move(next);
    }
  }
  return UeaElement(m1.rank(), std::move(current));
}

UeaElement mul(const UeaElement& a, const UeaElement& b) {
  require_same_rank(a.rank(), b.rank(), "mul");
  UeaElement out(a.rank());
  for (const auto& [m1, c1] : a.terms()) {
    for (const auto& [m2, c2] : b.terms()) {
      if (m2.is_one()) {
        out.add_term(m1, c1 * c2);
        continue;
      }
      const Scalar c = c1 * c2;
      const UeaElement product = mono_mul(m1, m2);
      for (const auto& [m, c3] : product.terms()) out.add_term(m, c * c3);
    }
  }
  return out;
}

UeaElement operator*(const UeaElement& a, const UeaElement& b) { return mul(a, b); }

UeaElement commutator(const UeaElement& a, const UeaElement& b) {
  require_same_rank(a.rank(), b.rank(), "commutator");
  return mul(a, b) - mul(b, a);
}

UeaElement power(const UeaElement& a, std::uint32_t exponent) {
  UeaElement out = UeaElement::constant(a.rank(), 1);
  for (std::uint32_t k = 0; k < exponent; ++k) out = mul(out, a);
  return out;
}

UeaElement generator_bracket(Rank n, Generator x, Generator y) {
  if (!x.valid_for(n) || !y.valid_for(n)) throw InvalidArgument("generator outside rank");
  UeaElement out(n);
  for (const auto& [slot, c] : slot_bracket(n, x.slot(n), y.slot(n))) {
    out.add_term(Monomial::of(n, Generator::from_slot(n, slot)), c);
  }
  return out;
}

std::size_t pbw_dimension(Rank n, std::uint32_t d) {
  // C(n^2 + d, d) computed incrementally; each partial product is an integer.
  const std::size_t vars = std::size_t{n} * n;
  std::size_t result = 1;
  for (std::size_t k = 1; k <= d; ++k) result = result * (vars + k) / k;
  return result;
}

std::vector<Monomial> monomials_up_to(Rank n, std::uint32_t d) {
  const std::size_t vars = std::size_t{n} * n;
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(vars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t slot,
                                                            std::uint32_t budget) {
    if (slot == vars) {
      out.push_back(Monomial::from_exponents(n, exps));
      return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
      exps[slot] = e;
      rec(slot + 1, budget - e);
    }
    exps[slot] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

std::size_t straightening_cache_size() { return right_mul_cache().size(); }

}  // namespace gl2n

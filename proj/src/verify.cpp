#include "gl2n/verify.hpp"

#include <optional>
#include <unordered_map>

#include "gl2n/errors.hpp"
#include "gl2n/expr.hpp"

namespace gl2n {

namespace {

std::string unit_label(std::size_t row, std::size_t col) {
  return "e[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

/// deg(x) <= bound, with the zero element below every bound.
bool degree_at_most(const UeaElement& x, long bound) {
  const auto d = x.degree();
  return !d || static_cast<long>(*d) <= bound;
}

nlohmann::ordered_json base_params(Rank n) {
  nlohmann::ordered_json p;
  p["n"] = n;
  return p;
}

nlohmann::ordered_json spec_params(const ModuleSpec& spec) {
  auto p = base_params(spec.rank());
  p["q"] = matrix_to_json(spec.q());
  return p;
}

/// Memoised X.m for every unit X and monomial m, so repeated actions in the
/// bracket check reuse work.
class ActionTable {
 public:
  ActionTable(const ModuleSpec& spec, Mutation mutation)
      : spec_(spec),
        mutation_(mutation),
        units_(gl2n_basis(spec.rank())),
        cache_(units_.size()) {}

  std::size_t unit_count() const noexcept { return units_.size(); }
  const Gl2nElement& unit(std::size_t u) const { return units_[u]; }

  const UeaElement& on_monomial(std::size_t u, const Monomial& m) {
    auto& table = cache_[u];
    auto it = table.find(m);
    if (it == table.end()) {
      it = table.emplace(m, act(spec_, units_[u], UeaElement::monomial(m), mutation_)).first;
    }
    return it->second;
  }

  UeaElement on_unit(std::size_t u, const UeaElement& a) {
    UeaElement out(spec_.rank());
    for (const auto& [m, c] : a.terms()) out += on_monomial(u, m) * c;
    return out;
  }

  UeaElement on_element(const Gl2nElement& x, const UeaElement& a) {
    UeaElement out(spec_.rank());
    const auto& mx = x.matrix();
    for (std::size_t r = 0; r < mx.rows(); ++r) {
      for (std::size_t c = 0; c < mx.cols(); ++c) {
        if (mx.at(r, c) != 0) out += on_unit(r * mx.cols() + c, a) * mx.at(r, c);
      }
    }
    return out;
  }

 private:
  const ModuleSpec& spec_;
  Mutation mutation_;
  std::vector<Gl2nElement> units_;
  std::vector<std::unordered_map<Monomial, UeaElement, MonomialHash>> cache_;
};

/// Row/column (1-based) of unit index u among (2n)^2 row-major units.
std::pair<std::size_t, std::size_t> unit_position(Rank n, std::size_t u) {
  const std::size_t dim = 2 * std::size_t{n};
  return {u / dim + 1, u % dim + 1};
}

}  // namespace

void VerificationReport::record(std::string input, std::string expected, std::string got) {
  ++failed;
  if (failures.size() < kMaxRecordedFailures) {
    failures.push_back({std::move(input), std::move(expected), std::move(got)});
  }
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = params;
  j["attempted"] = attempted;
  j["failed"] = failed;
  j["passed"] = passed();
  auto list = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json e;
    e["input"] = f.input;
    e["expected"] = f.expected;
    e["got"] = f.got;
    list.push_back(std::move(e));
  }
  j["failures"] = std::move(list);
  j["notes"] = notes;
  return j;
}

std::size_t binomial(std::size_t top, std::size_t bottom) {
  if (bottom > top) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), top, bottom);
  return r.get_ui();
}

VerificationReport check_bracket_axiom(const ModuleSpec& spec, std::uint32_t deg_bound,
                                       Mutation mutation) {
  spec.require_q_inv_t();
  const Rank n = spec.rank();
  VerificationReport report;
  report.suite = "bracket";
  report.params = spec_params(spec);
  report.params["deg"] = deg_bound;
  report.params["mutation"] = std::string(to_string(mutation));

  ActionTable table(spec, mutation);
  const auto monos = monomials_up_to(n, deg_bound);
  const std::size_t units = table.unit_count();
  for (std::size_t x = 0; x < units; ++x) {
    for (std::size_t y = 0; y < units; ++y) {
      const Gl2nElement xy = bracket(table.unit(x), table.unit(y));
      for (const auto& m : monos) {
        ++report.attempted;
        const UeaElement a = UeaElement::monomial(m);
        const UeaElement lhs =
            table.on_unit(x, table.on_unit(y, a)) - table.on_unit(y, table.on_unit(x, a));
        const UeaElement rhs = table.on_element(xy, a);
        if (lhs != rhs) {
          const auto [xr, xc] = unit_position(n, x);
          const auto [yr, yc] = unit_position(n, y);
          report.record("X=" + unit_label(xr, xc) + " Y=" + unit_label(yr, yc) +
                            " a=" + print_monomial(m),
                        print_normal(rhs), print_normal(lhs));
        }
      }
    }
  }
  return report;
}

VerificationReport check_glemma(Rank n, std::uint32_t m_max) {
  VerificationReport report;
  report.suite = "glemma";
  report.params = base_params(n);
  report.params["m"] = m_max;
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const UeaMatrix fm = f_power(n, m);
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (std::uint32_t j = 1; j <= n; ++j) {
        const auto a_num = RationalMatrix::unit(n, i, j);
        const auto a = UeaElement::generator(n, i, j);
        for (std::uint32_t k = 1; k <= n; ++k) {
          for (std::uint32_t l = 1; l <= n; ++l) {
            ++report.attempted;
            const auto b_num = RationalMatrix::unit(n, k, l);
            const UeaElement lhs = commutator(a, trace_product(fm, b_num));
            const UeaElement rhs = trace_product(fm, a_num * b_num - b_num * a_num);
            if (lhs != rhs) {
              report.record("A=" + unit_label(i, j) + " B=" + unit_label(k, l) +
                                " m=" + std::to_string(m),
                            print_normal(rhs), print_normal(lhs));
            }
          }
        }
      }
    }
  }
  return report;
}

VerificationReport check_gelfand_central(Rank n, std::uint32_t k_max) {
  VerificationReport report;
  report.suite = "gelfand";
  report.params = base_params(n);
  report.params["k"] = k_max;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    const UeaElement g = gelfand(n, k);
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (std::uint32_t j = 1; j <= n; ++j) {
        ++report.attempted;
        const UeaElement c = commutator(UeaElement::generator(n, i, j), g);
        if (!c.is_zero()) {
          report.record(unit_label(i, j) + " k=" + std::to_string(k), "0", print_normal(c));
        }
      }
    }
  }
  return report;
}

VerificationReport check_rel_operator(Rank n, std::uint32_t m_max, std::uint32_t deg_bound) {
  VerificationReport report;
  report.suite = "rel";
  report.params = base_params(n);
  report.params["m"] = m_max;
  report.params["deg"] = deg_bound;
  const auto monos = monomials_up_to(n, deg_bound);
  const UeaElement one = UeaElement::constant(n, 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      const UeaElement eij = UeaElement::generator(n, i, j);
      for (std::uint32_t k = 1; k <= n; ++k) {
        const auto op_j = Gl2nElement::unit(n, j, k + n);
        const auto op_i = Gl2nElement::unit(n, i, k + n);
        for (std::uint32_t m = 1; m <= m_max; ++m) {
          const UeaElement eij_m = power(eij, m);
          const UeaElement coefficient =
              i == j ? power(eij - one, m) - eij_m
                     : power(eij, m - 1) * Scalar(-static_cast<long>(m));
          for (const auto& mono : monos) {
            ++report.attempted;
            const UeaElement a = UeaElement::monomial(mono);
            const UeaElement lhs =
                act_identity(op_j, mul(eij_m, a)) - mul(eij_m, act_identity(op_j, a));
            const UeaElement rhs = mul(coefficient, act_identity(op_i, a));
            if (lhs != rhs) {
              report.record("i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                " a=" + print_monomial(mono),
                            print_normal(rhs), print_normal(lhs));
            }
          }
        }
      }
    }
  }
  return report;
}

VerificationReport check_mod_leading(Rank n, std::uint32_t deg_bound) {
  VerificationReport report;
  report.suite = "mod";
  report.params = base_params(n);
  report.params["deg"] = deg_bound;
  for (const auto& f : monomials_up_to(n, deg_bound)) {
    const long d = f.degree();
    const UeaElement fe = UeaElement::monomial(f);
    for (std::uint32_t j = 1; j <= n; ++j) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        ++report.attempted;
        UeaElement g = act_identity(Gl2nElement::unit(n, j, k + n), fe);
        if (j == k) g -= fe;
        const std::size_t slot = Generator{k, j}.slot(n);
        const std::uint32_t l = f.exponent_at(slot);
        UeaElement leading(n);
        if (l > 0) leading = UeaElement::monomial(f.decremented(slot), Scalar(-static_cast<long>(l)));
        const std::string input = "j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                  " f=" + print_monomial(f);
        if (!degree_at_most(g, d - 1)) {
          report.record(input, "degree <= " + std::to_string(d - 1), print_normal(g));
        } else if (!degree_at_most(g - leading, d - 2)) {
          report.record(input, "leading term " + print_normal(leading), print_normal(g));
        }
      }
    }
  }
  return report;
}

Reduction reduce_to_constant(const UeaElement& f) {
  if (f.is_zero()) throw InvalidArgument("reduce_to_constant: f = 0");
  const Rank n = f.rank();
  const std::uint32_t top = *f.degree();
  const Monomial* pivot = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == top) {
      pivot = &m;
      break;
    }
  }
  Reduction out{*pivot, "", f, f.coefficient(*pivot)};
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      const std::uint32_t l = pivot->exponent(Generator{i, j});
      if (l == 0) continue;
      const auto op = Gl2nElement::unit(n, j, n + i);
      std::string label = unit_label(j, n + i);
      if (i == j) label = "(" + label + "-1)";
      if (l > 1) label += "^" + std::to_string(l);
      out.word += label;
      for (std::uint32_t t = 1; t <= l; ++t) {
        UeaElement next = act_identity(op, out.result);
        if (i == j) next -= out.result;
        out.result = std::move(next);
        out.predicted *= -static_cast<long>(t);
      }
    }
  }
  return out;
}

SocleLayers socle_layers(const ModuleSpec& spec, std::uint32_t k_max) {
  spec.require_q_inv_t();
  const Rank n = spec.rank();
  const auto basis = monomials_up_to(n, k_max);
  const std::size_t dim = basis.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t t = 0; t < dim; ++t) index.emplace(basis[t], t);

  std::vector<RationalMatrix> ops;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      const auto unit = Gl2nElement::unit(n, i, n + j);
      const Scalar& q = spec.q().at(i - 1, j - 1);
      RationalMatrix op(dim, dim);
      for (std::size_t col = 0; col < dim; ++col) {
        const UeaElement a = UeaElement::monomial(basis[col]);
        const UeaElement image = act(spec, unit, a) - a * q;
        for (const auto& [m, c] : image.terms()) {
          const auto it = index.find(m);
          if (it == index.end()) {
            throw Error("socle_layers: operator left the filtration truncation");
          }
          op.at(it->second, col) = c;
        }
      }
      ops.push_back(std::move(op));
    }
  }

  // K_k is cut out by the rows of `constraints`; K_0 = 0.
  SocleLayers out;
  RationalMatrix constraints = RationalMatrix::identity(dim);
  std::size_t previous = 0;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    std::vector<RationalMatrix> blocks;
    for (const auto& op : ops) blocks.push_back(constraints * op);
    constraints = row_basis(stack_rows(blocks));
    const std::size_t kernel = dim - constraints.rows();
    out.cumulative.push_back(kernel);
    out.layers.push_back(kernel - previous);
    previous = kernel;
  }
  return out;
}

VerificationReport check_socle(const ModuleSpec& spec, std::uint32_t k_max) {
  const Rank n = spec.rank();
  const std::size_t n2 = std::size_t{n} * n;
  VerificationReport report;
  report.suite = "socle";
  report.params = spec_params(spec);
  report.params["k"] = k_max;
  const SocleLayers s = socle_layers(spec, k_max);
  bool cumulative_matches = true;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    ++report.attempted;
    const std::size_t layer = binomial(n2 + k - 2, k - 1);
    const std::size_t total = binomial(n2 + k - 1, n2);
    if (s.layers[k - 1] != layer) {
      report.record("k=" + std::to_string(k), std::to_string(layer),
                    std::to_string(s.layers[k - 1]));
    }
    if (s.cumulative[k - 1] != layer) cumulative_matches = false;
    if (s.cumulative[k - 1] != total) {
      report.notes.push_back("cumulative dimension at k=" + std::to_string(k) + " is " +
                             std::to_string(s.cumulative[k - 1]) + ", expected " +
                             std::to_string(total));
    }
  }
  report.params["layers"] = s.layers;
  report.params["cumulative"] = s.cumulative;
  report.notes.push_back(
      std::string("C(n^2+k-2, k-1) matches the k-th layer dimension") +
      (cumulative_matches ? " and the cumulative dimension" : "; the cumulative dimension is C(n^2+k-1, n^2)"));
  return report;
}

RationalMatrix singular_annihilator(const RationalMatrix& q) {
  const RationalMatrix kernel = null_space(q.transpose());
  if (kernel.cols() == 0) throw InvalidArgument("Q is nonsingular: Q^T has trivial kernel");
  const std::size_t n = q.rows();
  RationalMatrix a0(n, n);
  for (std::size_t r = 0; r < n; ++r) a0.at(r, 0) = kernel.at(r, 0);
  return a0;
}

VerificationReport check_singular_submodule(const ModuleSpec& spec, std::uint32_t deg_bound) {
  if (spec.nonsingular()) throw InvalidArgument("check_singular_submodule: Q is nonsingular");
  const Rank n = spec.rank();
  VerificationReport report;
  report.suite = "singular";
  report.params = spec_params(spec);
  report.params["deg"] = deg_bound;
  const RationalMatrix a0 = singular_annihilator(spec.q());
  const UeaElement alpha = to_uea(a0);
  report.params["alpha"] = print_normal(alpha);
  const auto monos = monomials_up_to(n, deg_bound);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      const auto unit = Gl2nElement::unit(n, i, n + j);
      const RationalMatrix pairing = spec.q() * unit.b().transpose();
      for (const auto& m : monos) {
        ++report.attempted;
        const UeaElement a = UeaElement::monomial(m);
        const UeaElement lhs = act_parabolic(spec, unit, mul(a, alpha));
        const UeaElement rhs = mul(trace_product(psi(a), pairing), alpha);
        if (lhs != rhs) {
          report.record("B=" + unit_label(i, n + j) + " a=" + print_monomial(m),
                        print_normal(rhs), print_normal(lhs));
        }
      }
    }
  }
  return report;
}

VerificationReport check_equivalence(const ModuleSpec& spec, std::uint32_t deg_bound) {
  const RationalMatrix& s = spec.require_q_inv_t();
  const Rank n = spec.rank();
  VerificationReport report;
  report.suite = "equivalence";
  report.params = spec_params(spec);
  report.params["deg"] = deg_bound;
  const auto monos = monomials_up_to(n, deg_bound);
  const auto units = gl2n_basis(n);
  for (std::size_t u = 0; u < units.size(); ++u) {
    const Gl2nElement twisted = twist(s, units[u]);
    for (const auto& m : monos) {
      ++report.attempted;
      const UeaElement a = UeaElement::monomial(m);
      const UeaElement direct = act(spec, units[u], a);
      const auto factors = monomial_factors(m);
      const UeaElement alternative = act_alternative(spec, units[u], factors);
      const UeaElement via_twist = act_identity(twisted, a);
      if (direct != alternative || direct != via_twist) {
        const auto [r, c] = unit_position(n, u);
        report.record("X=" + unit_label(r, c) + " a=" + print_monomial(m), print_normal(direct),
                      "alternative: " + print_normal(alternative) +
                          "; twist: " + print_normal(via_twist));
      }
    }
  }
  return report;
}

VerificationReport check_degree_contract(const ModuleSpec& spec, std::uint32_t deg_bound) {
  spec.require_q_inv_t();
  const Rank n = spec.rank();
  VerificationReport report;
  report.suite = "degree";
  report.params = spec_params(spec);
  report.params["deg"] = deg_bound;
  const auto monos = monomials_up_to(n, deg_bound);
  const auto units = gl2n_basis(n);
  for (std::size_t u = 0; u < units.size(); ++u) {
    const auto [r, c] = unit_position(n, u);
    const Block block = block_of_unit(n, r, c);
    const long shift = block == Block::a ? 1 : block == Block::b ? 0 : block == Block::c ? 2 : 1;
    for (const auto& m : monos) {
      ++report.attempted;
      const UeaElement a = UeaElement::monomial(m);
      const UeaElement image = act(spec, units[u], a);
      const long d = m.degree();
      const std::string input = "X=" + unit_label(r, c) + " a=" + print_monomial(m);
      if (!degree_at_most(image, d + shift)) {
        report.record(input, "degree <= " + std::to_string(d + shift), print_normal(image));
      } else if (block == Block::b) {
        const UeaElement lowered = image - a * spec.q().at(r - 1, c - n - 1);
        if (!degree_at_most(lowered, d - 1)) {
          report.record(input + " (shifted by q)", "degree <= " + std::to_string(d - 1),
                        print_normal(lowered));
        }
      }
    }
  }
  return report;
}

VerificationReport check_eigenvalues(const ModuleSpec& spec) {
  VerificationReport report;
  report.suite = "eigenvalues";
  report.params = spec_params(spec);
  const RationalMatrix got = b_eigenvalues(spec);
  const Rank n = spec.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.attempted;
      if (got.at(i, j) != spec.q().at(i, j)) {
        report.record(unit_label(i + 1, n + j + 1) + ".1", spec.q().at(i, j).get_str(),
                      got.at(i, j).get_str());
      }
    }
  }
  return report;
}

VerificationReport check_filtration_dimension(Rank n, std::uint32_t d_max) {
  VerificationReport report;
  report.suite = "filtration";
  report.params = base_params(n);
  report.params["deg"] = d_max;
  const std::size_t n2 = std::size_t{n} * n;
  for (std::uint32_t d = 0; d <= d_max; ++d) {
    ++report.attempted;
    const std::size_t got = monomials_up_to(n, d).size();
    const std::size_t expected = binomial(n2 + d, n2);
    if (got != expected) {
      report.record("d=" + std::to_string(d), std::to_string(expected), std::to_string(got));
    }
  }
  return report;
}

}  // namespace gl2n

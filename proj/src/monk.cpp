#include "peterson/monk.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "peterson/billey.hpp"
#include "peterson/errors.hpp"
#include "peterson/parallel.hpp"

namespace peterson {

namespace {

void check_index(int value, int n, const char* what) {
  if (value < 1 || value > n - 1)
    throw PreconditionError(std::string(what) + " " + std::to_string(value) + " outside {1.." +
                            std::to_string(n - 1) + "}");
}

TPolynomial restriction(const IndexSubset& a, const IndexSubset& b, EvaluationPath path) {
  return path == EvaluationPath::closed_form ? closed_form_restriction(a, b)
                                             : p_restriction(basis_permutation(a), b);
}

std::string symbol(const IndexSubset& a, bool ordinary) {
  return std::string(ordinary ? "p̌" : "p") + "[" + a.to_csv() + "]";
}

}  // namespace

Integer structure_constant(int i, const IndexSubset& a, int k) {
  const int n = a.rank();
  check_index(i, n, "generator index");
  check_index(k, n, "added index");
  if (a.contains(k))
    throw PreconditionError("k = " + std::to_string(k) + " already belongs to {" + a.to_csv() + "}");
  const IndexSubset b = a.with(k);
  if (!b.contains(i)) return 0;
  const ConsecutiveString s = string_containing(b, k);
  if (!s.contains(i)) return 0;
  const int span = s.hi - s.lo + 1;
  if (i >= k) return Integer(s.hi - i + 1) * binomial(span, k - s.lo);
  return Integer(i - s.lo + 1) * binomial(span, k - s.lo + 1);
}

TPolynomial structure_constant_by_localization(int i, const IndexSubset& a, int k,
                                               EvaluationPath path) {
  const int n = a.rank();
  check_index(i, n, "generator index");
  check_index(k, n, "added index");
  if (a.contains(k))
    throw PreconditionError("k = " + std::to_string(k) + " already belongs to {" + a.to_csv() + "}");
  const IndexSubset b = a.with(k);
  const IndexSubset single = IndexSubset(n, {i});
  const TPolynomial generator_gap = restriction(single, b, path) - restriction(single, a, path);
  const TPolynomial numerator = generator_gap * restriction(a, b, path);
  const auto quotient = exact_quotient(numerator, restriction(b, b, path));
  if (!quotient)
    throw std::logic_error("structure constant quotient is not exact for i=" + std::to_string(i) +
                           ", A={" + a.to_csv() + "}, k=" + std::to_string(k));
  return *quotient;
}

MonkExpansion monk_expand(int i, const IndexSubset& a) {
  const int n = a.rank();
  check_index(i, n, "generator index");
  MonkExpansion out{n, i, a, generator_restriction(i, a), {}, false};
  for (int k = 1; k < n; ++k) {
    if (a.contains(k)) continue;
    Integer c = structure_constant(i, a, k);
    if (c != 0) out.off_diagonal.emplace(a.with(k), std::move(c));
  }
  return out;
}

MonkExpansion ordinary_monk_expand(int i, const IndexSubset& a) {
  MonkExpansion out = monk_expand(i, a);
  out.diagonal = TPolynomial();
  out.ordinary = true;
  return out;
}

MonkReport verify_monk(int n, EvaluationPath path, unsigned workers) {
  if (n < 2) throw PreconditionError("verify_monk needs n >= 2");
  const std::vector<PetersonClass> classes = all_classes(n, path, workers);
  const std::size_t count = classes.size();
  const auto subsets = all_subsets(n);

  struct PairResult {
    std::size_t identities = 0;
    std::size_t constants = 0;
    std::vector<std::string> violations;
  };
  const std::size_t pairs = static_cast<std::size_t>(n - 1) * count;
  std::vector<PairResult> results(pairs);

  parallel_for(pairs, workers, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / count) + 1;
    const IndexSubset& a = subsets[idx % count];
    PairResult& r = results[idx];
    const PetersonClass& generator = classes[IndexSubset(n, {i}).mask()];
    const PetersonClass& base = classes[a.mask()];
    const MonkExpansion e = monk_expand(i, a);

    for (std::size_t m = 0; m < count; ++m) {
      TPolynomial lhs = generator.table()[m] * base.table()[m];
      TPolynomial rhs = e.diagonal * base.table()[m];
      for (const auto& [b, c] : e.off_diagonal) rhs += classes[b.mask()].table()[m] * c;
      ++r.identities;
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "Monk identity fails: i=" << i << " A={" << a.to_csv() << "} at w_{"
            << IndexSubset::from_mask(n, m).to_csv() << "}: " << lhs << " != " << rhs;
        r.violations.push_back(msg.str());
      }
    }

    for (int k = 1; k < n; ++k) {
      if (a.contains(k)) continue;
      const IndexSubset b = a.with(k);
      const TPolynomial gap = generator.at(b) - generator.at(a);
      const auto local = exact_quotient(gap * base.at(b), classes[b.mask()].at(b));
      const TPolynomial closed(structure_constant(i, a, k));
      ++r.constants;
      if (!local || *local != closed) {
        std::ostringstream msg;
        msg << "structure constant mismatch: i=" << i << " A={" << a.to_csv() << "} k=" << k
            << ": closed form " << closed << ", localization "
            << (local ? local->to_string() : std::string("inexact"));
        r.violations.push_back(msg.str());
      }
    }
  });

  MonkReport report;
  report.rank = n;
  for (auto& r : results) {
    report.identities_checked += r.identities;
    report.constants_checked += r.constants;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

BasisExpansion expand_in_basis(int n, std::vector<TPolynomial> table, EvaluationPath path) {
  const auto subsets = all_subsets(n);
  if (table.size() != subsets.size())
    throw std::invalid_argument("table must have 2^(n-1) entries");
  BasisExpansion out{n, {}};
  for (const IndexSubset& c : subsets) {
    const TPolynomial& residual = table[c.mask()];
    if (residual.is_zero()) continue;
    const PetersonClass basis = class_of(c, path);
    const auto coefficient = exact_quotient(residual, basis.at(c));
    if (!coefficient)
      throw std::logic_error("triangular solve: " + residual.to_string() + " is not divisible by " +
                             basis.at(c).to_string() + " at {" + c.to_csv() + "}");
    for (std::size_t m = 0; m < table.size(); ++m)
      if ((c.mask() & ~m) == 0) table[m] -= *coefficient * basis.table()[m];
    out.coefficients.emplace(c, *coefficient);
  }
  if (std::any_of(table.begin(), table.end(), [](const TPolynomial& p) { return !p.is_zero(); }))
    throw std::logic_error("triangular solve left a nonzero residual");
  return out;
}

std::vector<TPolynomial> evaluate_expansion(const BasisExpansion& expansion, EvaluationPath path) {
  const std::size_t count = std::size_t{1} << (expansion.rank - 1);
  std::vector<TPolynomial> table(count);
  for (const auto& [b, c] : expansion.coefficients) {
    const PetersonClass basis = class_of(b, path);
    for (std::size_t m = 0; m < count; ++m) table[m] += c * basis.table()[m];
  }
  return table;
}

BasisExpansion product_in_basis(const IndexSubset& a, const IndexSubset& a_prime,
                                EvaluationPath path) {
  if (a.rank() != a_prime.rank()) throw RankMismatch(a.rank(), a_prime.rank());
  const PetersonClass left = class_of(a, path);
  const PetersonClass right = class_of(a_prime, path);
  std::vector<TPolynomial> table(left.table().size());
  for (std::size_t m = 0; m < table.size(); ++m) table[m] = left.table()[m] * right.table()[m];
  return expand_in_basis(a.rank(), std::move(table), path);
}

std::string Relation::text() const {
  const MonkExpansion& e = expansion;
  const IndexSubset generator(e.rank, {e.i});
  std::string out = symbol(generator, e.ordinary) + "*" + symbol(e.cls, e.ordinary) + " = ";
  std::string rhs;
  if (!e.diagonal.is_zero()) {
    const std::string d = e.diagonal.to_string();
    rhs += (e.diagonal.is_monomial() ? d : "(" + d + ")") + "*" + symbol(e.cls, e.ordinary);
  }
  for (const auto& [b, c] : e.off_diagonal) {
    if (!rhs.empty()) rhs += " + ";
    if (c != 1) rhs += c.get_str() + "*";
    rhs += symbol(b, e.ordinary);
  }
  return out + (rhs.empty() ? "0" : rhs);
}

std::vector<Relation> presentation(int n, bool equivariant) {
  if (n < 2) throw PreconditionError("presentation needs n >= 2");
  std::vector<Relation> out;
  const auto subsets = all_subsets(n);
  out.reserve(static_cast<std::size_t>(n - 1) * subsets.size());
  for (int i = 1; i < n; ++i) {
    for (const IndexSubset& a : subsets) {
      MonkExpansion e = equivariant ? monk_expand(i, a) : ordinary_monk_expand(i, a);
      out.push_back({std::move(e), a.is_empty()});
    }
  }
  return out;
}

}  // namespace peterson

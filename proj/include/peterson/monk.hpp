#ifndef PETERSON_MONK_HPP
#define PETERSON_MONK_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "peterson/peterson_class.hpp"
#include "peterson/polynomial.hpp"
#include "peterson/subset.hpp"

namespace peterson {

/// p_i * p_{v_A} = diagonal * p_{v_A} + sum_B off_diagonal[B] * p_{v_B},
/// where every B is A plus one element.
struct MonkExpansion {
  int rank;
  int i;
  IndexSubset cls;
  TPolynomial diagonal;
  std::map<IndexSubset, Integer> off_diagonal;
  bool ordinary = false;
};

/// The structure constant c^B_{i,A} for B = A u {k}, in closed form.
/// With [T, H] the string of B containing k:
///   0                                   if i is outside [T, H],
///   (H - i + 1) * C(H - T + 1, k - T)   if k <= i <= H,
///   (i - T + 1) * C(H - T + 1, k - T + 1) if T <= i < k.
/// Throws PreconditionError if k is in A or an index is out of range.
Integer structure_constant(int i, const IndexSubset& a, int k);

/// The same constant read off restriction tables:
///   (p_i(w_B) - p_i(w_A)) * p_{v_A}(w_B) / p_{v_B}(w_B).
/// Returned as a polynomial so a non-constant or non-integral quotient is
/// visible to the caller; throws std::logic_error if the division is inexact.
TPolynomial structure_constant_by_localization(int i, const IndexSubset& a, int k,
                                               EvaluationPath path = EvaluationPath::billey);

MonkExpansion monk_expand(int i, const IndexSubset& a);

/// As monk_expand with the diagonal dropped (it is a multiple of t, which
/// vanishes in ordinary cohomology).
MonkExpansion ordinary_monk_expand(int i, const IndexSubset& a);

struct MonkReport {
  int rank = 0;
  std::size_t identities_checked = 0;  // (i, A, fixed point) triples
  std::size_t constants_checked = 0;   // (i, A, k) triples
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Evaluates p_i * p_{v_A} = RHS of monk_expand at every fixed point for
/// every i and A, and compares every closed-form structure constant with
/// the localization quotient. Exact; nothing is sampled.
MonkReport verify_monk(int n, EvaluationPath path = default_evaluation_path(), unsigned workers = 1);

/// Coefficients of a class in the basis {p_{v_A}}.
struct BasisExpansion {
  int rank;
  std::map<IndexSubset, TPolynomial> coefficients;
};

/// Back-substitution against the upper-triangular basis. Subsets are taken
/// by increasing cardinality then lexicographically; each coefficient is the
/// exact quotient residual(w_C) / p_{v_C}(w_C). An inexact quotient or a
/// nonzero final residual means `table` is not in the span and throws
/// std::logic_error.
BasisExpansion expand_in_basis(int n, std::vector<TPolynomial> table,
                               EvaluationPath path = default_evaluation_path());

/// Sum_B coefficient(B) * p_{v_B}, evaluated at every fixed point.
std::vector<TPolynomial> evaluate_expansion(const BasisExpansion& expansion,
                                            EvaluationPath path = default_evaluation_path());

/// p_{v_A} * p_{v_A'} in the basis.
BasisExpansion product_in_basis(const IndexSubset& a, const IndexSubset& a_prime,
                                EvaluationPath path = default_evaluation_path());

/// One Monk relation p_i * p_{v_A} - RHS. `trivial` marks relations that
/// hold formally once p_{v_{}} is the unit (A empty: p_i * 1 = p_i).
struct Relation {
  MonkExpansion expansion;
  bool trivial;

  bool equivariant() const { return !expansion.ordinary; }
  /// "p[3]*p[1,2,3,5,6] = 3t*p[1,2,3,5,6] + 45*p[1,2,3,4,5,6]"; the
  /// ordinary ring uses the symbol p̌.
  std::string text() const;
};

/// (n-1) * 2^{n-1} relations, ordered by i then by subset.
std::vector<Relation> presentation(int n, bool equivariant);

}  // namespace peterson

#endif  // PETERSON_MONK_HPP

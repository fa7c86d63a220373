#ifndef PETERSON_PETERSON_CLASS_HPP
#define PETERSON_PETERSON_CLASS_HPP

#include <optional>
#include <span>
#include <vector>

#include "peterson/permutation.hpp"
#include "peterson/polynomial.hpp"
#include "peterson/subset.hpp"

namespace peterson {

/// How class restrictions are evaluated. The closed forms are the fast path;
/// the Billey dynamic programme is the reference.
enum class EvaluationPath { closed_form, billey };

/// closed_form, unless the library was built with PETERSON_ORACLE_ONLY.
EvaluationPath default_evaluation_path();

/// A Peterson Schubert class, held as its restriction to every fixed point
/// w_B. Entries are stored for all 2^{n-1} subsets, zeros included, indexed
/// by subset mask.
class PetersonClass {
 public:
  /// `index` is nullopt for the class p_w of an arbitrary permutation.
  PetersonClass(int n, std::optional<IndexSubset> index, std::vector<TPolynomial> table);

  int rank() const { return rank_; }
  bool is_generic() const { return !index_.has_value(); }
  /// Throws std::logic_error for a generic class.
  const IndexSubset& index() const;

  const TPolynomial& at(const IndexSubset& b) const;
  std::span<const TPolynomial> table() const { return table_; }

  /// Zero at every w_B with B not containing `a`, and nonzero at w_A.
  bool is_upper_triangular_for(const IndexSubset& a) const;

  bool same_table(const PetersonClass& other) const { return table_ == other.table_; }

 private:
  int rank_;
  std::optional<IndexSubset> index_;
  std::vector<TPolynomial> table_;
};

/// The basis class p_{v_A}, with every restriction p_{v_A}(w_B) filled in.
PetersonClass class_of(const IndexSubset& a, EvaluationPath path = default_evaluation_path(),
                       unsigned workers = 1);

/// All basis classes of rank n, indexed by subset mask.
std::vector<PetersonClass> all_classes(int n, EvaluationPath path = default_evaluation_path(),
                                       unsigned workers = 1);

/// The class p_w of an arbitrary permutation, through Billey's formula.
PetersonClass class_of_permutation(const Permutation& w, unsigned workers = 1);

/// p_{v_A}(w_B) in closed form: zero unless A is inside B; otherwise
///   prod over strings [a, b] of A of C(H_B(a) - a + 1, b - a + 1)
///   * prod over j in A of (j - T_B(j) + 1) * t^{|A|}.
/// The binomial counts the reduced subwords of fixed_point_word(B) spelling
/// the string's increasing word; the product is the common value of every
/// summand.
TPolynomial closed_form_restriction(const IndexSubset& a, const IndexSubset& b);

/// p_{v_A}(w_A) = prod over j in A of (j - T_A(j) + 1) * t^{|A|}.
TPolynomial diagonal_value(const IndexSubset& a);

/// p_i(w_A): zero if i is not in A, else (H_A(i) - i + 1)(i - T_A(i) + 1) t.
TPolynomial generator_restriction(int i, const IndexSubset& a);

/// p_{v_A}(w_B) for B = [lo, hi] a single string and A = B minus {k}:
/// ((hi-lo+1)! / (k-lo+1)) * C(hi-lo+1, k-lo) * t^{hi-lo}.
/// Throws PreconditionError otherwise.
TPolynomial single_string_restriction(const IndexSubset& a, const IndexSubset& b);

/// Checks p_{v_{B u B'}} = p_{v_B} p_{v_B'} entry by entry. Requires B and
/// B' disjoint with no j in B, j' in B' at distance 1 (PreconditionError).
bool disjoint_product_check(const IndexSubset& b, const IndexSubset& b_prime,
                            EvaluationPath path = EvaluationPath::billey);

/// Whether p_{v_A}(w_A) divides p_w(w_A). Throws PreconditionError unless
/// p_w is upper triangular for A.
bool minimality_check(const Permutation& w, const IndexSubset& a);

/// Every w in S_n whose class p_w has exactly the table of p_{v_A}, sorted.
/// Only permutations of length |A| below w_A in Bruhat order can qualify
/// (degree and nonvanishing at w_A), so only those are scanned.
std::vector<Permutation> preimage_classes(const IndexSubset& a);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace peterson

#endif  // PETERSON_PETERSON_CLASS_HPP

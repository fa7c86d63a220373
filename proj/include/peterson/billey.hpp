#ifndef PETERSON_BILLEY_HPP
#define PETERSON_BILLEY_HPP

#include <cstddef>
#include <vector>

#include "peterson/permutation.hpp"
#include "peterson/polynomial.hpp"
#include "peterson/subset.hpp"

namespace peterson {

/// The positive root t_j - t_k (j < k) attached to one position of a
/// reduced word: s_{b_1} ... s_{b_{i-1}} (t_{b_i} - t_{b_i + 1}).
struct RootFactor {
  int j;
  int k;
  std::size_t position;  // 1-based

  RootPolynomial as_polynomial(int n) const { return RootPolynomial::root(n, j, k); }
  /// (k - j) t
  TPolynomial projected() const { return TPolynomial::monomial(k - j, 1); }
  friend bool operator==(const RootFactor&, const RootFactor&) = default;
};

/// Root factors for every position of one reduced word, computed from a
/// single left-to-right sweep of prefix products.
class WordRoots {
 public:
  /// Throws PreconditionError if `word` is not reduced.
  explicit WordRoots(const Word& word);

  const Word& word() const { return word_; }
  std::size_t size() const { return factors_.size(); }
  /// 1-based.
  const RootFactor& at(std::size_t position) const { return factors_.at(position - 1); }

 private:
  Word word_;
  std::vector<RootFactor> factors_;
};

/// Throws std::out_of_range unless 1 <= position <= |word|.
RootFactor root_factor(std::size_t position, const Word& word);

/// Every strictly increasing set of 1-based positions whose letters spell a
/// reduced word for v, in lexicographic order.
std::vector<std::vector<std::size_t>> subword_embeddings(const Permutation& v, const Word& word);

/// Number of reduced subwords of `word` equal to v, without materializing them.
Integer embedding_count(const Permutation& v, const Word& word);

/// sigma_v(w) against a caller-supplied reduced word of w.
RootPolynomial sigma_restriction(const Permutation& v, const Word& reduced_word_of_w);
/// sigma_v(w) against canonical_reduced_word(w).
RootPolynomial sigma_restriction(const Permutation& v, const Permutation& w);

/// Sum over embeddings of the projected root factors. Every summand has
/// degree l(v), so this is an integer multiple of t^{l(v)}.
TPolynomial projected_restriction(const Permutation& v, const Word& reduced_word_of_w);
TPolynomial projected_restriction(const Permutation& v, const Permutation& w);

/// p_v(w_B), evaluated against fixed_point_word(b).
TPolynomial p_restriction(const Permutation& v, const IndexSubset& b);

}  // namespace peterson

#endif  // PETERSON_BILLEY_HPP

#include "peterson/billey.hpp"

#include <functional>
#include <stdexcept>

#include "peterson/errors.hpp"
#include "peterson/subword.hpp"

namespace peterson {

WordRoots::WordRoots(const Word& word) : word_(word) {
  Permutation prefix = Permutation::identity(word.rank());
  factors_.reserve(word.size());
  for (std::size_t pos = 1; pos <= word.size(); ++pos) {
    const int b = word.letter(pos);
    if (prefix.has_right_descent(b))
      throw PreconditionError("word " + word.to_string() + " is not reduced");
    factors_.push_back({prefix(b), prefix(b + 1), pos});
    prefix = prefix.times_simple(b);
  }
}

RootFactor root_factor(std::size_t position, const Word& word) {
  if (position < 1 || position > word.size())
    throw std::out_of_range("position " + std::to_string(position) + " outside word of length " +
                            std::to_string(word.size()));
  Permutation prefix = Permutation::identity(word.rank());
  for (std::size_t pos = 1; pos < position; ++pos) prefix = prefix.times_simple(word.letter(pos));
  const int b = word.letter(position);
  int j = prefix(b);
  int k = prefix(b + 1);
  if (j > k) throw PreconditionError("word " + word.to_string() + " is not reduced");
  return {j, k, position};
}

std::vector<std::vector<std::size_t>> subword_embeddings(const Permutation& v, const Word& word) {
  if (v.rank() != word.rank()) throw RankMismatch(v.rank(), word.rank());
  if (!is_reduced(word)) throw PreconditionError("word " + word.to_string() + " is not reduced");

  const std::size_t goal = static_cast<std::size_t>(v.length());
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;

  std::function<void(std::size_t, const Permutation&)> descend = [&](std::size_t next,
                                                                    const Permutation& u) {
    if (chosen.size() == goal) {
      if (u == v) out.push_back(chosen);
      return;
    }
    for (std::size_t pos = next; pos + (goal - chosen.size()) <= word.size() + 1; ++pos) {
      const int b = word.letter(pos);
      if (u.has_right_descent(b)) continue;
      Permutation grown = u.times_simple(b);
      if (!is_weak_prefix(grown, v)) continue;
      chosen.push_back(pos);
      descend(pos + 1, grown);
      chosen.pop_back();
    }
  };
  descend(1, Permutation::identity(v.rank()));
  return out;
}

Integer embedding_count(const Permutation& v, const Word& word) {
  if (!is_reduced(word)) throw PreconditionError("word " + word.to_string() + " is not reduced");
  return accumulate_reduced_subwords(v, word, Integer(0), Integer(1),
                                     [](const Integer& acc, std::size_t) { return acc; });
}

RootPolynomial sigma_restriction(const Permutation& v, const Word& reduced_word_of_w) {
  const int n = reduced_word_of_w.rank();
  if (v.rank() != n) throw RankMismatch(v.rank(), n);
  const WordRoots roots(reduced_word_of_w);
  std::vector<RootPolynomial> factors;
  factors.reserve(roots.size());
  for (std::size_t pos = 1; pos <= roots.size(); ++pos) factors.push_back(roots.at(pos).as_polynomial(n));
  return accumulate_reduced_subwords(
      v, reduced_word_of_w, RootPolynomial(n), RootPolynomial::constant(n, 1),
      [&](const RootPolynomial& acc, std::size_t pos) { return acc * factors[pos - 1]; });
}

RootPolynomial sigma_restriction(const Permutation& v, const Permutation& w) {
  if (v.rank() != w.rank()) throw RankMismatch(v.rank(), w.rank());
  return sigma_restriction(v, canonical_reduced_word(w));
}

TPolynomial projected_restriction(const Permutation& v, const Word& reduced_word_of_w) {
  if (v.rank() != reduced_word_of_w.rank()) throw RankMismatch(v.rank(), reduced_word_of_w.rank());
  const WordRoots roots(reduced_word_of_w);
  const Integer total = accumulate_reduced_subwords(
      v, reduced_word_of_w, Integer(0), Integer(1), [&](const Integer& acc, std::size_t pos) {
        const RootFactor& f = roots.at(pos);
        return Integer(acc * (f.k - f.j));
      });
  return TPolynomial::monomial(total, v.length());
}

TPolynomial projected_restriction(const Permutation& v, const Permutation& w) {
  if (v.rank() != w.rank()) throw RankMismatch(v.rank(), w.rank());
  return projected_restriction(v, canonical_reduced_word(w));
}

TPolynomial p_restriction(const Permutation& v, const IndexSubset& b) {
  return projected_restriction(v, fixed_point_word(b));
}

}  // namespace peterson

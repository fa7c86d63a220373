#ifndef PETERSON_SUBWORD_HPP
#define PETERSON_SUBWORD_HPP

#include <cstddef>
#include <unordered_map>
#include <utility>

#include "peterson/errors.hpp"
#include "peterson/permutation.hpp"

namespace peterson {

/// Sums a weight over every reduced subword of `word` that evaluates to
/// `target`.
///
/// Dynamic programme over word positions. A state is the product u of the
/// letters chosen so far; only states that are prefixes of a reduced word of
/// `target` are kept (l(u) + l(u^{-1} target) == l(target)), so the state set
/// is bounded by the weak-order interval below `target` instead of the
/// 2^|word| subsets. `extend(acc, position)` multiplies an accumulated weight
/// by the factor contributed by choosing 1-based `position`.
template <class Value, class Extend>
Value accumulate_reduced_subwords(const Permutation& target, const Word& word,
                                  const Value& zero, const Value& one,
                                  Extend&& extend) {
  if (target.rank() != word.rank()) throw RankMismatch(target.rank(), word.rank());

  const int goal = target.length();
  const std::size_t total = word.size();
  std::unordered_map<Permutation, Value> states;
  states.emplace(Permutation::identity(target.rank()), one);

  for (std::size_t pos = 1; pos <= total; ++pos) {
    const int b = word.letter(pos);
    const std::size_t remaining_after = total - pos;
    std::unordered_map<Permutation, Value> next;
    next.reserve(states.size() * 2);
    for (auto& [u, acc] : states) {
      const int len = u.length();
      // Skipping this position is only useful if the rest of the word is long enough.
      if (static_cast<std::size_t>(goal - len) <= remaining_after) {
        auto [it, inserted] = next.try_emplace(u, acc);
        if (!inserted) it->second += acc;
      }
      if (len < goal && !u.has_right_descent(b)) {
        Permutation grown = u.times_simple(b);
        if (is_weak_prefix(grown, target)) {
          Value contribution = extend(acc, pos);
          auto [it, inserted] = next.try_emplace(std::move(grown), std::move(contribution));
          if (!inserted) it->second += contribution;
        }
      }
    }
    states = std::move(next);
  }

  auto found = states.find(target);
  return found == states.end() ? zero : found->second;
}

}  // namespace peterson

#endif  // PETERSON_SUBWORD_HPP

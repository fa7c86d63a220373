#include "peterson/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "peterson/errors.hpp"
#include "peterson/subword.hpp"

namespace peterson {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = rank();
  if (n < 1) throw std::invalid_argument("permutation must have rank >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : entries_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a bijection of {1.." + std::to_string(n) +
                                  "}: " + to_string());
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have rank >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e), true);
}

Permutation Permutation::simple_transposition(int n, int i) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("simple transposition index " + std::to_string(i) +
                                " out of range for S_" + std::to_string(n));
  return identity(n).times_simple(i);
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have rank >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(e), true);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv), true);
}

int Permutation::length() const {
  int count = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i] > entries_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::times_simple(int i) const {
  std::vector<int> e = entries_;
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
  return Permutation(std::move(e), true);
}

Permutation Permutation::simple_times(int i) const {
  std::vector<int> e = entries_;
  for (int& x : e) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return Permutation(std::move(e), true);
}

bool Permutation::has_left_descent(int i) const {
  // s_i w is shorter iff i+1 appears before i in one-line notation.
  for (int x : entries_) {
    if (x == i) return false;
    if (x == i + 1) return true;
  }
  return false;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

Permutation compose(const Permutation& u, const Permutation& w) {
  if (u.rank() != w.rank()) throw RankMismatch(u.rank(), w.rank());
  std::vector<int> e(static_cast<std::size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) e[static_cast<std::size_t>(i - 1)] = u(w(i));
  return Permutation(std::move(e));
}

Word::Word(int n, std::vector<int> letters) : rank_(n), letters_(std::move(letters)) {
  if (n < 1) throw std::invalid_argument("word rank must be >= 1");
  for (int b : letters_)
    if (b < 1 || b >= n)
      throw std::invalid_argument("letter " + std::to_string(b) + " out of range for S_" +
                                  std::to_string(n));
}

std::string Word::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? "," : "") << letters_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& word) { return os << word.to_string(); }

Permutation evaluate(const Word& word) {
  Permutation w = Permutation::identity(word.rank());
  for (int b : word.letters()) w = w.times_simple(b);
  return w;
}

bool is_reduced(const Word& word) {
  Permutation w = Permutation::identity(word.rank());
  for (int b : word.letters()) {
    if (w.has_right_descent(b)) return false;
    w = w.times_simple(b);
  }
  return true;
}

Word canonical_reduced_word(const Permutation& w) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(w.length()));
  Permutation rest = w;
  while (!rest.is_identity()) {
    int i = 1;
    while (!rest.has_left_descent(i)) ++i;
    letters.push_back(i);
    rest = rest.simple_times(i);
  }
  return Word(w.rank(), std::move(letters));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.rank() != w.rank()) throw RankMismatch(u.rank(), w.rank());
  if (u.length() > w.length()) return false;
  return accumulate_reduced_subwords(u, canonical_reduced_word(w), false, true,
                                     [](bool acc, std::size_t) { return acc; });
}

bool is_weak_prefix(const Permutation& u, const Permutation& w) {
  return u.length() + compose(u.inverse(), w).length() == w.length();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<Permutation> permutations_of_length(int n, int len) {
  if (len < 0 || len > n * (n - 1) / 2) return {};
  std::set<Permutation> level{Permutation::identity(n)};
  for (int l = 0; l < len; ++l) {
    std::set<Permutation> next;
    for (const auto& u : level)
      for (int i = 1; i < n; ++i)
        if (!u.has_right_descent(i)) next.insert(u.times_simple(i));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace peterson

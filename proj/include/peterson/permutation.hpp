#ifndef PETERSON_PERMUTATION_HPP
#define PETERSON_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace peterson {

/// An element of the symmetric group S_n in one-line notation.
///
/// Indices are 1-based: `w(i)` is the image of i. Products compose as
/// functions, so `compose(u, w)(i) == u(w(i))`, and a word (b_1, ..., b_k)
/// evaluates to s_{b_1} s_{b_2} ... s_{b_k}.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `one_line` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n);
  static Permutation simple_transposition(int n, int i);
  static Permutation longest(int n);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> one_line() const { return entries_; }

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;

  // w * s_i: swaps the entries in positions i and i+1.
  Permutation times_simple(int i) const;
  // s_i * w: swaps the values i and i+1.
  Permutation simple_times(int i) const;

  // l(w s_i) < l(w)
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  // l(s_i w) < l(w)
  bool has_left_descent(int i) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const;

 private:
  explicit Permutation(std::vector<int> one_line, bool /*trusted*/)
      : entries_(std::move(one_line)) {}

  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

Permutation compose(const Permutation& u, const Permutation& w);
inline int length(const Permutation& w) { return w.length(); }

/// A sequence of simple-transposition indices, each in {1..n-1}.
class Word {
 public:
  Word(int n, std::vector<int> letters);
  Word(int n, std::initializer_list<int> letters)
      : Word(n, std::vector<int>(letters)) {}

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// 1-based, matching positions in a reduced word.
  int letter(std::size_t position) const { return letters_[position - 1]; }
  std::span<const int> letters() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string() const;

 private:
  int rank_;
  std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& word);

Permutation evaluate(const Word& word);
bool is_reduced(const Word& word);

/// The lexicographically smallest reduced word, built by repeatedly
/// extracting the smallest left descent.
Word canonical_reduced_word(const Permutation& w);

/// Bruhat order via the subword criterion against canonical_reduced_word(w).
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// True iff u is a prefix of some reduced word of w, i.e.
/// l(u) + l(u^{-1} w) == l(w) (left weak order).
bool is_weak_prefix(const Permutation& u, const Permutation& w);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Elements of S_n of length exactly `len`, sorted.
std::vector<Permutation> permutations_of_length(int n, int len);

}  // namespace peterson

template <>
struct std::hash<peterson::Permutation> {
  std::size_t operator()(const peterson::Permutation& w) const noexcept {
    std::size_t h = 0;
    for (int x : w.one_line()) h = h * 31u + static_cast<std::size_t>(x);
    return h;
  }
};

#endif  // PETERSON_PERMUTATION_HPP

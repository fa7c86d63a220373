#ifndef PETERSON_ERRORS_HPP
#define PETERSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace peterson {

// Two operands live in different symmetric groups (or polynomial rings).
class RankMismatch : public std::invalid_argument {
 public:
  RankMismatch(int lhs, int rhs)
      : std::invalid_argument("rank mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  int lhs() const { return lhs_; }
  int rhs() const { return rhs_; }

 private:
  int lhs_;
  int rhs_;
};

// The permutation violates w^{-1}(i) <= w^{-1}(i+1) + 1 at index().
class NotAPetersonFixedPoint : public std::invalid_argument {
 public:
  explicit NotAPetersonFixedPoint(int index)
      : std::invalid_argument("not a Peterson fixed point: condition fails at i = " +
                              std::to_string(index)),
        index_(index) {}

  int index() const { return index_; }

 private:
  int index_;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace peterson

#endif  // PETERSON_ERRORS_HPP

#ifndef PETERSON_POLYNOMIAL_HPP
#define PETERSON_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace peterson {

using Integer = mpz_class;

/// Exact polynomial in the single variable t with integer coefficients.
/// Zero coefficients are never stored.
class TPolynomial {
 public:
  TPolynomial() = default;
  explicit TPolynomial(const Integer& constant);
  explicit TPolynomial(long constant) : TPolynomial(Integer(constant)) {}

  static TPolynomial monomial(const Integer& coefficient, int degree);
  static TPolynomial t() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Integer coefficient(int degree) const;
  Integer leading_coefficient() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<int, Integer>& terms() const { return terms_; }

  TPolynomial& operator+=(const TPolynomial& rhs);
  TPolynomial& operator-=(const TPolynomial& rhs);
  TPolynomial& operator*=(const TPolynomial& rhs);
  TPolynomial& operator*=(const Integer& rhs);
  TPolynomial operator-() const;

  friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
  friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
  friend TPolynomial operator*(TPolynomial a, const TPolynomial& b) { return a *= b; }
  friend TPolynomial operator*(TPolynomial a, const Integer& b) { return a *= b; }
  friend TPolynomial operator*(const Integer& a, TPolynomial b) { return b *= a; }
  friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

  /// "0", "45", "t", "3t", "12t^5", "2t^2 + 3t - 1": descending degree.
  std::string to_string() const;

 private:
  std::map<int, Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const TPolynomial& p);

/// p / d when the quotient has integer coefficients, otherwise nullopt.
/// Throws PreconditionError if d is zero.
std::optional<TPolynomial> exact_quotient(const TPolynomial& p, const TPolynomial& d);
/// True iff p = d * q for some q in Z[t]. Throws PreconditionError if d is zero.
bool divides(const TPolynomial& d, const TPolynomial& p);

/// Exponent vector of a monomial in t_1..t_n.
using Exponent = std::vector<int>;

// Total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Exact polynomial in t_1, ..., t_n with integer coefficients.
class RootPolynomial {
 public:
  using Terms = std::map<Exponent, Integer, GradedLex>;

  explicit RootPolynomial(int n);  // zero

  static RootPolynomial constant(int n, const Integer& c);
  static RootPolynomial variable(int n, int i);
  /// t_j - t_k
  static RootPolynomial root(int n, int j, int k);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  const Terms& terms() const { return terms_; }
  Integer coefficient(const Exponent& e) const;

  RootPolynomial& operator+=(const RootPolynomial& rhs);
  RootPolynomial& operator-=(const RootPolynomial& rhs);
  RootPolynomial& operator*=(const RootPolynomial& rhs);
  RootPolynomial operator-() const;

  friend RootPolynomial operator+(RootPolynomial a, const RootPolynomial& b) { return a += b; }
  friend RootPolynomial operator-(RootPolynomial a, const RootPolynomial& b) { return a -= b; }
  friend RootPolynomial operator*(RootPolynomial a, const RootPolynomial& b) { return a *= b; }
  friend bool operator==(const RootPolynomial&, const RootPolynomial&) = default;

  /// Terms in descending graded-lex order, e.g. "t1^2 - t1*t3 + 2".
  std::string to_string(const std::string& variable = "t") const;

 private:
  void check(const RootPolynomial& rhs) const;
  void add_term(const Exponent& e, const Integer& c);

  int rank_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const RootPolynomial& p);

/// The ring map Z[t_1..t_n] -> Z[t], t_i -> (n - i + 1) t.
TPolynomial project_s1(const RootPolynomial& p);

/// Rewrites a translation-invariant polynomial (one that is a polynomial in
/// the differences t_j - t_k) in the simple roots a_i = t_i - t_{i+1},
/// by substituting t_i = a_i + ... + a_{n-1} and t_n = 0. The result has
/// n - 1 variables.
RootPolynomial to_simple_root_basis(const RootPolynomial& p);

bool has_nonnegative_coefficients(const RootPolynomial& p);
bool has_nonnegative_coefficients(const TPolynomial& p);

}  // namespace peterson

#endif  // PETERSON_POLYNOMIAL_HPP

#include "peterson/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "peterson/errors.hpp"

namespace peterson {

namespace {

// Appends "c*m" with sign handling; `monomial` is empty for constants.
void append_term(std::string& out, const Integer& c, const std::string& monomial,
                 const std::string& separator) {
  const bool negative = sgn(c) < 0;
  const Integer magnitude = abs(c);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += magnitude.get_str();
  } else {
    if (magnitude != 1) out += magnitude.get_str() + separator;
    out += monomial;
  }
}

}  // namespace

TPolynomial::TPolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

TPolynomial TPolynomial::monomial(const Integer& coefficient, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  TPolynomial p;
  if (coefficient != 0) p.terms_.emplace(degree, coefficient);
  return p;
}

Integer TPolynomial::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer TPolynomial::leading_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.rbegin()->second;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& rhs) {
  for (const auto& [d, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& rhs) { return *this += -rhs; }

TPolynomial& TPolynomial::operator*=(const TPolynomial& rhs) {
  std::map<int, Integer> product;
  for (const auto& [da, ca] : terms_)
    for (const auto& [db, cb] : rhs.terms_) product[da + db] += ca * cb;
  std::erase_if(product, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(product);
  return *this;
}

TPolynomial& TPolynomial::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= rhs;
  return *this;
}

TPolynomial TPolynomial::operator-() const {
  TPolynomial out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

std::string TPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int d = it->first;
    std::string mono;
    if (d == 1)
      mono = "t";
    else if (d > 1)
      mono = "t^" + std::to_string(d);
    append_term(out, it->second, mono, "");
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TPolynomial& p) { return os << p.to_string(); }

std::optional<TPolynomial> exact_quotient(const TPolynomial& p, const TPolynomial& d) {
  if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
  TPolynomial remainder = p;
  TPolynomial quotient;
  const int dd = d.degree();
  const Integer lead = d.leading_coefficient();
  while (!remainder.is_zero()) {
    const int shift = remainder.degree() - dd;
    if (shift < 0) return std::nullopt;
    const Integer top = remainder.leading_coefficient();
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    const TPolynomial step = TPolynomial::monomial(Integer(top / lead), shift);
    quotient += step;
    remainder -= step * d;
  }
  return quotient;
}

bool divides(const TPolynomial& d, const TPolynomial& p) { return exact_quotient(p, d).has_value(); }

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

RootPolynomial::RootPolynomial(int n) : rank_(n) {
  if (n < 0) throw std::invalid_argument("negative variable count");
}

RootPolynomial RootPolynomial::constant(int n, const Integer& c) {
  RootPolynomial p(n);
  p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
  return p;
}

RootPolynomial RootPolynomial::variable(int n, int i) {
  if (i < 1 || i > n)
    throw std::invalid_argument("variable t" + std::to_string(i) + " outside t1..t" +
                                std::to_string(n));
  RootPolynomial p(n);
  Exponent e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add_term(e, 1);
  return p;
}

RootPolynomial RootPolynomial::root(int n, int j, int k) { return variable(n, j) - variable(n, k); }

int RootPolynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponent& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

Integer RootPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void RootPolynomial::check(const RootPolynomial& rhs) const {
  if (rank_ != rhs.rank_) throw RankMismatch(rank_, rhs.rank_);
}

void RootPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RootPolynomial& RootPolynomial::operator+=(const RootPolynomial& rhs) {
  check(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

RootPolynomial& RootPolynomial::operator-=(const RootPolynomial& rhs) {
  check(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

RootPolynomial& RootPolynomial::operator*=(const RootPolynomial& rhs) {
  check(rhs);
  RootPolynomial product(rank_);
  Exponent e(static_cast<std::size_t>(rank_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

RootPolynomial RootPolynomial::operator-() const {
  RootPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string RootPolynomial::to_string(const std::string& variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t v = 0; v < it->first.size(); ++v) {
      const int power = it->first[v];
      if (power == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable + std::to_string(v + 1);
      if (power > 1) mono += '^' + std::to_string(power);
    }
    append_term(out, it->second, mono, "*");
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RootPolynomial& p) { return os << p.to_string(); }

TPolynomial project_s1(const RootPolynomial& p) {
  const int n = p.rank();
  TPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    Integer coefficient = c;
    int degree = 0;
    for (int i = 1; i <= n; ++i) {
      const int power = e[static_cast<std::size_t>(i - 1)];
      if (power == 0) continue;
      Integer weight;
      mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(n - i + 1),
                    static_cast<unsigned long>(power));
      coefficient *= weight;
      degree += power;
    }
    out += TPolynomial::monomial(coefficient, degree);
  }
  return out;
}

RootPolynomial to_simple_root_basis(const RootPolynomial& p) {
  const int n = p.rank();
  const int m = std::max(n - 1, 0);
  // t_i -> a_i + ... + a_{n-1}; t_n -> 0.
  std::vector<RootPolynomial> image;
  image.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    RootPolynomial sum(m);
    for (int j = i; j <= n - 1; ++j) sum += RootPolynomial::variable(m, j);
    image.push_back(std::move(sum));
  }
  RootPolynomial out(m);
  for (const auto& [e, c] : p.terms()) {
    RootPolynomial term = RootPolynomial::constant(m, c);
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i - 1)]; ++k)
        term *= image[static_cast<std::size_t>(i - 1)];
    out += term;
  }
  return out;
}

bool has_nonnegative_coefficients(const RootPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& kv) { return sgn(kv.second) >= 0; });
}

bool has_nonnegative_coefficients(const TPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& kv) { return sgn(kv.second) >= 0; });
}

}  // namespace peterson

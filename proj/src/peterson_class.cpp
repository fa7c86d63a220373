#include "peterson/peterson_class.hpp"

#include <algorithm>
#include <stdexcept>

#include "peterson/billey.hpp"
#include "peterson/errors.hpp"
#include "peterson/parallel.hpp"

namespace peterson {

namespace {

std::size_t table_size(int n) {
  if (n < 1 || n - 1 > 30)
    throw std::invalid_argument("restriction tables need 1 <= n <= 31, got " + std::to_string(n));
  return std::size_t{1} << (n - 1);
}

}  // namespace

EvaluationPath default_evaluation_path() {
#ifdef PETERSON_ORACLE_ONLY
  return EvaluationPath::billey;
#else
  return EvaluationPath::closed_form;
#endif
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("negative factorial");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

PetersonClass::PetersonClass(int n, std::optional<IndexSubset> index,
                             std::vector<TPolynomial> table)
    : rank_(n), index_(std::move(index)), table_(std::move(table)) {
  if (table_.size() != table_size(n))
    throw std::invalid_argument("restriction table must have 2^(n-1) entries");
  if (index_ && index_->rank() != n) throw RankMismatch(n, index_->rank());
}

const IndexSubset& PetersonClass::index() const {
  if (!index_) throw std::logic_error("generic class has no index subset");
  return *index_;
}

const TPolynomial& PetersonClass::at(const IndexSubset& b) const {
  if (b.rank() != rank_) throw RankMismatch(rank_, b.rank());
  return table_[b.mask()];
}

bool PetersonClass::is_upper_triangular_for(const IndexSubset& a) const {
  if (a.rank() != rank_) throw RankMismatch(rank_, a.rank());
  for (std::size_t m = 0; m < table_.size(); ++m) {
    const bool above = (a.mask() & ~m) == 0;
    if (!above && !table_[m].is_zero()) return false;
  }
  return !table_[a.mask()].is_zero();
}

TPolynomial closed_form_restriction(const IndexSubset& a, const IndexSubset& b) {
  if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
  if (!a.is_subset_of(b)) return {};
  Integer coefficient = 1;
  for (const auto& s : decompose_strings(a)) {
    const ConsecutiveString host = string_containing(b, s.lo);
    coefficient *= binomial(host.hi - s.lo + 1, s.size());
    for (int j = s.lo; j <= s.hi; ++j) coefficient *= j - host.lo + 1;
  }
  return TPolynomial::monomial(coefficient, a.size());
}

TPolynomial diagonal_value(const IndexSubset& a) {
  Integer coefficient = 1;
  for (int j : a.members()) coefficient *= j - tail(a, j) + 1;
  return TPolynomial::monomial(coefficient, a.size());
}

TPolynomial generator_restriction(int i, const IndexSubset& a) {
  if (i < 1 || i > a.rank() - 1)
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside {1.." +
                                std::to_string(a.rank() - 1) + "}");
  if (!a.contains(i)) return {};
  const ConsecutiveString s = string_containing(a, i);
  return TPolynomial::monomial((s.hi - i + 1) * (i - s.lo + 1), 1);
}

TPolynomial single_string_restriction(const IndexSubset& a, const IndexSubset& b) {
  if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
  const auto strings = decompose_strings(b);
  if (strings.size() != 1) throw PreconditionError("B = {" + b.to_csv() + "} is not a single consecutive string");
  if (!a.is_subset_of(b) || a.size() + 1 != b.size())
    throw PreconditionError("A = {" + a.to_csv() + "} is not B minus one element");
  const int lo = strings.front().lo;
  const int hi = strings.front().hi;
  int k = lo;
  while (a.contains(k)) ++k;
  const Integer coefficient =
      factorial(hi - lo + 1) / (k - lo + 1) * binomial(hi - lo + 1, k - lo);
  return TPolynomial::monomial(coefficient, hi - lo);
}

PetersonClass class_of(const IndexSubset& a, EvaluationPath path, unsigned workers) {
  const int n = a.rank();
  std::vector<TPolynomial> table(table_size(n));
  const Permutation v = basis_permutation(a);
  parallel_for(table.size(), workers, [&](std::size_t m) {
    const IndexSubset b = IndexSubset::from_mask(n, m);
    table[m] = path == EvaluationPath::closed_form ? closed_form_restriction(a, b)
                                                   : p_restriction(v, b);
  });
  return PetersonClass(n, a, std::move(table));
}

std::vector<PetersonClass> all_classes(int n, EvaluationPath path, unsigned workers) {
  const std::size_t count = table_size(n);
  std::vector<std::optional<PetersonClass>> slots(count);
  parallel_for(count, workers, [&](std::size_t m) {
    slots[m].emplace(class_of(IndexSubset::from_mask(n, m), path, 1));
  });
  std::vector<PetersonClass> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

PetersonClass class_of_permutation(const Permutation& w, unsigned workers) {
  const int n = w.rank();
  std::vector<TPolynomial> table(table_size(n));
  parallel_for(table.size(), workers, [&](std::size_t m) {
    table[m] = p_restriction(w, IndexSubset::from_mask(n, m));
  });
  return PetersonClass(n, std::nullopt, std::move(table));
}

bool disjoint_product_check(const IndexSubset& b, const IndexSubset& b_prime, EvaluationPath path) {
  if (b.rank() != b_prime.rank()) throw RankMismatch(b.rank(), b_prime.rank());
  for (int j : b.members()) {
    if (b_prime.contains(j))
      throw PreconditionError("subsets share the element " + std::to_string(j));
    if (b_prime.contains(j - 1) || b_prime.contains(j + 1))
      throw PreconditionError("subsets are adjacent at " + std::to_string(j));
  }
  const PetersonClass joint = class_of(b.unite(b_prime), path);
  const PetersonClass left = class_of(b, path);
  const PetersonClass right = class_of(b_prime, path);
  for (std::size_t m = 0; m < joint.table().size(); ++m)
    if (joint.table()[m] != left.table()[m] * right.table()[m]) return false;
  return true;
}

bool minimality_check(const Permutation& w, const IndexSubset& a) {
  if (w.rank() != a.rank()) throw RankMismatch(w.rank(), a.rank());
  const PetersonClass pw = class_of_permutation(w);
  if (!pw.is_upper_triangular_for(a))
    throw PreconditionError("p_w for w = " + w.to_string() + " is not upper triangular for {" +
                            a.to_csv() + "}");
  return divides(diagonal_value(a), pw.at(a));
}

std::vector<Permutation> preimage_classes(const IndexSubset& a) {
  const PetersonClass target = class_of(a);
  const Permutation top = fixed_point(a);
  std::vector<Permutation> out;
  for (const Permutation& w : permutations_of_length(a.rank(), a.size())) {
    if (!bruhat_leq(w, top)) continue;
    if (class_of_permutation(w).same_table(target)) out.push_back(w);
  }
  return out;
}

}  // namespace peterson

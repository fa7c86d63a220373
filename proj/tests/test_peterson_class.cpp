#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "peterson/billey.hpp"
#include "peterson/errors.hpp"
#include "peterson/peterson_class.hpp"

using namespace peterson;

namespace {

TPolynomial mono(long c, int d) { return TPolynomial::monomial(c, d); }

const IndexSubset kA(7, {1, 2, 3, 5, 6});
const IndexSubset kB = IndexSubset::full(7);

int long_strings(const IndexSubset& a) {
  int count = 0;
  for (const auto& s : decompose_strings(a)) count += s.size() >= 2;
  return count;
}

}  // namespace

TEST(ClassOf, Examples) {
  const PetersonClass unit = class_of(IndexSubset::empty(5));
  for (const auto& value : unit.table()) EXPECT_EQ(value, TPolynomial(1));
  EXPECT_EQ(class_of(kB).at(kB), mono(720, 6));
  EXPECT_EQ(class_of(kA).at(kB), mono(3600, 5));
  EXPECT_EQ(class_of(kA).at(kA), mono(12, 5));
  EXPECT_EQ(class_of(kA).index(), kA);
  EXPECT_FALSE(class_of(kA).is_generic());
  EXPECT_THROW(class_of(kA).at(IndexSubset::empty(6)), RankMismatch);
}

TEST(ClassOf, BothPathsAgreeWithBruteForce) {
  for (int n = 2; n <= 6; ++n) {
    const auto subsets = all_subsets(n);
    for (const auto& a : subsets) {
      const PetersonClass fast = class_of(a, EvaluationPath::closed_form);
      const PetersonClass slow = class_of(a, EvaluationPath::billey, 3);
      ASSERT_TRUE(fast.same_table(slow)) << a.to_csv();
      if (n > 5) continue;
      for (const auto& b : subsets) {
        const Word fpw = fixed_point_word(b);
        const std::vector<int> word(fpw.letters().begin(), fpw.letters().end());
        ASSERT_EQ(fast.at(b), oracle::projected(oracle::line(basis_permutation(a)), word));
      }
    }
  }
}

TEST(ClassOf, UpperTriangularWithPositiveDegreeEntries) {
  for (int n = 2; n <= 6; ++n) {
    const auto subsets = all_subsets(n);
    for (const auto& a : subsets) {
      const PetersonClass c = class_of(a, EvaluationPath::billey);
      EXPECT_TRUE(c.is_upper_triangular_for(a));
      for (const auto& b : subsets) {
        const TPolynomial& v = c.at(b);
        if (!a.is_subset_of(b)) {
          ASSERT_TRUE(v.is_zero());
        } else {
          ASSERT_TRUE(v.is_monomial());
          ASSERT_EQ(v.degree(), a.size());
          ASSERT_GT(v.leading_coefficient(), 0);
        }
      }
    }
  }
}

TEST(ClassOf, DegreeCountsAreBinomial) {
  for (int n = 2; n <= 8; ++n) {
    std::vector<long long> per_degree(n, 0);
    for (const auto& c : all_classes(n)) ++per_degree[c.at(c.index()).degree()];
    for (int j = 0; j < n; ++j) EXPECT_EQ(per_degree[j], oracle::choose(n - 1, j)) << "n=" << n << " j=" << j;
  }
}

TEST(ClassOf, AllClassesIndexedByMask) {
  const auto classes = all_classes(5, default_evaluation_path(), 4);
  ASSERT_EQ(classes.size(), 16u);
  for (std::size_t m = 0; m < classes.size(); ++m) EXPECT_EQ(classes[m].index().mask(), m);
}

TEST(ClosedForms, DiagonalValueExamples) {
  EXPECT_EQ(diagonal_value(kA), mono(12, 5));
  EXPECT_EQ(diagonal_value(IndexSubset(7, {4})), TPolynomial::t());
  Integer f = 1;
  for (int n = 2; n <= 8; ++n) {
    f *= n - 1;
    EXPECT_EQ(diagonal_value(IndexSubset::full(n)), TPolynomial::monomial(f, n - 1));
  }
}

TEST(ClosedForms, DiagonalValueMatchesOracle) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : all_subsets(n)) ASSERT_EQ(diagonal_value(a), p_restriction(basis_permutation(a), a));
}

TEST(ClosedForms, GeneratorRestrictionExamples) {
  EXPECT_EQ(generator_restriction(3, kA), mono(3, 1));
  EXPECT_TRUE(generator_restriction(4, kA).is_zero());
  EXPECT_EQ(generator_restriction(4, kB), mono(12, 1));
  EXPECT_EQ(p_restriction(Permutation::simple_transposition(7, 4), kB), mono(12, 1));
  EXPECT_THROW(generator_restriction(0, kA), std::invalid_argument);
  EXPECT_THROW(generator_restriction(7, kA), std::invalid_argument);
}

TEST(ClosedForms, GeneratorRestrictionMatchesOracle) {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i)
      for (const auto& a : all_subsets(n))
        ASSERT_EQ(generator_restriction(i, a), p_restriction(Permutation::simple_transposition(n, i), a));
}

TEST(ClosedForms, SingleStringExamples) {
  EXPECT_EQ(single_string_restriction(kA, kB), mono(3600, 5));
  EXPECT_EQ(single_string_restriction(IndexSubset(3, {1}), IndexSubset(3, {1, 2})), mono(2, 1));
  EXPECT_EQ(single_string_restriction(IndexSubset(3, {2}), IndexSubset(3, {1, 2})), mono(2, 1));
  EXPECT_EQ(p_restriction(basis_permutation(IndexSubset(3, {1})), IndexSubset(3, {1, 2})), mono(2, 1));
  EXPECT_EQ(p_restriction(basis_permutation(IndexSubset(3, {2})), IndexSubset(3, {1, 2})), mono(2, 1));
}

TEST(ClosedForms, SingleStringPreconditions) {
  EXPECT_THROW(single_string_restriction(IndexSubset(5, {1}), IndexSubset(5, {1, 3})), PreconditionError);
  EXPECT_THROW(single_string_restriction(IndexSubset(5, {1}), IndexSubset(5, {1, 2, 3})), PreconditionError);
  EXPECT_THROW(single_string_restriction(IndexSubset(5, {4}), IndexSubset(5, {1, 2})), PreconditionError);
}

TEST(ClosedForms, SingleStringMatchesOracle) {
  for (int n = 3; n <= 6; ++n)
    for (int lo = 1; lo < n; ++lo)
      for (int hi = lo + 1; hi < n; ++hi) {
        const IndexSubset b = IndexSubset::interval(n, lo, hi);
        for (int k = lo; k <= hi; ++k) {
          const IndexSubset a = b.without(k);
          ASSERT_EQ(single_string_restriction(a, b), p_restriction(basis_permutation(a), b));
        }
      }
}

TEST(ClosedForms, BinomialAndFactorial) {
  for (int n = 0; n <= 20; ++n)
    for (int k = -1; k <= n + 1; ++k) ASSERT_EQ(binomial(n, k), Integer(static_cast<long>(oracle::choose(n, k))));
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
}

TEST(DisjointProduct, Examples) {
  EXPECT_TRUE(disjoint_product_check(IndexSubset(7, {1, 2, 3}), IndexSubset(7, {5, 6})));
  EXPECT_TRUE(disjoint_product_check(IndexSubset::empty(7), IndexSubset(7, {2, 3})));
  EXPECT_TRUE(disjoint_product_check(IndexSubset(5, {1}), IndexSubset(5, {3})));
  EXPECT_THROW(disjoint_product_check(IndexSubset(5, {1}), IndexSubset(5, {2})), PreconditionError);
  EXPECT_THROW(disjoint_product_check(IndexSubset(5, {1, 2}), IndexSubset(5, {2})), PreconditionError);
  EXPECT_THROW(disjoint_product_check(IndexSubset(5, {1}), IndexSubset(6, {3})), RankMismatch);
}

TEST(DisjointProduct, HoldsForEveryQualifyingPair) {
  for (int n = 2; n <= 6; ++n) {
    const auto subsets = all_subsets(n);
    for (const auto& b : subsets)
      for (const auto& c : subsets) {
        const std::uint64_t spread = b.mask() | (b.mask() << 1) | (b.mask() >> 1);
        if (spread & c.mask()) continue;
        ASSERT_TRUE(disjoint_product_check(b, c)) << b.to_csv() << " | " << c.to_csv();
      }
  }
}

TEST(Minimality, Examples) {
  const IndexSubset a(4, {1, 2, 3});
  EXPECT_TRUE(minimality_check(basis_permutation(a), a));
  EXPECT_TRUE(minimality_check(basis_permutation(a).inverse(), a));
  EXPECT_EQ(basis_permutation(a).inverse(), evaluate(Word(4, {3, 2, 1})));
  EXPECT_TRUE(minimality_check(Permutation::longest(4), a));
  EXPECT_THROW(minimality_check(Permutation::longest(4), IndexSubset(4, {1})), PreconditionError);
}

TEST(Minimality, GenericClassMarker) {
  const PetersonClass generic = class_of_permutation(Permutation::longest(3));
  EXPECT_TRUE(generic.is_generic());
  EXPECT_THROW(generic.index(), std::logic_error);
}

TEST(Minimality, ExhaustiveScanRankFive) {
  for (int n = 2; n <= 5; ++n) {
    const auto subsets = all_subsets(n);
    for (const auto& w : all_permutations(n)) {
      const PetersonClass pw = class_of_permutation(w);
      for (const auto& a : subsets) {
        if (!pw.is_upper_triangular_for(a)) continue;
        ASSERT_TRUE(minimality_check(w, a)) << w << " for " << a.to_csv();
        if (pw.at(a) == diagonal_value(a)) ASSERT_TRUE(pw.same_table(class_of(a))) << w;
      }
    }
  }
}

TEST(Preimage, Examples) {
  const auto two = preimage_classes(IndexSubset(3, {1, 2}));
  EXPECT_EQ(std::set<Permutation>(two.begin(), two.end()),
            (std::set<Permutation>{evaluate(Word(3, {1, 2})), evaluate(Word(3, {2, 1}))}));
  const auto one = preimage_classes(IndexSubset(2, {1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front(), Permutation::simple_transposition(2, 1));
  EXPECT_EQ(preimage_classes(IndexSubset(6, {1, 2, 4, 5})).size(), 4u);
}

TEST(Preimage, CountIsPowerOfTwoOverLongStrings) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : all_subsets(n)) {
      const auto found = preimage_classes(a);
      ASSERT_EQ(found.size(), std::size_t{1} << long_strings(a)) << a.to_csv();
      // The candidate filter is complete: scan all of S_n directly.
      const PetersonClass target = class_of(a);
      std::size_t direct = 0;
      for (const auto& w : all_permutations(n)) direct += class_of_permutation(w).same_table(target);
      ASSERT_EQ(direct, found.size());
    }
}

#include "peterson/subset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "peterson/errors.hpp"

namespace peterson {

namespace {

void check_rank(int n) {
  if (n < 1 || n > 65)
    throw std::invalid_argument("subset rank " + std::to_string(n) + " outside [1, 65]");
}

std::uint64_t bit(int j) { return std::uint64_t{1} << (j - 1); }

}  // namespace

IndexSubset::IndexSubset(int n, std::span<const int> members) : rank_(n), mask_(0) {
  check_rank(n);
  for (int j : members) {
    if (j < 1 || j > n - 1)
      throw std::invalid_argument("subset element " + std::to_string(j) +
                                  " outside {1.." + std::to_string(n - 1) + "}");
    if (mask_ & bit(j))
      throw std::invalid_argument("duplicate subset element " + std::to_string(j));
    mask_ |= bit(j);
  }
}

IndexSubset IndexSubset::empty(int n) {
  check_rank(n);
  return IndexSubset(n, std::uint64_t{0});
}

IndexSubset IndexSubset::full(int n) {
  check_rank(n);
  const std::uint64_t m = n - 1 == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 1)) - 1;
  return IndexSubset(n, m);
}

IndexSubset IndexSubset::from_mask(int n, std::uint64_t mask) {
  check_rank(n);
  if ((mask & ~full(n).mask_) != 0)
    throw std::invalid_argument("subset mask has bits outside {1.." + std::to_string(n - 1) +
                                "}");
  return IndexSubset(n, mask);
}

IndexSubset IndexSubset::interval(int n, int lo, int hi) {
  std::vector<int> m;
  for (int j = lo; j <= hi; ++j) m.push_back(j);
  return IndexSubset(n, m);
}

int IndexSubset::size() const { return std::popcount(mask_); }

bool IndexSubset::contains(int j) const {
  return j >= 1 && j <= rank_ - 1 && (mask_ & bit(j)) != 0;
}

std::vector<int> IndexSubset::members() const {
  std::vector<int> out;
  for (int j = 1; j < rank_; ++j)
    if (mask_ & bit(j)) out.push_back(j);
  return out;
}

bool IndexSubset::is_subset_of(const IndexSubset& other) const {
  if (rank_ != other.rank_) throw RankMismatch(rank_, other.rank_);
  return (mask_ & ~other.mask_) == 0;
}

IndexSubset IndexSubset::with(int k) const {
  if (k < 1 || k > rank_ - 1)
    throw std::invalid_argument("index " + std::to_string(k) + " outside {1.." +
                                std::to_string(rank_ - 1) + "}");
  return IndexSubset(rank_, mask_ | bit(k));
}

IndexSubset IndexSubset::without(int k) const {
  if (!contains(k)) return *this;
  return IndexSubset(rank_, mask_ & ~bit(k));
}

IndexSubset IndexSubset::unite(const IndexSubset& other) const {
  if (rank_ != other.rank_) throw RankMismatch(rank_, other.rank_);
  return IndexSubset(rank_, mask_ | other.mask_);
}

std::string IndexSubset::to_csv() const {
  std::string out;
  for (int j : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(j);
  }
  return out;
}

std::strong_ordering operator<=>(const IndexSubset& a, const IndexSubset& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

IndexSubset parse_subset(int n, std::string_view text) {
  std::vector<int> members;
  if (text.empty() || text == "-") return IndexSubset(n, members);
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed subset element '" + std::string(token) + "'");
    members.push_back(value);
    start = comma + 1;
  }
  std::sort(members.begin(), members.end());
  return IndexSubset(n, members);
}

std::vector<IndexSubset> all_subsets(int n) {
  check_rank(n);
  if (n - 1 > 30) throw std::invalid_argument("refusing to enumerate 2^" + std::to_string(n - 1) + " subsets");
  std::vector<IndexSubset> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(IndexSubset::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConsecutiveString> decompose_strings(const IndexSubset& a) {
  std::vector<ConsecutiveString> out;
  const int n = a.rank();
  int j = 1;
  while (j < n) {
    if (!a.contains(j)) {
      ++j;
      continue;
    }
    int hi = j;
    while (a.contains(hi + 1)) ++hi;
    out.push_back({j, hi});
    j = hi + 2;
  }
  return out;
}

ConsecutiveString string_containing(const IndexSubset& a, int j) {
  if (!a.contains(j))
    throw PreconditionError("index " + std::to_string(j) + " is not in {" + a.to_csv() + "}");
  int lo = j;
  int hi = j;
  while (a.contains(lo - 1)) --lo;
  while (a.contains(hi + 1)) ++hi;
  return {lo, hi};
}

int head(const IndexSubset& a, int j) { return string_containing(a, j).hi; }
int tail(const IndexSubset& a, int j) { return string_containing(a, j).lo; }

Permutation fixed_point(const IndexSubset& a) {
  std::vector<int> e(static_cast<std::size_t>(a.rank()));
  for (int i = 1; i <= a.rank(); ++i) e[static_cast<std::size_t>(i - 1)] = i;
  for (const auto& s : decompose_strings(a)) {
    // The block acts on positions lo..hi+1 by reversal.
    for (int p = s.lo; p <= s.hi + 1; ++p)
      e[static_cast<std::size_t>(p - 1)] = s.lo + s.hi + 1 - p;
  }
  return Permutation(std::move(e));
}

IndexSubset subset_of_fixed_point(const Permutation& w) {
  const Permutation inv = w.inverse();
  std::vector<int> members;
  for (int i = 1; i < w.rank(); ++i) {
    if (inv(i) > inv(i + 1) + 1) throw NotAPetersonFixedPoint(i);
    if (inv(i) == inv(i + 1) + 1) members.push_back(i);
  }
  return IndexSubset(w.rank(), members);
}

Word fixed_point_word(const IndexSubset& a) {
  std::vector<int> letters;
  for (const auto& s : decompose_strings(a))
    for (int top = s.hi; top >= s.lo; --top)
      for (int j = s.lo; j <= top; ++j) letters.push_back(j);
  return Word(a.rank(), std::move(letters));
}

Word basis_word(const IndexSubset& a) { return Word(a.rank(), a.members()); }

Permutation basis_permutation(const IndexSubset& a) { return evaluate(basis_word(a)); }

}  // namespace peterson

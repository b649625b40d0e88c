#include "hypersimplex/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hypersimplex/error.hpp"

namespace hypersimplex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::unsupported_parameters: return "unsupported_parameters";
    case ErrorKind::invalid_composition: return "invalid_composition";
    case ErrorKind::not_labelable: return "not_labelable";
    case ErrorKind::resource: return "resource";
    case ErrorKind::structural: return "structural";
    case ErrorKind::internal_inconsistency: return "internal_inconsistency";
  }
  return "unknown";
}

int wrap(long long i, int n) {
  long long m = (i - 1) % n;
  if (m < 0) m += n;
  return static_cast<int>(m + 1);
}

namespace {

void check_n(int n) {
  require(n >= 1 && n <= kMaxN, ErrorKind::parameter,
          "n must lie in [1, " + std::to_string(kMaxN) + "], got " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------- Subset

Subset::Subset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  check_n(n);
  const int k = static_cast<int>(elements_.size());
  require(k > 0 && k < n, ErrorKind::parameter,
          "subset size must satisfy 0 < k < n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  for (int i = 0; i < k; ++i) {
    require(elements_[i] >= 1 && elements_[i] <= n, ErrorKind::parameter,
            "subset element " + std::to_string(elements_[i]) + " outside [1.." + std::to_string(n) + "]");
    require(i == 0 || elements_[i - 1] < elements_[i], ErrorKind::parameter,
            "subset elements must be strictly increasing");
  }
}

bool Subset::contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

CharVec Subset::char_vec() const {
  std::uint64_t bits = 0;
  for (int e : elements_) bits |= std::uint64_t{1} << (e - 1);
  return CharVec(n_, bits);
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                b.elements_.begin(), b.elements_.end());
}

// ---------------------------------------------------------------- CharVec

CharVec::CharVec(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_n(n);
  require(n == 64 || (bits >> n) == 0, ErrorKind::parameter, "characteristic vector has bits beyond n");
}

CharVec CharVec::from_entries(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  check_n(n);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    require(entries[i] == 0 || entries[i] == 1, ErrorKind::parameter, "characteristic vector entries must be 0 or 1");
    if (entries[i]) bits |= std::uint64_t{1} << i;
  }
  return CharVec(n, bits);
}

int CharVec::weight() const noexcept { return std::popcount(bits_); }

Subset CharVec::support() const {
  std::vector<int> elems;
  for (int i = 1; i <= n_; ++i)
    if ((*this)[i]) elems.push_back(i);
  return Subset(n_, std::move(elems));
}

std::vector<int> CharVec::entries() const {
  std::vector<int> out(n_);
  for (int i = 1; i <= n_; ++i) out[i - 1] = (*this)[i];
  return out;
}

std::string CharVec::to_string() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) s.push_back((*this)[i] ? '1' : '0');
  return s;
}

CharVec CharVec::shifted(int pos) const {
  const int next = wrap(pos + 1, n_);
  require((*this)[pos] == 1 && (*this)[next] == 0, ErrorKind::parameter,
          "cannot shift position " + std::to_string(pos) + " of " + to_string());
  return CharVec(n_, bits_ ^ (std::uint64_t{1} << (pos - 1)) ^ (std::uint64_t{1} << (next - 1)));
}

std::strong_ordering lex_compare(const CharVec& a, const CharVec& b) {
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return a.n_ <=> b.n_;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits_ & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
}

// ---------------------------------------------------------------- distances

int circular_distance(int n, int i, int j) {
  require(n >= 2, ErrorKind::parameter, "circular distance needs n >= 2");
  require(i >= 1 && i <= n && j >= 1 && j <= n, ErrorKind::parameter,
          "circular distance arguments must lie in [1..n]");
  const int d = std::abs(i - j);
  return std::min(d, n - d);
}

int min_circular_distance(int n, std::span<const int> elements) {
  int best = n;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b)
      best = std::min(best, circular_distance(n, elements[a], elements[b]));
  return best;
}

namespace {

void check_r(int n, int k, int r) {
  require(r >= 1 && r <= n / k, ErrorKind::parameter,
          "r must satisfy 1 <= r <= floor(n/k) = " + std::to_string(n / k) + ", got r=" + std::to_string(r));
}

}  // namespace

bool is_r_stable(int n, int r, const Subset& s) {
  require(s.n() == n, ErrorKind::parameter, "subset ambient size does not match n");
  check_r(n, s.k(), r);
  return min_circular_distance(n, s.elements()) >= r;
}

StableFamily enumerate_r_stable(int n, int k, int r) {
  check_n(n);
  require(k > 0 && k < n, ErrorKind::parameter, "need 0 < k < n");
  check_r(n, k, r);
  StableFamily family{n, k, r, {}};
  std::vector<int> current;
  // Lexicographic DFS; the cyclic wrap-around constraint is checked at the leaves.
  auto dfs = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (circular_distance(n, current.front(), current.back()) >= r || k == 1)
        family.members.emplace_back(n, current);
      return;
    }
    for (int e = next; e <= n; ++e) {
      current.push_back(e);
      self(self, e + r);
      current.pop_back();
    }
  };
  dfs(dfs, 1);
  return family;
}

SortedPair sort_pair(const Subset& i, const Subset& j) {
  require(i.n() == j.n() && i.k() == j.k(), ErrorKind::parameter,
          "sort_pair needs subsets with equal n and k");
  std::vector<int> merged;
  merged.reserve(2 * i.k());
  std::merge(i.elements().begin(), i.elements().end(), j.elements().begin(), j.elements().end(),
             std::back_inserter(merged));
  std::vector<int> odd, even;
  for (std::size_t t = 0; t < merged.size(); ++t) (t % 2 == 0 ? odd : even).push_back(merged[t]);
  Subset u(i.n(), std::move(odd));
  Subset v(i.n(), std::move(even));
  const bool sorted = (u == i && v == j);
  return {std::move(u), std::move(v), sorted};
}

bool is_sort_closed(const StableFamily& family) {
  std::set<Subset> members(family.members.begin(), family.members.end());
  for (const auto& a : family.members)
    for (const auto& b : family.members) {
      auto [u, v, sorted] = sort_pair(a, b);
      if (!members.contains(u) || !members.contains(v)) return false;
    }
  return true;
}

}  // namespace hypersimplex

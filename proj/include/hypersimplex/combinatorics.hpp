#pragma once

// Subsets of [n] = {1..n}, their 0/1 characteristic vectors, circular
// distance on the labeled n-gon, r-stability and the sorting of pairs of
// k-subsets that underlies the circuit triangulation.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hypersimplex {

// Vertices are stored as bit masks, so the ambient dimension is capped.
inline constexpr int kMaxN = 64;

// Canonical residue of i modulo n in [1..n]. Every cyclic index in the
// library goes through this helper.
int wrap(long long i, int n);

class CharVec;

// A k-subset of [n], elements strictly increasing, 0 < k < n.
class Subset {
 public:
  Subset(int n, std::vector<int> elements);

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const noexcept { return elements_; }
  int operator[](std::size_t i) const { return elements_[i]; }
  bool contains(int i) const;

  CharVec char_vec() const;
  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  int n_;
  std::vector<int> elements_;
};

// 0/1 vector of length n; bit (i-1) holds entry i.
class CharVec {
 public:
  CharVec() = default;
  CharVec(int n, std::uint64_t bits);
  static CharVec from_entries(std::span<const int> entries);

  int n() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int weight() const noexcept;
  // Entry i for 1 <= i <= n.
  int operator[](int i) const noexcept { return static_cast<int>((bits_ >> (i - 1)) & 1u); }

  Subset support() const;
  std::vector<int> entries() const;
  std::string to_string() const;

  // Move the 1 at position `pos` one step right (cyclically). Requires a 1
  // at pos and a 0 at pos+1.
  CharVec shifted(int pos) const;

  // Lexicographic comparison of the entry sequences (entry 1 most significant).
  friend std::strong_ordering lex_compare(const CharVec& a, const CharVec& b);

  friend bool operator==(const CharVec&, const CharVec&) = default;
  friend auto operator<=>(const CharVec&, const CharVec&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

struct CharVecHash {
  std::size_t operator()(const CharVec& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.bits() * 0x9E3779B97F4A7C15ull + static_cast<unsigned>(v.n()));
  }
};

// Edge count of the shorter arc between i and j on the n-gon.
int circular_distance(int n, int i, int j);

// Smallest pairwise circular distance among the elements; n for fewer than
// two elements.
int min_circular_distance(int n, std::span<const int> elements);

bool is_r_stable(int n, int r, const Subset& s);

struct StableFamily {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<Subset> members;
};

// All r-stable k-subsets of [n] in lexicographic order.
StableFamily enumerate_r_stable(int n, int k, int r);

struct SortedPair {
  Subset u;
  Subset v;
  bool sorted;
};

// U and V are the odd- and even-indexed entries of the nondecreasing merge
// of the multiset union of I and J.
SortedPair sort_pair(const Subset& i, const Subset& j);

bool is_sort_closed(const StableFamily& family);

}  // namespace hypersimplex

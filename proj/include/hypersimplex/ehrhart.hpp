#pragma once

// Lattice-point counting in dilates of the r-stable hypersimplex by exact
// barycentric membership in the simplices of its circuit triangulation, and
// the Ehrhart polynomial and h*-vector recovered from those counts.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypersimplex/polynomials.hpp"

namespace hypersimplex {

inline constexpr std::uint64_t kDefaultCandidateBudget = 50'000'000;

struct EhrhartData {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<BigInt> counts;             // L(t) for t = 0..n-1
  std::vector<BigRational> ehrhart;       // coefficients of L in t, constant first
  IntPolynomial hstar;
};

// Number of integer vectors with 0 <= x_i <= t and sum x_i = t k.
BigInt candidate_count(int n, int k, int t);

std::uint64_t count_lattice_points(int n, int k, int r, int t,
                                   std::uint64_t candidate_budget = kDefaultCandidateBudget);

EhrhartData ehrhart_hstar(int n, int k, int r, std::uint64_t candidate_budget = kDefaultCandidateBudget);

// sum_i h_i C(t + d - i, d) for the dimension d.
BigInt ehrhart_from_hstar(const IntPolynomial& h, int d, int t);

}  // namespace hypersimplex

#pragma once

// Maximal simplices of the circuit triangulation of the hypersimplex and of
// its r-stable subpolytopes. A simplex is named by the permutation omega of
// [n] with omega[n] = n listing the positions whose 1 moves one step right,
// in order, as the circuit walks through the n vertices.

#include <string>
#include <vector>

#include "hypersimplex/combinatorics.hpp"

namespace hypersimplex {

// One-line notation, values 1..n stored at indices 0..n-1.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
void require_permutation(const Permutation& p);
Permutation inverse(const Permutation& p);
// Ordinary descents i in [1..n-1] with p_i > p_{i+1}.
int descent_count(const Permutation& p);
std::string to_string(const Permutation& p);

bool permutation_is_circuit(int n, int k, const Permutation& omega);

// Vertex 0 is the lexicographically largest; vertex i+1 is vertex i with
// the 1 at position omega[i] shifted right.
std::vector<CharVec> circuit_vertices(int n, int k, const Permutation& omega);

struct Simplex {
  int n = 0;
  int k = 0;
  Permutation omega;
  std::vector<CharVec> vertices;
};

Simplex make_simplex(int n, int k, const Permutation& omega);

// Largest r for which every vertex is r-stable.
int stability_level(const Simplex& s);

struct Triangulation {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<Simplex> simplices;
};

// True when the r-stable k-subsets of [n] affinely span the hyperplane
// sum = k, i.e. the r-stable hypersimplex has dimension n-1.
bool is_full_dimensional(int n, int k, int r);
void require_supported(int n, int k, int r);

// Simplices of the circuit triangulation whose vertices are all r-stable,
// ordered lexicographically by omega.
Triangulation enumerate_triangulation(int n, int k, int r);

bool simplex_is_unimodular(const Simplex& s);

}  // namespace hypersimplex

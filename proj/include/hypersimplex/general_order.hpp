#pragma once

// Permutation-tuple encoding of circuit simplices for any k, the order on
// them built from r-adjacent extended descents, and a harness that checks
// whether the resulting order is a shelling.

#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hypersimplex/shelling.hpp"
#include "hypersimplex/triangulation.hpp"

namespace hypersimplex {

// {i : p_i > p_{i+1}} together with n when p_n > p_1.
std::set<int> extended_descents(const Permutation& p);

// Ordered pairs (i, i + r mod n) of extended descents.
std::set<std::pair<int, int>> r_adjacent_descents(const Permutation& p, int r);

struct CircuitTuple {
  int n = 0;
  int k = 0;
  // perms[i - 1]: inverse of the rotation of omega whose move labelled n is
  // the i-th move. Its initial vertex is vertices[(n - i) mod n].
  std::vector<Permutation> perms;
  std::vector<CharVec> initial_vertices;
};

CircuitTuple circuit_tuple(const Simplex& s);

// Phi_i = number of r-adjacent extended descents of perms[i - 1].
std::vector<int> phi(const CircuitTuple& t, int r);

// Positions a with a and a + r both in the support.
std::vector<int> adjacent_anchors(const CharVec& v, int r);

// Total order on r-adjacent vertices: largest anchor first, then the 0/1
// vector lexicographically.
std::strong_ordering compare_adjacent_vertices(const CharVec& a, const CharVec& b, int r);

// Order key of a tuple: total weight of phi, then the tuple coordinate whose
// initial vertex is the greatest r-adjacent vertex of the circuit.
struct OrderKey {
  std::vector<int> phi;
  int grade = 0;
  int coordinate = 0;  // 1-based
  CharVec top;
};

OrderKey order_key(const CircuitTuple& t, int r);

// Graded by phi, then the top r-adjacent vertex, then colex on the gap
// subwords of the top coordinate: r-adjacent gaps from the largest descent
// down, then the remaining gaps. If every subword agrees for distinct
// circuits, falls back to lexicographic order on perms[n] and counts it.
std::strong_ordering general_compare(const CircuitTuple& a, const CircuitTuple& b, int r,
                                     std::size_t* fallbacks = nullptr);

struct GeneralOrder {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<Simplex> simplices;
  std::vector<int> layers;  // stability layer of each simplex
  std::size_t tiebreak_fallbacks = 0;
};

// Deepest full-dimensional layer first (the proven order for k = 2, otherwise
// sorted by general_compare), then every shallower layer down to r sorted by
// general_compare.
GeneralOrder general_order(int n, int k, int r);

struct ConjectureReport {
  int n = 0;
  int k = 0;
  int r = 0;
  std::size_t simplices = 0;
  bool shelling_ok = false;
  bool complete = true;
  std::size_t checked = 0;
  std::optional<ShellingViolation> violation;
  std::size_t tiebreak_fallbacks = 0;
};

ConjectureReport check_general_conjecture(int n, int k, int r,
                                          std::optional<std::chrono::steady_clock::time_point> deadline = {});

}  // namespace hypersimplex

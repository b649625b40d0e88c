#pragma once

// JSON and CSV forms of the toolkit's values. Keys are emitted in a fixed
// order so equal values always serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "hypersimplex/combinatorics.hpp"
#include "hypersimplex/ehrhart.hpp"
#include "hypersimplex/error.hpp"
#include "hypersimplex/general_order.hpp"
#include "hypersimplex/hstar.hpp"
#include "hypersimplex/polynomials.hpp"
#include "hypersimplex/shelling.hpp"
#include "hypersimplex/triangulation.hpp"

namespace hypersimplex {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const Subset& s);
Json to_json(const CharVec& v);
Json to_json(const std::vector<CharVec>& face);
Json to_json(const StableFamily& f);
Json to_json(const Simplex& s);
Json to_json(const Triangulation& t);
Json to_json(const SimplexLabel& label);
Json to_json(const ShellingStep& step);
Json to_json(const std::vector<ShellingStep>& steps);
Json to_json(const ShellingVerdict& v);
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);
Json to_json(const BivariatePoly& p);
Json to_json(const SimpleGraph& g);
Json to_json(const InhibitionDiagram& d);
// h* with its shape predicates; coefficients padded to length n.
Json to_json(const HStarResult& h);
Json to_json(const EhrhartData& e);
Json to_json(const ConjectureReport& rep);

Json error_json(const Error& e);

// One row per coefficient: n,k,r,method,degree,coeff (header included).
std::string polynomial_csv(int n, int k, int r, const std::string& method, const IntPolynomial& p, int length);

// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace hypersimplex

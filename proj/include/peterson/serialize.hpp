#ifndef PETERSON_SERIALIZE_HPP
#define PETERSON_SERIALIZE_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "peterson/monk.hpp"
#include "peterson/peterson_class.hpp"
#include "peterson/permutation.hpp"
#include "peterson/polynomial.hpp"
#include "peterson/subset.hpp"

// Wire formats. Object keys are emitted in sorted order (nlohmann::json's
// default std::map storage), so output is byte-stable for a given input.
namespace peterson {

using Json = nlohmann::json;

// [4,3,2,1,6,5,7]
Json to_json(const Permutation& w);
// [1,2,3]
Json to_json(const Word& word);
// [1,2,3,5] (sorted)
Json to_json(const IndexSubset& a);
// {"5": 3600}; coefficients beyond 64 bits are written as decimal strings.
Json to_json(const TPolynomial& p);

Permutation permutation_from_json(const Json& j);
IndexSubset subset_from_json(int n, const Json& j);
TPolynomial tpolynomial_from_json(const Json& j);

// {"n": n, "class": [members], "table": {"subset-csv": "display"}}
Json class_table_json(const PetersonClass& c);
// One row per fixed point: subset,fixed_point,value (subset and fixed point quoted).
std::string class_table_csv(const PetersonClass& c);

// {"i": i, "class": [..], "diagonal": "3t", "terms": {"subset-csv": 45}}
Json monk_json(const MonkExpansion& e);
// {"n": n, "left": [..], "right": [..], "terms": {"subset-csv": "display"}}
Json product_json(const IndexSubset& left, const IndexSubset& right, const BasisExpansion& e);
Json relation_json(const Relation& r);

}  // namespace peterson

#endif  // PETERSON_SERIALIZE_HPP

#pragma once

// JSON encodings of every value the library exchanges. Element codes are
// plain integers; a field is {"p": 2, "k": 2, "poly": [1, 1, 1]} with "poly"
// omitted for prime fields.

#include <string>

#include <nlohmann/json.hpp>

#include "nilbij/census.hpp"

namespace nilbij::io {

using nlohmann::json;

/// Sorted keys, no insignificant whitespace.
std::string canonical(const json& j);
/// Throws ParseError on malformed text.
json parse(const std::string& text);

json to_json(const FieldSpec& spec);
json to_json(const Vector& x);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const FittingPair& fp);
json to_json(const NilPointed& tv);
json to_json(const Tree& t);
json to_json(const EndoFunction& f);
json to_json(const PointedTree& p);
json to_json(const NilpotentCount& r);
json to_json(const DegreeStratum& s);
json to_json(const DegreeTable& r);
json to_json(const CensusReport& r);
json to_json(const JoyalReport& r);

FieldPtr field_from_json(const json& j);
Vector vector_from_json(const json& j);
Matrix matrix_from_json(const json& j);
Tree tree_from_json(const json& j);
EndoFunction function_from_json(const json& j);
PointedTree pointed_tree_from_json(const json& j);
NilPointed pair_from_json(const json& j);

struct LoadedSubspace {
  Subspace subspace;
  // False when the stored basis was not already the canonical RREF basis;
  // `subspace` is then the re-canonicalized span.
  bool canonical;
};
LoadedSubspace subspace_from_json(const json& j);

}  // namespace nilbij::io

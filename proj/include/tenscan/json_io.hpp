#pragma once

// JSON documents for tensors, witnesses and labels. Parsing validates the
// schema and reports Error(ParseError); a non-prime modulus reports
// Error(NotPrime).

#include <json.hpp>

#include "tenscan/pencil.hpp"
#include "tenscan/spatial.hpp"

namespace tenscan::json_io {

using nlohmann::json;

// {"p": 5, "dims": [m, n, q], "slices": [[[..row..], ..], ..]}
json to_json(const SpatialMatrix& a);
SpatialMatrix tensor_from_json(const json& j);

// Rows of residues.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, PrimeField field, std::size_t rows, std::size_t cols);

// Ascending coefficients.
json to_json(const Poly& p);
Poly poly_from_json(const json& j, PrimeField field);

// {"right": [..], "left": [..], "inf": [..], "finite": [[..], ..]}
json to_json(const KroneckerForm& form);
// {"right": [..], "left": [..], "finite": [[..], ..]}
json to_json(const CanonicalSum& sum);
CanonicalSum canonical_sum_from_json(const json& j, PrimeField field);

// {"p": 5, "R": [[..]], "S": [[..]], "T": [[..]]}
json to_json(const TransformWitness& w);
TransformWitness witness_from_json(const json& j);

// {"label": "A", "v": 1}; "v" only for the A and B families.
json to_json(const RegularClass22& cls);

}  // namespace tenscan::json_io

#pragma once

// JSON forms of the library objects. Scalars are written as strings ("3",
// "-1/2"); matrices as row lists; algebras as labels plus the structure
// tensor in sparse triples [i, j, k, c] meaning basis_i * basis_j has
// coefficient c on basis_k.

#include <json.hpp>

#include "mot2/burnside.hpp"
#include "mot2/mackey.hpp"

namespace mot2::cli {

using Json = nlohmann::ordered_json;

/// Top-level "schema" value of every document written by the tool.
inline constexpr const char* kSchemaVersion = "mot2/1";

Json to_json(const Field& f);
Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const FiniteGroup& g);
Json to_json(const Subgroup& h);
Json to_json(const CommutativeAlgebra& a);
/// Matrix with the row and column labels of the two algebras.
Json to_json(const AlgebraHom& rho);
Json to_json(const MackeyFunctorTable& t);

/// Inverse of to_json for algebras; throws std::invalid_argument on malformed input.
CommutativeAlgebra algebra_from_json(const Json& j);
Scalar scalar_from_json(const Field& f, const Json& j);

}  // namespace mot2::cli

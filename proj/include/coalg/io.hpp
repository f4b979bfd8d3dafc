#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "coalg/comodule.hpp"

namespace coalg::io {

using json = nlohmann::json;

/// Scalars as strings: "p/q" in lowest terms over Q, decimal residues over F_p.
json to_json(const Scalar& s);
json to_json(const Vec& v);
/// Sparse {row, col, value} triples.
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const Algebra& a);
json to_json(const Coalgebra& c);
json to_json(const Comodule& m);
json to_json(const LeftModule& m);

/// Named constructors: "k", "M<n>", "UT<n>", "k[C<n>]", "k[x]/(<poly>)".
Algebra named_algebra(Field f, const std::string& name);
/// "set:<n>", "comatrix:<n>", or an algebra name (its dual coalgebra).
Coalgebra named_coalgebra(Field f, const std::string& name);

Algebra algebra_from_json(const json& j, Field fallback = Field::rationals());
Coalgebra coalgebra_from_json(const json& j, Field fallback = Field::rationals());
Subspace subspace_from_json(const json& j, Field fallback = Field::rationals());
Comodule comodule_from_json(const json& j, Field fallback = Field::rationals());
LeftModule module_from_json(const json& j, Field fallback = Field::rationals());

using AnyMorphism = std::variant<AlgebraMorphism, CoalgebraMorphism>;
/// Algebra morphism if the source is an algebra, coalgebra morphism otherwise.
AnyMorphism morphism_from_json(const json& j, Field fallback = Field::rationals());

using AnyObject = std::variant<Algebra, Coalgebra, AlgebraMorphism, CoalgebraMorphism, Comodule, LeftModule, Subspace>;
/// Dispatches on "kind".
AnyObject object_from_json(const json& j, Field fallback = Field::rationals());

/// Parses text; syntax errors become ParseError with line:column.
json parse_text(const std::string& text, const std::string& origin);
json parse_file(const std::string& path);

}  // namespace coalg::io

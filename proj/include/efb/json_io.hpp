#pragma once

#include <optional>

#include <json.hpp>

#include "efb/bilinear.hpp"
#include "efb/simplicity.hpp"
#include "efb/spinors.hpp"
#include "efb/vectors.hpp"

namespace efb {

using Json = nlohmann::json;

// Element: {"m", "field", "terms": [{"a": [±1...], "b": [±1...], "c": "scalar"}]}
// Spinor:  {"m", "xi": {"<mask>": "scalar"}}, optional "field"
// Vector:  {"alpha": [...], "beta": [...]}
// Malformed structure throws ParseError; a declared m different from
// expect_m throws DimensionError; a field that differs from the one
// requested throws FieldError.
struct ReadOptions {
    std::optional<int> expect_m;
    std::optional<Field> field;
};

Scalar scalar_from_json(const Json& j, Field field);

Json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j, const ReadOptions& opt = {});

Json spinor_to_json(const Spinor& w);
Spinor spinor_from_json(const Json& j, const ReadOptions& opt = {});

Json vector_to_json(const WittVector& v);
WittVector vector_from_json(const Json& j, int m, Field field);
// "p1 - 2*q3"
std::string vector_text(const WittVector& v);

Json plane_to_json(const TNPBasis& t);
Json subspace_to_json(const SpinorSubspace& s);

Json expansion_to_json(const GammaExpansion& e);
Json expansion_to_json(const WittExpansion& e);

Json report_to_json(const SimplicityReport& r, const Spinor& w);

}  // namespace efb

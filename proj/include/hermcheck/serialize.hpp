#pragma once

#include <json.hpp>

#include "hermcheck/form.hpp"

namespace hermcheck {

using json = nlohmann::ordered_json;

/// Scalars are written as "p/q" when rational and as
/// {"re": "p/q", "im": "r/s"} otherwise; values with a sqrt3 part add
/// "re_sqrt3" / "im_sqrt3" keys (value = re + im i + (re_sqrt3 + im_sqrt3 i) sqrt3).
json scalar_to_json(const Scalar& s);
/// Accepts the forms above plus plain JSON integers.
Scalar scalar_from_json(const json& j);

/// Forms are lists [[i1, ..., ik, scalar], ...] with 1-based indices.
json form_to_json(const Form& f);
Form form_from_json(const json& j, std::size_t dim);

}  // namespace hermcheck

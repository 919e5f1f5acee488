#include "hermcheck/serialize.hpp"

namespace hermcheck {

namespace {

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational rational_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return 0;
  if (it->is_number_integer()) return Rational(it->get<long>());
  if (!it->is_string()) throw InputError(std::string("bad scalar syntax in \"") + key + "\"");
  return parse_rational(it->get<std::string>());
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_string(s.re());
  json out = json::object();
  out["re"] = rational_string(s.re());
  out["im"] = rational_string(s.im());
  if (s.has_sqrt3()) {
    out["re_sqrt3"] = rational_string(s.re_sqrt3());
    out["im_sqrt3"] = rational_string(s.im_sqrt3());
  }
  return out;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key != "re" && key != "im" && key != "re_sqrt3" && key != "im_sqrt3")
        throw InputError("unknown scalar field \"" + key + "\"");
    }
    return Scalar(rational_field(j, "re"), rational_field(j, "im"),
                  rational_field(j, "re_sqrt3"), rational_field(j, "im_sqrt3"));
  }
  throw InputError("bad scalar syntax: " + j.dump());
}

json form_to_json(const Form& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) {
    json term = json::array();
    for (std::size_t i : m.indices()) term.push_back(i + 1);
    term.push_back(scalar_to_json(c));
    out.push_back(std::move(term));
  }
  return out;
}

Form form_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw InputError("form must be a list of terms");
  Form f(dim);
  for (const auto& term : j) {
    if (!term.is_array() || term.empty())
      throw InputError("form term must be a non-empty list [i1, ..., ik, scalar]");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k + 1 < term.size(); ++k) {
      if (!term[k].is_number_integer()) throw InputError("form index must be an integer");
      long i = term[k].get<long>();
      if (i < 1 || static_cast<std::size_t>(i) > dim)
        throw InputError("index out of range: " + std::to_string(i) + " (dim " +
                         std::to_string(dim) + ")");
      idx.push_back(static_cast<std::size_t>(i - 1));
    }
    // unsorted input is allowed; reorder with the permutation sign
    Form piece = Form::constant(dim, scalar_from_json(term.back()));
    for (std::size_t i : idx) piece = wedge(piece, Form::generator(dim, i));
    if (piece.is_zero() && !scalar_from_json(term.back()).is_zero())
      throw InputError("repeated index in form term");
    f += piece;
  }
  return f;
}

}  // namespace hermcheck

#include "hermcheck/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hermcheck/root_system.hpp"

namespace hermcheck {

namespace {

std::string child(const std::string& ptr, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return ptr + "/" + escaped;
}

std::string child(const std::string& ptr, std::size_t index) {
  return ptr + "/" + std::to_string(index);
}

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) {
  throw ManifestError((ptr.empty() ? std::string("/") : ptr) + ": " + msg);
}

void require_object(const json& j, const std::string& ptr,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(ptr, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(child(ptr, key), "unknown field \"" + key + "\"");
  }
}

const json& field(const json& obj, const std::string& ptr, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ptr, std::string("missing ") + key);
  return *it;
}

std::string string_at(const json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

long integer_at(const json& j, const std::string& ptr, long lo, long hi) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  long v = j.get<long>();
  if (v < lo || v > hi)
    fail(ptr, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                  std::to_string(hi) + "]");
  return v;
}

Rational rational_at(const json& j, const std::string& ptr) {
  try {
    Scalar s = scalar_from_json(j);
    if (!s.is_rational()) fail(ptr, "expected a rational scalar");
    return s.re();
  } catch (const ManifestError&) {
    throw;
  } catch (const InputError& e) {
    fail(ptr, e.what());
  }
}

Form form_at(const json& j, const std::string& ptr, std::size_t dim) {
  if (!j.is_array()) fail(ptr, "form must be a list of terms");
  for (std::size_t t = 0; t < j.size(); ++t) {
    try {
      form_from_json(json::array({j[t]}), dim);
    } catch (const InputError& e) {
      fail(child(ptr, t), e.what());
    }
  }
  return form_from_json(j, dim);
}

template <class T, class F>
Named<T> named_at(const json& j, const std::string& ptr, F parse) {
  if (!j.is_object()) fail(ptr, "expected an object of named entries");
  Named<T> out;
  for (const auto& [key, value] : j.items()) out.emplace_back(key, parse(value, child(ptr, key)));
  return out;
}

LieAlgebraPayload lie_at(const json& j, const std::string& ptr, bool need_structure) {
  require_object(j, ptr, {"dim", "differentials", "complex_structure", "metrics"});
  LieAlgebraPayload out;
  std::size_t dim = static_cast<std::size_t>(
      integer_at(field(j, ptr, "dim"), child(ptr, "dim"), 1, static_cast<long>(kMaxGenerators)));
  out.spec = LieAlgebraSpec::abelian(dim);
  if (auto it = j.find("differentials"); it != j.end()) {
    std::string p = child(ptr, "differentials");
    if (!it->is_object()) fail(p, "expected an object keyed by generator index");
    for (const auto& [key, value] : it->items()) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(child(p, key), "generator key must be an integer");
      }
      if (k < 1 || k > dim) fail(child(p, key), "index out of range: " + key);
      out.spec.d1[k - 1] = form_at(value, child(p, key), dim);
    }
  }
  if (auto it = j.find("complex_structure"); it != j.end()) {
    std::string p = child(ptr, "complex_structure");
    require_object(*it, p, {"pairs"});
    const json& pairs = field(*it, p, "pairs");
    std::string pp = child(p, "pairs");
    if (!pairs.is_array()) fail(pp, "expected a list of [a, b] pairs");
    std::vector<bool> seen(dim, false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::string ip = child(pp, i);
      if (!pairs[i].is_array() || pairs[i].size() != 2) fail(ip, "expected a pair [a, b]");
      long hi = static_cast<long>(dim);
      auto a = static_cast<std::size_t>(integer_at(pairs[i][0], child(ip, 0), 1, hi)) - 1;
      auto b = static_cast<std::size_t>(integer_at(pairs[i][1], child(ip, 1), 1, hi)) - 1;
      if (a == b || seen[a] || seen[b]) fail(ip, "pairs must cover every generator exactly once");
      seen[a] = seen[b] = true;
      out.pairs.emplace_back(a, b);
    }
    if (out.pairs.size() * 2 != dim) fail(pp, "pairs must cover every generator exactly once");
  } else if (need_structure) {
    fail(ptr, "missing complex_structure");
  }
  if (auto it = j.find("metrics"); it != j.end())
    out.metrics = named_at<Form>(*it, child(ptr, "metrics"), [&](const json& v, const std::string& p) {
      return form_at(v, p, dim);
    });
  return out;
}

RingPayload ring_at(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) fail(ptr, "expected a non-empty list of generators");
  RingPayload out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = child(ptr, i);
    require_object(j[i], p, {"name", "order"});
    std::string name = string_at(field(j[i], p, "name"), child(p, "name"));
    if (!seen.insert(name).second) fail(child(p, "name"), "duplicate generator " + name);
    out.names.push_back(name);
    out.orders.push_back(static_cast<unsigned>(
        integer_at(field(j[i], p, "order"), child(p, "order"), 1, 15)));
  }
  if (out.names.size() > 16) fail(ptr, "at most 16 generators");
  return out;
}

ClassDef class_at(const json& j, const std::string& ptr, const char* coeff_key,
                  const std::vector<std::string>& labels, std::optional<unsigned> omega_count) {
  if (omega_count) require_object(j, ptr, {"omega_combo", coeff_key});
  else require_object(j, ptr, {coeff_key});
  ClassDef out;
  bool has_combo = j.contains("omega_combo"), has_coeffs = j.contains(coeff_key);
  if (has_combo == has_coeffs)
    fail(ptr, std::string("give exactly one of ") + (omega_count ? "omega_combo, " : "") + coeff_key);
  if (has_combo) {
    const json& c = j["omega_combo"];
    std::string p = child(ptr, "omega_combo");
    if (!c.is_array() || c.size() != *omega_count)
      fail(p, "expected " + std::to_string(*omega_count) + " coefficients");
    std::vector<Rational> v;
    for (std::size_t i = 0; i < c.size(); ++i) v.push_back(rational_at(c[i], child(p, i)));
    out.omega_combo = std::move(v);
    return out;
  }
  const json& c = j[coeff_key];
  std::string p = child(ptr, coeff_key);
  if (!c.is_object()) fail(p, "expected an object keyed by generator label");
  for (const auto& [label, value] : c.items()) {
    bool known = false;
    for (const auto& l : labels) known = known || l == label;
    if (!known) fail(child(p, label), "unknown generator \"" + label + "\"");
    out.coeffs[label] = rational_at(value, child(p, label));
  }
  return out;
}

json class_to_json(const ClassDef& c, const char* coeff_key) {
  json out = json::object();
  if (c.omega_combo) {
    json combo = json::array();
    for (const Rational& q : *c.omega_combo) combo.push_back(q.get_str());
    out["omega_combo"] = std::move(combo);
  } else {
    json coeffs = json::object();
    for (const auto& [label, q] : c.coeffs) coeffs[label] = q.get_str();
    out[coeff_key] = std::move(coeffs);
  }
  return out;
}

json lie_to_json(const LieAlgebraPayload& p) {
  json out = json::object();
  out["dim"] = p.spec.dim;
  json diff = json::object();
  for (std::size_t k = 0; k < p.spec.d1.size(); ++k)
    if (!p.spec.d1[k].is_zero()) diff[std::to_string(k + 1)] = form_to_json(p.spec.d1[k]);
  out["differentials"] = std::move(diff);
  if (!p.pairs.empty()) {
    json pairs = json::array();
    for (auto [a, b] : p.pairs) pairs.push_back(json::array({a + 1, b + 1}));
    out["complex_structure"] = {{"pairs", std::move(pairs)}};
  }
  if (!p.metrics.empty()) {
    json metrics = json::object();
    for (const auto& [name, f] : p.metrics) metrics[name] = form_to_json(f);
    out["metrics"] = std::move(metrics);
  }
  return out;
}

json ring_to_json(const RingPayload& r) {
  json out = json::array();
  for (std::size_t a = 0; a < r.names.size(); ++a)
    out.push_back({{"name", r.names[a]}, {"order", r.orders[a]}});
  return out;
}

std::vector<Expectation> expect_at(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected a list of expectations");
  std::vector<Expectation> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = child(ptr, i);
    require_object(j[i], p, {"args", "checks"});
    Expectation e;
    const json& args = field(j[i], p, "args");
    if (!args.is_array() || args.empty()) fail(child(p, "args"), "expected a non-empty list");
    for (std::size_t a = 0; a < args.size(); ++a)
      e.args.push_back(string_at(args[a], child(child(p, "args"), a)));
    e.checks = named_at<std::string>(field(j[i], p, "checks"), child(p, "checks"),
                                     [](const json& v, const std::string& vp) {
                                       return string_at(v, vp);
                                     });
    out.push_back(std::move(e));
  }
  return out;
}

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Manifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    auto cut = what.find("syntax error");
    throw ManifestError(position(text, e.byte) + ": " +
                        (cut == std::string::npos ? what : what.substr(cut)));
  }
  if (!j.is_object()) fail("", "manifest must be a JSON object");
  if (!j.contains("kind")) fail("", "missing kind");

  Manifest m;
  m.kind = string_at(j["kind"], "/kind");
  if (m.kind == "lie_algebra")
    require_object(j, "", {"kind", "name", "description", "expect", "dim", "differentials",
                           "complex_structure", "metrics"});
  else if (m.kind == "bundle")
    require_object(j, "", {"kind", "name", "description", "expect", "base", "curvatures", "metrics"});
  else if (m.kind == "flag_A")
    require_object(j, "", {"kind", "name", "description", "expect", "N", "classes"});
  else if (m.kind == "invariant_algebra")
    require_object(j, "", {"kind", "name", "description", "expect", "root_system", "generators",
                           "classes", "samples"});
  else
    fail("/kind", "unknown kind \"" + m.kind + "\"");

  m.name = j.contains("name") ? string_at(j["name"], "/name") : std::string();
  if (j.contains("description")) m.description = string_at(j["description"], "/description");
  if (j.contains("expect")) m.expect = expect_at(j["expect"], "/expect");

  if (m.kind == "lie_algebra") {
    json body = json::object();
    for (const char* key : {"dim", "differentials", "complex_structure", "metrics"})
      if (j.contains(key)) body[key] = j[key];
    m.lie = lie_at(body, "", false);
  } else if (m.kind == "bundle") {
    BundlePayload b;
    const json& base = field(j, "", "base");
    if (base.is_string()) {
      std::string name = base.get<std::string>();
      std::filesystem::path file = base_dir / (name + ".json");
      Manifest resolved;
      try {
        resolved = load_manifest(file);
      } catch (const InputError& e) {
        fail("/base", "cannot resolve base \"" + name + "\": " + e.what());
      }
      if (resolved.kind != "lie_algebra") fail("/base", "base \"" + name + "\" is not a lie_algebra");
      if (resolved.lie->pairs.empty()) fail("/base", "base \"" + name + "\" has no complex_structure");
      b.lie_base = resolved.lie;
    } else if (base.is_object() && base.contains("generators")) {
      require_object(base, "/base", {"generators"});
      b.ring_base = ring_at(base["generators"], "/base/generators");
    } else {
      b.lie_base = lie_at(base, "/base", true);
    }
    const json& curv = field(j, "", "curvatures");
    if (!curv.is_array() || curv.size() % 2 != 0)
      fail("/curvatures", "expected an even-length list of curvature forms");
    for (std::size_t l = 0; l < curv.size(); ++l) {
      std::string p = child("/curvatures", l);
      if (b.lie_base) b.curvatures.push_back(form_at(curv[l], p, b.lie_base->spec.dim));
      else b.ring_curvatures.push_back(class_at(curv[l], p, "coeffs", b.ring_base->names, std::nullopt));
    }
    if (j.contains("metrics")) {
      if (b.lie_base) {
        std::size_t dim = b.lie_base->spec.dim;
        b.metrics = named_at<Form>(j["metrics"], "/metrics", [&](const json& v, const std::string& p) {
          return form_at(v, p, dim);
        });
      } else {
        b.ring_metrics = named_at<ClassDef>(j["metrics"], "/metrics", [&](const json& v, const std::string& p) {
          return class_at(v, p, "coeffs", b.ring_base->names, std::nullopt);
        });
      }
    }
    m.bundle = std::move(b);
  } else if (m.kind == "flag_A") {
    FlagPayload f;
    f.n = static_cast<unsigned>(integer_at(field(j, "", "N"), "/N", 2, 6));
    RootSystem roots = RootSystem::type_a(f.n);
    if (j.contains("classes"))
      f.classes = named_at<ClassDef>(j["classes"], "/classes", [&](const json& v, const std::string& p) {
        return class_at(v, p, "alpha_coeffs", roots.labels(), f.n - 1);
      });
    m.flag = std::move(f);
  } else {
    InvariantAlgebraPayload inv;
    if (j.contains("root_system")) {
      inv.root_system = string_at(j["root_system"], "/root_system");
      try {
        RootSystem::by_name(*inv.root_system);
      } catch (const InputError& e) {
        fail("/root_system", e.what());
      }
    }
    if (j.contains("generators")) inv.ring = ring_at(j["generators"], "/generators");
    if (!inv.root_system && !inv.ring) fail("", "missing generators or root_system");
    if (inv.root_system && inv.ring) fail("/generators", "give generators or root_system, not both");
    std::vector<std::string> labels =
        inv.ring ? inv.ring->names : RootSystem::by_name(*inv.root_system).labels();
    if (j.contains("classes"))
      inv.classes = named_at<ClassDef>(j["classes"], "/classes", [&](const json& v, const std::string& p) {
        return class_at(v, p, "coeffs", labels, std::nullopt);
      });
    if (j.contains("samples"))
      inv.samples = static_cast<unsigned>(integer_at(j["samples"], "/samples", 1, 100000));
    m.invariant = std::move(inv);
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ManifestError("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_manifest(buf.str(), file.parent_path());
  } catch (const ManifestError& e) {
    throw ManifestError(file.filename().string() + ": " + e.what());
  }
}

json serialize_manifest(const Manifest& m) {
  json out = json::object();
  out["kind"] = m.kind;
  if (!m.name.empty()) out["name"] = m.name;
  if (!m.description.empty()) out["description"] = m.description;
  if (m.lie) {
    json payload = lie_to_json(*m.lie);
    for (auto& [key, value] : payload.items()) out[key] = value;
  } else if (m.bundle) {
    const BundlePayload& b = *m.bundle;
    if (b.lie_base) {
      out["base"] = lie_to_json(*b.lie_base);
      json curv = json::array();
      for (const Form& w : b.curvatures) curv.push_back(form_to_json(w));
      out["curvatures"] = std::move(curv);
      if (!b.metrics.empty()) {
        json metrics = json::object();
        for (const auto& [name, f] : b.metrics) metrics[name] = form_to_json(f);
        out["metrics"] = std::move(metrics);
      }
    } else {
      out["base"] = {{"generators", ring_to_json(*b.ring_base)}};
      json curv = json::array();
      for (const ClassDef& c : b.ring_curvatures) curv.push_back(class_to_json(c, "coeffs"));
      out["curvatures"] = std::move(curv);
      if (!b.ring_metrics.empty()) {
        json metrics = json::object();
        for (const auto& [name, c] : b.ring_metrics) metrics[name] = class_to_json(c, "coeffs");
        out["metrics"] = std::move(metrics);
      }
    }
  } else if (m.flag) {
    out["N"] = m.flag->n;
    json classes = json::object();
    for (const auto& [name, c] : m.flag->classes) classes[name] = class_to_json(c, "alpha_coeffs");
    out["classes"] = std::move(classes);
  } else if (m.invariant) {
    const InvariantAlgebraPayload& inv = *m.invariant;
    if (inv.root_system) out["root_system"] = *inv.root_system;
    if (inv.ring) out["generators"] = ring_to_json(*inv.ring);
    json classes = json::object();
    for (const auto& [name, c] : inv.classes) classes[name] = class_to_json(c, "coeffs");
    out["classes"] = std::move(classes);
    out["samples"] = inv.samples;
  }
  if (!m.expect.empty()) {
    json expect = json::array();
    for (const Expectation& e : m.expect) {
      json checks = json::object();
      for (const auto& [name, v] : e.checks) checks[name] = v;
      expect.push_back({{"args", e.args}, {"checks", std::move(checks)}});
    }
    out["expect"] = std::move(expect);
  }
  return out;
}

}  // namespace hermcheck

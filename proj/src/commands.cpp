#include "hermcheck/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "hermcheck/flag_algebra.hpp"
#include "hermcheck/metric.hpp"
#include "hermcheck/quadratic.hpp"
#include "hermcheck/torus_bundle.hpp"

namespace hermcheck {

void register_commands(CLI::App& app, Invocation& inv) {
  auto* check = app.add_subcommand("check-algebra", "Validate Jacobi and integrability");
  check->add_option("FILE", inv.file, "Manifest (lie_algebra or bundle)")->required();

  auto* classify = app.add_subcommand("classify", "Classify invariant Hermitian metrics");
  classify->add_option("FILE", inv.file, "Manifest (lie_algebra or bundle)")->required();
  classify->add_option("--metric", inv.metric, "Metric name (default: all)");

  auto* bundle = app.add_subcommand("bundle", "Torus-bundle checks");
  bundle->add_option("FILE", inv.file, "Bundle manifest")->required();
  bundle->add_flag("--verify-prop31", inv.verify_prop31, "dd^c Omega^k identity");
  bundle->add_option("--k", inv.k, "Power k (default: every admissible k)");
  bundle->add_flag("--matsuo", inv.matsuo, "Astheno condition on the base");
  bundle->add_flag("--traces", inv.traces, "Curvature traces against the base metric");
  bundle->add_option("--metric", inv.metric, "Base metric name (default: all)");

  auto* flag = app.add_subcommand("flag", "Invariant-form algebra computations");
  flag->add_option("FILE", inv.file, "Manifest (flag_A or invariant_algebra)")->required();
  flag->add_flag("--char-classes", inv.char_classes, "Characteristic classes omega_i");
  flag->add_flag("--traces", inv.traces, "Traces of every class");
  flag->add_option("--against", inv.against, "Reference form for --traces (default: all)");
  flag->add_option("--positivity", inv.positivity, "Positivity profile of a class");
  flag->add_option("--cone", inv.cone, "Balanced-cone decision for classes")->expected(0, -1);
  flag->add_option("--astheno-scaling", inv.astheno_scaling, "F1 F2 OMEGA P")->expected(4);
  flag->add_option("--root-pairing", inv.root_pairing, "Root system (A2 or G2)");
  flag->add_option("--seed", inv.seed, "Seed for randomized checks");

  auto* quad = app.add_subcommand("quad", "Invariant quadratic forms");
  quad->add_option("--rank", inv.rank_file, "Quadratic form file");
  quad->add_option("--invariants", inv.invariants, "Weyl group S_N invariants");
}

Invocation parse_invocation(const std::vector<std::string>& args, const std::string& file) {
  if (args.empty()) throw UsageError("empty command");
  Invocation inv;
  CLI::App app;
  register_commands(app, inv);
  std::vector<std::string> argv{args[0]};
  if (args[0] != "quad") argv.push_back(file);
  argv.insert(argv.end(), args.begin() + 1, args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string("bad command arguments: ") + e.what());
  }
  inv.command = args[0];
  return inv;
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string rationals(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(q.get_str());
  return "[" + join(parts, ", ") + "]";
}

ComplexLieAlgebra complex_algebra(const LieAlgebraPayload& p) {
  if (p.pairs.empty()) throw UsageError("the algebra has no complex_structure");
  return ComplexLieAlgebra::make(LieAlgebra::from_spec(p.spec),
                                 AlmostComplexStructure::from_pairs(p.spec.dim, p.pairs));
}

template <class T>
Named<T> select(const Named<T>& all, const std::optional<std::string>& name) {
  if (!name) return all;
  for (const auto& entry : all)
    if (entry.first == *name) return {entry};
  throw UsageError("unknown metric \"" + *name + "\"");
}

void add_classification(CheckReport& r, const std::string& prefix, const HermitianCandidate& cand) {
  bool positive = is_positive(cand);
  r.add(prefix + "positive", positive);
  if (!positive) return;
  MetricReport m = classify(cand);
  auto flag = [&](const char* name, bool ok) {
    auto it = m.witnesses.find(name);
    r.add(prefix + name, ok, std::nullopt,
          it == m.witnesses.end() ? std::nullopt : std::optional(it->second.to_string()));
  };
  flag("kahler", m.kahler);
  flag("balanced", m.balanced);
  flag("skt", m.skt);
  if (m.astheno) flag("astheno", *m.astheno);
  else r.add_undefined(prefix + "astheno", "complex dimension < 3");
  flag("gauduchon", m.gauduchon);
}

TorusBundleSpec lie_bundle(const BundlePayload& b) {
  if (!b.lie_base) throw UsageError("this command needs a Lie-algebra base");
  return {complex_algebra(*b.lie_base), b.curvatures};
}

// Degree-2 classes addressable by name in flag_A / invariant_algebra /
// ring-base bundle manifests.
struct ClassContext {
  InvariantFormAlgebra alg;
  std::optional<FlagA> flag;
  Named<ClassDef> defs;

  Element build(const ClassDef& d) const {
    if (d.omega_combo) return flag->omega_combo(*d.omega_combo);
    std::vector<Rational> c(alg.size(), Rational(0));
    for (const auto& [label, q] : d.coeffs) c[*alg.index_of(label)] = q;
    return Element::linear(alg, c);
  }

  Element resolve(const std::string& name) const {
    for (const auto& [n, d] : defs)
      if (n == name) return build(d);
    if (name == "all")
      return Element::linear(alg, std::vector<Rational>(alg.size(), Rational(1)));
    if (auto idx = alg.index_of(name)) return Element::generator(alg, *idx);
    if (flag && name.rfind("omega", 0) == 0) {
      auto classes = flag->char_classes();
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (name == "omega" + std::to_string(i + 1)) return classes[i];
    }
    throw UsageError("unknown class \"" + name + "\"");
  }
};

ClassContext class_context(const Manifest& m) {
  if (m.flag) {
    FlagA flag(m.flag->n);
    return {flag.algebra(), flag, m.flag->classes};
  }
  if (m.invariant) {
    const auto& inv = *m.invariant;
    InvariantFormAlgebra alg = inv.ring ? InvariantFormAlgebra(inv.ring->names, inv.ring->orders)
                                        : root_algebra(RootSystem::by_name(*inv.root_system));
    return {alg, std::nullopt, inv.classes};
  }
  if (m.bundle && m.bundle->ring_base)
    return {InvariantFormAlgebra(m.bundle->ring_base->names, m.bundle->ring_base->orders),
            std::nullopt, m.bundle->ring_metrics};
  throw UsageError("manifest kind " + m.kind + " has no invariant-form algebra");
}

std::string zero_labels(const InvariantFormAlgebra& alg, const std::vector<std::size_t>& idx) {
  std::vector<std::string> names;
  for (std::size_t a : idx) names.push_back(alg.names()[a]);
  return join(names);
}

CheckReport check_algebra(const Manifest& m) {
  CheckReport r;
  auto check_lie = [&](const LieAlgebraPayload& p, const std::string& prefix) {
    JacobiReport jac = validate(p.spec);
    r.add(prefix + "jacobi", jac.ok, std::nullopt,
          jac.ok ? std::nullopt
                 : std::optional(jac.message.empty() ? jac.defect.to_string() : jac.message));
    if (!jac.ok) return false;
    if (p.pairs.empty()) {
      r.add_undefined(prefix + "integrable", "no complex_structure");
      return true;
    }
    auto integ = is_integrable(LieAlgebra::from_spec(p.spec),
                               AlmostComplexStructure::from_pairs(p.spec.dim, p.pairs));
    r.add(prefix + "integrable", integ.ok, std::nullopt,
          integ.ok ? std::nullopt : std::optional(integ.obstruction.to_string()));
    return integ.ok;
  };
  if (m.lie) {
    check_lie(*m.lie, "");
    return r;
  }
  if (!m.bundle || !m.bundle->lie_base)
    throw UsageError("check-algebra needs a lie_algebra or Lie-based bundle manifest");
  if (!check_lie(*m.bundle->lie_base, "base.")) return r;
  try {
    ComplexLieAlgebra total = total_space(lie_bundle(*m.bundle));
    r.add("total.constructed", true, std::to_string(total.dim()) + " generators");
    r.add("total.jacobi", validate(total.algebra().spec()).ok);
    r.add("total.integrable", is_integrable(total.algebra(), total.complex_structure()).ok);
  } catch (const UsageError&) {
    throw;
  } catch (const InputError& e) {
    r.add("total.constructed", false, std::nullopt, std::string(e.what()));
  }
  return r;
}

CheckReport classify_command(const Invocation& inv, const Manifest& m) {
  CheckReport r;
  if (m.lie) {
    ComplexLieAlgebra alg = complex_algebra(*m.lie);
    for (const auto& [name, f] : select(m.lie->metrics, inv.metric))
      add_classification(r, name + ".", HermitianCandidate::make(alg, f));
    return r;
  }
  if (!m.bundle) throw UsageError("classify needs a lie_algebra or bundle manifest");
  TorusBundleSpec spec = lie_bundle(*m.bundle);
  ComplexLieAlgebra total = total_space(spec);
  for (const auto& [name, f] : select(m.bundle->metrics, inv.metric))
    add_classification(r, name + ".", HermitianCandidate::make(total, canonical_metric(spec, f)));
  return r;
}

CheckReport bundle_command(const Invocation& inv, const Manifest& m) {
  if (!m.bundle) throw UsageError("bundle needs a bundle manifest");
  int modes = inv.verify_prop31 + inv.matsuo + inv.traces;
  if (modes != 1) throw UsageError("bundle needs exactly one of --verify-prop31, --matsuo, --traces");
  const BundlePayload& b = *m.bundle;
  CheckReport r;

  if (b.ring_base) {
    if (inv.verify_prop31) throw UsageError("--verify-prop31 needs a Lie-algebra base");
    ClassContext ctx = class_context(m);
    std::vector<Element> curv;
    for (const ClassDef& d : b.ring_curvatures) curv.push_back(ctx.build(d));
    for (const auto& [name, def] : select(b.ring_metrics, inv.metric)) {
      Element f = ctx.build(def);
      if (inv.matsuo) {
        if (curv.size() != 2) throw UsageError("--matsuo needs exactly two curvatures");
        unsigned n_total = ctx.alg.top_degree() + 1;
        MatsuoResult res = matsuo_condition(curv[0], curv[1], f, n_total);
        r.add("matsuo." + name, res.value, res.value ? "true" : "false");
        if (res.vacuous) r.warnings.push_back(name + ": " + res.warning);
      } else {
        bool all_zero = true;
        for (std::size_t l = 0; l < curv.size(); ++l) {
          Rational t = trace_in_algebra(curv[l], f);
          all_zero = all_zero && sgn(t) == 0;
          r.add_value("trace." + name + ".w" + std::to_string(l + 1), t.get_str());
        }
        r.add("balanced_criterion." + name, all_zero);
      }
    }
    return r;
  }

  TorusBundleSpec spec = lie_bundle(b);
  if (inv.verify_prop31) {
    ComplexLieAlgebra total = total_space(spec);
    std::size_t n = total.complex_dim();
    for (const auto& [name, f] : select(b.metrics, inv.metric)) {
      std::vector<unsigned> ks;
      if (inv.k) ks.push_back(*inv.k);
      else for (unsigned k = 1; k + 2 <= n; ++k) ks.push_back(k);
      for (unsigned k : ks) {
        Prop31Report p = verify_prop31(spec, f, k);
        r.add("prop31." + name + ".k" + std::to_string(k), p.holds, p.lhs.to_string(),
              p.holds ? std::nullopt : std::optional(p.difference.to_string()));
      }
    }
  } else if (inv.matsuo) {
    if (spec.curvatures.size() != 2) throw UsageError("--matsuo needs exactly two curvatures");
    ComplexLieAlgebra total = total_space(spec);
    auto n_total = static_cast<unsigned>(total.complex_dim());
    for (const auto& [name, f] : select(b.metrics, inv.metric)) {
      MatsuoResult res = matsuo_condition(spec.curvatures[0], spec.curvatures[1], f, n_total);
      r.add("matsuo." + name, res.value, res.value ? "true" : "false");
      if (res.vacuous) r.warnings.push_back(name + ": " + res.warning);
      MetricReport cls = classify(HermitianCandidate::make(total, canonical_metric(spec, f)));
      bool astheno = cls.astheno.value_or(false);
      r.add("classify_agrees." + name, astheno == res.value, astheno ? "true" : "false");
    }
  } else {
    ComplexLieAlgebra total = total_space(spec);
    for (const auto& [name, f] : select(b.metrics, inv.metric)) {
      std::vector<Scalar> traces = balanced_trace_criterion(spec, f);
      bool all_zero = true;
      for (std::size_t l = 0; l < traces.size(); ++l) {
        all_zero = all_zero && traces[l].is_zero();
        r.add_value("trace." + name + ".w" + std::to_string(l + 1), traces[l].to_string());
      }
      r.add("balanced_criterion." + name, all_zero);
      MetricReport cls = classify(HermitianCandidate::make(total, canonical_metric(spec, f)));
      r.add("classify_agrees." + name, cls.balanced == all_zero, cls.balanced ? "true" : "false");
    }
  }
  return r;
}

CheckReport root_pairing_command(const Invocation& inv, const Manifest& m) {
  RootSystem roots = RootSystem::by_name(*inv.root_pairing);
  if (roots.rank() != 2) throw UsageError("root pairing is defined for rank-2 systems (A2, G2)");
  CheckReport r;
  Element p = root_pairing_form(roots);
  r.add_value("form", p.to_string());
  const InvariantFormAlgebra& alg = p.algebra();
  unsigned power_needed = alg.top_degree() - 2;

  // lambda additive <=> lambda(r) = c_1 x + c_2 y for the simple-root values.
  auto f_lambda = [&](const Rational& x, const Rational& y) {
    std::vector<Rational> c;
    for (std::size_t a = 0; a < roots.size(); ++a)
      c.push_back(roots.coordinates(a)[0] * x + roots.coordinates(a)[1] * y);
    return Element::linear(alg, c);
  };
  if (power_needed == 1) {
    // linear in lambda: vanishing on the two basis directions is symbolic
    Rational t1 = (p * f_lambda(1, 0)).top();
    Rational t2 = (p * f_lambda(0, 1)).top();
    r.add("symbolic_vanishing", sgn(t1) == 0 && sgn(t2) == 0,
          "top = " + t1.get_str() + " x + " + t2.get_str() + " y");
  }
  unsigned samples = m.invariant ? m.invariant->samples : 100;
  std::mt19937_64 rng(inv.seed);
  unsigned vanished = 0;
  std::optional<std::string> counterexample;
  for (unsigned s = 0; s < samples; ++s) {
    Rational x(static_cast<long>(rng() % 97 + 1), static_cast<long>(rng() % 13 + 1));
    Rational y(static_cast<long>(rng() % 97 + 1), static_cast<long>(rng() % 13 + 1));
    x.canonicalize();
    y.canonicalize();
    Element f = f_lambda(x, y);
    if (!kahler_lambda_check(roots, f.linear_coefficients()))
      throw std::logic_error("sampled lambda is not additive");
    Rational top = (p * power(f, power_needed)).top();
    if (sgn(top) == 0) ++vanished;
    else if (!counterexample) counterexample = "lambda simple = (" + x.get_str() + ", " + y.get_str() + ")";
  }
  r.add("random_vanishing", vanished == samples,
        std::to_string(vanished) + "/" + std::to_string(samples), counterexample);
  return r;
}

CheckReport flag_command(const Invocation& inv, const Manifest& m) {
  int modes = inv.char_classes + inv.traces + inv.positivity.has_value() + !inv.cone.empty() +
              !inv.astheno_scaling.empty() + inv.root_pairing.has_value();
  if (modes != 1)
    throw UsageError("flag needs exactly one of --char-classes, --traces, --positivity, --cone, "
                     "--astheno-scaling, --root-pairing");
  if (inv.root_pairing) return root_pairing_command(inv, m);
  if (!m.flag && !m.invariant) throw UsageError("flag needs a flag_A or invariant_algebra manifest");
  ClassContext ctx = class_context(m);
  CheckReport r;

  if (inv.char_classes) {
    if (!ctx.flag) throw UsageError("--char-classes needs a flag_A manifest");
    auto classes = ctx.flag->char_classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      Rational sum = 0;
      for (const Rational& c : classes[i].linear_coefficients()) sum += c;
      r.add_value("omega" + std::to_string(i + 1), classes[i].to_string());
      r.add("omega" + std::to_string(i + 1) + ".coefficient_sum", sum == 2, sum.get_str());
    }
  } else if (inv.traces) {
    Element f = ctx.resolve(inv.against.value_or("all"));
    std::vector<std::string> names;
    if (ctx.flag)
      for (unsigned i = 1; i < ctx.flag->n(); ++i) names.push_back("omega" + std::to_string(i));
    for (const auto& [name, d] : ctx.defs) names.push_back(name);
    for (const auto& name : names)
      r.add_value("trace." + name, trace_in_algebra(ctx.resolve(name), f).get_str());
  } else if (inv.positivity) {
    Element e = ctx.resolve(*inv.positivity);
    PositivityProfile p = positivity_profile(e);
    r.add("profile", p.kind != PositivityProfile::Kind::indefinite, to_string(p.kind));
    if (p.kind == PositivityProfile::Kind::weak) {
      r.add_value("zero_directions", zero_labels(ctx.alg, p.zero_generators));
      r.add_value("zero_count", std::to_string(p.zero_generators.size()));
    }
  } else if (!inv.cone.empty()) {
    std::vector<Element> classes;
    for (const auto& name : inv.cone) classes.push_back(ctx.resolve(name));
    ConeDecision d = ctx.flag ? cone_feasibility(*ctx.flag, classes)
                              : cone_feasibility(ctx.alg, classes);
    if (d.kind == ConeDecision::Kind::certificate) {
      r.add_value("decision", "certificate");
      r.add_value("mu", rationals(d.mu));
      bool ok = true;
      for (const Rational& x : d.mu) ok = ok && sgn(x) > 0;
      for (const Element& c : classes) {
        Rational pairing = 0;
        auto coeffs = c.linear_coefficients();
        for (std::size_t a = 0; a < coeffs.size(); ++a) pairing += coeffs[a] * d.mu[a];
        ok = ok && sgn(pairing) == 0;
      }
      r.add("certificate_verified", ok);
      r.add_value("metric_lambda", rationals(d.metric_lambda()));
    } else {
      r.add_value("decision", "witness");
      r.add_value("t", rationals(d.t));
      Element combo(ctx.alg);
      for (std::size_t i = 0; i < classes.size(); ++i) combo += classes[i] * d.t[i];
      auto prof = positivity_profile(combo);
      bool ok = !combo.is_zero() && prof.kind != PositivityProfile::Kind::indefinite &&
                combo.linear_coefficients() == d.combination;
      r.add("witness_verified", ok, combo.to_string());
      if (d.witness_additive) r.add_value("witness_closed", *d.witness_additive ? "true" : "false");
    }
  } else {
    const auto& a = inv.astheno_scaling;
    unsigned p = 0;
    try {
      p = static_cast<unsigned>(std::stoul(a[3]));
    } catch (const std::exception&) {
      throw UsageError("--astheno-scaling power must be a natural number");
    }
    Element f1 = ctx.resolve(a[0]), f2 = ctx.resolve(a[1]), omega = ctx.resolve(a[2]);
    Element omega_p = power(omega, p);
    const Element fac1[] = {f1, f1, omega_p};
    const Element fac2[] = {f2, f2, omega_p};
    Rational top1 = top_intersection(fac1), top2 = top_intersection(fac2);
    std::string suffix = "^2." + a[2] + "^" + a[3];
    r.add_value("top." + a[0] + suffix, top1.get_str());
    r.add_value("sign." + a[0] + suffix, std::to_string(sgn(top1)));
    r.add_value("top." + a[1] + suffix, top2.get_str());
    r.add_value("sign." + a[1] + suffix, std::to_string(sgn(top2)));
    try {
      Rational t2 = astheno_scaling(f1, f2, omega, p);
      r.add_value("t_squared", t2.get_str());
      Element combined = (f1 * f1) * t2 + f2 * f2;
      r.add("resubstitution", sgn((combined * omega_p).top()) == 0);
    } catch (const InputError& e) {
      r.add("t_squared", false, std::nullopt, std::string(e.what()));
    }
  }
  return r;
}

Matrix<Rational> load_quadratic(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ManifestError(file.string() + ": " + e.what());
  }
  auto q = [&](const json& v) {
    Scalar s = scalar_from_json(v);
    if (!s.is_rational()) throw InputError("quadratic coefficients must be rational");
    return s.re();
  };
  if (!j.is_object()) throw ManifestError(file.string() + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "matrix" && key != "variables" && key != "monomials" && key != "description")
      throw ManifestError(file.string() + ": /" + key + ": unknown field \"" + key + "\"");
  if (j.contains("matrix")) {
    Matrix<Rational> out;
    for (const auto& row : j["matrix"]) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(q(v));
      out.push_back(std::move(r));
    }
    return out;
  }
  if (!j.contains("variables") || !j.contains("monomials"))
    throw ManifestError(file.string() + ": expected matrix or variables + monomials");
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms;
  for (const auto& t : j["monomials"]) {
    if (!t.is_array() || t.size() != 3) throw ManifestError("monomial must be [i, j, coefficient]");
    long a = t[0].get<long>(), b = t[1].get<long>();
    if (a < 1 || b < 1) throw ManifestError("monomial indices are 1-based");
    terms.emplace_back(a - 1, b - 1, q(t[2]));
  }
  return quadratic_from_monomials(j["variables"].get<std::size_t>(), terms);
}

std::string quadratic_string(const Matrix<Rational>& q) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i; j < q.size(); ++j) {
      Rational c = i == j ? q[i][i] : Rational(2 * q[i][j]);
      if (sgn(c) == 0) continue;
      out << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
      if (abs(c) != 1) out << Rational(abs(c)).get_str() << " ";
      out << "c" << i + 1;
      if (i == j) out << "^2";
      else out << " c" << j + 1;
      first = false;
    }
  return first ? "0" : out.str();
}

CheckReport quad_command(const Invocation& inv, const std::filesystem::path& base_dir) {
  if (inv.rank_file.has_value() == inv.invariants.has_value())
    throw UsageError("quad needs exactly one of --rank, --invariants");
  CheckReport r;
  if (inv.rank_file) {
    std::filesystem::path file = *inv.rank_file;
    if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
    Matrix<Rational> q = load_quadratic(file);
    std::size_t rk = quadratic_rank(q);
    r.add_value("rank", std::to_string(rk));
    r.add("maximal_rank", rk == q.size(), std::to_string(q.size()));
    return r;
  }
  unsigned n = *inv.invariants;
  auto basis = invariant_quadratics(n);
  r.add("dimension_one", basis.size() == 1, std::to_string(basis.size()));
  if (basis.size() == 1) {
    const Matrix<Rational>& q = basis[0];
    r.add_value("generator", quadratic_string(q));
    // sum x_i^2 restricted to sum x = 0 has Gram matrix Id + (all ones)
    Rational scale = q[0][0] / 2;
    bool proportional = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j)
        proportional = proportional && q[i][j] == scale * (i == j ? 2 : 1);
    r.add("proportional_to_sum_of_squares", proportional);
  }
  return r;
}

}  // namespace

CheckReport run(const Invocation& inv, const Manifest& m, const std::filesystem::path& base_dir) {
  CheckReport r;
  if (inv.command == "check-algebra") r = check_algebra(m);
  else if (inv.command == "classify") r = classify_command(inv, m);
  else if (inv.command == "bundle") r = bundle_command(inv, m);
  else if (inv.command == "flag") r = flag_command(inv, m);
  else if (inv.command == "quad") r = quad_command(inv, base_dir);
  else throw UsageError("unknown command \"" + inv.command + "\"");
  r.command = inv.command;
  r.subject = inv.command == "quad" ? (inv.rank_file ? *inv.rank_file : "S_" + std::to_string(*inv.invariants))
                                    : (m.name.empty() ? inv.file : m.name);
  return r;
}

CheckReport run(const Invocation& inv, const std::filesystem::path& base_dir) {
  if (inv.command == "quad") return run(inv, Manifest{}, base_dir);
  Manifest m = load_manifest(inv.file);
  return run(inv, m, base_dir);
}

}  // namespace hermcheck

#include "kronav/io/certificate.hpp"

#include <functional>

#include <json.hpp>

#include "kronav/error.hpp"
#include "kronav/geometry/minima.hpp"

namespace kronav {

namespace {

using json = nlohmann::json;

constexpr const char* kFormat = "kronav-certificate/1";

json jrat(const Rational& x) { return to_string(x); }
json jint(const Integer& x) { return to_string(x); }

json jints(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(jint(x));
  return out;
}

json jelem(const FieldElement& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(jrat(c));
  return out;
}

json jelems(const std::vector<FieldElement>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(jelem(x));
  return out;
}

json jiv(const Interval& x) { return {{"lo", jrat(x.lo())}, {"hi", jrat(x.hi())}}; }

json jpoly(const IntPoly& f) { return jints(f.coeffs()); }

json jbound(const BoundReport& r) {
  json items = json::array();
  for (const auto& item : r.items) items.push_back({{"name", item.name}, {"value", jiv(item.value)}});
  return {{"kappa", r.kappa},
          {"ell", r.ell},
          {"items", items},
          {"prefactor", jiv(r.prefactor)},
          {"epsilon_factor", jrat(r.epsilon_factor)},
          {"additive", jiv(r.additive)},
          {"value", jiv(r.value)},
          {"simplified", jiv(r.simplified)}};
}

json jtheta_system(const ThetaSystem& s) {
  json heights = json::array();
  for (const auto& h : s.heights) heights.push_back(jiv(h));
  json minpolys = json::array();
  for (const auto& f : s.minpolys) minpolys.push_back(jpoly(f));
  return {{"coords", jelems(s.thetas)},
          {"minpolys", minpolys},
          {"degrees", s.degrees},
          {"heights", heights},
          {"e", s.e},
          {"A", jint(s.a)},
          {"A_bound", jiv(s.a_bound)},
          {"C1", jiv(s.c1)}};
}

json jconstants(const Setup& s) {
  json alpha = json::array();
  for (const auto& c : s.alpha().alpha) alpha.push_back(jrat(c));
  json out = {{"kappa", kappa(s.inputs.t, s.ell)},
              {"ell", s.ell},
              {"ell_overridden", s.ell_overridden},
              {"K1_degree", static_cast<int>(s.k1.size())},
              {"c_K", jiv(s.c_k.value)},
              {"alpha", alpha},
              {"h_alpha", jiv(s.alpha().h_alpha)},
              {"h_alpha_inv", jiv(s.alpha().h_alpha_inv)},
              {"covolume", jiv(s.covolume)},
              {"D_K_M", jrat(s.inputs.disc_m)}};
  if (s.theorem == 1) {
    out["M_S"] = s.m_s;
  } else {
    out["E_alpha"] = jiv(e_alpha(s.inputs, *s.sub));
    out["d_prime"] = jint(s.d_prime);
  }
  return out;
}

json jdeterminant(const Setup& s) {
  return {{"gram", jelem(s.det.gram)},
          {"covolume", jiv(s.det.value)},
          {"closed_form", jiv(s.det.closed_form)},
          {"module_disc_form", jiv(s.det.module_disc_form)},
          {"closed_form_agrees", s.det.closed_form_agrees},
          {"module_disc_form_agrees", s.det.module_disc_form_agrees}};
}

Rational rat_of(const json& j) { return parse_rational(j.get<std::string>()); }
Integer int_of(const json& j) {
  const Rational r = rat_of(j);
  require(r.get_den() == 1, Errc::Validation, "expected an integer");
  return r.get_num();
}

std::vector<Integer> ints_of(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(int_of(x));
  return out;
}

FieldElement elem_of(const FieldPtr& e, const json& j) {
  std::vector<Rational> coords;
  for (const auto& x : j) coords.push_back(rat_of(x));
  require(coords.size() == static_cast<std::size_t>(e->degree()), Errc::Validation, "element has wrong length");
  return FieldElement(e, coords);
}

std::vector<FieldElement> elems_of(const FieldPtr& e, const json& j) {
  std::vector<FieldElement> out;
  for (const auto& x : j) out.push_back(elem_of(e, x));
  return out;
}

Interval iv_of(const json& j) { return Interval(rat_of(j.at("lo")), rat_of(j.at("hi"))); }

bool same_elems(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].coords() != b[i].coords()) return false;
  }
  return true;
}

std::string stamp_of(json doc) {
  doc.erase("certificate_stamp");
  return sha256_hex(doc.dump(2));
}

using Check = std::function<std::string()>;  // empty string on success

}  // namespace

std::string certificate_document(const Certificate& c, const Problem& problem, const Setup& setup) {
  json a = json::array();
  for (const auto& x : problem.a) a.push_back(jrat(x));

  json solution = {{"y_coords", jints(c.witness.coeffs)},
                   {"y_embedded", jelems(c.witness.embedded)},
                   {"d_prime", jint(c.d_prime)},
                   {"multiplier", jint(c.multiplier)},
                   {"x_coords", jints(c.x_coords)},
                   {"x_embedded", jelems(c.x_embedded)},
                   {"p", jints(c.p)}};
  solution[c.theorem == 1 ? "q" : "g"] = jint(c.q);
  if (c.theorem == 1) solution["xi"] = jints(c.witness.xi);

  json nonvanishing = json::array();
  for (const auto& cert : c.witness.certificates) {
    nonvanishing.push_back({{"system", cert.system},
                            {"polynomial", cert.polynomial},
                            {"value", jelem(cert.value)},
                            {"enclosure", jiv(cert.enclosure)},
                            {"bits", cert.bits}});
  }
  const json avoidance = {{"kind", c.theorem == 1 ? "polynomials" : "sublattices"},
                          {"witness_norm", jelem(c.witness.norm)},
                          {"witness_norm_enclosure", jiv(c.witness.norm_enclosure)},
                          {"witness_bound", jiv(c.witness.bound)},
                          {"nonvanishing", nonvanishing}};

  json residuals = json::array();
  for (const auto& r : c.residuals) residuals.push_back({{"value", jelem(r)}, {"enclosure", jiv(evaluate(r, 64))}});

  const Interval q_abs(Rational(abs(c.q)));
  const json bounds = {{"theorem", jbound(c.bound)},
                       {"ratio", jiv(c.x_norm_enclosure / c.bound.value)},
                       {"kr_sharp", jiv(c.kr_sharp)},
                       {"kr_simplified", jiv(c.kr_simplified)},
                       {"search_cap", jint(c.search_cap)},
                       {"search_bits", c.search_bits},
                       {"h_theta_bound", jiv(c.h_theta_bound)}};

  Interval h_max(0);
  for (const auto& h : c.thetas.heights) h_max = max(h_max, h);
  const json verdicts = {{"x_within_theorem_bound", c.x_norm_enclosure.hi() <= c.bound.value.lo()},
                         {"q_within_kr_sharp", q_abs.hi() <= c.kr_sharp.lo()},
                         {"q_within_kr_simplified", q_abs.hi() <= c.kr_simplified.lo()},
                         {"h_theta_within_bound", h_max.hi() <= c.h_theta_bound.lo()},
                         {"determinant_closed_form_agrees", setup.det.closed_form_agrees},
                         {"module_disc_form_agrees", setup.det.module_disc_form_agrees}};

  json doc = {{"format", kFormat},
              {"theorem", c.theorem},
              {"problem_hash", c.problem_hash},
              {"epsilon", jrat(problem.epsilon)},
              {"a", a},
              {"solution", solution},
              {"theta_system", jtheta_system(c.thetas)},
              {"avoidance", avoidance},
              {"residuals", residuals},
              {"norms", {{"x", jelem(c.x_norm)}, {"x_enclosure", jiv(c.x_norm_enclosure)}}},
              {"bounds", bounds},
              {"constants", jconstants(setup)},
              {"determinant", jdeterminant(setup)},
              {"verdicts", verdicts}};
  if (c.scaled) doc["scaled_theta_system"] = jtheta_system(*c.scaled);
  doc["certificate_stamp"] = stamp_of(doc);
  return doc.dump(2) + "\n";
}

bool VerifyReport::passed() const {
  if (hash_mismatch) return false;
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return true;
}

int VerifyReport::exit_code() const {
  if (hash_mismatch) return 2;
  return passed() ? 0 : 1;
}

const VerifyItem* VerifyReport::find(const std::string& name) const {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

VerifyReport verify_certificate(const std::string& text, const Problem& problem) {
  VerifyReport report;
  auto run = [&](const std::string& name, const Check& check) {
    VerifyItem item{name, false, ""};
    try {
      item.detail = check();
      item.passed = item.detail.empty();
      if (item.passed) item.detail = "ok";
    } catch (const std::exception& ex) {
      item.detail = ex.what();
    }
    report.items.push_back(std::move(item));
  };

  json doc;
  try {
    doc = json::parse(text);
    require(doc.is_object() && doc.value("format", "") == kFormat, Errc::Validation, "not a kronav certificate");
    for (const char* key : {"problem_hash", "certificate_stamp", "theorem", "solution", "theta_system", "avoidance",
                            "residuals", "norms", "bounds", "constants"}) {
      require(doc.contains(key), Errc::Validation, std::string("certificate lacks '") + key + "'");
    }
  } catch (const std::exception& ex) {
    report.items.push_back({"certificate_format", false, ex.what()});
    return report;
  }

  const std::string recorded_hash = doc.value("problem_hash", "");
  if (recorded_hash != problem.hash) {
    report.hash_mismatch = true;
    report.items.push_back({"problem_hash", false, "certificate was issued for problem " + recorded_hash +
                                                       ", this problem hashes to " + problem.hash});
    return report;
  }
  report.items.push_back({"problem_hash", true, "ok"});

  run("certificate_stamp", [&]() -> std::string {
    return stamp_of(doc) == doc.at("certificate_stamp").get<std::string>() ? "" : "stamp does not match the content";
  });

  const int theorem = doc.value("theorem", 0);
  const FieldPtr& e = problem.e;
  const Rational& eps = problem.epsilon;
  const json& sol = doc.at("solution");

  std::optional<Setup> setup;
  std::string setup_error;
  try {
    setup = prepare(problem, theorem, eps);
  } catch (const std::exception& ex) {
    setup_error = ex.what();
  }
  auto need_setup = [&] { require(setup.has_value(), Errc::Validation, "cannot rebuild constants: " + setup_error); };

  auto y_coords = [&] { return ints_of(sol.at("y_coords")); };
  auto x_coords = [&] { return ints_of(sol.at("x_coords")); };
  auto p_values = [&] { return ints_of(sol.at("p")); };

  run("x_consistency", [&]() -> std::string {
    need_setup();
    const Integer multiplier = int_of(sol.at("multiplier"));
    if (theorem == 1) {
      if (multiplier != int_of(sol.at("q"))) return "multiplier differs from q";
      const MinimaResult minima = successive_minima(problem.lattice);
      if (grid_combination(minima, ints_of(sol.at("xi"))) != y_coords()) return "y is not the recorded grid point";
    } else {
      const Integer d_prime = int_of(sol.at("d_prime"));
      if (d_prime != setup->d_prime) return "d_prime is not the product of the sublattice indices";
      if (multiplier != int_of(sol.at("g")) * d_prime + 1) return "multiplier differs from g d_prime + 1";
    }
    const auto y = y_coords();
    const auto x = x_coords();
    if (x.size() != y.size()) return "x and y have different lengths";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != multiplier * y[i]) return "x is not multiplier * y";
    }
    if (!same_elems(problem.lattice.point(y), elems_of(e, sol.at("y_embedded")))) return "y embedding mismatch";
    if (!same_elems(problem.lattice.point(x), elems_of(e, sol.at("x_embedded")))) return "x embedding mismatch";
    return "";
  });

  run("thetas", [&]() -> std::string {
    need_setup();
    const auto thetas = problem.forms.apply(problem.lattice.point(y_coords()));
    const ThetaSystem s = make_theta_system(thetas, setup->ell);
    if (jtheta_system(s) != doc.at("theta_system")) return "theta system differs from L(y)";
    if (theorem == 2) {
      std::vector<FieldElement> scaled;
      for (const auto& t : thetas) scaled.push_back(t * Rational(setup->d_prime));
      if (jtheta_system(make_theta_system(scaled, setup->ell)) != doc.at("scaled_theta_system")) {
        return "scaled theta system differs from d_prime L(y)";
      }
    }
    return "";
  });

  run("avoidance", [&]() -> std::string {
    const auto y = y_coords();
    const auto x = x_coords();
    if (theorem == 1) {
      const auto ye = problem.lattice.point(y);
      if (!avoids(*problem.systems, ye)) return "y lies in the exceptional set";
      if (!avoids(*problem.systems, problem.lattice.point(x))) return "x lies in the exceptional set";
      for (const auto& item : doc.at("avoidance").at("nonvanishing")) {
        const auto& system = problem.systems->systems().at(item.at("system").get<std::size_t>());
        const FieldElement v = system.at(item.at("polynomial").get<std::size_t>()).evaluate(ye);
        if (v.is_zero() || v.coords() != elem_of(e, item.at("value")).coords()) return "recorded P(y) is wrong";
        if (iv_of(item.at("enclosure")).contains_zero()) return "nonvanishing enclosure contains zero";
      }
    } else {
      if (!avoids(problem.sublattices, y)) return "y lies in a sublattice";
      if (!avoids(problem.sublattices, x)) return "x lies in a sublattice";
    }
    return "";
  });

  run("residuals", [&]() -> std::string {
    const auto values = problem.forms.apply(problem.lattice.point(x_coords()));
    const auto p = p_values();
    const json& recorded = doc.at("residuals");
    if (p.size() != values.size() || recorded.size() != values.size()) return "wrong number of residuals";
    const FieldElement eps_e(e, eps);
    for (std::size_t j = 0; j < values.size(); ++j) {
      const FieldElement r = values[j] - FieldElement(e, problem.a[j] + Rational(p[j]));
      const std::string tag = "residual " + std::to_string(j + 1);
      if (compare(abs(r), eps_e) >= 0) return tag + ": |L(x) - a - p| >= epsilon";
      if (r.coords() != elem_of(e, recorded[j].at("value")).coords()) return tag + " differs from the record";
    }
    return "";
  });

  run("witness_norm_bound", [&]() -> std::string {
    need_setup();
    const auto y = problem.lattice.point(y_coords());
    const Interval norm = evaluate(sup_norm(y), 64);
    const std::size_t rank = problem.lattice.rank();
    const Interval bound = theorem == 1
                               ? grid_witness_bound(rank, setup->m_s, setup->alpha().h_alpha, setup->covolume)
                               : sublattice_bound(problem.sublattices, rank, setup->alpha().h_alpha, setup->covolume);
    if (jiv(bound) != doc.at("avoidance").at("witness_bound")) return "recorded witness bound differs";
    const bool ok = theorem == 1 ? norm.hi() <= bound.lo() : norm.hi() < bound.lo();
    return ok ? "" : "|y| exceeds the witness bound";
  });

  run("norm_bound", [&]() -> std::string {
    need_setup();
    const FieldElement norm = sup_norm(problem.lattice.point(x_coords()));
    if (norm.coords() != elem_of(e, doc.at("norms").at("x")).coords()) return "recorded |x| differs";
    const BoundReport bound = theorem_bound(*setup, eps);
    return evaluate(norm, 64).hi() <= bound.value.lo() ? "" : "|x| exceeds the theorem bound";
  });

  run("bound_value", [&]() -> std::string {
    need_setup();
    return jbound(theorem_bound(*setup, eps)) == doc.at("bounds").at("theorem") ? ""
                                                                               : "recorded theorem bound differs";
  });

  run("constants", [&]() -> std::string {
    need_setup();
    if (jconstants(*setup) != doc.at("constants")) return "recorded constants differ";
    if (jdeterminant(*setup) != doc.at("determinant")) return "recorded determinant data differs";
    const json& ts = doc.at(theorem == 1 ? "theta_system" : "scaled_theta_system");
    std::vector<Interval> heights;
    for (const auto& h : ts.at("heights")) heights.push_back(iv_of(h));
    const std::vector<int> degrees = ts.at("degrees").get<std::vector<int>>();
    const int e_deg = ts.at("e").get<int>();
    const Interval c1 = liouville_constant(heights, degrees, e_deg);
    const auto t = static_cast<long>(heights.size());
    if (jiv(kr_bound_sharp(t, e_deg, c1, eps)) != doc.at("bounds").at("kr_sharp")) return "kr_sharp differs";
    Interval h_max(0);
    for (const auto& h : heights) h_max = max(h_max, h);
    if (jiv(kr_bound(t, setup->ell, h_max, eps)) != doc.at("bounds").at("kr_simplified")) {
      return "kr_simplified differs";
    }
    return "";
  });
  return report;
}

}  // namespace kronav

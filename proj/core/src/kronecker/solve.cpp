#include "kronav/kronecker/solve.hpp"

#include <algorithm>

#include "kronav/error.hpp"
#include "kronav/geometry/enumerate.hpp"
#include "kronav/geometry/minima.hpp"
#include "kronav/io/certificate.hpp"

namespace kronav {

namespace {

Integer floor_hi(const Interval& x) { return floor(x.hi()); }

Interval max_height(const ThetaSystem& s) {
  Interval out(0);
  for (const auto& h : s.heights) out = max(out, h);
  return out;
}

std::vector<FieldElement> rational_targets(const FieldPtr& e, const std::vector<Rational>& a) {
  std::vector<FieldElement> out;
  for (const auto& x : a) out.emplace_back(e, x);
  return out;
}

std::vector<FieldElement> scaled(const std::vector<FieldElement>& v, const Integer& c) {
  std::vector<FieldElement> out;
  for (const auto& x : v) out.push_back(x * Rational(c));
  return out;
}

std::vector<Integer> scaled(const std::vector<Integer>& v, const Integer& c) {
  std::vector<Integer> out;
  for (const auto& x : v) out.push_back(x * c);
  return out;
}

BoundInputs bound_inputs(const Problem& p, int ell, const Interval& c_k) {
  const SubfieldK& k = p.field_k();
  BoundInputs in;
  in.t = static_cast<long>(p.t());
  in.ell = ell;
  in.s = p.module.s();
  in.d = k.d();
  in.r1 = k.r1();
  in.r2 = k.r2();
  in.w = p.module.w();
  in.disc_m = discriminant_M(p.module, k);
  in.h_b = p.forms.height;
  in.c_k = c_k;
  return in;
}

struct SearchOutcome {
  KrResult result;
  Integer cap;
};

// Search with the sharp Kronecker bound as default cap.
SearchOutcome search(const ThetaSystem& thetas, const std::vector<FieldElement>& targets, const Rational& eps,
                     bool allow_zero, const Problem& problem, const SolveOptions& options, const Interval& sharp) {
  const std::optional<Integer> user_cap = options.search_cap ? options.search_cap : problem.options.search_cap;
  KrSearchOptions o;
  o.cap = user_cap ? *user_cap : floor_hi(sharp);
  o.allow_zero = allow_zero;
  o.threads = options.threads;
  o.precision_cap = options.precision_cap ? *options.precision_cap : problem.options.precision_cap;
  try {
    return {kr_search(thetas.thetas, targets, eps, o), o.cap};
  } catch (const Error& err) {
    if (err.code() != Errc::CapExceeded) throw;
    if (user_cap && Rational(*user_cap) < sharp.lo()) {
      fail(Errc::SearchExhausted, "no multiplier with |q| <= " + to_string(*user_cap) +
                                      "; the guaranteed bound is about " + to_scientific(sharp, 6));
    }
    fail(Errc::BoundViolation, "search exhausted the Kronecker bound " + to_scientific(sharp, 6));
  }
}

void certify_residuals(Certificate& c, const Problem& problem, const Rational& eps) {
  const auto values = problem.forms.apply(c.x_embedded);
  const FieldElement eps_e(problem.e, eps);
  c.residuals.clear();
  for (std::size_t j = 0; j < values.size(); ++j) {
    FieldElement r = values[j] - FieldElement(problem.e, problem.a[j] + Rational(c.p[j]));
    require(compare(abs(r), eps_e) < 0, Errc::Internal, "residual " + std::to_string(j + 1) + " is not below epsilon");
    c.residuals.push_back(std::move(r));
  }
}

void check_norm(Certificate& c) {
  c.x_norm = sup_norm(c.x_embedded);
  c.x_norm_enclosure = evaluate(c.x_norm, 64);
  require(c.x_norm_enclosure.hi() <= c.bound.value.lo(), Errc::BoundViolation,
          "|x| = " + to_scientific(c.x_norm_enclosure, 6) + " exceeds the theorem bound " +
              to_scientific(c.bound.value, 6));
}

Certificate solve_theorem1(const Problem& problem, const Setup& setup, const SolveOptions& options) {
  const Rational& eps = problem.epsilon;
  Certificate c;
  c.theorem = 1;
  c.problem_hash = problem.hash;
  const MinimaResult minima = successive_minima(problem.lattice);
  const ProductPoly product = select_product_poly(*problem.systems, problem.lattice, minima);
  c.witness = grid_avoid(*problem.systems, product, problem.lattice, minima, setup.alpha().h_alpha, setup.covolume);
  c.thetas = thetas_from_witness(problem.forms, c.witness.embedded, setup.ell);

  c.kr_sharp = kr_bound_sharp(static_cast<long>(c.thetas.t()), c.thetas.e, c.thetas.c1, eps);
  c.kr_simplified = kr_bound(static_cast<long>(c.thetas.t()), setup.ell, max_height(c.thetas), eps);
  const SearchOutcome found =
      search(c.thetas, rational_targets(problem.e, problem.a), eps, false, problem, options, c.kr_sharp);
  c.search_cap = found.cap;
  c.search_bits = found.result.bits;
  c.q = found.result.q;
  c.multiplier = c.q;
  c.p = found.result.p;
  c.x_coords = scaled(c.witness.coeffs, c.q);
  c.x_embedded = problem.lattice.point(c.x_coords);
  require(avoids(*problem.systems, c.x_embedded), Errc::Internal, "x = q y falls into the exceptional set");
  certify_residuals(c, problem, eps);
  c.bound = theorem_bound(setup, eps);
  check_norm(c);
  c.h_theta_bound = theta_height_bound_grid(setup.inputs, setup.m_s, setup.alpha().h_alpha, setup.alpha().h_alpha_inv,
                                            setup.covolume);
  return c;
}

Certificate solve_theorem2(const Problem& problem, const Setup& setup, const SolveOptions& options) {
  const Rational& eps = problem.epsilon;
  Certificate c;
  c.theorem = 2;
  c.problem_hash = problem.hash;
  c.witness = sublattice_avoid(problem.sublattices, problem.lattice, setup.alpha().h_alpha, setup.covolume);
  c.thetas = thetas_from_witness(problem.forms, c.witness.embedded, setup.ell);
  c.d_prime = setup.d_prime;
  c.scaled = make_theta_system(scaled(c.thetas.thetas, c.d_prime), setup.ell);

  std::vector<FieldElement> targets;
  for (std::size_t j = 0; j < problem.a.size(); ++j) {
    targets.push_back(FieldElement(problem.e, problem.a[j]) - c.thetas.thetas[j]);
  }
  c.kr_sharp = kr_bound_sharp(static_cast<long>(c.scaled->t()), c.scaled->e, c.scaled->c1, eps);
  c.kr_simplified = kr_bound(static_cast<long>(c.scaled->t()), setup.ell, max_height(*c.scaled), eps);
  const SearchOutcome found = search(*c.scaled, targets, eps, true, problem, options, c.kr_sharp);
  c.search_cap = found.cap;
  c.search_bits = found.result.bits;
  c.q = found.result.q;
  c.multiplier = c.q * c.d_prime + 1;
  c.p = found.result.p;
  c.x_coords = scaled(c.witness.coeffs, c.multiplier);
  c.x_embedded = problem.lattice.point(c.x_coords);
  require(avoids(problem.sublattices, c.x_coords), Errc::Internal, "x = (g D' + 1) y lies in a sublattice");
  certify_residuals(c, problem, eps);
  c.bound = theorem_bound(setup, eps);
  check_norm(c);
  c.h_theta_bound = theta_height_bound_sublattice(setup.inputs, setup.alpha().h_alpha, setup.alpha().h_alpha_inv,
                                                  c.witness.bound);
  return c;
}

}  // namespace

Setup prepare(const Problem& problem, int theorem, const Rational& eps) {
  require(theorem == 1 || theorem == 2, Errc::Validation, "theorem must be 1 or 2");
  require(eps > 0, Errc::Validation, "epsilon must be positive");
  const bool polys = problem.mode == AvoidanceMode::Polynomials;
  require(polys == (theorem == 1), Errc::Validation,
          theorem == 1 ? "theorem 1 needs avoidance mode \"polynomials\""
                       : "theorem 2 needs avoidance mode \"sublattices\"");
  const SubfieldK& k = problem.field_k();
  Setup s;
  s.theorem = theorem;
  s.k1 = k1_basis(problem.lattice, k);
  require(independence_check(problem.forms, s.k1), Errc::DependentForms,
          "1 and the entries of B are linearly dependent over K_1");
  const int computed = ambient_degree(s.k1, problem.forms);
  s.ell = computed;
  if (problem.options.ell) {
    require(*problem.options.ell >= computed, Errc::DegreeExceedsEll,
            "ell override " + std::to_string(*problem.options.ell) + " is below [K_1(B) : Q] = " +
                std::to_string(computed));
    s.ell = *problem.options.ell;
    s.ell_overridden = true;
  }
  s.det = determinant(problem.lattice, problem.module, k);
  s.covolume = problem.lattice.covolume();
  s.ideal = denominator_ideal(problem.module, k);
  const long sd = static_cast<long>(problem.lattice.rank());
  s.c_k = c_K_bound(s.ideal, k, kappa(static_cast<long>(problem.t()), s.ell), sd);
  s.inputs = bound_inputs(problem, s.ell, s.c_k.value);

  if (theorem == 1) {
    s.m_s = problem.systems->m_s();
    return s;
  }
  s.d_prime = 1;
  SublatticeInputs sub;
  for (const auto& g : problem.sublattices) {
    require(g.index() != 1, Errc::NoProperSublattice, "a sublattice equals the whole lattice");
    sub.indices.push_back(g.index());
    s.d_prime *= g.index();
  }
  std::optional<Rational> best;
  for (const auto& cand : s.ideal.candidates) {
    AlphaHeights ah = alpha_heights(cand, k);
    SublatticeInputs trial = sub;
    trial.h_alpha = ah.h_alpha;
    trial.h_alpha_inv = ah.h_alpha_inv;
    const Rational value = bound_theorem2(s.inputs, trial, eps).value.hi();
    if (!best || value < *best) {
      best = value;
      s.alpha2 = std::move(ah);
      s.sub = std::move(trial);
    }
  }
  require(s.sub.has_value(), Errc::Internal, "denominator ideal has no candidates");
  return s;
}

BoundReport theorem_bound(const Setup& setup, const Rational& eps) {
  if (setup.theorem == 1) return bound_theorem1(setup.inputs, setup.m_s, eps);
  return bound_theorem2(setup.inputs, *setup.sub, eps);
}

Certificate solve(const Problem& problem, int theorem, const SolveOptions& options) {
  const Setup setup = prepare(problem, theorem, problem.epsilon);
  Certificate c = theorem == 1 ? solve_theorem1(problem, setup, options) : solve_theorem2(problem, setup, options);
  c.document = certificate_document(c, problem, setup);
  return c;
}

std::vector<BoundRow> bound_table(const Problem& problem, int theorem, const std::vector<Rational>& epsilons) {
  require(!epsilons.empty(), Errc::Validation, "no epsilon values");
  std::vector<BoundRow> out;
  for (const auto& eps : epsilons) {
    const Setup setup = prepare(problem, theorem, eps);
    out.push_back({eps, theorem_bound(setup, eps)});
  }
  return out;
}

LatticePoint oracle_min_x(const Problem& problem, const Rational& radius) {
  const auto accept = [&](const LatticePoint& pt) {
    if (std::all_of(pt.coeffs.begin(), pt.coeffs.end(), [](const Integer& c) { return c == 0; })) return false;
    if (problem.mode == AvoidanceMode::Polynomials) {
      if (!avoids(*problem.systems, pt.embedded)) return false;
    } else if (!avoids(problem.sublattices, pt.coeffs)) {
      return false;
    }
    const auto values = problem.forms.apply(pt.embedded);
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (!nearest_within(values[j] - FieldElement(problem.e, problem.a[j]), problem.epsilon)) return false;
    }
    return true;
  };
  try {
    return enumerate_by_norm(problem.lattice, radius, accept);
  } catch (const Error& err) {
    if (err.code() != Errc::NotFoundWithinRadius) throw;
    fail(Errc::CapExceeded, "no admissible lattice point with sup norm <= " + to_string(radius));
  }
}

Integer oracle_min_q_for(const Problem& problem, int theorem, const Integer& cap) {
  const Setup setup = prepare(problem, theorem, problem.epsilon);
  if (theorem == 1) {
    const MinimaResult minima = successive_minima(problem.lattice);
    const ProductPoly product = select_product_poly(*problem.systems, problem.lattice, minima);
    const AvoidWitness w =
        grid_avoid(*problem.systems, product, problem.lattice, minima, setup.alpha().h_alpha, setup.covolume);
    return oracle_min_q(problem.forms.apply(w.embedded), rational_targets(problem.e, problem.a), problem.epsilon, cap);
  }
  const AvoidWitness w = sublattice_avoid(problem.sublattices, problem.lattice, setup.alpha().h_alpha, setup.covolume);
  const auto thetas = problem.forms.apply(w.embedded);
  std::vector<FieldElement> targets;
  for (std::size_t j = 0; j < thetas.size(); ++j) targets.push_back(FieldElement(problem.e, problem.a[j]) - thetas[j]);
  return oracle_min_q(scaled(thetas, setup.d_prime), targets, problem.epsilon, cap, true);
}

}  // namespace kronav

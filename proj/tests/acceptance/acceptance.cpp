#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kronav/avoidance/avoid.hpp"
#include "kronav/error.hpp"
#include "kronav/geometry/enumerate.hpp"
#include "kronav/geometry/minima.hpp"
#include "kronav/io/certificate.hpp"
#include "kronav/io/problem.hpp"
#include "kronav/kronecker/solve.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace kronav;
using namespace kronav::testing;
using json = nlohmann::json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string data(const std::string& name) { return std::string(KRONAV_TEST_DATA) + "/" + name; }

Problem with_epsilon(const std::string& file, const char* eps) {
  json doc = json::parse(read_file(data(file)));
  doc["target"]["epsilon"] = eps;
  return parse_problem(doc.dump());
}

// 1. Kronecker search against the exhaustive oracle.
Outcome kronecker_core(double limit) {
  const FieldPtr e = sqrt2_field();
  const std::vector<FieldElement> theta{FieldElement::generator(e)};
  const std::vector<FieldElement> target{FieldElement(e, q("1/2"))};
  const ThetaSystem s = make_theta_system(theta, 2);
  std::ostringstream detail;
  bool ok = true;
  for (const char* eps_text : {"1/20", "1/100", "1/1000"}) {
    const auto start = std::chrono::steady_clock::now();
    const Rational eps = q(eps_text);
    const Interval bound = kr_bound(1, 2, s.heights[0], eps);
    KrSearchOptions o;
    o.cap = floor(bound.hi());
    const KrResult r = kr_search(theta, target, eps, o);
    const Integer oracle = oracle_min_q(theta, target, eps, o.cap);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool here = r.q == oracle && Rational(abs(r.q)) <= bound.lo() && secs < limit;
    ok = ok && here;
    detail << "eps=" << eps_text << " q=" << to_string(r.q) << " oracle=" << to_string(oracle)
           << " bound=" << to_scientific(bound, 6) << " " << secs << "s; ";
  }
  const bool worked = oracle_min_q(theta, target, q("1/20"), 100) == 6;
  const bool bound_value = kr_bound(1, 2, s.heights[0], q("1/20")).contains(Rational(20480));
  return {ok && worked && bound_value, detail.str()};
}

// 2. Liouville lower bound for sqrt 2.
Outcome liouville_suite() {
  const FieldPtr e = sqrt2_field();
  const ThetaSystem s = make_theta_system({FieldElement::generator(e)});
  long violations = 0;
  for (long m = -10000; m <= 10000; ++m) {
    if (m == 0) continue;
    if (!liouville_lower(s, {Integer(m)}).holds) ++violations;
  }
  const bool c1 = s.c1.contains(Rational(256)) && s.c1.width() < Rational(1, 1000000);
  return {c1 && violations == 0, "C1=" + to_scientific(s.c1, 8) + ", violations=" + std::to_string(violations)};
}

ModuleM scaled_module(const SubfieldK& k, const std::vector<Rational>& scales) {
  const auto d = static_cast<std::size_t>(k.d());
  const int w = static_cast<int>(scales.size());
  std::vector<PseudoBasisEntry> pb;
  for (int j = 0; j < w; ++j) {
    PseudoBasisEntry entry;
    for (std::size_t i = 0; i < d; ++i) {
      KElement b(d, Rational(0));
      b[i] = scales[static_cast<std::size_t>(j)];
      entry.ideal.push_back(b);
    }
    for (int c = 0; c < w; ++c) entry.y.push_back(c == j ? k.one() : KElement(d, Rational(0)));
    pb.push_back(std::move(entry));
  }
  return ModuleM::create(k, w, std::move(pb));
}

// 3. Gram determinant against the closed form.
Outcome determinant_cross_check() {
  struct Case {
    std::string name;
    FieldPtr e;
    std::function<SubfieldK(const FieldPtr&)> k;
  };
  const std::vector<Case> cases{
      {"Q", rational_field(), [](const FieldPtr& e) { return k_rationals(e); }},
      {"Q(sqrt2)", sqrt2_field(), [](const FieldPtr& e) { return k_sqrt2(e, FieldElement::generator(e)); }},
      {"Q(sqrt5)", sqrt5_field(), [](const FieldPtr& e) { return k_sqrt5(e); }},
      {"Q(i)", rational_field(), [](const FieldPtr& e) { return k_gaussian(e); }},
  };
  const std::vector<std::vector<Rational>> modules{{Rational(1)}, {Rational(2)}, {Rational(1), Rational(3)},
                                                   {q("1/2"), Rational(1)}};
  const Rational tol = pow(Rational(2), -30);
  bool ok = true;
  int discrepancies = 0;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const SubfieldK k = c.k(c.e);
    for (const auto& scales : modules) {
      const ModuleM m = scaled_module(k, scales);
      const EmbeddedLattice lattice = build_lattice(m, k);
      const DeterminantReport r = determinant(lattice, m, k);
      const Rational rel = r.value.width() / r.value.lo();
      const bool overlap = r.value.lo() <= r.closed_form.hi() && r.closed_form.lo() <= r.value.hi();
      if (!(r.closed_form_agrees && overlap && rel <= tol)) {
        ok = false;
        detail << c.name << " s=" << scales.size() << " disagrees; ";
      }
      if (!r.module_disc_form_agrees) ++discrepancies;
    }
  }
  detail << cases.size() * modules.size() << " modules agree with the closed form; " << discrepancies
         << " differ from the |D_K(M)|^(s/2) form (reported, s=2 only)";
  return {ok, detail.str()};
}

// Exact minima of a full-rank lattice from the box [-6, 6]^r, sorted in the
// documented order and chosen greedily by rank.
std::vector<LatticePoint> box_minima(const EmbeddedLattice& lattice) {
  const std::size_t r = lattice.rank();
  std::vector<LatticePoint> points;
  std::vector<long> c(r, -6);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](long v) { return v != 0; })) {
      points.push_back(make_point(lattice, std::vector<Integer>(c.begin(), c.end())));
    }
    std::size_t i = 0;
    while (i < r && ++c[i] > 6) c[i++] = -6;
    if (i == r) break;
  }
  std::sort(points.begin(), points.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return enumeration_order(a, b) < 0; });
  std::vector<LatticePoint> out;
  std::vector<std::vector<Rational>> chosen;
  for (const auto& p : points) {
    auto trial = chosen;
    trial.emplace_back(p.coeffs.begin(), p.coeffs.end());
    if (rank(Matrix<Rational>::from_columns(trial)) == trial.size()) {
      chosen = std::move(trial);
      out.push_back(p);
      if (out.size() == r) break;
    }
  }
  return out;
}

// Largest |c_i| over lattice points of sup norm <= radius.
Rational coefficient_reach(const std::vector<std::vector<Rational>>& cols, const Rational& radius) {
  const auto inv = *inverse(Matrix<Rational>::from_columns(cols));
  Rational worst = 0;
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < inv.cols(); ++j) row += abs(inv(i, j));
    worst = std::max(worst, Rational(row * radius));
  }
  return worst;
}

// 4. Successive minima against the box oracle and the Minkowski sandwich.
Outcome minkowski_sandwich() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 4);
  const FieldPtr e = rational_field();
  int done = 0;
  int failures = 0;
  int attempts = 0;
  while (done < 50 && attempts < 100000) {
    ++attempts;
    const auto r = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<Rational>> cols(r, std::vector<Rational>(r));
    for (auto& col : cols) {
      for (auto& x : col) x = entry(rng);
    }
    if (determinant(Matrix<Rational>::from_columns(cols)) == 0) continue;
    const EmbeddedLattice lattice = EmbeddedLattice::from_rational_columns(e, cols);
    const MinimaResult minima = successive_minima(lattice);
    if (coefficient_reach(cols, minima.vectors.back().norm.rational_value()) > 6) continue;
    ++done;
    const auto oracle = box_minima(lattice);
    bool match = oracle.size() == r;
    for (std::size_t i = 0; match && i < r; ++i) {
      match = oracle[i].coeffs == minima.vectors[i].coeffs &&
              oracle[i].norm.rational_value() == minima.vectors[i].norm.rational_value();
    }
    const MinkowskiCheck check = minkowski_check(lattice, minima);
    if (!match || !check.upper_holds || !check.lower_holds.value_or(false)) ++failures;
  }
  return {done == 50 && failures == 0,
          std::to_string(done) + " lattices, " + std::to_string(failures) + " failures"};
}

// 5. Theorem 1 on the sqrt2/sqrt3 demo.
Outcome theorem1_end_to_end(double limit) {
  std::ostringstream detail;
  bool ok = true;
  for (const char* eps : {"9/20", "1/20"}) {
    const auto start = std::chrono::steady_clock::now();
    const Problem p = with_epsilon("demo_theorem1.json", eps);
    const Certificate c = solve(p, 1);
    const VerifyReport v = verify_certificate(c.document, p);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool here = v.passed() && c.x_coords[0] != 0 && c.x_norm_enclosure.hi() <= c.bound.value.lo() && secs < limit;
    if (std::string(eps) == "9/20") {
      here = here && c.q == 1 && c.x_coords == std::vector<Integer>{1, 0};
    }
    ok = ok && here;
    detail << "eps=" << eps << " q=" << to_string(c.q) << " x=(" << to_string(c.x_coords[0]) << ","
           << to_string(c.x_coords[1]) << ") " << secs << "s; ";
  }
  return {ok, detail.str()};
}

// 6. Theorem 2 on the 2Z^2 instance.
Outcome theorem2_end_to_end(double limit) {
  std::ostringstream detail;
  bool ok = true;
  for (const char* eps : {"9/20", "1/20"}) {
    const auto start = std::chrono::steady_clock::now();
    const Problem p = with_epsilon("demo_theorem2.json", eps);
    const Certificate c = solve(p, 2);
    const VerifyReport v = verify_certificate(c.document, p);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Integer x1 = c.x_coords[0];
    const bool odd = x1 % 2 != 0;
    const bool form = c.d_prime == 4 && x1 == 4 * c.q + 1 && c.x_coords[1] == 0;
    const bool here = v.passed() && odd && form && c.x_norm_enclosure.hi() <= c.bound.value.lo() && secs < limit;
    ok = ok && here;
    detail << "eps=" << eps << " g=" << to_string(c.q) << " x=(" << to_string(x1) << ","
           << to_string(c.x_coords[1]) << ") " << secs << "s; ";
  }
  return {ok, detail.str()};
}

// 7. Exact epsilon scaling of the theorem 1 bound at ell = 2.
Outcome epsilon_scaling() {
  const Problem p = parse_problem(read_file(data("sqrt2_line.json")));
  const Rational eps = q("1/20");
  const auto rows = bound_table(p, 1, {eps, eps / 10});
  const BoundReport& a = rows[0].report;
  const BoundReport& b = rows[1].report;
  const bool ell2 = a.ell == 2;
  const bool same_prefactor = a.prefactor.lo() == b.prefactor.lo() && a.prefactor.hi() == b.prefactor.hi();
  const bool factor = b.epsilon_factor / a.epsilon_factor == 10;
  const bool value = b.value.lo() == 10 * a.value.lo() && b.value.hi() == 10 * a.value.hi();
  return {ell2 && same_prefactor && factor && value,
          "ell=" + std::to_string(a.ell) + ", ratio=" + to_string(b.epsilon_factor / a.epsilon_factor)};
}

// 8. Random avoidance instances.
Outcome avoidance_fuzz() {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> pick(0, 2);
  const FieldPtr e = rational_field();
  int failures = 0;
  int runs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 2 + static_cast<std::size_t>(trial % 2);
    std::vector<std::vector<Rational>> cols(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) {
      cols[i][i] = 1 + pick(rng);
      for (std::size_t j = 0; j < i; ++j) cols[i][j] = small(rng);
    }
    const EmbeddedLattice lattice = EmbeddedLattice::from_rational_columns(e, cols);
    const Interval det = lattice.covolume();
    try {
      if (trial % 2 == 0) {
        std::vector<Sublattice> gammas;
        const int m = 1 + pick(rng) % 2;
        for (int g = 0; g < m; ++g) {
          std::vector<std::vector<Integer>> basis(r, std::vector<Integer>(r, Integer(0)));
          for (std::size_t i = 0; i < r; ++i) {
            basis[i][i] = 1;
            for (std::size_t j = 0; j < i; ++j) basis[i][j] = small(rng);
          }
          const std::size_t k = static_cast<std::size_t>(pick(rng)) % r;
          for (auto& x : basis[k]) x *= 2 + pick(rng);
          gammas.emplace_back(IntMatrix::from_columns(basis));
        }
        const AvoidWitness w = sublattice_avoid(gammas, lattice, Interval(1), det);
        const bool ok = avoids(gammas, w.coeffs) && evaluate(sup_norm(lattice.point(w.coeffs)), 64).hi() < w.bound.lo();
        if (!ok) ++failures;
      } else {
        std::vector<std::vector<HomogeneousPoly>> systems;
        const int m = 1 + pick(rng) % 2;
        for (int s = 0; s < m; ++s) {
          Exponents ex(r, 0);
          for (auto& x : ex) x = static_cast<unsigned>(pick(rng) % 2);
          ex[static_cast<std::size_t>(pick(rng)) % r] += 1;
          systems.push_back({HomogeneousPoly::create(r, {{ex, Rational(1 + pick(rng))}})});
        }
        const PolySystemSet set = PolySystemSet::create(r, systems, false);
        const MinimaResult minima = successive_minima(lattice);
        const ProductPoly product = select_product_poly(set, lattice, minima);
        const AvoidWitness w = grid_avoid(set, product, lattice, minima, Interval(1), det);
        bool ok = avoids(set, w.embedded) && w.embedded == lattice.point(w.coeffs) &&
                  evaluate(sup_norm(w.embedded), 64).hi() <= w.bound.lo();
        for (const auto& cert : w.certificates) {
          ok = ok && !set.systems()[cert.system][cert.polynomial].evaluate(w.embedded).is_zero() &&
               !cert.enclosure.contains_zero();
        }
        if (!ok) ++failures;
      }
      ++runs;
    } catch (const Error& err) {
      ++failures;
      std::cerr << "fuzz instance " << trial << ": " << err.what() << "\n";
    }
  }
  return {runs == 200 && failures == 0, std::to_string(runs) + " instances, " + std::to_string(failures) + " failures"};
}

// 9. Targeted certificate corruptions.
Outcome tamper_suite() {
  const Problem p = parse_problem(read_file(data("demo_theorem1.json")));
  const Certificate c = solve(p, 1);
  const json doc = json::parse(c.document);
  struct Tamper {
    std::string name;
    std::function<void(json&)> edit;
    std::string item;
    int exit;
  };
  const std::vector<Tamper> cases{
      {"p", [](json& d) { d["solution"]["p"][0] = "9"; }, "residuals", 1},
      {"q", [](json& d) { d["solution"]["q"] = "7"; }, "x_consistency", 1},
      {"x", [](json& d) { d["solution"]["x_coords"][0] = "5"; }, "x_consistency", 1},
      {"bound value", [](json& d) { d["bounds"]["theorem"]["value"]["lo"] = "1"; }, "bound_value", 1},
      {"problem hash", [](json& d) { d["problem_hash"] = std::string(64, '0'); }, "problem_hash", 2},
  };
  bool ok = verify_certificate(c.document, p).exit_code() == 0;
  std::ostringstream detail;
  for (const auto& t : cases) {
    json copy = doc;
    t.edit(copy);
    const VerifyReport r = verify_certificate(copy.dump(2), p);
    const VerifyItem* item = r.find(t.item);
    const bool caught = item && !item->passed && r.exit_code() == t.exit;
    ok = ok && caught;
    detail << t.name << "->" << t.item << (caught ? " caught" : " MISSED") << "; ";
  }
  return {ok, detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria{
      {1, "kronecker core", [] { return kronecker_core(5.0); }, 15.0},
      {2, "liouville suite", liouville_suite, 30.0},
      {3, "determinant cross-check", determinant_cross_check, 60.0},
      {4, "minkowski sandwich", minkowski_sandwich, 60.0},
      {5, "theorem 1 end-to-end", [] { return theorem1_end_to_end(10.0); }, 20.0},
      {6, "theorem 2 end-to-end", [] { return theorem2_end_to_end(10.0); }, 20.0},
      {7, "epsilon scaling", epsilon_scaling, 60.0},
      {8, "avoidance fuzz", avoidance_fuzz, 120.0},
      {9, "certificate tamper suite", tamper_suite, 60.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.pass = false;
      o.detail += " (exceeded " + std::to_string(c.limit) + "s)";
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " ["
              << secs << "s]\n";
  }
  return failed == 0 ? 0 : 1;
}

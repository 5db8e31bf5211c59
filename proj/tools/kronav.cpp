#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kronav/error.hpp"
#include "kronav/fieldlat/denominator.hpp"
#include "kronav/geometry/minima.hpp"
#include "kronav/io/certificate.hpp"
#include "kronav/io/problem.hpp"
#include "kronav/kronecker/solve.hpp"

namespace {

using namespace kronav;

int infer_theorem(const Problem& p, int requested) {
  if (requested != 0) return requested;
  return p.mode == AvoidanceMode::Polynomials ? 1 : 2;
}

unsigned default_threads() {
  if (const char* env = std::getenv("KRONAV_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    fail(Errc::Validation, std::string("KRONAV_THREADS must be an integer in [1, 256], got \"") + env + "\"");
  }
  return 1;
}

std::string sci(const Interval& x) { return to_scientific(x, 8); }

std::string elem_text(const FieldElement& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  return to_string(x) + " ~ " + to_scientific(evaluate(x, 64), 10);
}

std::string ints_text(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

void print_bound(const BoundReport& r) {
  for (const auto& item : r.items) std::cout << "  " << std::left << std::setw(44) << item.name << sci(item.value) << "\n";
  std::cout << "  " << std::setw(44) << "eps^(-ell+1)" << to_string(r.epsilon_factor) << "\n";
  std::cout << "  " << std::setw(44) << "bound" << sci(r.value) << "\n";
}

int cmd_solve(const std::string& path, int theorem, const std::string& out, unsigned threads,
              std::optional<long> precision_cap, std::optional<std::string> cap) {
  const Problem problem = load_problem(path);
  theorem = infer_theorem(problem, theorem);
  SolveOptions options;
  options.threads = threads;
  options.precision_cap = precision_cap;
  if (cap) options.search_cap = parse_rational(*cap).get_num();
  const Certificate c = solve(problem, theorem, options);

  std::cout << "theorem " << theorem << "\n";
  std::cout << "  y (lattice coords)   " << ints_text(c.witness.coeffs) << "\n";
  for (std::size_t j = 0; j < c.thetas.t(); ++j) {
    std::cout << "  theta_" << j + 1 << "              " << elem_text(c.thetas.thetas[j]) << "\n";
  }
  if (theorem == 1) {
    std::cout << "  q                    " << to_string(c.q) << "\n";
  } else {
    std::cout << "  D'                   " << to_string(c.d_prime) << "\n";
    std::cout << "  g                    " << to_string(c.q) << "\n";
  }
  std::cout << "  x (lattice coords)   " << ints_text(c.x_coords) << "\n";
  std::cout << "  p                    " << ints_text(c.p) << "\n";
  for (std::size_t j = 0; j < c.residuals.size(); ++j) {
    std::cout << "  residual_" << j + 1 << "           " << to_scientific(evaluate(c.residuals[j], 64), 6) << "\n";
  }
  std::cout << "  |x|                  " << sci(c.x_norm_enclosure) << "\n";
  std::cout << "  theorem bound        " << sci(c.bound.value) << "\n";
  std::cout << "  |x| / bound          " << sci(c.x_norm_enclosure / c.bound.value) << "\n";
  std::cout << "  Kronecker bound      " << sci(c.kr_sharp) << "\n";

  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    require(f.good(), Errc::Validation, "cannot write " + out);
    f << c.document;
    std::cout << "certificate written to " << out << "\n";
  } else {
    std::cout << c.document;
  }
  return 0;
}

std::vector<Rational> parse_epsilons(const std::string& list, const Rational& fallback) {
  std::vector<Rational> out;
  if (list.empty()) return {fallback};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational eps;
    try {
      eps = parse_rational(item);
    } catch (const Error&) {
      fail(Errc::Validation, "malformed epsilon \"" + item + "\"");
    }
    require(eps > 0, Errc::Validation, "epsilon must be positive: " + item);
    out.push_back(eps);
  }
  return out;
}

int cmd_bound(const std::string& path, int theorem, const std::string& list) {
  const Problem problem = load_problem(path);
  theorem = infer_theorem(problem, theorem);
  const auto epsilons = parse_epsilons(list, problem.epsilon);
  const auto rows = bound_table(problem, theorem, epsilons);
  const Setup setup = prepare(problem, theorem, epsilons.front());
  std::cout << "theorem " << theorem << "\n";
  std::cout << "  kappa " << kappa(setup.inputs.t, setup.ell) << ", ell " << setup.ell << ", c_K "
            << sci(setup.c_k.value) << "\n";
  for (const auto& row : rows) {
    std::cout << "epsilon " << to_string(row.epsilon) << "\n";
    print_bound(row.report);
  }
  if (rows.size() > 1) {
    std::cout << "ratios against the first row\n";
    for (std::size_t i = 1; i < rows.size(); ++i) {
      std::cout << "  epsilon " << to_string(rows[i].epsilon) << ": eps-factor ratio "
                << to_string(rows[i].report.epsilon_factor / rows[0].report.epsilon_factor) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& cert, const std::string& path) {
  const Problem problem = load_problem(path);
  const VerifyReport report = verify_certificate(read_file(cert), problem);
  for (const auto& item : report.items) {
    std::cout << (item.passed ? "PASS " : "FAIL ") << std::left << std::setw(20) << item.name << " " << item.detail
              << "\n";
  }
  std::cout << (report.passed() ? "certificate verified" : "certificate rejected") << "\n";
  return report.exit_code();
}

int cmd_oracle(const std::string& path, const std::string& what, const std::string& cap, int theorem) {
  const Problem problem = load_problem(path);
  theorem = infer_theorem(problem, theorem);
  const Rational bound = parse_rational(cap);
  if (what == "min-q") {
    std::cout << to_string(oracle_min_q_for(problem, theorem, floor(bound))) << "\n";
    return 0;
  }
  const LatticePoint pt = oracle_min_x(problem, bound);
  std::cout << "x (lattice coords) " << ints_text(pt.coeffs) << "\n";
  std::cout << "|x|                " << sci(pt.norm_enclosure) << "\n";
  return 0;
}

int cmd_inspect(const std::string& path) {
  const Problem problem = load_problem(path);
  const SubfieldK& k = problem.field_k();
  std::cout << "E degree " << problem.e->degree() << ", K degree " << k.d() << " (r1 " << k.r1() << ", r2 "
            << k.r2() << "), w " << problem.module.w() << ", s " << problem.module.s() << ", t " << problem.t()
            << "\n";
  std::cout << "problem hash " << problem.hash << "\n";
  const DeterminantReport det = determinant(problem.lattice, problem.module, k);
  std::cout << "determinant\n";
  std::cout << "  Gram                          " << sci(det.value) << "\n";
  std::cout << "  2^(-s r2)|D_K|^(s/2) prod N   " << sci(det.closed_form)
            << (det.closed_form_agrees ? "  agrees" : "  DISAGREES") << "\n";
  std::cout << "  2^(-s r2)|D_K(M)|^(s/2)       " << sci(det.module_disc_form)
            << (det.module_disc_form_agrees ? "  agrees" : "  differs") << "\n";
  const MinimaResult minima = successive_minima(problem.lattice);
  std::cout << "successive minima\n";
  for (std::size_t i = 0; i < minima.vectors.size(); ++i) {
    std::cout << "  lambda_" << i + 1 << " " << sci(minima.lambdas[i]) << "  at " << ints_text(minima.vectors[i].coeffs)
              << "\n";
  }
  const DenominatorIdeal ideal = denominator_ideal(problem.module, k);
  std::cout << "denominator ideal candidates\n";
  for (std::size_t i = 0; i < ideal.candidates.size() && i < 5; ++i) {
    const AlphaHeights ah = alpha_heights(ideal.candidates[i], k);
    std::string coords;
    for (const auto& c : ah.alpha) coords += (coords.empty() ? "" : ", ") + to_string(c);
    std::cout << "  alpha (" << coords << ")  h " << sci(ah.h_alpha) << "  h(1/alpha) " << sci(ah.h_alpha_inv)
              << "\n";
  }
  std::cout << "heights\n";
  std::cout << "  h(B)    " << sci(problem.forms.height) << "\n";
  for (std::size_t i = 0; i < problem.forms.row_heights.size(); ++i) {
    std::cout << "  h(L_" << i + 1 << ")  " << sci(problem.forms.row_heights[i]) << "\n";
  }
  const auto k1 = k1_basis(problem.lattice, k);
  std::cout << "[K_1 : Q] " << k1.size() << ", [K_1(B) : Q] " << ambient_degree(k1, problem.forms)
            << ", independent " << (independence_check(problem.forms, k1) ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective Kronecker approximation avoiding algebraic sets"};
  app.require_subcommand(1);

  int theorem = 0;
  std::string problem_path;
  std::string out;
  std::string cert_path;
  std::string epsilon_list;
  std::string what = "min-q";
  std::string cap;
  long precision_cap = 0;
  unsigned threads = 0;

  auto* solve_cmd = app.add_subcommand("solve", "solve a problem and write a certificate");
  solve_cmd->add_option("problem", problem_path, "problem file")->required();
  solve_cmd->add_option("--theorem", theorem, "1 or 2 (default from the avoidance mode)")->check(CLI::Range(1, 2));
  solve_cmd->add_option("--out", out, "certificate path (stdout if omitted)");
  solve_cmd->add_option("--threads", threads, "search threads (default KRONAV_THREADS or 1)")->check(CLI::Range(1, 256));
  solve_cmd->add_option("--precision-cap", precision_cap, "largest fixed-point precision in bits")
      ->check(CLI::Range(64L, 1L << 20));
  solve_cmd->add_option("--cap", cap, "largest |q| examined (default: the Kronecker bound)");

  auto* bound_cmd = app.add_subcommand("bound", "print the itemized theorem bound");
  bound_cmd->add_option("problem", problem_path, "problem file")->required();
  bound_cmd->add_option("--theorem", theorem, "1 or 2")->check(CLI::Range(1, 2));
  bound_cmd->add_option("--epsilon-list", epsilon_list, "comma-separated rationals, e.g. 1/10,1/100");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate against its problem");
  verify_cmd->add_option("certificate", cert_path, "certificate file")->required();
  verify_cmd->add_option("problem", problem_path, "problem file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
  oracle_cmd->add_option("problem", problem_path, "problem file")->required();
  oracle_cmd->add_option("--what", what, "min-q or min-x")->check(CLI::IsMember({"min-q", "min-x"}));
  oracle_cmd->add_option("--cap", cap, "largest |q| (min-q) or sup norm (min-x)")->required();
  oracle_cmd->add_option("--theorem", theorem, "1 or 2")->check(CLI::Range(1, 2));

  auto* inspect_cmd = app.add_subcommand("inspect", "print lattice, denominator and height data");
  inspect_cmd->add_option("problem", problem_path, "problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads == 0) threads = default_threads();
    if (solve_cmd->parsed()) {
      return cmd_solve(problem_path, theorem, out, threads,
                       precision_cap ? std::optional<long>(precision_cap) : std::nullopt,
                       cap.empty() ? std::nullopt : std::optional<std::string>(cap));
    }
    if (bound_cmd->parsed()) return cmd_bound(problem_path, theorem, epsilon_list);
    if (verify_cmd->parsed()) return cmd_verify(cert_path, problem_path);
    if (oracle_cmd->parsed()) return cmd_oracle(problem_path, what, cap, theorem);
    if (inspect_cmd->parsed()) return cmd_inspect(problem_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 2;
}

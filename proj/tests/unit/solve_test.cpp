#include <gtest/gtest.h>

#include <json.hpp>

#include "kronav/error.hpp"
#include "kronav/io/certificate.hpp"
#include "kronav/io/problem.hpp"
#include "kronav/kronecker/solve.hpp"
#include "support/fixtures.hpp"

namespace kronav::testing {
namespace {

using json = nlohmann::json;

std::string data(const std::string& name) { return std::string(KRONAV_TEST_DATA) + "/" + name; }

json demo_doc(const std::string& file) { return json::parse(read_file(data(file))); }

Problem demo(const std::string& file, const char* eps = nullptr) {
  json doc = demo_doc(file);
  if (eps) doc["target"]["epsilon"] = eps;
  return parse_problem(doc.dump());
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

const VerifyItem& item(const VerifyReport& r, const std::string& name) {
  const VerifyItem* it = r.find(name);
  EXPECT_NE(it, nullptr) << name;
  static const VerifyItem missing{};
  return it ? *it : missing;
}

TEST(Problem, HashIgnoresKeyOrderAndWhitespace) {
  const json doc = demo_doc("demo_theorem1.json");
  const Problem a = parse_problem(doc.dump());
  const Problem b = parse_problem(doc.dump(4));
  EXPECT_EQ(a.hash, b.hash);
  EXPECT_EQ(a.hash.size(), 64u);
  const Problem c = demo("demo_theorem1.json", "1/10");
  EXPECT_NE(a.hash, c.hash);
}

TEST(Problem, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { parse_problem("{"); }), Errc::Validation);
  EXPECT_EQ(code_of([] { load_problem(data("malformed_epsilon.json")); }), Errc::Validation);
  EXPECT_EQ(code_of([] { load_problem(data("no_such_file.json")); }), Errc::Validation);
  for (const char* eps : {"0", "-1/2"}) {
    EXPECT_EQ(code_of([&] { demo("demo_theorem1.json", eps); }), Errc::Validation) << eps;
  }
}

TEST(Solve, DependentFormsRejected) {
  const Problem p = load_problem(data("dependent_forms.json"));
  EXPECT_EQ(code_of([&] { solve(p, 1); }), Errc::DependentForms);
  EXPECT_EQ(exit_code(Errc::DependentForms), 3);
}

TEST(Solve, TheoremMustMatchMode) {
  const Problem p = load_problem(data("demo_theorem1.json"));
  EXPECT_EQ(code_of([&] { solve(p, 2); }), Errc::Validation);
}

TEST(Solve, Theorem1LargeEpsilonTakesFirstGridPoint) {
  const Problem p = demo("demo_theorem1.json", "9/20");
  const Certificate c = solve(p, 1);
  EXPECT_EQ(c.q, 1);
  EXPECT_EQ(c.x_coords, (std::vector<Integer>{1, 0}));
  EXPECT_EQ(verify_certificate(c.document, p).exit_code(), 0);
}

TEST(Solve, Theorem1Demo) {
  const Problem p = load_problem(data("demo_theorem1.json"));
  const Certificate c = solve(p, 1);
  EXPECT_EQ(c.q, 6);
  EXPECT_EQ(c.x_coords, (std::vector<Integer>{6, 0}));
  ASSERT_EQ(c.p.size(), 1u);
  EXPECT_EQ(c.p[0], 8);
  for (const auto& r : c.residuals) EXPECT_LT(evaluate(r, 64).hi(), q("1/20"));
  for (const auto& r : c.residuals) EXPECT_GT(evaluate(r, 64).lo(), -q("1/20"));
  EXPECT_LE(c.x_norm_enclosure.hi(), c.bound.value.lo());
  EXPECT_LE(Rational(abs(c.q)), c.kr_sharp.lo());
}

TEST(Solve, Theorem2ZeroMultiplierAllowed) {
  const Problem p = demo("demo_theorem2.json", "9/20");
  const Certificate c = solve(p, 2);
  EXPECT_EQ(c.q, 0);
  EXPECT_EQ(c.d_prime, 4);
  EXPECT_EQ(c.x_coords, (std::vector<Integer>{1, 0}));
  EXPECT_EQ(verify_certificate(c.document, p).exit_code(), 0);
}

TEST(Solve, Theorem2Demo) {
  const Problem p = load_problem(data("demo_theorem2.json"));
  const Certificate c = solve(p, 2);
  EXPECT_EQ(c.q, -6);
  EXPECT_EQ(c.x_coords, (std::vector<Integer>{-23, 0}));
  EXPECT_EQ(c.x_coords[0], 4 * c.q + 1);
  EXPECT_EQ(verify_certificate(c.document, p).exit_code(), 0);
}

TEST(Solve, DocumentIsDeterministicAcrossThreads) {
  const Problem p = load_problem(data("demo_theorem1.json"));
  SolveOptions one;
  one.threads = 1;
  SolveOptions four;
  four.threads = 4;
  EXPECT_EQ(solve(p, 1, one).document, solve(p, 1, four).document);
  const Problem p2 = load_problem(data("demo_theorem2.json"));
  EXPECT_EQ(solve(p2, 2, one).document, solve(p2, 2, four).document);
}

TEST(Solve, SmallUserCapIsSearchExhausted) {
  const Problem p = load_problem(data("demo_theorem1.json"));
  SolveOptions o;
  o.search_cap = Integer(3);
  EXPECT_EQ(code_of([&] { solve(p, 1, o); }), Errc::SearchExhausted);
  EXPECT_EQ(exit_code(Errc::SearchExhausted), 4);
}

TEST(Oracle, MinimalMultiplierAndPoint) {
  const Problem p = load_problem(data("demo_theorem1.json"));
  EXPECT_EQ(oracle_min_q_for(p, 1, Integer(100)), 6);
  const LatticePoint x = oracle_min_x(p, Rational(20));
  EXPECT_EQ(x.coeffs, (std::vector<Integer>{3, -1}));
  EXPECT_EQ(code_of([&] { oracle_min_x(p, Rational(2)); }), Errc::CapExceeded);
}

TEST(BoundTable, ScalesInverselyWithEpsilonAtEllTwo) {
  const Problem p = load_problem(data("sqrt2_line.json"));
  const auto rows = bound_table(p, 1, {q("1/20"), q("1/200")});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].report.ell, 2);
  EXPECT_EQ(rows[1].report.value.lo(), 10 * rows[0].report.value.lo());
  EXPECT_EQ(rows[1].report.value.hi(), 10 * rows[0].report.value.hi());
}

class Tamper : public ::testing::Test {
 protected:
  void SetUp() override {
    problem = load_problem(data("demo_theorem1.json"));
    doc = json::parse(solve(problem, 1).document);
  }
  VerifyReport verify(const json& d) const { return verify_certificate(d.dump(2), problem); }

  Problem problem;
  json doc;
};

TEST_F(Tamper, RoundTripPasses) {
  const VerifyReport r = verify(doc);
  EXPECT_TRUE(r.passed());
  for (const auto& i : r.items) EXPECT_TRUE(i.passed) << i.name << ": " << i.detail;
}

TEST_F(Tamper, StampDetectsAnyEdit) {
  doc["epsilon"] = "1/21";
  EXPECT_FALSE(item(verify(doc), "certificate_stamp").passed);
}

TEST_F(Tamper, ChangedP) {
  doc["solution"]["p"][0] = "9";
  const VerifyReport r = verify(doc);
  EXPECT_FALSE(item(r, "residuals").passed);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST_F(Tamper, ChangedQ) {
  doc["solution"]["q"] = "7";
  EXPECT_FALSE(item(verify(doc), "x_consistency").passed);
}

TEST_F(Tamper, ChangedX) {
  doc["solution"]["x_coords"][0] = "5";
  EXPECT_FALSE(item(verify(doc), "x_consistency").passed);
}

TEST_F(Tamper, ChangedBound) {
  doc["bounds"]["theorem"]["value"]["lo"] = "1";
  EXPECT_FALSE(item(verify(doc), "bound_value").passed);
}

TEST_F(Tamper, ChangedHashIsExitTwo) {
  doc["problem_hash"] = std::string(64, '0');
  const VerifyReport r = verify(doc);
  EXPECT_TRUE(r.hash_mismatch);
  EXPECT_EQ(r.exit_code(), 2);
}

TEST_F(Tamper, WrongProblemIsExitTwo) {
  const Problem other = demo("demo_theorem1.json", "1/10");
  EXPECT_EQ(verify_certificate(doc.dump(2), other).exit_code(), 2);
}

TEST_F(Tamper, MalformedCertificateIsItemFailure) {
  const VerifyReport r = verify_certificate("not json", problem);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
  doc.erase("solution");
  EXPECT_FALSE(verify(doc).passed());
}

}  // namespace
}  // namespace kronav::testing

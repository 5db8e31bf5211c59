#include "kronav/geometry/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "kronav/error.hpp"

namespace kronav {

namespace {

constexpr long kNormBits = 64;

Integer l1(const std::vector<Integer>& c) {
  Integer s = 0;
  for (const auto& x : c) s += abs(x);
  return s;
}

// Double shadow of the basis with per-entry error bounds.
struct Shadow {
  std::vector<double> value;  // row-major
  std::vector<double> error;
  bool usable = true;
};

Shadow make_shadow(const EmbeddedLattice& lattice) {
  Shadow s;
  const auto& b = lattice.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Interval v = evaluate(b(i, j), 80);
      const double d = v.mid().get_d();
      if (!std::isfinite(d) || std::abs(d) > 1e200) s.usable = false;
      const Rational err = abs(v.mid() - Rational(d)) + v.width();
      s.value.push_back(d);
      s.error.push_back(err.get_d() * (1 + 1e-9) + 1e-300);
    }
  }
  return s;
}

// Lower bound of the sup norm from the shadow; nullopt when unusable.
std::optional<double> shadow_lower_norm(const Shadow& s, std::size_t rows, std::size_t cols,
                                        const std::vector<long>& c) {
  if (!s.usable) return std::nullopt;
  const double gamma = static_cast<double>(cols + 2) * std::numeric_limits<double>::epsilon();
  double best = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    double v = 0;
    double mag = 0;
    double err = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double cj = static_cast<double>(c[j]);
      const double term = cj * s.value[i * cols + j];
      v += term;
      mag += std::abs(term);
      err += std::abs(cj) * s.error[i * cols + j];
    }
    const double bound = (err + gamma * mag) * (1 + 1e-9) + 1e-300;
    best = std::max(best, std::abs(v) - bound);
  }
  return best;
}

// |c_i| <= radius * bound[i] for every lattice point of norm <= radius.
std::vector<Integer> coefficient_box(const EmbeddedLattice& lattice, const Rational& radius) {
  const auto& b = lattice.basis();
  const std::size_t k = lattice.rank();
  std::vector<std::size_t> rows;
  std::vector<std::vector<FieldElement>> chosen;
  for (std::size_t i = 0; i < b.rows() && rows.size() < k; ++i) {
    auto trial = chosen;
    trial.push_back(b.row(i));
    Matrix<FieldElement> m(trial.size(), k, b(0, 0));
    for (std::size_t r = 0; r < trial.size(); ++r) {
      for (std::size_t c = 0; c < k; ++c) m(r, c) = trial[r][c];
    }
    if (rank(m) == trial.size()) {
      chosen = std::move(trial);
      rows.push_back(i);
    }
  }
  Matrix<FieldElement> sub(k, k, b(0, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) sub(r, c) = chosen[r][c];
  }
  const auto inv = inverse(sub);
  require(inv.has_value(), Errc::Internal, "no invertible row subset in a full-rank basis");
  std::vector<Integer> box;
  for (std::size_t r = 0; r < k; ++r) {
    Interval sum(0);
    for (std::size_t c = 0; c < k; ++c) sum += abs(evaluate((*inv)(r, c), 32));
    box.push_back(floor(sum.hi() * radius));
  }
  return box;
}

}  // namespace

int enumeration_order(const LatticePoint& a, const LatticePoint& b) {
  if (a.norm_enclosure.hi() < b.norm_enclosure.lo()) return -1;
  if (b.norm_enclosure.hi() < a.norm_enclosure.lo()) return 1;
  const int c = compare(a.norm, b.norm);
  if (c != 0) return c;
  const Integer la = l1(a.coeffs);
  const Integer lb = l1(b.coeffs);
  if (la != lb) return la < lb ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] > b.coeffs[i] ? -1 : 1;
  }
  return 0;
}

LatticePoint make_point(const EmbeddedLattice& lattice, std::vector<Integer> coeffs) {
  LatticePoint p;
  p.embedded = lattice.point(coeffs);
  p.coeffs = std::move(coeffs);
  p.norm = sup_norm(p.embedded);
  p.norm_enclosure = evaluate(p.norm, kNormBits);
  return p;
}

std::vector<LatticePoint> points_within(const EmbeddedLattice& lattice, const Rational& radius) {
  require(radius >= 0, Errc::PreconditionViolation, "negative enumeration radius");
  const std::size_t k = lattice.rank();
  const std::size_t n = lattice.ambient();
  const std::vector<Integer> box = coefficient_box(lattice, radius);
  Integer volume = 1;
  for (const auto& b : box) volume *= 2 * b + 1;
  require(volume <= 50000000, Errc::RankCapExceeded,
          "enumeration box of " + to_string(volume) + " points exceeds the desk-scale cap");
  const Shadow shadow = make_shadow(lattice);
  const double radius_d = radius.get_d();

  std::vector<LatticePoint> out;
  std::vector<long> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = -box[i].get_si();
  while (true) {
    const auto lower = shadow_lower_norm(shadow, n, k, c);
    if (!lower || *lower <= radius_d * (1 + 1e-12)) {
      std::vector<Integer> coeffs(c.begin(), c.end());
      LatticePoint p = make_point(lattice, std::move(coeffs));
      if (p.norm_enclosure.hi() <= radius ||
          (p.norm_enclosure.lo() <= radius && sign(p.norm - FieldElement(lattice.field(), radius)) <= 0)) {
        out.push_back(std::move(p));
      }
    }
    std::size_t i = 0;
    while (i < k && c[i] == box[i].get_si()) {
      c[i] = -box[i].get_si();
      ++i;
    }
    if (i == k) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return enumeration_order(a, b) < 0; });
  return out;
}

LatticePoint enumerate_by_norm(const EmbeddedLattice& lattice, const Rational& radius, const PointPredicate& predicate) {
  require(radius > 0, Errc::PreconditionViolation, "enumeration radius must be positive");
  Rational shortest = radius;
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    const Rational col = sup_norm_enclosure(lattice.basis().column(j), 32).hi();
    if (col < shortest) shortest = col;
  }
  Rational previous = -1;
  Rational current = shortest;
  while (true) {
    for (auto& p : points_within(lattice, current)) {
      if (previous >= 0 && sign(p.norm - FieldElement(lattice.field(), previous)) <= 0) continue;
      if (predicate(p)) return p;
    }
    if (current >= radius) break;
    previous = current;
    current = current * 2 > radius ? radius : Rational(current * 2);
  }
  fail(Errc::NotFoundWithinRadius, "no lattice point satisfies the predicate within radius " + to_string(radius));
}

}  // namespace kronav

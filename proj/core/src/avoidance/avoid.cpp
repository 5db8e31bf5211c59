#include "kronav/avoidance/avoid.hpp"

#include <algorithm>
#include <optional>

#include "kronav/error.hpp"

namespace kronav {

namespace {

constexpr std::size_t kGridCap = 1000000;
constexpr long kNormBits = 64;

bool grid_before(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const Integer ma = *std::max_element(a.begin(), a.end());
  const Integer mb = *std::max_element(b.begin(), b.end());
  if (ma != mb) return ma < mb;
  Integer la = 0;
  Integer lb = 0;
  for (const auto& x : a) la += x;
  for (const auto& x : b) lb += x;
  if (la != lb) return la < lb;
  return a > b;
}

Interval sqrt2_power(const Interval& h_alpha, std::size_t exponent) {
  return pow(sqrt(Interval(2)) * h_alpha, static_cast<unsigned long>(exponent));
}

// Lazily embedded grid points.
class GridCache {
 public:
  GridCache(const EmbeddedLattice& lattice, const MinimaResult& minima, unsigned m)
      : lattice_(lattice), minima_(minima), grid_(avoidance_grid(lattice.rank(), m)), points_(grid_.size()) {}

  std::size_t size() const { return grid_.size(); }
  const std::vector<Integer>& xi(std::size_t i) const { return grid_[i]; }
  const std::vector<FieldElement>& point(std::size_t i) {
    if (!points_[i]) points_[i] = lattice_.point(grid_combination(minima_, grid_[i]));
    return *points_[i];
  }

 private:
  const EmbeddedLattice& lattice_;
  const MinimaResult& minima_;
  std::vector<std::vector<Integer>> grid_;
  std::vector<std::optional<std::vector<FieldElement>>> points_;
};

}  // namespace

NonvanishingCertificate certify_nonzero(const FieldElement& value, long start_bits, long cap_bits) {
  require(!value.is_zero(), Errc::PreconditionViolation, "cannot certify nonvanishing of zero");
  for (long bits = start_bits; bits <= cap_bits; bits *= 2) {
    const Interval enc = evaluate(value, bits);
    if (!enc.contains_zero()) return {0, 0, value, enc, bits};
  }
  fail(Errc::PrecisionCap, "nonzero value not separated from zero at " + std::to_string(cap_bits) + " bits");
}

std::vector<std::vector<Integer>> avoidance_grid(std::size_t rank, unsigned m) {
  require(rank > 0 && m > 0, Errc::PreconditionViolation, "grid needs positive rank and degree");
  std::size_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    total *= m + 1;
    require(total <= kGridCap, Errc::CapExceeded, "avoidance grid exceeds " + std::to_string(kGridCap) + " points");
  }
  std::vector<std::vector<Integer>> out;
  out.reserve(total - 1);
  std::vector<unsigned> digits(rank, 0);
  for (std::size_t n = 1; n < total; ++n) {
    for (std::size_t i = rank; i-- > 0;) {
      if (++digits[i] <= m) break;
      digits[i] = 0;
    }
    out.emplace_back(digits.begin(), digits.end());
  }
  std::sort(out.begin(), out.end(), grid_before);
  return out;
}

std::vector<Integer> grid_combination(const MinimaResult& minima, const std::vector<Integer>& xi) {
  require(xi.size() == minima.vectors.size(), Errc::Internal, "grid point has wrong length");
  std::vector<Integer> out(minima.vectors.at(0).coeffs.size(), Integer(0));
  for (std::size_t i = 0; i < xi.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += xi[i] * minima.vectors[i].coeffs[j];
  }
  return out;
}

Interval grid_witness_bound(std::size_t rank, unsigned m_s, const Interval& h_alpha, const Interval& det) {
  return Interval(Rational(static_cast<long>(rank * m_s))) * sqrt2_power(h_alpha, rank - 1) * det;
}

ProductPoly select_product_poly(const PolySystemSet& systems, const EmbeddedLattice& lattice,
                                const MinimaResult& minima) {
  require(systems.variables() == lattice.ambient(), Errc::Validation, "polynomials and lattice disagree on dimension");
  ProductPoly out;
  if (systems.zero_locus_trivial()) return out;
  GridCache grid(lattice, minima, systems.m_s());
  for (std::size_t i = 0; i < systems.systems().size(); ++i) {
    const auto& system = systems.systems()[i];
    std::optional<std::size_t> chosen;
    for (std::size_t k = 0; k < system.size() && !chosen; ++k) {
      for (std::size_t g = 0; g < grid.size(); ++g) {
        if (!system[k].evaluate(grid.point(g)).is_zero()) {
          chosen = k;
          break;
        }
      }
    }
    if (!chosen) {
      fail(Errc::LatticeInZeroLocus, "every polynomial of system " + std::to_string(i + 1) +
                                         " vanishes on the grid, hence on the whole lattice");
    }
    out.chosen.push_back(*chosen);
    out.degree += system[*chosen].degree();
  }
  return out;
}

AvoidWitness grid_avoid(const PolySystemSet& systems, const ProductPoly& product, const EmbeddedLattice& lattice,
                        const MinimaResult& minima, const Interval& h_alpha, const Interval& det) {
  require(systems.variables() == lattice.ambient(), Errc::Validation, "polynomials and lattice disagree on dimension");
  const bool trivial = systems.zero_locus_trivial();
  require(trivial || product.chosen.size() == systems.systems().size(), Errc::Internal,
          "product polynomial does not cover every system");
  const std::size_t sd = lattice.rank();
  GridCache grid(lattice, minima, systems.m_s());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto& y = grid.point(g);
    std::vector<NonvanishingCertificate> certs;
    bool ok = true;
    for (std::size_t i = 0; i < systems.systems().size() && ok; ++i) {
      const auto& system = systems.systems()[i];
      std::optional<std::size_t> hit;
      std::optional<FieldElement> value;
      if (trivial) {
        for (std::size_t k = 0; k < system.size() && !hit; ++k) {
          FieldElement v = system[k].evaluate(y);
          if (!v.is_zero()) {
            hit = k;
            value = std::move(v);
          }
        }
      } else {
        FieldElement v = system[product.chosen[i]].evaluate(y);
        if (!v.is_zero()) {
          hit = product.chosen[i];
          value = std::move(v);
        }
      }
      if (!hit) {
        ok = false;
        break;
      }
      NonvanishingCertificate cert = certify_nonzero(*value);
      cert.system = i;
      cert.polynomial = *hit;
      certs.push_back(std::move(cert));
    }
    if (!ok) continue;

    AvoidWitness w;
    w.kind = AvoidWitness::Kind::Polynomial;
    w.xi = grid.xi(g);
    w.coeffs = grid_combination(minima, w.xi);
    w.embedded = y;
    w.norm = sup_norm(y);
    w.norm_enclosure = evaluate(w.norm, kNormBits);
    w.bound = grid_witness_bound(sd, systems.m_s(), h_alpha, det);
    w.certificates = std::move(certs);
    require(w.norm_enclosure.hi() <= w.bound.lo(), Errc::BoundViolation,
            "grid witness norm exceeds sd M_S (sqrt2 h(alpha))^(sd-1) det");
    return w;
  }
  if (trivial) {
    fail(Errc::CannotWitnessNonvanishing,
         "no grid point avoids every system; the zero locus is not {0} on this lattice");
  }
  fail(Errc::GridExhaustedAtPrecisionCap, "product polynomial vanishes on the whole grid");
}

Interval sublattice_bound(const std::vector<Sublattice>& gammas, std::size_t rank, const Interval& h_alpha,
                          const Interval& det) {
  const std::size_t m = gammas.size();
  std::vector<Interval> d;
  for (const auto& g : gammas) d.push_back(Interval(Rational(g.index())) * det);
  Interval total(1);
  for (const auto& x : d) total *= x;
  Interval sum(0);
  for (std::size_t i = 0; i < m; ++i) {
    Interval prod(1);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) prod *= d[j];
    }
    sum += prod;
  }
  sum -= Interval(Rational(static_cast<long>(m) - 1));
  return sqrt2_power(h_alpha, rank - 1) * det * sum + root(total, static_cast<unsigned long>(rank));
}

AvoidWitness sublattice_avoid(const std::vector<Sublattice>& gammas, const EmbeddedLattice& lattice,
                              const Interval& h_alpha, const Interval& det) {
  require(!gammas.empty(), Errc::Validation, "no sublattices given");
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    require(gammas[i].dim() == lattice.rank(), Errc::Validation,
            "sublattice " + std::to_string(i + 1) + " has dimension " + std::to_string(gammas[i].dim()) +
                ", lattice rank is " + std::to_string(lattice.rank()));
    require(gammas[i].index() != 1, Errc::NoProperSublattice,
            "sublattice " + std::to_string(i + 1) + " is the whole lattice");
  }
  const Interval bound = sublattice_bound(gammas, lattice.rank(), h_alpha, det);
  LatticePoint p = enumerate_by_norm(lattice, bound.hi(), [&](const LatticePoint& pt) {
    return avoids(gammas, pt.coeffs);
  });
  AvoidWitness w;
  w.kind = AvoidWitness::Kind::Sublattice;
  w.coeffs = std::move(p.coeffs);
  w.embedded = std::move(p.embedded);
  w.norm = std::move(p.norm);
  w.norm_enclosure = p.norm_enclosure;
  w.bound = bound;
  require(w.norm_enclosure.hi() < w.bound.lo(), Errc::BoundViolation, "sublattice witness norm exceeds the bound");
  return w;
}

bool avoids(const PolySystemSet& systems, const std::vector<FieldElement>& y) {
  if (std::all_of(y.begin(), y.end(), [](const FieldElement& v) { return v.is_zero(); })) return false;
  for (const auto& system : systems.systems()) {
    const bool some = std::any_of(system.begin(), system.end(),
                                  [&](const HomogeneousPoly& p) { return !p.evaluate(y).is_zero(); });
    if (!some) return false;
  }
  return true;
}

bool avoids(const std::vector<Sublattice>& gammas, const std::vector<Integer>& coeffs) {
  return std::none_of(gammas.begin(), gammas.end(), [&](const Sublattice& g) { return g.contains(coeffs); });
}

}  // namespace kronav

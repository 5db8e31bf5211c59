#pragma once

#include <optional>
#include <vector>

#include "kronav/exactnum/field.hpp"
#include "kronav/exactnum/interval.hpp"
#include "kronav/kronecker/theta.hpp"

namespace kronav {

/// Enclosure of the distance ||x|| to the nearest integer over an interval.
Interval distance_to_integer(const Interval& x);

struct LiouvilleCheck {
  Interval lower_bound;  // C_1^-1 |m|^(-e+1)
  Interval distance;     // ||m_1 theta_1 + ... + m_t theta_t||
  bool holds = false;    // distance.lo >= lower_bound.hi
};

/// Throws PreconditionViolation for m = 0.
LiouvilleCheck liouville_lower(const ThetaSystem& thetas, const std::vector<Integer>& m, long bits = 128);

/// 2^(l t (l-1)) (t+1)^(3l-1) (t!)^(2l) H^(l^2 (t+1) - l) eps^(-l+1).
Interval kr_bound(long t, long ell, const Interval& h, const Rational& eps);
/// 2^(-e t) ((t+1)!)^(2e) C_1 eps^(-e+1).
Interval kr_bound_sharp(long t, long e, const Interval& c1, const Rational& eps);

struct KrSearchOptions {
  Integer cap;                // largest |q| examined
  bool allow_zero = false;    // examine q = 0 first
  unsigned threads = 1;
  long precision_cap = 1L << 14;
};

struct KrResult {
  Integer q;
  std::vector<Integer> p;  // nearest integers to q theta_j - a_j
  long bits = 0;           // fixed-point precision that decided q
};

/// Smallest |q| <= cap, positive before negative, with
/// ||q theta_j - a_j|| < eps for every j, certified by interval exclusion.
/// Work is split in blocks across threads; the result is the first success
/// in search order regardless of scheduling. Throws CapExceeded when no q
/// qualifies and BoundaryIndeterminate when a q cannot be decided at the
/// precision cap.
KrResult kr_search(const std::vector<FieldElement>& thetas, const std::vector<FieldElement>& targets,
                   const Rational& eps, const KrSearchOptions& options);

/// Exhaustive scan with exact comparisons in E, independent of kr_search.
/// Throws CapExceeded.
Integer oracle_min_q(const std::vector<FieldElement>& thetas, const std::vector<FieldElement>& targets,
                     const Rational& eps, const Integer& cap, bool allow_zero = false);

/// An integer n with |v - n| < eps, trying the nearest one first; decided exactly.
std::optional<Integer> nearest_within(const FieldElement& v, const Rational& eps);

/// Search order: 1, -1, 2, -2, ... (0 first when allowed).
Integer search_order_value(unsigned long index, bool allow_zero);

}  // namespace kronav

#include "kronav/kronecker/kr.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "kronav/error.hpp"

namespace kronav {

namespace {

constexpr unsigned long kBlock = 2048;
constexpr unsigned long kNoIndex = std::numeric_limits<unsigned long>::max();

Integer factorial(long n) {
  Integer out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

Interval pow2(long exponent) { return Interval(pow(Rational(2), exponent)); }

// theta and target enclosures as integers over 2^bits.
struct FixedPoint {
  long bits = 0;
  std::vector<Integer> theta_lo, theta_hi, target_lo, target_hi;
};

FixedPoint make_fixed_point(const std::vector<FieldElement>& thetas, const std::vector<FieldElement>& targets,
                            long bits) {
  FixedPoint fp;
  fp.bits = bits;
  const Rational scale = pow(Rational(2), bits);
  auto push = [&](const FieldElement& x, std::vector<Integer>& lo, std::vector<Integer>& hi) {
    const Interval enc = evaluate(x, bits + std::max(0L, magnitude_exponent(evaluate(x, 8).magnitude())) + 2);
    lo.push_back(floor(enc.lo() * scale));
    hi.push_back(ceil(enc.hi() * scale));
  };
  for (const auto& t : thetas) push(t, fp.theta_lo, fp.theta_hi);
  for (const auto& a : targets) push(a, fp.target_lo, fp.target_hi);
  return fp;
}

enum class Verdict { Accept, Reject, Unknown };

// Decides ||q theta_j - a_j|| < eps for all j at one fixed-point level.
Verdict decide(const FixedPoint& fp, const Integer& q, const Rational& eps, std::vector<Integer>* p) {
  const Integer s = Integer(1) << static_cast<mp_bitcnt_t>(fp.bits);
  const Integer& num = eps.get_num();
  const Integer& den = eps.get_den();
  const Integer eps_s = num * s;  // compare x * den against eps_s
  bool unknown = false;
  std::vector<Integer> out;
  for (std::size_t j = 0; j < fp.theta_lo.size(); ++j) {
    Integer vlo = sgn(q) >= 0 ? q * fp.theta_lo[j] : q * fp.theta_hi[j];
    Integer vhi = sgn(q) >= 0 ? q * fp.theta_hi[j] : q * fp.theta_lo[j];
    vlo -= fp.target_hi[j];
    vhi -= fp.target_lo[j];
    if (vhi - vlo >= s) {
      unknown = true;
      continue;
    }
    Integer n0;
    mpz_fdiv_q(n0.get_mpz_t(), vlo.get_mpz_t(), s.get_mpz_t());
    const Integer below = vlo - n0 * s;         // distance of vlo above n0
    const Integer above = (n0 + 1) * s - vhi;   // distance of vhi below n0 + 1
    if (below * den >= eps_s && above * den >= eps_s) return Verdict::Reject;
    const Integer mid = vlo + vhi;
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), Integer(mid + s).get_mpz_t(), Integer(2 * s).get_mpz_t());
    const Integer ns = n * s;
    if ((vhi - ns) * den < eps_s && (ns - vlo) * den < eps_s) {
      out.push_back(n);
    } else {
      unknown = true;
    }
  }
  if (unknown) return Verdict::Unknown;
  if (p) *p = std::move(out);
  return Verdict::Accept;
}

struct Outcome {
  bool success = false;
  KrResult result;
  std::string error;
};

class LevelCache {
 public:
  LevelCache(const std::vector<FieldElement>& thetas, const std::vector<FieldElement>& targets, long base)
      : thetas_(thetas), targets_(targets), base_(base) {}

  const FixedPoint& level(std::size_t k) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (levels_.size() <= k) levels_.push_back(make_fixed_point(thetas_, targets_, base_ << levels_.size()));
    return levels_[k];
  }

 private:
  const std::vector<FieldElement>& thetas_;
  const std::vector<FieldElement>& targets_;
  long base_;
  std::mutex mutex_;
  std::deque<FixedPoint> levels_;
};

}  // namespace

Interval distance_to_integer(const Interval& x) {
  if (x.width() >= Rational(1, 2)) return {0, Rational(1, 2)};
  auto dist = [](const Rational& v) -> Rational { return abs(v - Rational(round_nearest(v))); };
  const Integer n_lo = floor(x.lo());
  const bool has_integer = ceil(x.lo()) <= floor(x.hi());
  const Rational half = Rational(n_lo) + Rational(1, 2);
  const bool has_half = x.contains(half) || x.contains(half + 1);
  const Rational dlo = dist(x.lo());
  const Rational dhi = dist(x.hi());
  const Rational lo = has_integer ? Rational(0) : std::min(dlo, dhi);
  const Rational hi = has_half ? Rational(1, 2) : std::max(dlo, dhi);
  return {lo, hi};
}

LiouvilleCheck liouville_lower(const ThetaSystem& thetas, const std::vector<Integer>& m, long bits) {
  require(m.size() == thetas.t(), Errc::PreconditionViolation, "m has wrong length");
  Integer sup = 0;
  for (const auto& x : m) sup = std::max(sup, Integer(abs(x)));
  require(sup != 0, Errc::PreconditionViolation, "m must be nonzero");
  FieldElement sum = zero_like(thetas.thetas.front());
  for (std::size_t j = 0; j < m.size(); ++j) sum += thetas.thetas[j] * Rational(m[j]);
  LiouvilleCheck out;
  out.lower_bound = Interval(1) / (thetas.c1 * Interval(pow(Rational(sup), thetas.e - 1)));
  out.distance = distance_to_integer(evaluate(sum, bits));
  out.holds = out.distance.lo() >= out.lower_bound.hi();
  return out;
}

Interval kr_bound(long t, long ell, const Interval& h, const Rational& eps) {
  require(t >= 1 && ell >= 1 && eps > 0, Errc::PreconditionViolation, "kr_bound needs t, ell >= 1 and eps > 0");
  const long kappa = ell * ell * (t + 1) - ell;
  const Integer tf = factorial(t);
  const Integer c = pow(Integer(t + 1), static_cast<unsigned long>(3 * ell - 1)) *
                    pow(tf, static_cast<unsigned long>(2 * ell));
  return pow2(ell * t * (ell - 1)) * Interval(Rational(c)) * pow(h, static_cast<unsigned long>(kappa)) *
         Interval(pow(eps, 1 - ell));
}

Interval kr_bound_sharp(long t, long e, const Interval& c1, const Rational& eps) {
  require(t >= 1 && e >= 1 && eps > 0, Errc::PreconditionViolation, "kr_bound needs t, e >= 1 and eps > 0");
  const Integer f = pow(factorial(t + 1), static_cast<unsigned long>(2 * e));
  return pow2(-e * t) * Interval(Rational(f)) * c1 * Interval(pow(eps, 1 - e));
}

Integer search_order_value(unsigned long index, bool allow_zero) {
  if (allow_zero) {
    if (index == 0) return 0;
    const Integer mag((index + 1) / 2);
    return index % 2 == 1 ? mag : Integer(-mag);
  }
  const Integer mag(index / 2 + 1);
  return index % 2 == 0 ? mag : Integer(-mag);
}

KrResult kr_search(const std::vector<FieldElement>& thetas, const std::vector<FieldElement>& targets,
                   const Rational& eps, const KrSearchOptions& options) {
  require(!thetas.empty() && thetas.size() == targets.size(), Errc::PreconditionViolation,
          "thetas and targets must have the same positive length");
  require(eps > 0, Errc::PreconditionViolation, "epsilon must be positive");
  require(options.cap >= 0, Errc::PreconditionViolation, "search cap must be nonnegative");

  unsigned long last = kNoIndex - 1;
  if (options.cap.fits_ulong_p() && options.cap < Integer(kNoIndex / 4)) {
    const unsigned long cap = options.cap.get_ui();
    if (options.allow_zero) {
      last = 2 * cap;
    } else {
      require(cap > 0, Errc::CapExceeded, "search cap is zero");
      last = 2 * cap - 1;
    }
  }

  const long base = 64 + static_cast<long>(mpz_sizeinbase(Integer(options.cap + 1).get_mpz_t(), 2));
  LevelCache cache(thetas, targets, base);

  std::atomic<unsigned long> next_block{0};
  std::atomic<unsigned long> best{kNoIndex};
  std::mutex result_mutex;
  std::map<unsigned long, Outcome> outcomes;

  auto test = [&](unsigned long index) -> std::optional<Outcome> {
    const Integer q = search_order_value(index, options.allow_zero);
    for (std::size_t k = 0;; ++k) {
      const FixedPoint& fp = cache.level(k);
      if (fp.bits > options.precision_cap) {
        Outcome o;
        o.error = "q = " + to_string(q) + " is within the enclosure of the epsilon boundary at " +
                  std::to_string(options.precision_cap) + " bits; perturb epsilon";
        return o;
      }
      std::vector<Integer> p;
      const Verdict v = decide(fp, q, eps, &p);
      if (v == Verdict::Reject) return std::nullopt;
      if (v == Verdict::Accept) {
        Outcome o;
        o.success = true;
        o.result = {q, std::move(p), fp.bits};
        return o;
      }
    }
  };

  auto worker = [&] {
    while (true) {
      const unsigned long block = next_block.fetch_add(1);
      const unsigned long start = block * kBlock;
      if (start > last || start >= best.load()) return;
      const unsigned long end = std::min(last, start + kBlock - 1);
      for (unsigned long idx = start; idx <= end; ++idx) {
        if (idx >= best.load()) break;
        auto outcome = test(idx);
        if (!outcome) continue;
        {
          std::lock_guard<std::mutex> lock(result_mutex);
          outcomes.emplace(idx, std::move(*outcome));
        }
        unsigned long cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        break;
      }
    }
  };

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const unsigned long found = best.load();
  if (found == kNoIndex) fail(Errc::CapExceeded, "no q with |q| <= " + to_string(options.cap) + " qualifies");
  Outcome& o = outcomes.at(found);
  if (!o.success) fail(Errc::BoundaryIndeterminate, o.error);
  return std::move(o.result);
}

std::optional<Integer> nearest_within(const FieldElement& v, const Rational& eps) {
  const FieldElement eps_e(v.field(), eps);
  const Integer n = round_nearest(evaluate(v, 32).mid());
  for (long k : {0L, -1L, 1L}) {
    const Integer c = n + k;
    if (compare(abs(v - FieldElement(v.field(), Rational(c))), eps_e) < 0) return c;
  }
  return std::nullopt;
}

Integer oracle_min_q(const std::vector<FieldElement>& thetas, const std::vector<FieldElement>& targets,
                     const Rational& eps, const Integer& cap, bool allow_zero) {
  require(!thetas.empty() && thetas.size() == targets.size(), Errc::PreconditionViolation,
          "thetas and targets must have the same positive length");
  for (unsigned long index = 0;; ++index) {
    const Integer q = search_order_value(index, allow_zero);
    if (abs(q) > cap) break;
    bool all = true;
    for (std::size_t j = 0; j < thetas.size() && all; ++j) {
      all = nearest_within(thetas[j] * Rational(q) - targets[j], eps).has_value();
    }
    if (all) return q;
  }
  fail(Errc::CapExceeded, "oracle found no q with |q| <= " + to_string(cap));
}

}  // namespace kronav

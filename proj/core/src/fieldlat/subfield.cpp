#include "kronav/fieldlat/subfield.hpp"

#include "kronav/error.hpp"
#include "kronav/exactnum/irreducible.hpp"

namespace kronav {

namespace {

struct ComplexE {
  FieldElement re;
  FieldElement im;
};

ComplexE cmul(const ComplexE& a, const ComplexE& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Exact powers g^0..g^(n-1) of a complex image.
std::vector<ComplexE> complex_powers(const ComplexE& g, std::size_t n) {
  const FieldPtr& e = g.re.field();
  std::vector<ComplexE> out{{FieldElement(e, Rational(1)), FieldElement(e, Rational(0))}};
  while (out.size() < n) out.push_back(cmul(out.back(), g));
  return out;
}

std::vector<FieldElement> real_powers(const FieldElement& g, std::size_t n) {
  std::vector<FieldElement> out{FieldElement(g.field(), Rational(1))};
  while (out.size() < n) out.push_back(out.back() * g);
  return out;
}

// Product of power-basis coordinate vectors modulo the minimal polynomial.
std::vector<Rational> mul_power_basis(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      const RatPoly& modulus) {
  const RatPoly prod = RatPoly(a) * RatPoly(b);
  const RatPoly r = divmod(prod, modulus).second;
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) out[i] = r.coeffs()[i];
  return out;
}

}  // namespace

SubfieldK SubfieldK::create(const FieldPtr& e, SubfieldDescription desc) {
  SubfieldK k;
  k.e_ = e;
  k.minpoly_ = primitive_part(desc.minpoly);
  k.d_ = k.minpoly_.degree();
  k.r1_ = static_cast<int>(desc.real_images.size());
  k.r2_ = static_cast<int>(desc.complex_images.size());
  k.disc_ = desc.disc;
  const int d = k.d_;
  const auto du = static_cast<std::size_t>(d);
  require(d >= 1, Errc::Validation, "K minimal polynomial must be nonconstant");
  require(k.r1_ + 2 * k.r2_ == d, Errc::Validation, "embedding count r1 + 2 r2 must equal [K:Q]");
  require(is_irreducible(k.minpoly_), Errc::ReducibleMinPoly, "K minimal polynomial is reducible");

  // Embedding images must be roots, pairwise distinct, with nonzero imaginary parts.
  for (std::size_t i = 0; i < desc.real_images.size(); ++i) {
    const auto& g = desc.real_images[i];
    require(g.field() == e, Errc::ImageNotInE, "real image is not an element of E");
    FieldElement acc(e, Rational(0));
    for (auto it = k.minpoly_.coeffs().rbegin(); it != k.minpoly_.coeffs().rend(); ++it) {
      acc = acc * g + FieldElement(e, Rational(*it));
    }
    require(acc.is_zero(), Errc::ImageNotInE, "real image " + std::to_string(i) + " is not a root of the K minimal polynomial");
    for (std::size_t j = 0; j < i; ++j) {
      require(!(desc.real_images[j] == g), Errc::Validation, "repeated real embedding");
    }
  }
  for (std::size_t i = 0; i < desc.complex_images.size(); ++i) {
    const ComplexE g{desc.complex_images[i].first, desc.complex_images[i].second};
    require(g.re.field() == e && g.im.field() == e, Errc::ImageNotInE, "complex image is not in E");
    require(!g.im.is_zero(), Errc::Validation, "complex embedding with zero imaginary part");
    ComplexE acc{FieldElement(e, Rational(0)), FieldElement(e, Rational(0))};
    for (auto it = k.minpoly_.coeffs().rbegin(); it != k.minpoly_.coeffs().rend(); ++it) {
      acc = cmul(acc, g);
      acc.re += FieldElement(e, Rational(*it));
    }
    require(acc.re.is_zero() && acc.im.is_zero(), Errc::ImageNotInE,
            "complex image " + std::to_string(i) + " is not a root of the K minimal polynomial");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = desc.complex_images[j];
      require(!(o.first == g.re && (o.second == g.im || o.second == -g.im)), Errc::Validation,
              "repeated or conjugate complex embedding");
    }
  }

  // Integral basis: independent, contains 1 in its span, closed under multiplication.
  require(desc.integral_basis.size() == du, Errc::Validation, "integral basis must have d elements");
  for (const auto& w : desc.integral_basis) {
    require(w.size() == du, Errc::Validation, "integral basis element must have d coordinates");
  }
  k.basis_ = desc.integral_basis;
  const auto b = Matrix<Rational>::from_columns(k.basis_);
  auto inv = inverse(b);
  require(inv.has_value(), Errc::Validation, "integral basis is linearly dependent");
  k.basis_inverse_ = *inv;
  const RatPoly modulus = to_rational(k.minpoly_);
  std::vector<Rational> e0(du, Rational(0));
  e0[0] = 1;
  require(is_integral(k.basis_inverse_.apply(e0)), Errc::Validation, "1 is not in the span of the integral basis");
  k.structure_.assign(du, std::vector<KElement>(du));
  for (std::size_t a = 0; a < du; ++a) {
    for (std::size_t c = 0; c < du; ++c) {
      KElement coords = k.basis_inverse_.apply(mul_power_basis(k.basis_[a], k.basis_[c], modulus));
      require(is_integral(coords), Errc::Validation, "integral basis is not closed under multiplication");
      k.structure_[a][c] = std::move(coords);
    }
  }
  Matrix<Rational> trace_form(du, du, Rational(0));
  for (std::size_t a = 0; a < du; ++a) {
    for (std::size_t c = 0; c < du; ++c) trace_form(a, c) = k.trace(k.structure_[a][c]);
  }
  const Rational disc = determinant(trace_form);
  require(disc == Rational(desc.disc), Errc::Validation,
          "integral basis discriminant " + to_string(disc) + " differs from disc_K " + to_string(desc.disc));

  // Slot images of every integral basis element.
  std::vector<std::vector<FieldElement>> gen_powers;
  for (const auto& g : desc.real_images) gen_powers.push_back(real_powers(g, du));
  std::vector<std::vector<ComplexE>> cgen_powers;
  for (const auto& g : desc.complex_images) cgen_powers.push_back(complex_powers({g.first, g.second}, du));
  auto combine = [&](const std::vector<FieldElement>& powers, const std::vector<Rational>& coords) {
    FieldElement acc(e, Rational(0));
    for (std::size_t i = 0; i < du; ++i) {
      if (coords[i] != 0) acc += powers[i] * coords[i];
    }
    return acc;
  };
  for (const auto& powers : gen_powers) {
    std::vector<FieldElement> row;
    for (const auto& w : k.basis_) row.push_back(combine(powers, w));
    k.slot_images_.push_back(std::move(row));
  }
  for (const auto& powers : cgen_powers) {
    std::vector<FieldElement> re_powers;
    std::vector<FieldElement> im_powers;
    for (const auto& p : powers) {
      re_powers.push_back(p.re);
      im_powers.push_back(p.im);
    }
    std::vector<FieldElement> re_row;
    std::vector<FieldElement> im_row;
    for (const auto& w : k.basis_) {
      re_row.push_back(combine(re_powers, w));
      im_row.push_back(combine(im_powers, w));
    }
    k.slot_images_.push_back(std::move(re_row));
    k.slot_images_.push_back(std::move(im_row));
  }
  return k;
}

bool SubfieldK::is_integral(const KElement& a) {
  for (const auto& x : a) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

KElement SubfieldK::one() const {
  std::vector<Rational> e0(static_cast<std::size_t>(d_), Rational(0));
  e0[0] = 1;
  return basis_inverse_.apply(e0);
}

KElement SubfieldK::from_rational(const Rational& q) const {
  KElement out = one();
  for (auto& x : out) x *= q;
  return out;
}

KElement SubfieldK::mul(const KElement& a, const KElement& b) const {
  const auto du = static_cast<std::size_t>(d_);
  KElement out(du, Rational(0));
  for (std::size_t i = 0; i < du; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < du; ++j) {
      if (b[j] == 0) continue;
      const Rational f = a[i] * b[j];
      for (std::size_t m = 0; m < du; ++m) out[m] += f * structure_[i][j][m];
    }
  }
  return out;
}

Matrix<Rational> SubfieldK::mul_matrix(const KElement& c) const {
  const auto du = static_cast<std::size_t>(d_);
  std::vector<std::vector<Rational>> cols;
  for (std::size_t m = 0; m < du; ++m) {
    KElement unit(du, Rational(0));
    unit[m] = 1;
    cols.push_back(mul(c, unit));
  }
  return Matrix<Rational>::from_columns(cols);
}

Rational SubfieldK::trace(const KElement& a) const {
  const Matrix<Rational> m = mul_matrix(a);
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::vector<Rational> SubfieldK::to_power_basis(const KElement& a) const {
  return Matrix<Rational>::from_columns(basis_).apply(a);
}

IntPoly SubfieldK::minimal_polynomial(const KElement& a) const {
  std::vector<std::vector<Rational>> powers{one()};
  for (int k = 1; k <= d_; ++k) {
    powers.push_back(mul(powers.back(), a));
    const auto ker = kernel(Matrix<Rational>::from_columns(powers));
    if (!ker.empty()) return primitive_part(RatPoly(ker.front()));
  }
  fail(Errc::Internal, "no linear relation among powers of a K element");
}

std::vector<FieldElement> SubfieldK::embed(const KElement& a) const {
  require(a.size() == static_cast<std::size_t>(d_), Errc::Validation, "K element must have d coordinates");
  std::vector<FieldElement> out;
  out.reserve(slot_images_.size());
  for (const auto& row : slot_images_) {
    FieldElement acc(e_, Rational(0));
    for (std::size_t m = 0; m < row.size(); ++m) {
      if (a[m] != 0) acc += row[m] * a[m];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<FieldElement> SubfieldK::embed_vector(const std::vector<KElement>& a) const {
  const std::size_t w = a.size();
  std::vector<FieldElement> out(w * static_cast<std::size_t>(d_), FieldElement(e_, Rational(0)));
  for (std::size_t j = 0; j < w; ++j) {
    const auto slots = embed(a[j]);
    for (std::size_t slot = 0; slot < slots.size(); ++slot) out[slot * w + j] = slots[slot];
  }
  return out;
}

}  // namespace kronav

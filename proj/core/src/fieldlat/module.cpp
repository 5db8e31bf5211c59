#include "kronav/fieldlat/module.hpp"

#include "kronav/error.hpp"

namespace kronav {

ModuleM ModuleM::create(const SubfieldK& k, int w, std::vector<PseudoBasisEntry> pseudo_basis) {
  const auto du = static_cast<std::size_t>(k.d());
  require(w >= 1, Errc::Validation, "module dimension w must be positive");
  require(!pseudo_basis.empty() && pseudo_basis.size() <= static_cast<std::size_t>(w), Errc::Validation,
          "pseudo-basis size s must satisfy 1 <= s <= w");
  ModuleM m;
  m.w_ = w;
  for (std::size_t j = 0; j < pseudo_basis.size(); ++j) {
    const auto& entry = pseudo_basis[j];
    const std::string tag = "pseudo-basis entry " + std::to_string(j) + ": ";
    require(entry.ideal.size() == du, Errc::Validation, tag + "ideal needs d basis elements");
    for (const auto& beta : entry.ideal) require(beta.size() == du, Errc::Validation, tag + "ideal element needs d coordinates");
    require(entry.y.size() == static_cast<std::size_t>(w), Errc::Validation, tag + "y needs w entries");
    for (const auto& c : entry.y) {
      require(c.size() == du, Errc::Validation, tag + "y entry needs d coordinates");
      require(SubfieldK::is_integral(c), Errc::Validation, tag + "y must lie in O_K^w (integer coordinates)");
    }
    const auto ideal = Matrix<Rational>::from_columns(entry.ideal);
    const Rational det = determinant(ideal);
    require(det != 0, Errc::Validation, tag + "ideal basis is linearly dependent");
    const auto ideal_inv = *inverse(ideal);
    for (std::size_t a = 0; a < du; ++a) {
      KElement unit(du, Rational(0));
      unit[a] = 1;
      for (const auto& beta : entry.ideal) {
        require(SubfieldK::is_integral(ideal_inv.apply(k.mul(unit, beta))), Errc::Validation,
                tag + "ideal basis does not span an O_K-module");
      }
    }
    m.norms_.push_back(abs(det));
    for (const auto& beta : entry.ideal) {
      std::vector<KElement> gen;
      for (const auto& c : entry.y) gen.push_back(k.mul(beta, c));
      m.z_basis_.push_back(std::move(gen));
    }
  }
  m.entries_ = std::move(pseudo_basis);

  std::vector<std::vector<Rational>> cols;
  for (const auto& gen : m.z_basis_) {
    std::vector<Rational> flat;
    for (const auto& c : gen) flat.insert(flat.end(), c.begin(), c.end());
    cols.push_back(std::move(flat));
  }
  require(rank(Matrix<Rational>::from_columns(cols)) == cols.size(), Errc::RankDeficient,
          "module generators are linearly dependent (y_j not independent over K)");
  return m;
}

std::vector<FieldElement> minkowski_embed(const std::vector<KElement>& a, const SubfieldK& k) {
  return k.embed_vector(a);
}

EmbeddedLattice build_lattice(const ModuleM& m, const SubfieldK& k) {
  std::vector<std::vector<FieldElement>> cols;
  for (const auto& gen : m.z_basis()) cols.push_back(minkowski_embed(gen, k));
  return EmbeddedLattice::from_columns(cols);
}

Rational discriminant_M(const ModuleM& m, const SubfieldK& k) {
  Rational disc(k.disc());
  for (const auto& n : m.ideal_norms()) disc *= n * n;
  return disc;
}

DeterminantReport determinant(const EmbeddedLattice& lattice, const ModuleM& m, const SubfieldK& k) {
  const long s = m.s();
  DeterminantReport r;
  r.gram = lattice.gram_determinant();
  r.value = sqrt(evaluate(r.gram, 128), 96);
  const Rational two_pow = pow(Rational(2), -2 * s * k.r2());
  Rational closed = two_pow * pow(Rational(abs(k.disc())), s);
  for (const auto& n : m.ideal_norms()) closed *= n * n;
  r.closed_form_squared = closed;
  r.closed_form = sqrt(Interval(closed), 96);
  r.module_disc_form_squared = two_pow * pow(abs(discriminant_M(m, k)), s);
  r.module_disc_form = sqrt(Interval(r.module_disc_form_squared), 96);
  r.closed_form_agrees = r.gram == FieldElement(lattice.field(), closed);
  r.module_disc_form_agrees = r.gram == FieldElement(lattice.field(), r.module_disc_form_squared);
  return r;
}

}  // namespace kronav

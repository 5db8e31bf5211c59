#include "kronav/io/problem.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "kronav/error.hpp"

namespace kronav {

namespace {

using json = nlohmann::json;

const json& field_of(const json& j, const char* key, const std::string& where) {
  require(j.is_object() && j.contains(key), Errc::Validation, where + ": missing \"" + key + "\"");
  return j.at(key);
}

const json& array_of(const json& j, const char* key, const std::string& where) {
  const json& v = field_of(j, key, where);
  require(v.is_array(), Errc::Validation, where + "." + key + " must be an array");
  return v;
}

Rational rational_of(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), Errc::Validation, where + ": expected a rational string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    fail(Errc::Validation, where + ": malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Integer integer_of(const json& j, const std::string& where) {
  const Rational r = rational_of(j, where);
  require(r.get_den() == 1, Errc::Validation, where + ": expected an integer");
  return r.get_num();
}

long small_integer_of(const json& j, const std::string& where) {
  const Integer n = integer_of(j, where);
  require(n.fits_slong_p(), Errc::Validation, where + ": integer out of range");
  return n.get_si();
}

std::vector<Rational> rationals_of(const json& j, const std::string& where) {
  require(j.is_array(), Errc::Validation, where + " must be an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_of(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

IntPoly int_poly_of(const json& j, const std::string& where) {
  require(j.is_array() && !j.empty(), Errc::Validation, where + " must be a nonempty coefficient array");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(integer_of(j[i], where + "[" + std::to_string(i) + "]"));
  return IntPoly(c);
}

FieldElement element_of(const FieldPtr& e, const json& j, const std::string& where) {
  if (!j.is_array()) return FieldElement(e, rational_of(j, where));
  std::vector<Rational> coords = rationals_of(j, where);
  require(coords.size() <= static_cast<std::size_t>(e->degree()), Errc::Validation,
          where + ": more coordinates than the degree of E");
  coords.resize(static_cast<std::size_t>(e->degree()), Rational(0));
  return FieldElement(e, std::move(coords));
}

FieldPtr parse_field(const json& f) {
  const IntPoly minpoly = int_poly_of(field_of(f, "e_minpoly", "field"), "field.e_minpoly");
  const auto interval = rationals_of(field_of(f, "e_root_interval", "field"), "field.e_root_interval");
  require(interval.size() == 2, Errc::Validation, "field.e_root_interval needs [lo, hi]");
  return NumberField::create(minpoly, interval[0], interval[1]);
}

SubfieldK parse_k(const FieldPtr& e, const json& f) {
  SubfieldDescription desc;
  desc.minpoly = int_poly_of(field_of(f, "k_minpoly", "field"), "field.k_minpoly");
  const json& images = field_of(f, "gen_images", "field");
  if (images.contains("real")) {
    const json& real = array_of(images, "real", "field.gen_images");
    for (std::size_t i = 0; i < real.size(); ++i) {
      desc.real_images.push_back(element_of(e, real[i], "field.gen_images.real[" + std::to_string(i) + "]"));
    }
  }
  if (images.contains("complex")) {
    const json& complex = array_of(images, "complex", "field.gen_images");
    for (std::size_t i = 0; i < complex.size(); ++i) {
      const std::string where = "field.gen_images.complex[" + std::to_string(i) + "]";
      desc.complex_images.emplace_back(element_of(e, field_of(complex[i], "re", where), where + ".re"),
                                       element_of(e, field_of(complex[i], "im", where), where + ".im"));
    }
  }
  const json& basis = array_of(f, "integral_basis", "field");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    desc.integral_basis.push_back(rationals_of(basis[i], "field.integral_basis[" + std::to_string(i) + "]"));
  }
  desc.disc = integer_of(field_of(f, "disc_K", "field"), "field.disc_K");
  return SubfieldK::create(e, std::move(desc));
}

ModuleM parse_module(const SubfieldK& k, const json& m) {
  const long w = small_integer_of(field_of(m, "w", "module"), "module.w");
  require(w >= 1 && w <= 16, Errc::Validation, "module.w must lie in [1, 16]");
  const json& pb = array_of(m, "pseudo_basis", "module");
  if (m.contains("s")) {
    require(small_integer_of(m.at("s"), "module.s") == static_cast<long>(pb.size()), Errc::Validation,
            "module.s disagrees with the pseudo-basis length");
  }
  std::vector<PseudoBasisEntry> entries;
  for (std::size_t j = 0; j < pb.size(); ++j) {
    const std::string where = "module.pseudo_basis[" + std::to_string(j) + "]";
    PseudoBasisEntry entry;
    const json& ideal = array_of(pb[j], "ideal", where);
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      entry.ideal.push_back(rationals_of(ideal[i], where + ".ideal[" + std::to_string(i) + "]"));
    }
    const json& y = array_of(pb[j], "y", where);
    for (std::size_t i = 0; i < y.size(); ++i) {
      entry.y.push_back(rationals_of(y[i], where + ".y[" + std::to_string(i) + "]"));
    }
    entries.push_back(std::move(entry));
  }
  return ModuleM::create(k, static_cast<int>(w), std::move(entries));
}

FormMatrix parse_forms(const FieldPtr& e, const json& f, std::size_t wd) {
  const json& b = array_of(f, "B", "forms");
  require(!b.empty(), Errc::Validation, "forms.B needs at least one row");
  std::vector<std::vector<FieldElement>> rows;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string where = "forms.B[" + std::to_string(i) + "]";
    require(b[i].is_array() && b[i].size() == wd, Errc::Validation,
            where + " must have wd = " + std::to_string(wd) + " entries");
    std::vector<FieldElement> row;
    for (std::size_t j = 0; j < wd; ++j) row.push_back(element_of(e, b[i][j], where + "[" + std::to_string(j) + "]"));
    rows.push_back(std::move(row));
  }
  Matrix<FieldElement> m(rows.size(), wd, rows[0][0]);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < wd; ++j) m(i, j) = rows[i][j];
  }
  return make_form_matrix(std::move(m));
}

Exponents exponents_of(const std::string& key, std::size_t n, const std::string& where) {
  Exponents out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    require(!part.empty() && part.find_first_not_of("0123456789 ") == std::string::npos, Errc::Validation,
            where + ": malformed exponent key \"" + key + "\"");
    const unsigned long v = std::stoul(part);
    require(v <= 64, Errc::Validation, where + ": exponent above 64");
    out.push_back(static_cast<unsigned>(v));
  }
  require(out.size() == n, Errc::Validation,
          where + ": exponent key \"" + key + "\" needs " + std::to_string(n) + " entries");
  return out;
}

PolySystemSet parse_systems(const json& av, std::size_t n) {
  const bool trivial = av.value("zero_locus_trivial", false);
  std::vector<std::vector<HomogeneousPoly>> systems;
  const json& list = array_of(av, "systems", "avoidance");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "avoidance.systems[" + std::to_string(i) + "]";
    require(list[i].is_array(), Errc::Validation, where + " must be an array of polynomials");
    std::vector<HomogeneousPoly> system;
    for (std::size_t k = 0; k < list[i].size(); ++k) {
      const std::string pwhere = where + "[" + std::to_string(k) + "]";
      require(list[i][k].is_object(), Errc::Validation, pwhere + " must map exponent keys to coefficients");
      std::map<Exponents, Rational> terms;
      for (const auto& [key, coeff] : list[i][k].items()) {
        terms[exponents_of(key, n, pwhere)] += rational_of(coeff, pwhere + "." + key);
      }
      system.push_back(HomogeneousPoly::create(n, terms));
    }
    systems.push_back(std::move(system));
  }
  return PolySystemSet::create(n, std::move(systems), trivial);
}

std::vector<Sublattice> parse_sublattices(const json& av, std::size_t rank) {
  std::vector<Sublattice> out;
  const json& list = array_of(av, "sublattices", "avoidance");
  require(!list.empty(), Errc::Validation, "avoidance.sublattices is empty");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "avoidance.sublattices[" + std::to_string(i) + "]";
    require(list[i].is_array() && list[i].size() == rank, Errc::Validation,
            where + " needs sd = " + std::to_string(rank) + " basis columns");
    std::vector<std::vector<Integer>> cols;
    for (std::size_t c = 0; c < rank; ++c) {
      const std::string cwhere = where + "[" + std::to_string(c) + "]";
      require(list[i][c].is_array() && list[i][c].size() == rank, Errc::Validation,
              cwhere + " needs " + std::to_string(rank) + " coordinates");
      std::vector<Integer> col;
      for (std::size_t r = 0; r < rank; ++r) col.push_back(integer_of(list[i][c][r], cwhere));
      cols.push_back(std::move(col));
    }
    const IntMatrix m = IntMatrix::from_columns(cols);
    require(determinant(to_rational(m)) != 0, Errc::Validation, where + " is not of full rank");
    out.emplace_back(m);
  }
  return out;
}

ProblemOptions parse_options(const json& o) {
  ProblemOptions out;
  if (o.contains("precision_cap")) {
    out.precision_cap = small_integer_of(o.at("precision_cap"), "options.precision_cap");
    require(out.precision_cap >= 64 && out.precision_cap <= (1L << 20), Errc::Validation,
            "options.precision_cap must lie in [64, 2^20]");
  }
  if (o.contains("search_cap") && !o.at("search_cap").is_null()) {
    out.search_cap = integer_of(o.at("search_cap"), "options.search_cap");
    require(*out.search_cap >= 0, Errc::Validation, "options.search_cap must be nonnegative");
  }
  if (o.contains("ell") && !o.at("ell").is_null()) {
    const long ell = small_integer_of(o.at("ell"), "options.ell");
    require(ell >= 1 && ell <= 64, Errc::Validation, "options.ell must lie in [1, 64]");
    out.ell = static_cast<int>(ell);
  }
  return out;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  require(EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) == 1, Errc::Internal,
          "SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::Validation, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    fail(Errc::Validation, std::string("problem file is not valid JSON: ") + ex.what());
  }
  require(doc.is_object(), Errc::Validation, "problem file must be a JSON object");
  try {
    Problem p;
    const json& field = field_of(doc, "field", "problem");
    p.e = parse_field(field);
    p.k = parse_k(p.e, field);
    p.module = parse_module(*p.k, field_of(doc, "module", "problem"));
    p.lattice = build_lattice(p.module, *p.k);
    p.forms = parse_forms(p.e, field_of(doc, "forms", "problem"), p.lattice.ambient());

    const json& target = field_of(doc, "target", "problem");
    p.a = rationals_of(field_of(target, "a", "target"), "target.a");
    require(p.a.size() == p.forms.t(), Errc::Validation,
            "target.a has " + std::to_string(p.a.size()) + " entries but B has " + std::to_string(p.forms.t()) +
                " rows");
    p.epsilon = rational_of(field_of(target, "epsilon", "target"), "target.epsilon");
    require(p.epsilon > 0, Errc::Validation, "target.epsilon must be positive");

    const json& av = field_of(doc, "avoidance", "problem");
    const json& mode = field_of(av, "mode", "avoidance");
    require(mode.is_string(), Errc::Validation, "avoidance.mode must be a string");
    if (mode == "polynomials") {
      p.mode = AvoidanceMode::Polynomials;
      p.systems = parse_systems(av, p.lattice.ambient());
    } else if (mode == "sublattices") {
      p.mode = AvoidanceMode::Sublattices;
      p.sublattices = parse_sublattices(av, p.lattice.rank());
    } else {
      fail(Errc::Validation, "avoidance.mode must be \"polynomials\" or \"sublattices\"");
    }
    if (doc.contains("options")) p.options = parse_options(doc.at("options"));

    p.canonical = doc.dump();
    p.hash = sha256_hex(p.canonical);
    return p;
  } catch (const json::exception& ex) {
    fail(Errc::Validation, std::string("problem file: ") + ex.what());
  }
}

Problem load_problem(const std::string& path) { return parse_problem(read_file(path)); }

}  // namespace kronav

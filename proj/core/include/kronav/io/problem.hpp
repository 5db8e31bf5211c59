#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kronav/avoidance/polynomial_system.hpp"
#include "kronav/exactnum/field.hpp"
#include "kronav/fieldlat/lattice.hpp"
#include "kronav/fieldlat/module.hpp"
#include "kronav/fieldlat/subfield.hpp"
#include "kronav/geometry/hnf.hpp"
#include "kronav/kronecker/forms.hpp"

namespace kronav {

enum class AvoidanceMode { Polynomials, Sublattices };

struct ProblemOptions {
  long precision_cap = 1L << 14;
  std::optional<Integer> search_cap;
  std::optional<int> ell;
};

/// A loaded and validated problem file.
struct Problem {
  FieldPtr e;
  std::optional<SubfieldK> k;
  ModuleM module;
  EmbeddedLattice lattice;
  FormMatrix forms;
  std::vector<Rational> a;
  Rational epsilon;
  AvoidanceMode mode = AvoidanceMode::Polynomials;
  std::optional<PolySystemSet> systems;
  std::vector<Sublattice> sublattices;
  ProblemOptions options;
  /// Compact dump of the parsed document with sorted keys.
  std::string canonical;
  /// SHA-256 of canonical, lowercase hex.
  std::string hash;

  const SubfieldK& field_k() const { return *k; }
  std::size_t t() const { return forms.t(); }
};

/// Throws Validation on any schema or consistency error.
Problem parse_problem(const std::string& text);
/// Throws Validation when the file cannot be read.
Problem load_problem(const std::string& path);

std::string read_file(const std::string& path);
std::string sha256_hex(const std::string& data);

}  // namespace kronav

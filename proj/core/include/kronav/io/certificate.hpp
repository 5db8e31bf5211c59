#pragma once

#include <string>
#include <vector>

#include "kronav/io/problem.hpp"
#include "kronav/kronecker/solve.hpp"

namespace kronav {

/// Canonical JSON (sorted keys, two-space indent) with a SHA-256 stamp over
/// the document without the stamp.
std::string certificate_document(const Certificate& c, const Problem& problem, const Setup& setup);

struct VerifyItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  bool hash_mismatch = false;
  std::vector<VerifyItem> items;

  bool passed() const;
  /// 0 all pass, 1 some item failed, 2 problem hash mismatch.
  int exit_code() const;
  const VerifyItem* find(const std::string& name) const;
};

/// Re-derives every recorded inequality from the certificate's exact data
/// and the problem. Never throws on malformed certificates; failures become
/// items.
VerifyReport verify_certificate(const std::string& text, const Problem& problem);

}  // namespace kronav

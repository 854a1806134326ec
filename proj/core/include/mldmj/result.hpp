#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mldmj/newton.hpp"

namespace mldmj {

enum class CertKind { ToricCovector, JetLevel, ClassLabel, BlowupChain };

std::string cert_kind_name(CertKind k);

/// Machine-checkable witness for an MldResult. Which fields are meaningful
/// depends on the kind:
///  - ToricCovector: p, kE = <p,1> - 1, val = <p, polygon>
///  - JetLevel:      level = m, s = s_m
///  - ClassLabel:    label (+ optional p with kE/val when a named divisor
///                   accompanies the class), provenance
///  - BlowupChain:   label (description), kE, val
struct Certificate {
  CertKind kind = CertKind::JetLevel;
  Covector p;
  long kE = 0;
  long val = 0;
  int level = -1;
  long s = 0;
  std::string label;
  std::string provenance;
};

struct MldResult {
  bool finite = true;
  long value = 0;  // meaningful when finite; the result is -infinity otherwise
  bool certified = false;
  Certificate certificate;
  std::optional<long> nu_upper;
};

/// a(E_p) = <p,1> - <p,polygon>; may be negative.
long toric_log_discrepancy(const NewtonPolygon& polygon, const Covector& p);

/// Build a toric certificate from a covector, re-checking the claimed value
/// against the polygon (value ignored when finite = false; then the
/// discrepancy only has to be negative). Throws Error on mismatch.
Certificate make_toric_certificate(const NewtonPolygon& polygon, const Covector& p,
                                   bool finite, long value);

void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const MldResult& r);
MldResult mld_result_from_json(const nlohmann::json& j);

/// Human-readable "3" or "-inf".
std::string value_str(const MldResult& r);

}  // namespace mldmj

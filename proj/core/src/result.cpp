#include "mldmj/result.hpp"

#include "mldmj/errors.hpp"

namespace mldmj {

std::string cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::ToricCovector: return "toric-covector";
    case CertKind::JetLevel: return "jet-level";
    case CertKind::ClassLabel: return "class-label";
    case CertKind::BlowupChain: return "blowup-chain";
  }
  return "?";
}

long toric_log_discrepancy(const NewtonPolygon& polygon, const Covector& p) {
  return pairing(p, Monomial(polygon.ambient_dim(), 1)) - polygon.min_pairing(p);
}

Certificate make_toric_certificate(const NewtonPolygon& polygon, const Covector& p,
                                   bool finite, long value) {
  long a = toric_log_discrepancy(polygon, p);
  if (finite ? a != value : a >= 0)
    throw Error("toric covector does not certify the claimed value");
  Certificate c;
  c.kind = CertKind::ToricCovector;
  c.p = p;
  c.kE = pairing(p, Monomial(polygon.ambient_dim(), 1)) - 1;
  c.val = polygon.min_pairing(p);
  return c;
}

void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"kind", cert_kind_name(c.kind)}};
  switch (c.kind) {
    case CertKind::ToricCovector:
      j["p"] = c.p;
      j["kE"] = c.kE;
      j["val"] = c.val;
      break;
    case CertKind::JetLevel:
      j["level"] = c.level;
      j["s"] = c.s;
      break;
    case CertKind::ClassLabel:
      j["class"] = c.label;
      if (!c.p.empty()) {
        j["p"] = c.p;
        j["kE"] = c.kE;
        j["val"] = c.val;
      }
      if (!c.provenance.empty()) j["provenance"] = c.provenance;
      break;
    case CertKind::BlowupChain:
      j["chain"] = c.label;
      j["kE"] = c.kE;
      j["val"] = c.val;
      break;
  }
}

void to_json(nlohmann::json& j, const MldResult& r) {
  j = nlohmann::json::object();
  if (r.finite)
    j["mld"] = r.value;
  else
    j["mld"] = "-inf";
  j["certified"] = r.certified;
  nlohmann::json cj;
  to_json(cj, r.certificate);
  j["certificate"] = cj;
  if (r.nu_upper) j["nu_upper"] = *r.nu_upper;
}

MldResult mld_result_from_json(const nlohmann::json& j) {
  MldResult r;
  if (j.at("mld").is_string()) {
    if (j.at("mld").get<std::string>() != "-inf")
      throw ParseError("unexpected mld value");
    r.finite = false;
  } else {
    r.finite = true;
    r.value = j.at("mld").get<long>();
  }
  r.certified = j.at("certified").get<bool>();
  const nlohmann::json& c = j.at("certificate");
  std::string kind = c.at("kind").get<std::string>();
  Certificate& cert = r.certificate;
  if (kind == "toric-covector") {
    cert.kind = CertKind::ToricCovector;
    cert.p = c.at("p").get<Covector>();
    cert.kE = c.at("kE").get<long>();
    cert.val = c.at("val").get<long>();
  } else if (kind == "jet-level") {
    cert.kind = CertKind::JetLevel;
    cert.level = c.at("level").get<int>();
    cert.s = c.at("s").get<long>();
  } else if (kind == "class-label") {
    cert.kind = CertKind::ClassLabel;
    cert.label = c.at("class").get<std::string>();
    if (c.contains("p")) {
      cert.p = c.at("p").get<Covector>();
      cert.kE = c.at("kE").get<long>();
      cert.val = c.at("val").get<long>();
    }
    if (c.contains("provenance"))
      cert.provenance = c.at("provenance").get<std::string>();
  } else if (kind == "blowup-chain") {
    cert.kind = CertKind::BlowupChain;
    cert.label = c.at("chain").get<std::string>();
    cert.kE = c.at("kE").get<long>();
    cert.val = c.at("val").get<long>();
  } else {
    throw ParseError("unknown certificate kind: " + kind);
  }
  if (j.contains("nu_upper")) r.nu_upper = j.at("nu_upper").get<long>();
  return r;
}

std::string value_str(const MldResult& r) {
  return r.finite ? std::to_string(r.value) : "-inf";
}

}  // namespace mldmj

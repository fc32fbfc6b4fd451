#pragma once

#include <string>
#include <string_view>

#include "arcmatch/core.hpp"
#include "arcmatch/ramsey.hpp"

namespace arcmatch {

inline constexpr int kCertificateSchemaVersion = 1;

// JSON certificate for a witness run. Bounds are decimal strings.
std::string certificate_json(const Matching& host, std::size_t k, const WitnessReport& report, int indent = 2);

struct CertificateCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Re-checks a certificate using only the host text, the containment oracle
// and classify_sequence; it never calls back into witness().
CertificateCheck verify_certificate(std::string_view json_text);

}  // namespace arcmatch

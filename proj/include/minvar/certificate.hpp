// Machine-readable verification certificates with a stable JSON schema.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minvar {

enum class Verdict { Proved, Refuted, ResourcesExceeded };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct CertContainment {
  std::string poly;
  bool member = false;
};

struct CertRadical {
  std::string gen;
  bool in_radical = false;
  std::uint64_t reductions = 0;
  std::uint64_t gb_size = 0;
};

struct VerificationCertificate {
  int s = 0;
  int t = 0;
  std::string ident;
  std::string field;
  std::string order;
  std::string set_label;
  std::vector<CertContainment> containment;
  std::vector<CertRadical> radical;
  Verdict verdict = Verdict::Refuted;
  std::string witness;  // first failing polynomial/generator when refuted
  std::int64_t ms = 0;

  // exit codes: 0 proved, 1 refuted, 3 resources exceeded
  int exit_code() const;

  std::string to_json() const;
  static VerificationCertificate from_json(const std::string& text);
};

}  // namespace minvar

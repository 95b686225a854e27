#pragma once

// Per-condition verdicts and verification reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monadforge/groebner.hpp"

namespace monadforge {

enum class Verdict { Pass, Fail, Probable, Indeterminate };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

/// exact: rational arithmetic and certified Groebner bases.
/// fast: open conditions decided modulo a large prime (PROBABLE verdicts).
enum class Mode { Exact, Fast };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct VerifyOptions {
  Mode mode = Mode::Exact;
  std::uint64_t prime = kDefaultPrime;
  EmptinessOptions emptiness{};
};

/// Exact for n <= 3, fast beyond.
VerifyOptions default_options(std::size_t n);

struct ConditionResult {
  std::string id;       // short key, e.g. "ii" or "iv_gamma"
  std::string label;    // human-readable condition
  Verdict verdict = Verdict::Indeterminate;
  std::string detail;
  std::optional<long> value;                       // rank, h0, ... when meaningful
  std::optional<EmptinessCertificate> certificate; // for surjectivity conditions
};

struct VerificationReport {
  std::string subject;  // net, plane, gamma, octuple
  std::size_t n = 0;
  std::size_t ambient = 4;
  Mode mode = Mode::Exact;
  std::uint64_t prime = 0;
  std::vector<ConditionResult> conditions;

  const ConditionResult& get(const std::string& id) const;
  Verdict verdict(const std::string& id) const { return get(id).verdict; }
  /// FAIL if any condition fails, else PROBABLE/INDETERMINATE if any, else PASS.
  Verdict overall() const;
};

/// 0 all PASS, 1 any FAIL, 2 only PROBABLE/INDETERMINATE blockers.
int exit_code(Verdict overall);

/// Verdict of a surjectivity condition decided by an emptiness certificate.
Verdict verdict_from(const EmptinessCertificate& c);

/// Same verdicts for the same condition ids, in order.
bool same_verdicts(const VerificationReport& a, const VerificationReport& b);

}  // namespace monadforge

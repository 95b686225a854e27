#include "monadforge/report.hpp"

namespace monadforge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Probable:
      return "PROBABLE";
    case Verdict::Indeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "PASS") return Verdict::Pass;
  if (s == "FAIL") return Verdict::Fail;
  if (s == "PROBABLE") return Verdict::Probable;
  if (s == "INDETERMINATE") return Verdict::Indeterminate;
  throw ParseError("", "unknown verdict \"" + s + "\"");
}

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "fast"; }

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "fast") return Mode::Fast;
  throw InvalidArgument("mode must be exact or fast, got \"" + s + "\"");
}

VerifyOptions default_options(std::size_t n) {
  VerifyOptions o;
  o.mode = n <= 3 ? Mode::Exact : Mode::Fast;
  return o;
}

const ConditionResult& VerificationReport::get(const std::string& id) const {
  for (const auto& c : conditions)
    if (c.id == id) return c;
  throw InvalidArgument("report has no condition \"" + id + "\"");
}

Verdict VerificationReport::overall() const {
  bool soft = false;
  for (const auto& c : conditions) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict != Verdict::Pass) soft = true;
  }
  return soft ? Verdict::Probable : Verdict::Pass;
}

int exit_code(Verdict overall) {
  switch (overall) {
    case Verdict::Pass:
      return 0;
    case Verdict::Fail:
      return 1;
    default:
      return 2;
  }
}

Verdict verdict_from(const EmptinessCertificate& c) {
  switch (c.kind) {
    case EmptinessKind::Empty:
      return c.mode == CertMode::Certified ? Verdict::Pass : Verdict::Probable;
    case EmptinessKind::Nonempty:
    case EmptinessKind::ProbableNonempty:
      // a Groebner basis without pure powers already proves a zero exists
      // (over the closure, or modulo p in fast mode)
      return Verdict::Fail;
    case EmptinessKind::Indeterminate:
      return Verdict::Indeterminate;
  }
  return Verdict::Indeterminate;
}

bool same_verdicts(const VerificationReport& a, const VerificationReport& b) {
  if (a.conditions.size() != b.conditions.size()) return false;
  for (std::size_t i = 0; i < a.conditions.size(); ++i) {
    if (a.conditions[i].id != b.conditions[i].id) return false;
    if (a.conditions[i].verdict != b.conditions[i].verdict) return false;
  }
  return true;
}

}  // namespace monadforge

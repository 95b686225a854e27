#pragma once

// JSON files: net/v1, octuple/v1, gamma/v1, sigma/v1 inputs and the report,
// table and certificate outputs.  Scalars are decimal strings "p/q".

#include <string>
#include <variant>

#include <json.hpp>

#include "monadforge/workbench.hpp"

namespace monadforge {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const QVec& v);
Json to_json(const QMatrix& m);
Json to_json(const QPoly& p);

/// `where` is the JSON pointer used in error messages.
Rational rational_from_json(const Json& j, const std::string& where);
QVec vector_from_json(const Json& j, std::size_t n, const std::string& where);
QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

Json to_json(const QuadricNet& net);
Json to_json(const BarthOctuple& o);
Json to_json(const GammaPoint& g);
Json to_json(const SigmaPoint& s);

QuadricNet net_from_json(const Json& j);
BarthOctuple octuple_from_json(const Json& j);
GammaPoint gamma_from_json(const Json& j);
SigmaPoint sigma_from_json(const Json& j);

using AnyInput = std::variant<QuadricNet, BarthOctuple, GammaPoint, SigmaPoint>;
/// Dispatches on the schema tag.
AnyInput input_from_json(const Json& j);

/// Reads and parses a file; throws ParseError with the file name on failure.
Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

Json to_json(const EmptinessCertificate& c);
Json to_json(const ConditionResult& c);
Json to_json(const VerificationReport& r);
Json to_json(const CohomologyTable& t);
Json to_json(const DimsRow& r);
Json to_json(const FiberReport& f, const SigmaPoint& s);
Json to_json(const DCertificate& c);
Json to_json(const HElement& h);
Json to_json(const OrbitReport& r);
Json to_json(const SearchResult& r, bool include_points);

}  // namespace monadforge

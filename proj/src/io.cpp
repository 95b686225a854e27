#include "monadforge/io.hpp"

#include <fstream>
#include <sstream>

namespace monadforge {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const QVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const QMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const QPoly& p) {
  Json j = Json::array();
  for (const auto& t : p.terms()) {
    Json e = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) e.push_back(t.m.e[i]);
    j.push_back(Json::array({e, to_string(t.c)}));
  }
  return j;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError(where, "expected a scalar string such as \"3/4\"");
}

QVec vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  if (j.size() != n) throw ParseError(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  QVec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
  return v;
}

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of rows");
  if (j.size() != rows) throw ParseError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    QVec r = vector_from_json(j[i], cols, where + "/" + std::to_string(i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("/" + key, "missing field");
  return *it;
}

std::size_t size_field(const Json& j, const std::string& key, std::size_t lo, std::size_t hi) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError("/" + key, "expected an integer");
  long long x = v.get<long long>();
  if (x < static_cast<long long>(lo) || x > static_cast<long long>(hi)) {
    throw ParseError("/" + key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::size_t>(x);
}

void expect_schema(const Json& j, const std::string& schema) {
  const Json& s = field(j, "schema");
  if (!s.is_string() || s.get<std::string>() != schema) throw ParseError("/schema", "expected \"" + schema + "\"");
}

QMatrix symmetric_field(const Json& j, const std::string& key, std::size_t n) {
  QMatrix m = matrix_from_json(field(j, key), n, n, "/" + key);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (m(r, c) != m(c, r)) {
        throw ParseError("/" + key + "/" + std::to_string(r) + "/" + std::to_string(c), "matrix is not symmetric");
      }
  return m;
}

constexpr std::size_t kMaxN = 64;

}  // namespace

Json to_json(const QuadricNet& net) {
  Json j;
  j["schema"] = "net/v1";
  j["n"] = net.n;
  j["ambient"] = net.ambient;
  Json blocks = Json::object();
  auto pairs = QuadricNet::pairs(net.ambient);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    blocks[QuadricNet::pair_key(pairs[k].first, pairs[k].second)] = to_json(net.blocks[k]);
  j["blocks"] = blocks;
  return j;
}

Json to_json(const BarthOctuple& o) {
  Json j;
  j["schema"] = "octuple/v1";
  j["n"] = o.n;
  j["A1"] = to_json(o.A1);
  j["A2"] = to_json(o.A2);
  j["B1"] = to_json(o.B1);
  j["B2"] = to_json(o.B2);
  j["a1"] = to_json(o.a1);
  j["a2"] = to_json(o.a2);
  j["b1"] = to_json(o.b1);
  j["b2"] = to_json(o.b2);
  return j;
}

Json to_json(const GammaPoint& g) {
  Json j;
  j["schema"] = "gamma/v1";
  j["n"] = g.n;
  j["ambient"] = g.ambient;
  j["matrix"] = to_json(g.gamma);
  return j;
}

Json to_json(const SigmaPoint& s) {
  Json j;
  j["schema"] = "sigma/v1";
  j["n"] = s.n;
  j["B1"] = to_json(s.B1);
  j["B2"] = to_json(s.B2);
  j["C"] = to_json(s.C);
  j["a1"] = to_json(s.a1);
  j["a2"] = to_json(s.a2);
  j["b1"] = to_json(s.b1);
  j["b2"] = to_json(s.b2);
  return j;
}

QuadricNet net_from_json(const Json& j) {
  expect_schema(j, "net/v1");
  QuadricNet net;
  net.n = size_field(j, "n", 1, kMaxN);
  net.ambient = j.contains("ambient") ? size_field(j, "ambient", 3, 4) : 4;
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_object()) throw ParseError("/blocks", "expected an object keyed by pairs");
  auto pairs = QuadricNet::pairs(net.ambient);
  for (auto it = blocks.begin(); it != blocks.end(); ++it) {
    bool known = false;
    for (auto [a, b] : pairs) known = known || QuadricNet::pair_key(a, b) == it.key();
    if (!known) throw ParseError("/blocks/" + it.key(), "unknown pair for ambient " + std::to_string(net.ambient));
  }
  for (auto [a, b] : pairs) {
    const std::string key = QuadricNet::pair_key(a, b);
    if (!blocks.contains(key)) {
      net.blocks.push_back(QMatrix(net.n, net.n));
      continue;
    }
    QMatrix m = matrix_from_json(blocks[key], net.n, net.n, "/blocks/" + key);
    if (!m.is_symmetric()) throw ParseError("/blocks/" + key, "block is not symmetric");
    net.blocks.push_back(std::move(m));
  }
  return net;
}

BarthOctuple octuple_from_json(const Json& j) {
  expect_schema(j, "octuple/v1");
  BarthOctuple o;
  o.n = size_field(j, "n", 1, kMaxN);
  o.A1 = symmetric_field(j, "A1", o.n);
  o.A2 = symmetric_field(j, "A2", o.n);
  o.B1 = symmetric_field(j, "B1", o.n);
  o.B2 = symmetric_field(j, "B2", o.n);
  o.a1 = vector_from_json(field(j, "a1"), o.n, "/a1");
  o.a2 = vector_from_json(field(j, "a2"), o.n, "/a2");
  o.b1 = vector_from_json(field(j, "b1"), o.n, "/b1");
  o.b2 = vector_from_json(field(j, "b2"), o.n, "/b2");
  return o;
}

GammaPoint gamma_from_json(const Json& j) {
  expect_schema(j, "gamma/v1");
  GammaPoint g;
  g.n = size_field(j, "n", 1, kMaxN);
  g.ambient = j.contains("ambient") ? size_field(j, "ambient", 3, 4) : 4;
  g.gamma = matrix_from_json(field(j, "matrix"), 2 * g.n + 2, g.ambient * g.n, "/matrix");
  return g;
}

SigmaPoint sigma_from_json(const Json& j) {
  expect_schema(j, "sigma/v1");
  SigmaPoint s;
  s.n = size_field(j, "n", 1, kMaxN);
  s.B1 = symmetric_field(j, "B1", s.n);
  s.B2 = symmetric_field(j, "B2", s.n);
  s.C = symmetric_field(j, "C", s.n);
  s.a1 = vector_from_json(field(j, "a1"), s.n, "/a1");
  s.a2 = vector_from_json(field(j, "a2"), s.n, "/a2");
  s.b1 = vector_from_json(field(j, "b1"), s.n, "/b1");
  s.b2 = vector_from_json(field(j, "b2"), s.n, "/b2");
  return s;
}

AnyInput input_from_json(const Json& j) {
  const Json& s = field(j, "schema");
  if (!s.is_string()) throw ParseError("/schema", "expected a string");
  const std::string tag = s.get<std::string>();
  if (tag == "net/v1") return net_from_json(j);
  if (tag == "octuple/v1") return octuple_from_json(j);
  if (tag == "gamma/v1") return gamma_from_json(j);
  if (tag == "sigma/v1") return sigma_from_json(j);
  throw ParseError("/schema", "unknown schema \"" + tag + "\"");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, std::string("malformed JSON at byte ") + std::to_string(e.byte));
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const EmptinessCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["mode"] = to_string(c.mode);
  if (c.kind == EmptinessKind::Empty) j["exponents"] = c.exponents;
  if (!c.witness.empty()) {
    j["witness"] = c.witness;
    j["witness_field"] = c.witness_field;
  }
  if (c.prime) j["prime"] = c.prime;
  j["generators"] = c.generators;
  j["basis_size"] = c.basis_size;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const ConditionResult& c) {
  Json j;
  j["id"] = c.id;
  j["label"] = c.label;
  j["verdict"] = to_string(c.verdict);
  j["detail"] = c.detail;
  if (c.value) j["value"] = *c.value;
  if (c.certificate) j["certificate"] = to_json(*c.certificate);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = "report/v1";
  j["subject"] = r.subject;
  j["n"] = r.n;
  j["ambient"] = r.ambient;
  j["mode"] = to_string(r.mode);
  if (r.prime) j["prime"] = r.prime;
  j["overall"] = to_string(r.overall());
  Json cs = Json::array();
  for (const auto& c : r.conditions) cs.push_back(to_json(c));
  j["conditions"] = cs;
  return j;
}

Json to_json(const CohomologyTable& t) {
  Json j;
  j["schema"] = "cohomology/v1";
  j["n"] = t.n;
  j["ambient"] = t.ambient;
  j["field"] = t.field;
  j["twists"] = Json::array({t.t_min, t.t_max});
  Json rows = Json::array();
  for (int tw = t.t_min; tw <= t.t_max; ++tw) {
    Json r;
    r["t"] = tw;
    Json h = Json::array();
    for (std::size_t i = 0; i < t.ambient; ++i) h.push_back(t.get(i, tw));
    r["h"] = h;
    r["chi"] = t.expected_chi(tw);
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["duality"] = t.duality_holds();
  j["chi_additive"] = t.chi_holds();
  j["subbundle_assumed"] = t.subbundle_assumed;
  return j;
}

Json to_json(const DimsRow& r) {
  Json j;
  j["n"] = r.n;
  j["dimS"] = r.dim_s;
  j["eqCount"] = r.eq_count;
  j["lowerBound"] = r.lower_bound;
  j["expectedI"] = r.expected_i;
  j["wDim"] = r.w_dim;
  j["h1E"] = r.h1_e;
  j["fiberClaim"] = r.fiber_claim;
  return j;
}

Json to_json(const FiberReport& f, const SigmaPoint& s) {
  Json j;
  j["schema"] = "fiber/v1";
  j["n"] = s.n;
  j["system"] = Json::array({f.rows, f.cols});
  j["rank"] = f.rank;
  j["consistent"] = f.consistent;
  j["dim"] = f.dim;
  j["claimed_min_dim"] = f.claimed_min_dim;
  j["matches_claim"] = f.dim == f.claimed_min_dim;
  if (f.solution) {
    j["particular"] = to_json(f.solution->particular);
    Json basis = Json::array();
    for (const auto& v : f.solution->kernel) basis.push_back(to_json(v));
    j["basis"] = basis;
  }
  j["samples"] = f.samples;
  j["closed_pass"] = f.closed_pass;
  j["open_pass"] = f.open_pass;
  j["fully_pass"] = f.fully_pass;
  return j;
}

Json to_json(const DCertificate& c) {
  Json j;
  j["schema"] = "dcert/v1";
  j["precondition"] = c.precondition;
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.precondition) return j;
  j["D"] = to_json(c.d);
  j["X"] = to_json(c.x);
  j["identity_holds"] = c.identity_holds;
  j["rank_X"] = c.rank_x;
  j["rank_A"] = c.rank_a;
  j["iv"] = c.iv;
  j["rank_certified"] = c.rank_certified;
  // FNV-1a over the serialized product
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(c.product).dump()) h = (h ^ ch) * 0x100000001b3ULL;
  std::ostringstream hex;
  hex << std::hex << h;
  j["product_digest"] = "fnv1a64:" + hex.str();
  return j;
}

Json to_json(const HElement& h) {
  Json j;
  j["g"] = to_json(h.g);
  j["m"] = to_json(h.m);
  return j;
}

Json to_json(const OrbitReport& r) {
  Json j;
  j["schema"] = "orbit/v1";
  j["h"] = to_json(r.h);
  j["actions_commute"] = r.actions_commute;
  j["minus_one_trivial"] = r.minus_one_trivial;
  j["verdicts_invariant"] = r.verdicts_invariant;
  j["cohomology_invariant"] = r.cohomology_invariant;
  j["congruence"] = r.congruence;
  j["j_equivariant"] = r.j_equivariant;
  j["psi_equivariant"] = r.psi_equivariant;
  j["fiber_dim_invariant"] = r.fiber_dim_invariant;
  j["all"] = r.all();
  j["before"] = to_json(r.before);
  j["after"] = to_json(r.after);
  return j;
}

Json to_json(const SearchResult& r, bool include_points) {
  Json j;
  j["schema"] = "search/v1";
  j["n"] = r.config.n;
  j["seed"] = r.config.seed;
  j["trials"] = r.config.trials;
  j["ansatz"] = to_string(r.config.ansatz);
  j["mode"] = to_string(r.config.mode);
  j["prime"] = r.config.prime;
  j["generated"] = r.generated;
  j["closed_ok"] = r.closed_ok;
  j["found"] = r.found;
  Json g;
  g["attempts"] = r.gen_totals.attempts;
  g["rejected_iv"] = r.gen_totals.rejected_iv;
  g["inconsistent"] = r.gen_totals.inconsistent;
  g["widened"] = r.gen_totals.widened;
  j["generator"] = g;
  Json pc = Json::object();
  for (const auto& [id, c] : r.per_condition) {
    Json x;
    x["PASS"] = c.pass;
    x["FAIL"] = c.fail;
    x["PROBABLE"] = c.probable;
    x["INDETERMINATE"] = c.indeterminate;
    pc[id] = x;
  }
  j["per_condition"] = pc;
  if (include_points) {
    Json pts = Json::array();
    for (const auto& e : r.entries) {
      Json x;
      x["trial"] = e.trial;
      if (!e.generated) {
        x["error"] = e.error;
      } else {
        x["octuple"] = to_json(e.octuple);
        x["overall"] = to_string(e.report.overall());
        x["escalated"] = e.escalated;
        Json v = Json::object();
        for (const auto& c : e.report.conditions) v[c.id] = to_string(c.verdict);
        x["verdicts"] = v;
      }
      pts.push_back(x);
    }
    j["points"] = pts;
  }
  return j;
}

}  // namespace monadforge

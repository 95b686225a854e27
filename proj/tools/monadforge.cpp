// monadforge command line: verification, cohomology, restriction, fibres,
// search and orbit tests on JSON files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monadforge/io.hpp"

using namespace monadforge;

namespace {

constexpr int kUsageError = 3;

struct Common {
  std::string out;
  std::string mode;
  std::uint64_t prime = 0;
};

std::uint64_t env_prime() {
  const char* s = std::getenv("MONADFORGE_PRIME");
  if (!s || !*s) return kDefaultPrime;
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("MONADFORGE_PRIME is not an integer: ") + s);
  }
  return p;
}

std::uint64_t checked_prime(std::uint64_t p) {
  if (p < 3 || p >= (std::uint64_t(1) << 62) || !is_prime(p)) {
    throw InvalidArgument("prime must be an odd prime below 2^62, got " + std::to_string(p));
  }
  return p;
}

VerifyOptions options_for(const Common& c, std::size_t n) {
  VerifyOptions o = default_options(n);
  if (!c.mode.empty()) o.mode = parse_mode(c.mode);
  o.prime = checked_prime(c.prime ? c.prime : env_prime());
  return o;
}

void emit(const Common& c, const Json& j) {
  if (c.out.empty()) {
    std::cout << dump(j);
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InvalidArgument("cannot write " + c.out);
  f << dump(j);
}

QVec parse_point(const std::string& s, std::size_t k) {
  QVec v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != k) throw InvalidArgument("point \"" + s + "\" needs " + std::to_string(k) + " coordinates");
  return v;
}

std::pair<int, int> parse_twists(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidArgument("twists must look like A..B, got \"" + s + "\"");
  try {
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("twists must look like A..B, got \"" + s + "\"");
  }
}

// Presentation of whatever the file holds: a net, an octuple (its net
// A~^T Q A~), a gamma point (gamma^T Q gamma) or a Sigma-point (plane net).
QPresentation presentation_of(const AnyInput& in) {
  if (auto net = std::get_if<QuadricNet>(&in)) return presentation(*net);
  if (auto o = std::get_if<BarthOctuple>(&in)) return presentation_of_flat(a_of_octuple(*o).product, o->n, 4);
  if (auto g = std::get_if<GammaPoint>(&in)) return presentation_of_flat(a_of_gamma(*g), g->n, g->ambient);
  const auto& s = std::get<SigmaPoint>(in);
  return presentation(plane_net(s));
}

std::size_t n_of(const AnyInput& in) {
  return std::visit([](const auto& x) { return x.n; }, in);
}

int cmd_verify(const Common& c, const std::string& kind, const std::string& file) {
  AnyInput in = input_from_json(read_json_file(file));
  const VerifyOptions opt = options_for(c, n_of(in));
  VerificationReport rep;
  if (kind == "net") {
    auto net = std::get_if<QuadricNet>(&in);
    if (!net || net->ambient != 4) throw InvalidArgument("verify net needs a net/v1 file with ambient 4");
    rep = barth_verify(*net, opt);
  } else if (kind == "plane") {
    if (auto s = std::get_if<SigmaPoint>(&in)) {
      rep = mx_verify(plane_net(*s), opt);
    } else if (auto net = std::get_if<QuadricNet>(&in); net && net->ambient == 3) {
      rep = mx_verify(*net, opt);
    } else {
      throw InvalidArgument("verify plane needs a net/v1 file with ambient 3 or a sigma/v1 file");
    }
  } else if (kind == "octuple") {
    auto o = std::get_if<BarthOctuple>(&in);
    if (!o) throw InvalidArgument("verify octuple needs an octuple/v1 file");
    rep = gamma_conditions(*o, opt);
  } else if (kind == "gamma") {
    auto g = std::get_if<GammaPoint>(&in);
    if (!g) throw InvalidArgument("verify gamma needs a gamma/v1 file");
    rep = misp_verify(*g, opt);
  } else {
    throw InvalidArgument("unknown kind \"" + kind + "\"");
  }
  emit(c, to_json(rep));
  for (const auto& cond : rep.conditions)
    std::cerr << cond.label << ": " << to_string(cond.verdict) << "\n";
  return exit_code(rep.overall());
}

int cmd_cohomology(const Common& c, const std::string& file, const std::string& twists, const std::string& field) {
  AnyInput in = input_from_json(read_json_file(file));
  auto [a, b] = parse_twists(twists);
  QPresentation p = presentation_of(in);
  CohomologyTable t;
  if (field.empty() || field == "Q") {
    t = cohomology_table(p, a, b);
  } else {
    const std::uint64_t prime = checked_prime(std::stoull(field));
    t = cohomology_table(reduce(p, PrimeField{prime}), a, b);
  }
  emit(c, to_json(t));
  return 0;
}

int cmd_restrict(const Common& c, const std::string& file) {
  AnyInput in = input_from_json(read_json_file(file));
  Json j;
  if (auto net = std::get_if<QuadricNet>(&in)) {
    j = to_json(phi_restrict(*net));
  } else if (auto o = std::get_if<BarthOctuple>(&in)) {
    SigmaPoint s = psi_project(*o);
    j["schema"] = "restriction/v1";
    j["sigma"] = to_json(s);
    auto an = a_of_octuple(*o);
    if (an.net) {
      QuadricNet pn = phi_restrict(*an.net);
      j["plane_net"] = to_json(pn);
      j["commutes"] = pn == plane_net(s);
    } else {
      j["plane_net"] = nullptr;
      j["note"] = "octuple violates (i); no net to restrict";
    }
  } else {
    throw InvalidArgument("restrict needs a net/v1 or octuple/v1 file");
  }
  emit(c, j);
  return 0;
}

int cmd_split_line(const Common& c, const std::string& file, const std::string& p1, const std::string& p2) {
  AnyInput in = input_from_json(read_json_file(file));
  QPresentation p = presentation_of(in);
  QVec x = parse_point(p1, p.ambient), y = parse_point(p2, p.ambient);
  const long d = line_splitting(p, x, y);
  Json j;
  j["schema"] = "split-line/v1";
  j["p1"] = to_json(x);
  j["p2"] = to_json(y);
  j["splitting"] = Json::array({d, -d});
  j["jumping"] = d > 0;
  emit(c, j);
  return 0;
}

int cmd_fiber(const Common& c, const std::string& file, std::size_t samples, std::uint64_t seed) {
  AnyInput in = input_from_json(read_json_file(file));
  SigmaPoint s;
  std::optional<BarthOctuple> source;
  if (auto o = std::get_if<BarthOctuple>(&in)) {
    source = *o;
    s = psi_project(*o);
  } else if (auto sp = std::get_if<SigmaPoint>(&in)) {
    s = *sp;
  } else {
    throw InvalidArgument("fiber needs a sigma/v1 or octuple/v1 file");
  }
  VerifyOptions opt = options_for(c, s.n);
  if (c.mode.empty()) opt.mode = Mode::Fast;
  FiberReport f = fiber_solve(s, samples, seed, opt);
  Json j = to_json(f, s);
  if (source) j["contains_source"] = fiber_contains(s, source->A1, source->A2);
  emit(c, j);
  if (f.dim != f.claimed_min_dim) {
    std::cerr << "fibre dimension " << f.dim << " differs from the claimed minimum " << f.claimed_min_dim << "\n";
  }
  return f.consistent ? 0 : 1;
}

int cmd_search(const Common& c, std::size_t n, std::uint64_t seed, std::size_t trials, const std::string& ansatz,
               std::size_t threads, bool points) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.ansatz = parse_ansatz(ansatz);
  VerifyOptions o = options_for(c, n);
  cfg.mode = o.mode;
  cfg.prime = o.prime;
  cfg.threads = threads;
  cfg.gen.ansatz = cfg.ansatz;
  SearchResult r = search_gamma_points(cfg);
  emit(c, to_json(r, points));
  return 0;
}

int cmd_orbit(const Common& c, const std::string& file, std::uint64_t seed) {
  AnyInput in = input_from_json(read_json_file(file));
  auto o = std::get_if<BarthOctuple>(&in);
  if (!o) throw InvalidArgument("orbit-test needs an octuple/v1 file");
  OrbitReport r = orbit_test(*o, seed, options_for(c, o->n));
  emit(c, to_json(r));
  return r.all() ? 0 : 1;
}

int cmd_dcert(const Common& c, const std::string& file) {
  AnyInput in = input_from_json(read_json_file(file));
  auto o = std::get_if<BarthOctuple>(&in);
  if (!o) throw InvalidArgument("d-cert needs an octuple/v1 file");
  DCertificate cert = d_certificate(*o);
  emit(c, to_json(cert));
  if (!cert.precondition || !cert.identity_holds) return 1;
  return cert.rank_certified ? 0 : 1;
}

int cmd_generate(const Common& c, const std::string& what, std::size_t n, std::uint64_t seed,
                 const std::string& ansatz) {
  if (what == "null-correlation") {
    emit(c, to_json(gen_null_correlation()));
  } else if (what == "octuple") {
    GenOptions g;
    g.ansatz = parse_ansatz(ansatz);
    emit(c, to_json(gen_closed_octuple(n, seed, 0, g).octuple));
  } else if (what == "gamma") {
    GenOptions g;
    g.ansatz = parse_ansatz(ansatz);
    emit(c, to_json(gamma_of_octuple(gen_closed_octuple(n, seed, 0, g).octuple)));
  } else {
    throw InvalidArgument("generate knows null-correlation, octuple and gamma");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monadforge: exact verification of instanton monads"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out, "write JSON output to this file instead of stdout");

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", common.mode, "exact or fast (default: exact for n <= 3)")
        ->check(CLI::IsMember({"exact", "fast"}));
    sub->add_option("--prime", common.prime, "prime for fast mode (default: MONADFORGE_PRIME or 2^62-57)");
  };

  long dims_n = 5;
  auto* dims = app.add_subcommand("dims", "dimension table for n = 1..N");
  dims->add_option("--n", dims_n, "largest n")->required();

  std::string kind, file;
  auto* verify = app.add_subcommand("verify", "verify a net, octuple, gamma point or plane net");
  verify->add_option("kind", kind, "net | octuple | gamma | plane")
      ->required()
      ->check(CLI::IsMember({"net", "octuple", "gamma", "plane"}));
  verify->add_option("file", file, "input JSON")->required();
  add_mode(verify);

  std::string twists = "-6..2", field;
  auto* coh = app.add_subcommand("cohomology", "cohomology table of E(t)");
  coh->add_option("file", file, "input JSON")->required();
  coh->add_option("--twists", twists, "twist range A..B");
  coh->add_option("--field", field, "Q (default) or a prime");

  auto* restrict = app.add_subcommand("restrict", "restrict a net or octuple to the plane e2, e3, e4");
  restrict->add_option("file", file, "input JSON")->required();

  std::string p1, p2;
  auto* split = app.add_subcommand("split-line", "splitting type of E on the line through two points");
  split->add_option("file", file, "input JSON")->required();
  split->add_option("--p1", p1, "comma separated coordinates")->required();
  split->add_option("--p2", p2, "comma separated coordinates")->required();

  std::size_t samples = 8;
  std::uint64_t seed = 0;
  auto* fiber = app.add_subcommand("fiber", "solve the linear fibre system over a Sigma-point");
  fiber->add_option("file", file, "sigma/v1 or octuple/v1 JSON")->required();
  fiber->add_option("--samples", samples, "points of the fibre checked against the conditions");
  fiber->add_option("--seed", seed, "seed for the samples");
  add_mode(fiber);

  std::size_t n = 2, trials = 1, threads = 1;
  std::string ansatz = "dense";
  bool points = false;
  auto* search = app.add_subcommand("search", "seeded random search for slice points");
  search->add_option("--n", n, "charge")->required();
  search->add_option("--seed", seed, "seed")->required();
  search->add_option("--trials", trials, "number of trials")->required();
  search->add_option("--ansatz", ansatz, "dense | diagonal | bilinear")
      ->check(CLI::IsMember({"dense", "diagonal", "bilinear"}));
  search->add_option("--threads", threads, "worker threads (output does not depend on it)");
  search->add_flag("--points", points, "include every trial in the output");
  add_mode(search);

  auto* orbit = app.add_subcommand("orbit-test", "invariance checks under a random element of O(n) x Sp(2)");
  orbit->add_option("file", file, "octuple/v1 JSON")->required();
  orbit->add_option("--seed", seed, "seed")->required();
  add_mode(orbit);

  auto* dcert = app.add_subcommand("d-cert", "D-matrix rank certificate of an octuple");
  dcert->add_option("file", file, "octuple/v1 JSON")->required();

  std::string what;
  auto* gen = app.add_subcommand("generate", "write an example object");
  gen->add_option("what", what, "null-correlation | octuple | gamma")->required();
  gen->add_option("--n", n, "charge");
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--ansatz", ansatz, "dense | diagonal | bilinear");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*dims) {
      Json rows = Json::array();
      for (const auto& r : dims_report(dims_n)) rows.push_back(to_json(r));
      Json j;
      j["schema"] = "dims/v1";
      j["rows"] = rows;
      emit(common, j);
      return 0;
    }
    if (*verify) return cmd_verify(common, kind, file);
    if (*coh) return cmd_cohomology(common, file, twists, field);
    if (*restrict) return cmd_restrict(common, file);
    if (*split) return cmd_split_line(common, file, p1, p2);
    if (*fiber) return cmd_fiber(common, file, samples, seed);
    if (*search) return cmd_search(common, n, seed, trials, ansatz, threads, points);
    if (*orbit) return cmd_orbit(common, file, seed);
    if (*dcert) return cmd_dcert(common, file);
    if (*gen) return cmd_generate(common, what, n, seed, ansatz);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const WrongRank& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return kUsageError;
}

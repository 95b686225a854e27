// JSON-in, JSON-out bindings.  Documents cross the boundary as strings; the
// Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monadforge/io.hpp"

namespace py = pybind11;
using namespace monadforge;

namespace {

VerifyOptions options(std::size_t n, const std::string& mode, std::uint64_t prime) {
  VerifyOptions o = default_options(n);
  if (!mode.empty()) o.mode = parse_mode(mode);
  if (prime) {
    if (prime < 3 || prime >= (std::uint64_t(1) << 62) || !is_prime(prime))
      throw InvalidArgument("prime must be an odd prime below 2^62, got " + std::to_string(prime));
    o.prime = prime;
  }
  return o;
}

AnyInput parse(const std::string& doc) {
  Json j;
  try {
    j = Json::parse(doc);
  } catch (const Json::parse_error& e) {
    throw ParseError("document", e.what());
  }
  return input_from_json(j);
}

std::size_t n_of(const AnyInput& in) {
  return std::visit([](const auto& x) { return x.n; }, in);
}

std::string verify(const std::string& kind, const std::string& doc, const std::string& mode, std::uint64_t prime) {
  AnyInput in = parse(doc);
  const VerifyOptions opt = options(n_of(in), mode, prime);
  if (kind == "net") {
    auto net = std::get_if<QuadricNet>(&in);
    if (!net || net->ambient != 4) throw InvalidArgument("verify net needs a net/v1 document with ambient 4");
    return dump(to_json(barth_verify(*net, opt)));
  }
  if (kind == "plane") {
    if (auto s = std::get_if<SigmaPoint>(&in)) return dump(to_json(mx_verify(plane_net(*s), opt)));
    auto net = std::get_if<QuadricNet>(&in);
    if (!net || net->ambient != 3) throw InvalidArgument("verify plane needs a net/v1 document with ambient 3");
    return dump(to_json(mx_verify(*net, opt)));
  }
  if (kind == "octuple") {
    auto o = std::get_if<BarthOctuple>(&in);
    if (!o) throw InvalidArgument("verify octuple needs an octuple/v1 document");
    return dump(to_json(gamma_conditions(*o, opt)));
  }
  if (kind == "gamma") {
    auto g = std::get_if<GammaPoint>(&in);
    if (!g) throw InvalidArgument("verify gamma needs a gamma/v1 document");
    return dump(to_json(misp_verify(*g, opt)));
  }
  throw InvalidArgument("unknown kind \"" + kind + "\"");
}

std::string cohomology(const std::string& doc, int tmin, int tmax) {
  AnyInput in = parse(doc);
  const QPresentation p = [&] {
    if (auto net = std::get_if<QuadricNet>(&in)) return presentation(*net);
    if (auto o = std::get_if<BarthOctuple>(&in)) return presentation_of_flat(a_of_octuple(*o).product, o->n, 4);
    if (auto g = std::get_if<GammaPoint>(&in)) return presentation_of_flat(a_of_gamma(*g), g->n, g->ambient);
    return presentation(plane_net(std::get<SigmaPoint>(in)));
  }();
  return dump(to_json(cohomology_table(p, tmin, tmax)));
}

std::string dims(long n_max) {
  Json j = Json::array();
  for (const auto& r : dims_report(n_max)) j.push_back(to_json(r));
  return dump(j);
}

std::string generate(std::size_t n, std::uint64_t seed, std::uint64_t trial, const std::string& ansatz) {
  GenOptions g;
  g.ansatz = parse_ansatz(ansatz);
  return dump(to_json(gen_closed_octuple(n, seed, trial, g).octuple));
}

std::string search(std::size_t n, std::uint64_t seed, std::size_t trials, const std::string& ansatz,
                   const std::string& mode, std::uint64_t prime, std::size_t threads, bool points) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.ansatz = parse_ansatz(ansatz);
  const VerifyOptions o = options(n, mode, prime);
  cfg.mode = o.mode;
  cfg.prime = o.prime;
  cfg.threads = threads;
  return dump(to_json(search_gamma_points(cfg), points));
}

std::size_t exact_rank(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  QMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return rank(m);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  m.attr("DEFAULT_PRIME") = kDefaultPrime;
  m.def("verify", &verify, py::arg("kind"), py::arg("doc"), py::arg("mode") = "", py::arg("prime") = 0);
  m.def("cohomology", &cohomology, py::arg("doc"), py::arg("tmin"), py::arg("tmax"));
  m.def("dims", &dims, py::arg("n_max"));
  m.def("generate", &generate, py::arg("n"), py::arg("seed"), py::arg("trial") = 0, py::arg("ansatz") = "dense");
  m.def("search", &search, py::arg("n"), py::arg("seed"), py::arg("trials"), py::arg("ansatz") = "dense",
        py::arg("mode") = "", py::arg("prime") = 0, py::arg("threads") = 1, py::arg("points") = false);
  m.def("rank", &exact_rank, py::arg("rows"));
}

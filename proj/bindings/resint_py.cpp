#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resint/detresid.hpp"
#include "resint/hilbert.hpp"
#include "resint/homol.hpp"
#include "resint/idealops.hpp"
#include "resint/io.hpp"
#include "resint/resolution.hpp"
#include "resint/subquotient.hpp"
#include "resint/verify.hpp"
#include "resint/version.hpp"

namespace py = pybind11;
using namespace resint;

namespace {

GFRing matrixRing(int n, long long prime) {
  std::vector<std::string> names;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= n; ++c)
      names.push_back("x[" + std::to_string(r) + "," + std::to_string(c) + "]");
  return GFRing(GF(prime), std::move(names));
}

PolyList parseAll(const GFRing& ring, const std::vector<std::string>& texts) {
  PolyList out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parsePoly(ring, t));
  return out;
}

std::vector<std::string> printAll(const GFRing& ring, const PolyList& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(printPoly(ring, f));
  return out;
}

// context, accepted chain and a per-module resolution memo behind the Python
// surface; one instance per matrix width
class Session {
 public:
  Session(int n, long long prime, const std::string& reduction, std::uint64_t seed,
          const std::string& cacheDir)
      : cache_(cacheDir.empty() ? GbCache() : GbCache(cacheDir)),
        ctx_(buildContext(n, prime, env())) {
    if (reduction != "sparse" && reduction != "generic")
      throw std::invalid_argument("reduction must be sparse or generic");
    ReductionSequence initial = reduction == "generic" ? genericReduction(ctx_, seed, env())
                                                       : sparseReduction(ctx_, env());
    chain_ = residualChain(ctx_, initial, seed, env());
  }

  int n() const { return ctx_.n; }
  int ell() const { return ctx_.ell; }

  std::vector<std::string> minors() const { return printAll(ctx_.ring, ctx_.minors); }

  std::vector<std::string> chainElements() const {
    std::vector<std::string> out;
    for (size_t i = 1; i < chain_.links.size(); ++i)
      out.push_back(printPoly(ctx_.ring, chain_.links[i].a));
    return out;
  }

  std::vector<std::string> residualIdeal(int i) const {
    return printAll(ctx_.ring, link(i).k);
  }

  std::string source(int i) const { return link(i).source; }
  bool geometric(int i) const { return link(i).geometric; }

  int depth(int i, int j) { return depthFromResolution(ctx_.ring, resolution(i, j)); }

  int dim(int i, int j) {
    Subquotient m = moduleM(ctx_, chain_, i, j, env());
    return seriesDim(subqHilbert(ctx_.ring, m, env()));
  }

  std::string hilbert(int i, int j) {
    Subquotient m = moduleM(ctx_, chain_, i, j, env());
    return seriesToString(subqHilbert(ctx_.ring, m, env()));
  }

  std::vector<std::map<int, long long>> betti(int i, int j) {
    BettiTable t = bettiTable(resolution(i, j));
    std::vector<std::map<int, long long>> out;
    for (const auto& step : t.twists) {
      std::map<int, long long> row;
      for (int d : step) ++row[d];
      out.push_back(std::move(row));
    }
    return out;
  }

  int regularity(int i, int j) { return bettiTable(resolution(i, j)).regularity(); }
  int projectiveDimension(int i, int j) { return bettiTable(resolution(i, j)).pd(); }

  std::vector<int> cohomologyProfile(int i, int j) {
    return localCohomologyProfile(ctx_.ring, resolution(i, j), env());
  }

  std::string canonicalHilbert(int i) {
    Subquotient w = twist(extModule(ctx_.ring, resolution(i, 0), i), -2 * ctx_.n);
    return seriesToString(subqHilbert(ctx_.ring, w, env()));
  }

 private:
  GbEnv env() { return GbEnv{&cache_, nullptr}; }

  const ChainLink& link(int i) const {
    if (i < 0 || i >= static_cast<int>(chain_.links.size()))
      throw std::out_of_range("link index");
    return chain_.links[static_cast<size_t>(i)];
  }

  const Resolution& resolution(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      Subquotient m = moduleM(ctx_, chain_, i, j, env());
      it = memo_.emplace(key, minimalResolution(ctx_.ring, m, env())).first;
    }
    return it->second;
  }

  GbCache cache_;
  DetContext ctx_;
  ResidualChain chain_;
  std::map<std::pair<int, int>, Resolution> memo_;
};

}  // namespace

PYBIND11_MODULE(_resint, m) {
  m.doc() = "exact verification of residual intersections of two-row minor ideals";
  m.attr("__version__") = kVersion;

  py::class_<Session>(m, "Session",
                      "holds the polynomial ring, the accepted chain of elements and the "
                      "residual ideals for one matrix width")
      .def(py::init<int, long long, const std::string&, std::uint64_t, const std::string&>(),
           py::arg("n") = 4, py::arg("prime") = 32003, py::arg("reduction") = "sparse",
           py::arg("seed") = 17, py::arg("cache_dir") = GbCache::defaultDir(),
           py::call_guard<py::gil_scoped_release>())
      .def_property_readonly("n", &Session::n)
      .def_property_readonly("ell", &Session::ell)
      .def("minors", &Session::minors)
      .def("chain_elements", &Session::chainElements)
      .def("residual_ideal", &Session::residualIdeal, py::arg("i"))
      .def("source", &Session::source, py::arg("i"))
      .def("geometric", &Session::geometric, py::arg("i"))
      .def("depth", &Session::depth, py::arg("i"), py::arg("j") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("dim", &Session::dim, py::arg("i"), py::arg("j") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("hilbert", &Session::hilbert, py::arg("i"), py::arg("j") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("betti", &Session::betti, py::arg("i"), py::arg("j") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("regularity", &Session::regularity, py::arg("i"), py::arg("j") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("projective_dimension", &Session::projectiveDimension, py::arg("i"),
           py::arg("j") = 0, py::call_guard<py::gil_scoped_release>())
      .def("cohomology_profile", &Session::cohomologyProfile, py::arg("i"), py::arg("j") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("canonical_hilbert", &Session::canonicalHilbert, py::arg("i"),
           py::call_guard<py::gil_scoped_release>());

  m.def("predicted_depth", &predictedDepth, py::arg("n"), py::arg("i"), py::arg("j"),
        "the expected depth of the module at (i, j) for a 2 x n matrix");

  m.def(
      "grassmann_hf",
      [](int n, int maxT, long long prime) {
        GbCache cache = GbCache::defaultDir().empty() ? GbCache() : GbCache(GbCache::defaultDir());
        GbEnv env{&cache, nullptr};
        return grassmannHF(n, maxT, prime, env);
      },
      py::arg("n"), py::arg("max_t"), py::arg("prime") = 32003,
      py::call_guard<py::gil_scoped_release>(),
      "Hilbert function of the coordinate ring of the ambient variety, degrees 0..max_t");

  m.def(
      "canonical_form",
      [](int n, const std::string& text, long long prime) {
        GFRing ring = matrixRing(n, prime);
        return printPoly(ring, parsePoly(ring, text));
      },
      py::arg("n"), py::arg("text"), py::arg("prime") = 32003,
      "parse a polynomial in the x[r,c] variables and print its canonical form");

  m.def(
      "groebner_basis",
      [](int n, const std::vector<std::string>& gens, long long prime) {
        GFRing ring = matrixRing(n, prime);
        PolyList in = parseAll(ring, gens);
        auto gb = idealGroebner(ring, in, GbEnv{});
        return printAll(ring, *gb);
      },
      py::arg("n"), py::arg("gens"), py::arg("prime") = 32003,
      py::call_guard<py::gil_scoped_release>(),
      "reduced Groebner basis in the 2 x n matrix ring, canonical text form");

  m.def(
      "hilbert_series",
      [](int n, const std::vector<std::string>& gens, long long prime) {
        GFRing ring = matrixRing(n, prime);
        return seriesToString(idealHilbert(ring, parseAll(ring, gens), GbEnv{}));
      },
      py::arg("n"), py::arg("gens"), py::arg("prime") = 32003,
      py::call_guard<py::gil_scoped_release>(),
      "Hilbert series of the quotient by the given ideal in the 2 x n matrix ring");

  m.def(
      "verify_json",
      [](int n, long long prime, const std::string& reduction, std::uint64_t seed, int jmax,
         const std::vector<std::string>& suites, double cellTimeout, bool heavy, int workers,
         const std::optional<std::string>& cacheDir) {
        VerifyOptions opt;
        opt.n = n;
        opt.prime = prime;
        opt.reduction = reduction;
        opt.seed = seed;
        opt.jmax = jmax;
        opt.suites = suites;
        opt.cellTimeoutSeconds = cellTimeout;
        opt.heavy = heavy;
        opt.workers = workers;
        if (cacheDir) opt.cacheDir = *cacheDir;
        return emitJson(runVerification(opt));
      },
      py::arg("n") = 4, py::arg("prime") = 32003, py::arg("reduction") = "sparse",
      py::arg("seed") = 17, py::arg("jmax") = 3,
      py::arg("suites") = std::vector<std::string>{"all"}, py::arg("cell_timeout") = 600.0,
      py::arg("heavy") = false, py::arg("workers") = 0, py::arg("cache_dir") = py::none(),
      py::call_guard<py::gil_scoped_release>(),
      "run verification suites and return the full report as a JSON string");
}

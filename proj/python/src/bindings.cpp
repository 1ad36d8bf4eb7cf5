// Thin bindings: objects cross the boundary as JSON text, parsed on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <thread>

#include "nfold/homology.hpp"
#include "nfold/io.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/subdivide.hpp"
#include "nfold/verification.hpp"

namespace py = pybind11;
using namespace nfold;

namespace {

SSet simplicial_of(const Json& j) {
  const std::string kind = j.value("kind", std::string{});
  if (kind == "poset") return poset_from_json(j).nerve();
  if (kind == "category") return nerve(category_from_json(j));
  if (kind == "multisimplicial_set") return diagonal(multisimplicial_set_from_json(j));
  if (kind == "nfold_category") return diagonal(nfold_nerve(nfold_from_json(j)));
  return simplicial_set_from_json(j);
}

std::string checked(const std::function<CheckReport()>& fn) {
  GridEntry e{0, "", 0, -1, -1, "", fn};
  CheckReport inner;
  e.run = [&] { return inner = fn(); };
  CheckReport r = run_check(e, budget_seconds());
  if (!inner.id.empty()) {
    r.id = inner.id;
    r.n = inner.n;
    r.m = inner.m;
    r.k = inner.k;
    r.fixture = inner.fixture;
  }
  return to_json(r).dump();
}

Fixture fixture_of(const std::string& s) {
  auto b = parse_fixture(s);
  if (!b) throw py::value_error("fixture is one of terminal, interval, horn");
  return *b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // translators are tried newest first, so the base class goes in first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("sd_delta", [](int dim, int iterate) {
    SSet x = std_simplex(dim);
    for (int i = 0; i < iterate; ++i) x = subdivide(x).sd;
    return to_json(*x).dump();
  }, py::arg("m"), py::arg("iterate") = 1);
  m.def("boundary", [](int dim) { return to_json(*boundary(dim)).dump(); }, py::arg("m"));
  m.def("horn", [](int dim, int k) { return to_json(*horn(dim, k)).dump(); }, py::arg("m"), py::arg("k"));
  m.def("psd_delta", [](int dim) { return to_json(sd_delta_poset(dim).poset).dump(); }, py::arg("m"));
  m.def("sd_dot", [](int dim, int k) { return sd_dot(sd_delta_poset(dim), k); }, py::arg("m"), py::arg("k") = 0);
  m.def("homology", [](const std::string& text) {
    return to_json(homology(*simplicial_of(Json::parse(text)))).dump();
  }, py::arg("json"));

  m.def("pushout_axiom", [](int n, int dim, int k, const std::string& fixture) {
    Fixture b = fixture_of(fixture);
    py::gil_scoped_release release;
    return checked([&] { return n == 1 ? pushout_axiom_cat(dim, k, b) : pushout_axiom_nfold(n, dim, k, b); });
  }, py::arg("n"), py::arg("m"), py::arg("k"), py::arg("fixture") = "terminal");
  m.def("decomposition", [](int dim, int k) { return checked([&] { return decomposition_report(dim, k); }); },
        py::arg("m"), py::arg("k"));
  m.def("multi_ez", [](int trials, unsigned seed) { return checked([&] { return ez_report(trials, seed); }); },
        py::arg("trials") = 1000, py::arg("seed") = 0);
  m.def("unit_counit", [](const std::string& text, int n) {
    SSet x = simplicial_set_from_json(Json::parse(text));
    return checked([&] { return unit_counit_suite(x, "X", n); });
  }, py::arg("json"), py::arg("n"));

  m.def("grid", [](unsigned seed) {
    std::vector<std::tuple<int, std::string, int, int, int, std::string>> out;
    for (const auto& e : default_grid(seed)) out.emplace_back(e.criterion, e.id, e.n, e.m, e.k, e.fixture);
    return out;
  }, py::arg("seed") = 0);
  m.def("run_grid", [](std::vector<int> criteria, unsigned seed, int threads) {
    std::vector<GridEntry> grid;
    for (auto& e : default_grid(seed))
      if (criteria.empty() || std::find(criteria.begin(), criteria.end(), e.criterion) != criteria.end())
        grid.push_back(e);
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    py::gil_scoped_release release;
    return to_json(run_grid(grid, threads, budget_seconds())).dump();
  }, py::arg("criteria") = std::vector<int>{}, py::arg("seed") = 0, py::arg("threads") = 0);
}

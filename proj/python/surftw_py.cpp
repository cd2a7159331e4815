// Python bindings. Documents cross the boundary as the JSON of the CLI,
// converted to Python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surftw/face_width.hpp"
#include "surftw/io.hpp"
#include "surftw/treewidth.hpp"

namespace py = pybind11;
using namespace surftw;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

EmbeddedHypergraph embedding(const py::object& doc) {
  const Json j = from_py(doc);
  if (j.contains("vclass")) return embedded_from_json(j);
  return EmbeddedHypergraph::from_graph_map(map_from_json(j));
}

}  // namespace

PYBIND11_MODULE(_surftw, m) {
  m.doc() = "Tree-width of embedded hypergraphs and their duals";
  py::register_exception<Error>(m, "SurftwError");

  m.def(
      "from_cycles",
      [](const std::vector<std::vector<int>>& cycles, std::vector<int> signs) {
        return to_py(to_json(from_cycles(cycles, std::move(signs))));
      },
      py::arg("cycles"), py::arg("signs") = std::vector<int>{},
      "Graph map whose edge e has darts 2e and 2e+1; cycles list the darts around each vertex.");
  m.def(
      "euler_genus", [](const py::object& doc) { return euler_genus(embedding(doc)); }, py::arg("embedding"));
  m.def(
      "is_orientable", [](const py::object& doc) { return is_orientable(embedding(doc).map()); },
      py::arg("embedding"));
  m.def(
      "alpha_max", [](const py::object& doc) { return alpha_max(embedding(doc)); }, py::arg("embedding"));
  m.def(
      "dual",
      [](const py::object& doc) {
        const Json j = from_py(doc);
        if (j.contains("vclass")) return to_py(to_json(hyper_dual(embedded_from_json(j))));
        return to_py(to_json(graph_dual(map_from_json(j))));
      },
      py::arg("embedding"), "Dual of a graph map or of an embedded hypergraph.");
  m.def(
      "exact_treewidth",
      [](const py::object& doc, int limit) {
        const auto r = exact_treewidth(any_hypergraph_from_json(from_py(doc)), limit);
        py::dict out;
        out["width"] = r.width;
        out["decomposition"] = to_py(to_json(r.decomposition));
        return out;
      },
      py::arg("document"), py::arg("oracle_limit") = -1);
  m.def(
      "optimal_ptree",
      [](const py::object& doc, int limit) {
        const auto r = optimal_ptree(PiStructure::of(embedding(doc)), limit);
        py::dict out;
        out["width"] = r.width;
        out["tree"] = to_py(to_json(r.tree));
        return out;
      },
      py::arg("embedding"), py::arg("oracle_limit") = -1);
  m.def(
      "check_duality_bound",
      [](const py::object& doc, int limit) { return to_py(to_json(check_duality_bound(embedding(doc), limit))); },
      py::arg("embedding"), py::arg("oracle_limit") = -1);
  m.def(
      "face_width_at_least",
      [](const py::object& doc, int theta) { return face_width_at_least(embedding(doc), theta); },
      py::arg("embedding"), py::arg("theta"));
  m.def(
      "bramble_order",
      [](const py::object& graph, const py::object& bramble, std::int64_t budget) {
        const auto h = any_hypergraph_from_json(from_py(graph));
        const auto b = bramble_from_json(from_py(bramble));
        if (!is_bramble(h, b)) throw Error(ErrorCode::BadInput, "not a bramble of the graph");
        return bramble_order(b, budget);
      },
      py::arg("graph"), py::arg("bramble"), py::arg("budget") = 50'000'000);
  m.def(
      "grid", [](int n, int k) { return to_py(to_json(grid(n, k))); }, py::arg("n"), py::arg("m"));
  m.def(
      "todinca", [](int p, bool reversed) { return to_py(to_json(todinca(todinca_spec(p, reversed)))); },
      py::arg("p"), py::arg("reversed") = false);
  m.def(
      "build_gkp",
      [](int k, int p, bool crosscap) { return to_py(to_json(build_gkp(k, p, crosscap).map)); }, py::arg("k"),
      py::arg("p"), py::arg("crosscap") = false, "Graph map of G_{k,p} (handles) or its crosscap variant.");
  m.def(
      "fuzz",
      [](int max_darts, int count, int random_darts, std::uint64_t seed) {
        FuzzConfig c;
        c.exhaustive_darts = max_darts;
        c.random_count = count;
        c.random_darts = random_darts;
        c.seed = seed;
        return to_py(to_json(fuzz_small_embeddings(c)));
      },
      py::arg("max_darts") = 8, py::arg("count") = 100, py::arg("random_darts") = 12, py::arg("seed") = 7);
}

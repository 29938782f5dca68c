// Python bindings. Vertices are 0-based here, as in the C++ API; the text formats stay 1-based.

#include "simtri/catalog.hpp"
#include "simtri/constructions.hpp"
#include "simtri/embedder.hpp"
#include "simtri/errors.hpp"
#include "simtri/geometry.hpp"
#include "simtri/io.hpp"
#include "simtri/reproduce.hpp"
#include "simtri/structure.hpp"
#include "simtri/turan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace simtri;

namespace {

using EdgeList = std::vector<std::array<int, 3>>;

ThreeGraph to_graph(int n, const EdgeList& edges) {
    std::vector<Triple> ts;
    ts.reserve(edges.size());
    for (const auto& e : edges)
        ts.push_back(make_triple(e[0], e[1], e[2]));
    return ThreeGraph(n, std::move(ts));
}

EdgeList to_edges(const ThreeGraph& g) {
    EdgeList out;
    for (const Triple& t : g.edges())
        out.push_back({t.a, t.b, t.c});
    return out;
}

PointSet to_points(const std::vector<std::vector<double>>& pts) {
    const int dim = pts.empty() ? 2 : static_cast<int>(pts.front().size());
    return PointSet(dim, pts);
}

TriangleShape shape_from(const std::array<double, 3>& angles, bool degrees) {
    return degrees ? TriangleShape::from_degrees(angles[0], angles[1], angles[2])
                   : TriangleShape::from_angles(angles[0], angles[1], angles[2]);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Similar triangles, forbidden 3-graphs and Turan-type counts";

    auto base = py::register_exception<Error>(m, "SimtriError", PyExc_RuntimeError);
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<NoEdgeError>(m, "NoEdgeError", base.ptr());

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog())
            names.push_back(e.name);
        return names;
    });
    m.def(
        "catalog_graph",
        [](const std::string& name) {
            const CatalogEntry* e = find_catalog_entry(name);
            if (!e)
                throw ArgumentError("no catalog entry named '" + name + "'");
            return py::make_tuple(e->graph.vertex_count(), to_edges(e->graph));
        },
        py::arg("name"), "(n, edges) of a catalog graph");

    m.def(
        "forbid_check",
        [](int n, const EdgeList& edges) {
            const ThreeGraph h = to_graph(n, edges);
            const auto cert = find_dense_ordering(h);
            py::dict out;
            out["dense"] = cert.has_value();
            if (cert) {
                const auto rep = verify_forbidden(h, *cert);
                out["verified"] = rep.verified;
                out["configurations"] = rep.configurations_checked;
                out["realizations"] = rep.realizations.size();
                out["ordering"] = cert->ordering;
            }
            return out;
        },
        py::arg("n"), py::arg("edges"));

    m.def("contains", [](int n, const EdgeList& host, int k, const EdgeList& pattern) {
        return contains_subgraph(to_graph(n, host), to_graph(k, pattern));
    });
    m.def("clone_vertex", [](int n, const EdgeList& edges, int u, int v) {
        return to_edges(clone_vertex(to_graph(n, edges), u, v));
    });

    m.def(
        "count_similar",
        [](const std::vector<std::vector<double>>& points, std::array<double, 3> angles, double eps, bool degrees,
           int threads) {
            const double e = degrees ? degrees_to_radians(eps) : eps;
            return count_similar(to_points(points), shape_from(angles, degrees), e, threads);
        },
        py::arg("points"), py::arg("angles"), py::arg("eps"), py::arg("degrees") = false, py::arg("threads") = 1);
    m.def(
        "similarity_edges",
        [](const std::vector<std::vector<double>>& points, std::array<double, 3> angles, double eps, bool degrees) {
            const double e = degrees ? degrees_to_radians(eps) : eps;
            return to_edges(build_similarity_graph(to_points(points), shape_from(angles, degrees), e).graph);
        },
        py::arg("points"), py::arg("angles"), py::arg("eps"), py::arg("degrees") = false);

    m.def("h", &h_value, py::arg("n"));
    m.def("best_split", &best_split, py::arg("n"));
    m.def("s_edge_count", &s_edge_count, py::arg("n"));
    m.def("build_S", [](int n) { return to_edges(build_S(n)); }, py::arg("n"));

    m.def(
        "construct",
        [](const std::string& kind, int n, std::array<double, 3> angles, bool degrees, double ratio, int dim,
           double validate_eps) {
            ConstructionSpec spec;
            spec.kind = construction_kind_from_string(kind);
            spec.shape = shape_from(angles, degrees);
            spec.ratio = ratio;
            spec.dim = spec.kind == ConstructionKind::Disphenoid ? 3 : dim;
            validate_spec(spec);
            const auto v = realize_construction(n, spec, degrees ? degrees_to_radians(validate_eps) : validate_eps);
            py::dict out;
            out["points"] = v.points.points();
            out["requested_ratio"] = v.requested_ratio;
            out["ratio"] = v.ratio;
            out["similar"] = v.similar;
            out["pattern_edges"] = v.pattern.edge_count();
            out["validated"] = v.validated;
            return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("angles") = std::array<double, 3>{60, 60, 60},
        py::arg("degrees") = true, py::arg("ratio") = kDefaultRatio, py::arg("dim") = 3,
        py::arg("validate_eps") = 1.0);

    m.def(
        "turan",
        [](int n, const std::string& family, bool force, std::optional<std::uint64_t> node_limit) {
            TuranOptions o;
            o.force = force;
            o.node_limit = node_limit;
            const Family f = family_by_name(family);
            SearchResult r;
            {
                py::gil_scoped_release unlocked;
                r = exact_turan(n, f, o);
            }
            py::dict out;
            out["max_edges"] = r.max_edges;
            out["witness"] = to_edges(r.witness);
            out["nodes"] = r.nodes_expanded;
            out["complete"] = r.complete;
            return out;
        },
        py::arg("n"), py::arg("family") = "F", py::arg("force") = false, py::arg("node_limit") = py::none());

    m.def(
        "analyze",
        [](int n, const EdgeList& edges) {
            const auto r = best_edge_partition(to_graph(n, edges));
            py::dict out;
            out["base"] = r.base;
            out["parts"] = r.parts;
            out["leftover"] = r.leftover;
            out["objective"] = r.objective;
            out["disjoint"] = r.disjoint;
            return out;
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "reproduce",
        [](std::uint64_t seed) {
            ReproduceInputs in = ReproduceInputs::defaults();
            in.seed = seed;
            py::list rows;
            for (const auto& r : run_reproduce(in).rows) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["details"] = r.details;
                rows.append(d);
            }
            return rows;
        },
        py::arg("seed") = kDefaultSeed);
}

// simtri: command-line front end for the toolkit.
//
// Exit status: 0 success / verified, 1 a check failed, 2 usage, input or I/O error.

#include "simtri/catalog.hpp"
#include "simtri/constructions.hpp"
#include "simtri/embedder.hpp"
#include "simtri/errors.hpp"
#include "simtri/geometry.hpp"
#include "simtri/io.hpp"
#include "simtri/report.hpp"
#include "simtri/reproduce.hpp"
#include "simtri/structure.hpp"
#include "simtri/turan.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace simtri;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Common {
    bool json = false;
    int threads = 1;
};

std::array<double, 3> parse_triple(const std::string& text, const char* what) {
    std::istringstream in(text);
    std::array<double, 3> v{};
    std::string extra;
    if (!(in >> v[0] >> v[1] >> v[2]) || (in >> extra))
        throw ArgumentError(std::string(what) + " needs three numbers, got '" + text + "'");
    return v;
}

TriangleShape parse_shape(const std::string& text, bool degrees) {
    auto a = parse_triple(text, "--shape");
    return degrees ? TriangleShape::from_degrees(a[0], a[1], a[2]) : TriangleShape::from_angles(a[0], a[1], a[2]);
}

void emit(const Common& c, std::string_view kind, const json& body, const std::string& text) {
    if (c.json)
        std::cout << envelope(kind, body).dump(2) << '\n';
    else
        std::cout << text;
}

std::string edges_line(const ThreeGraph& g) {
    std::ostringstream out;
    for (const Triple& t : g.edges())
        out << ' ' << t.a + 1 << t.b + 1 << t.c + 1;
    return out.str();
}

int cmd_catalog(const Common& c) {
    std::ostringstream out;
    for (const auto& e : catalog())
        out << e.name << "  " << to_string(e.source) << "  v=" << e.graph.vertex_count()
            << "  e=" << e.graph.edge_count() << "  " << (e.verifiable ? "dense" : "not dense") << " "
            << edges_line(e.graph) << '\n';
    emit(c, "catalog", catalog_json(catalog()), out.str());
    return kOk;
}

ThreeGraph load_graph(const std::string& path) { return io::parse_hypergraph(io::read_file(path), path); }

int cmd_forbid_check(const Common& c, const std::string& name, const std::string& graph_file, bool show_cert) {
    ThreeGraph h;
    std::string label = name;
    if (!name.empty()) {
        const CatalogEntry* e = find_catalog_entry(name);
        if (!e)
            throw ArgumentError("no catalog entry named '" + name + "'");
        h = e->graph;
    } else {
        h = load_graph(graph_file);
        label = graph_file;
    }
    const auto cert = find_dense_ordering(h);
    if (!cert) {
        emit(c, "forbid-check", json{{"name", label}, {"dense", false}},
             label + ": no dense ordering, cannot certify\n");
        return kCheckFailed;
    }
    const auto rep = verify_forbidden(h, *cert);
    std::ostringstream out;
    if (show_cert && !c.json)
        out << format_certificate(*cert);
    if (rep.verified) {
        out << "verified, " << rep.configurations_checked << " configurations\n";
    } else {
        out << "NOT verified, " << rep.realizations.size() << " of " << rep.configurations_checked
            << " configurations realize e_r'\n";
        const auto& z = rep.realizations.front();
        out << "configuration " << z.choices << ":";
        for (std::size_t v = 0; v < z.embedding.size(); ++v)
            out << ' ' << v + 1 << "=(" << z.embedding[v].a << "," << z.embedding[v].b << ")";
        out << '\n';
    }
    emit(c, "forbid-check", json{{"name", label}, {"dense", true}, {"certificate", *cert}, {"result", rep}},
         out.str());
    return rep.verified ? kOk : kCheckFailed;
}

int cmd_count(const Common& c, const std::string& points_file, const std::string& shape_text, double eps, bool deg,
              bool isomorphic, const std::string& sides_text, const std::string& graph_out) {
    const PointSet points = io::parse_point_set(io::read_file(points_file), points_file);
    if (!(eps > 0))
        throw ArgumentError("--eps must be positive");
    std::ostringstream out;
    json body{{"points", points.size()}, {"dim", points.dim()}};
    if (isomorphic) {
        if (sides_text.empty())
            throw ArgumentError("--isomorphic needs --sides");
        const auto sides = parse_triple(sides_text, "--sides");
        const std::size_t n = count_isomorphic(points, sides, eps);
        body["mode"] = "isomorphic";
        body["sides"] = sides;
        body["eps"] = eps;
        body["count"] = n;
        out << n << " eps-isomorphic triangles\n";
    } else {
        if (shape_text.empty())
            throw ArgumentError("count needs --shape");
        const TriangleShape shape = parse_shape(shape_text, deg);
        const double eps_rad = deg ? degrees_to_radians(eps) : eps;
        const auto g = build_similarity_graph(points, shape, eps_rad, c.threads);
        if (!graph_out.empty())
            io::write_file(graph_out, io::format_hypergraph(g.graph));
        body["mode"] = "similar";
        body["angles"] = shape.angles();
        body["eps"] = eps_rad;
        body["count"] = g.graph.edge_count();
        out << g.graph.edge_count() << " eps-similar triangles\n";
    }
    emit(c, "count", body, out.str());
    return kOk;
}

struct ConstructArgs {
    std::string kind = "planar";
    int n = 0;
    std::string shape; // empty: equilateral
    bool deg = false;
    double ratio = kDefaultRatio;
    int dim = 3;
    std::string out;
    double validate_eps = 0;
};

int cmd_construct(const Common& c, const ConstructArgs& a) {
    ConstructionSpec spec;
    spec.kind = construction_kind_from_string(a.kind);
    spec.shape = a.shape.empty() ? TriangleShape::equilateral() : parse_shape(a.shape, a.deg);
    spec.ratio = a.ratio;
    spec.dim = spec.kind == ConstructionKind::Disphenoid ? 3 : a.dim;
    validate_spec(spec);
    const bool planar = spec.kind == ConstructionKind::PlanarIterated;

    ValidatedConstruction v;
    if (a.validate_eps > 0) {
        const double eps = a.deg ? degrees_to_radians(a.validate_eps) : a.validate_eps;
        v = realize_construction(a.n, spec, eps, c.threads);
    } else {
        v.points = planar ? build_planar_construction(a.n, spec) : build_simplex_construction(a.n, spec.dim, spec);
        v.pattern = planar ? build_S(a.n) : build_blowup(a.n, spec.dim + 1);
        v.requested_ratio = v.ratio = spec.ratio;
    }
    if (!a.out.empty())
        io::write_file(a.out, io::format_point_set(v.points));
    std::ostringstream out;
    out << v.points.size() << " points in dimension " << v.points.dim() << ", pattern has " << v.pattern.edge_count()
        << " edges\n";
    if (a.validate_eps > 0) {
        out << "ratio " << v.requested_ratio << " -> " << v.ratio << " after " << v.halvings << " halvings; "
            << v.similar << " similar, " << v.missing << " missing, " << v.spurious << " spurious: "
            << (v.validated ? "validated" : "NOT validated") << '\n';
    }
    if (a.out.empty() && !c.json)
        out << io::format_point_set(v.points);
    emit(c, "construct", construction_json(v, spec, a.n), out.str());
    return a.validate_eps > 0 && !v.validated ? kCheckFailed : kOk;
}

std::optional<HSequence> load_hseq_cache(const std::string& path) {
    if (path.empty() || !std::filesystem::exists(path))
        return std::nullopt;
    std::string problem;
    auto seq = HSequence::deserialize(io::read_file(path), &problem);
    if (!seq)
        std::cerr << "warning: ignoring h cache " << path << ": " << problem << '\n';
    return seq;
}

int cmd_hseq(const Common& c, int n, const std::string& cache) {
    if (n < 0)
        throw ArgumentError("--n must be non-negative");
    HSequence seq = load_hseq_cache(cache).value_or(HSequence());
    const int before = seq.max_n();
    seq.extend(n);
    if (!cache.empty() && seq.max_n() > before)
        io::write_file(cache, seq.serialize());
    std::ostringstream out;
    bool differs = false;
    for (int m = 0; m <= n; ++m) {
        const auto s = seq.split(m);
        out << m << ' ' << seq.value(m) << ' ' << s[0] << ' ' << s[1] << ' ' << s[2];
        if (seq.value(m) != s_edge_count(m)) {
            out << "  # e(S(n)) = " << s_edge_count(m);
            differs = true;
        }
        out << '\n';
    }
    json body{{"rows", hsequence_json(seq, n)}, {"differs_from_S", differs}};
    emit(c, "hseq", body, out.str());
    return kOk;
}

int cmd_turan(const Common& c, int n, const std::string& family_arg, bool force, const std::string& checkpoint,
              const std::string& witness_out, std::uint64_t node_limit) {
    Family family;
    if (std::filesystem::exists(family_arg) && !find_catalog_entry(family_arg) && family_arg != "F")
        family = {family_arg, io::parse_hypergraph_family(io::read_file(family_arg), family_arg)};
    else
        family = family_by_name(family_arg);

    TuranOptions opt;
    opt.force = force;
    if (node_limit)
        opt.node_limit = node_limit;
    if (!checkpoint.empty()) {
        opt.checkpoint_file = checkpoint;
        if (std::filesystem::exists(checkpoint)) {
            std::string problem;
            auto cp = deserialize_checkpoint(io::read_file(checkpoint), &problem);
            if (cp && (cp->n != n || cp->fingerprint != family_fingerprint(family))) {
                problem = "checkpoint is for another n or family";
                cp.reset();
            }
            if (cp)
                opt.resume = cp;
            else
                std::cerr << "warning: ignoring checkpoint " << checkpoint << ": " << problem << '\n';
        }
    }
    const SearchResult r = exact_turan(n, family, opt);
    if (!witness_out.empty())
        io::write_file(witness_out, io::format_hypergraph(r.witness));
    std::ostringstream out;
    out << "ex(" << n << ", " << family.id << ") " << (r.complete ? "= " : ">= ") << r.max_edges << "  ("
        << r.nodes_expanded << " nodes" << (opt.resume ? ", resumed" : "") << ")\n";
    if (n <= 6561) {
        const auto h = h_value(n);
        out << "h(" << n << ") = " << h << (r.complete && h != r.max_edges ? "  # differs" : "") << '\n';
    }
    out << "witness:" << edges_line(r.witness) << '\n';
    emit(c, "turan", r, out.str());
    return verify_witness(r, family) ? kOk : kCheckFailed;
}

int cmd_analyze(const Common& c, const std::string& graph_file, bool t221) {
    const ThreeGraph g = load_graph(graph_file);
    const auto r = best_edge_partition(g, t221 ? PartitionBase::T221 : PartitionBase::Edge, c.threads);
    std::ostringstream out;
    auto list = [&](const std::vector<Vertex>& vs) {
        for (Vertex v : vs)
            out << ' ' << v + 1;
        out << '\n';
    };
    out << "base:";
    list(r.base);
    for (int i = 0; i < 3; ++i) {
        out << "A" << i + 1 << " (" << r.parts[i].size() << "):";
        list(r.parts[i]);
    }
    out << "J (" << r.leftover.size() << "):";
    list(r.leftover);
    out << "objective " << r.objective << " = " << r.objective_numerator << "/" << 4LL * r.n * r.n << '\n';
    out << "disjoint " << (r.disjoint ? "yes" : "no") << ", min part >= 0.26n " << (r.min_size_ok ? "yes" : "no")
        << ", |J| <= 0.012n " << (r.leftover_ok ? "yes" : "no") << '\n';
    emit(c, "analyze", r, out.str());
    return kOk;
}

int cmd_selfcheck(const Common& c) {
    const auto checks = quadratic_bound_checks();
    const auto g = maximize_g();
    std::ostringstream out;
    for (const auto& k : checks.checks) {
        out << (k.pass() ? "ok    " : "FAIL  ") << k.name << ": " << k.computed;
        if (!k.claimed.empty())
            out << (k.matches_claim ? " = " : " != ") << k.claimed;
        if (!k.below_bound)
            out << " (not below 24406/100000)";
        out << '\n';
    }
    const bool g_ok = std::abs(g.value - 1.0 / 24) <= 1e-9 &&
                      std::all_of(g.argmax.begin(), g.argmax.end(), [](double x) { return std::abs(x - 1.0 / 3) <= 1e-6; });
    out << (g_ok ? "ok    " : "FAIL  ") << "max g = " << g.value << " at (" << g.argmax[0] << ", " << g.argmax[1]
        << ", " << g.argmax[2] << ")\n";
    emit(c, "selfcheck", json{{"bounds", checks.checks}, {"maximize_g", g}}, out.str());
    return checks.all_pass() && g_ok ? kOk : kCheckFailed;
}

int cmd_reproduce(const Common& c, std::uint64_t seed, const std::string& cache,
                  const std::vector<std::string>& overrides) {
    ReproduceInputs in = ReproduceInputs::defaults();
    in.seed = seed;
    in.threads = c.threads;
    in.hseq = load_hseq_cache(cache);
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos)
            throw ArgumentError("--override expects NAME=EDGES, got '" + o + "'");
        const std::string name = o.substr(0, eq);
        auto it = std::find_if(in.catalog.begin(), in.catalog.end(), [&](const auto& e) { return e.name == name; });
        if (it == in.catalog.end())
            throw ArgumentError("no catalog entry named '" + name + "'");
        it->graph = graph_from_compact(o.substr(eq + 1));
    }
    const auto summary = run_reproduce(in);
    std::ostringstream out;
    for (const auto& r : summary.rows) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << "  (" << r.seconds << " s)\n";
        for (const auto& d : r.details)
            out << "        " << d << '\n';
    }
    out << (summary.all_pass() ? "all criteria pass\n" : "some criteria fail\n");
    emit(c, "reproduce", summary, out.str());
    return summary.all_pass() ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simtri: similar-triangle hypergraph toolkit"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json, "Print a JSON report");
    app.add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1, 256));

    auto* catalog_cmd = app.add_subcommand("catalog", "List the forbidden 3-graphs");

    std::string fc_name, fc_graph;
    bool fc_cert = false;
    auto* forbid = app.add_subcommand("forbid-check", "Certify a dense 3-graph by exact embedding");
    auto* name_opt = forbid->add_option("--name", fc_name, "Catalog name");
    forbid->add_option("--graph", fc_graph, "Hypergraph file")->excludes(name_opt);
    forbid->add_flag("--certificate", fc_cert, "Print the dense ordering");

    std::string cnt_points, cnt_shape, cnt_sides, cnt_graph_out;
    double cnt_eps = 0;
    bool cnt_deg = false, cnt_iso = false;
    auto* count = app.add_subcommand("count", "Count eps-similar triangles in a point set");
    count->add_option("--points", cnt_points, "Point-set file")->required();
    count->add_option("--shape", cnt_shape, "Three angles");
    count->add_option("--eps", cnt_eps, "Tolerance")->required();
    count->add_flag("--deg", cnt_deg, "Angles and eps are in degrees");
    count->add_flag("--isomorphic", cnt_iso, "Compare side lengths instead of angles");
    count->add_option("--sides", cnt_sides, "Three side lengths for --isomorphic");
    count->add_option("--graph-out", cnt_graph_out, "Write the similarity graph");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build an extremal point construction");
    construct->add_option("--kind", ca.kind, "planar, simplex or disphenoid");
    construct->add_option("--n", ca.n, "Number of points")->required()->check(CLI::NonNegativeNumber);
    construct->add_option("--shape", ca.shape, "Three angles (default equilateral)");
    construct->add_flag("--deg", ca.deg, "Angles and --validate-eps are in degrees");
    construct->add_option("--ratio", ca.ratio, "Level contraction in (0, 0.2]");
    construct->add_option("--dim", ca.dim, "Dimension for the simplex kinds");
    construct->add_option("--out", ca.out, "Point-set output file");
    construct->add_option("--validate-eps", ca.validate_eps,
                          "Halve the ratio until the similarity graph at this eps matches the pattern");

    int hs_n = 0;
    std::string hs_cache;
    auto* hseq = app.add_subcommand("hseq", "Print h(0..N) with maximizing splits");
    hseq->add_option("--n", hs_n, "Largest n")->required();
    hseq->add_option("--cache", hs_cache, "Cache file (read if valid, then updated)");

    int tu_n = 0;
    std::string tu_family = "F", tu_checkpoint, tu_witness;
    bool tu_force = false;
    std::uint64_t tu_limit = 0;
    auto* turan = app.add_subcommand("turan", "Exact Turan number by branch and bound");
    turan->add_option("--n", tu_n, "Vertices")->required();
    turan->add_option("--family", tu_family, "F, a catalog name or a family file");
    turan->add_flag("--force", tu_force, "Allow n > 9");
    turan->add_option("--checkpoint", tu_checkpoint, "Checkpoint file (resumed if valid)");
    turan->add_option("--witness", tu_witness, "Write the witness graph");
    turan->add_option("--node-limit", tu_limit, "Stop after this many nodes");

    std::string an_graph;
    bool an_t221 = false;
    auto* analyze = app.add_subcommand("analyze", "Best partition from an edge or T221 base");
    analyze->add_option("--graph", an_graph, "Hypergraph file")->required();
    analyze->add_flag("--t221", an_t221, "Scan T221 copies instead of edges");

    auto* selfcheck = app.add_subcommand("selfcheck", "Exact constant checks and maximization of g");

    std::uint64_t rp_seed = kDefaultSeed;
    std::string rp_cache;
    std::vector<std::string> rp_override;
    auto* reproduce = app.add_subcommand("reproduce", "Run every acceptance check");
    reproduce->add_option("--seed", rp_seed, "Seed for the randomized suites");
    reproduce->add_option("--hseq-cache", rp_cache, "Use this h cache instead of computing");
    reproduce->add_option("--override", rp_override, "Replace a catalog graph: NAME=EDGES");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*catalog_cmd)
            return cmd_catalog(common);
        if (*forbid) {
            if (fc_name.empty() && fc_graph.empty())
                throw ArgumentError("forbid-check needs --name or --graph");
            return cmd_forbid_check(common, fc_name, fc_graph, fc_cert);
        }
        if (*count)
            return cmd_count(common, cnt_points, cnt_shape, cnt_eps, cnt_deg, cnt_iso, cnt_sides, cnt_graph_out);
        if (*construct)
            return cmd_construct(common, ca);
        if (*hseq)
            return cmd_hseq(common, hs_n, hs_cache);
        if (*turan)
            return cmd_turan(common, tu_n, tu_family, tu_force, tu_checkpoint, tu_witness, tu_limit);
        if (*analyze)
            return cmd_analyze(common, an_graph, an_t221);
        if (*selfcheck)
            return cmd_selfcheck(common);
        if (*reproduce)
            return cmd_reproduce(common, rp_seed, rp_cache, rp_override);
    } catch (const std::exception& e) {
        // Bad arguments, unreadable or malformed input, refused sizes.
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

#include "simtri/report.hpp"

#include "simtri/errors.hpp"

namespace simtri {

using nlohmann::json;

json envelope(std::string_view kind, json body) {
    json doc = json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = std::string(kind);
    doc["report"] = std::move(body);
    return doc;
}

json open_envelope(const json& doc, std::string_view kind) {
    if (!doc.is_object() || !doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion)
        throw ParseError("<json>", 0, "missing or unsupported schema_version");
    if (!doc.contains("kind") || doc["kind"] != std::string(kind))
        throw ParseError("<json>", 0, "expected a " + std::string(kind) + " report");
    return doc.at("report");
}

// Triples are written 1-based, as everywhere else in the external formats.
void to_json(json& j, const Triple& t) { j = json::array({t.a + 1, t.b + 1, t.c + 1}); }
void from_json(const json& j, Triple& t) {
    t = make_triple(j.at(0).get<int>() - 1, j.at(1).get<int>() - 1, j.at(2).get<int>() - 1);
}

void to_json(json& j, const ThreeGraph& g) {
    j = json{{"n", g.vertex_count()}, {"edges", std::vector<Triple>(g.edges().begin(), g.edges().end())}};
}
void from_json(const json& j, ThreeGraph& g) {
    g = ThreeGraph(j.at("n").get<int>(), j.at("edges").get<std::vector<Triple>>());
}

void to_json(json& j, const EisensteinPoint& p) { j = json::array({p.a, p.b}); }
void from_json(const json& j, EisensteinPoint& p) { p = {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

void to_json(json& j, const DenseCertificate& c) {
    std::vector<int> order;
    for (Vertex v : c.ordering)
        order.push_back(v + 1);
    j = json{{"ordering", order},
             {"prefix_edges", c.prefix_edges},
             {"final_edge", c.final_edges.first},
             {"check_edge", c.final_edges.second}};
}
void from_json(const json& j, DenseCertificate& c) {
    c.ordering.clear();
    for (int v : j.at("ordering").get<std::vector<int>>())
        c.ordering.push_back(v - 1);
    c.prefix_edges = j.at("prefix_edges").get<std::vector<Triple>>();
    c.final_edges = {j.at("final_edge").get<Triple>(), j.at("check_edge").get<Triple>()};
}

void to_json(json& j, const Realization& r) {
    j = json{{"choices", r.choices}, {"points", r.points}, {"embedding", r.embedding}};
}
void from_json(const json& j, Realization& r) {
    r.choices = j.at("choices").get<std::uint32_t>();
    r.points = j.at("points").get<std::array<EisensteinPoint, 3>>();
    r.embedding = j.at("embedding").get<std::vector<EisensteinPoint>>();
}

void to_json(json& j, const EmbeddingReport& r) {
    j = json{{"verified", r.verified},
             {"configurations_checked", r.configurations_checked},
             {"collisions", r.collisions},
             {"realizations", r.realizations}};
}
void from_json(const json& j, EmbeddingReport& r) {
    r.verified = j.at("verified").get<bool>();
    r.configurations_checked = j.at("configurations_checked").get<std::uint64_t>();
    r.collisions = j.at("collisions").get<std::uint64_t>();
    r.realizations = j.at("realizations").get<std::vector<Realization>>();
}

void to_json(json& j, const TuranCheckpoint& c) {
    // The checkpoint keeps its own text format; JSON embeds that text.
    j = serialize_checkpoint(c);
}
void from_json(const json& j, TuranCheckpoint& c) {
    std::string problem;
    auto cp = deserialize_checkpoint(j.get<std::string>(), &problem);
    if (!cp)
        throw ParseError("<json>", 0, "bad checkpoint: " + problem);
    c = *cp;
}

void to_json(json& j, const SearchResult& r) {
    j = json{{"n", r.n},
             {"family", r.family_id},
             {"max_edges", r.max_edges},
             {"witness", r.witness},
             {"nodes_expanded", r.nodes_expanded},
             {"complete", r.complete},
             {"checkpoint", r.checkpoint ? json(*r.checkpoint) : json(nullptr)}};
}
void from_json(const json& j, SearchResult& r) {
    r.n = j.at("n").get<int>();
    r.family_id = j.at("family").get<std::string>();
    r.max_edges = j.at("max_edges").get<int>();
    r.witness = j.at("witness").get<ThreeGraph>();
    r.nodes_expanded = j.at("nodes_expanded").get<std::uint64_t>();
    r.complete = j.at("complete").get<bool>();
    r.checkpoint.reset();
    if (!j.at("checkpoint").is_null())
        r.checkpoint = j.at("checkpoint").get<TuranCheckpoint>();
}

namespace {

json one_based(const std::vector<Vertex>& vs) {
    json out = json::array();
    for (Vertex v : vs)
        out.push_back(v + 1);
    return out;
}

std::vector<Vertex> zero_based(const json& j) {
    std::vector<Vertex> out;
    for (int v : j.get<std::vector<int>>())
        out.push_back(v - 1);
    return out;
}

} // namespace

void to_json(json& j, const PartitionReport& r) {
    j = json{{"base_kind", r.base_kind == PartitionBase::Edge ? "edge" : "t221"},
             {"base", one_based(r.base)},
             {"parts", json::array({one_based(r.parts[0]), one_based(r.parts[1]), one_based(r.parts[2])})},
             {"leftover", one_based(r.leftover)},
             {"n", r.n},
             {"fractions", r.fractions},
             {"objective", r.objective},
             {"objective_exact", std::to_string(r.objective_numerator) + "/" + std::to_string(4LL * r.n * r.n)},
             {"objective_numerator", r.objective_numerator},
             {"disjoint", r.disjoint},
             {"min_size_ok", r.min_size_ok},
             {"leftover_ok", r.leftover_ok}};
}
void from_json(const json& j, PartitionReport& r) {
    r.base_kind = j.at("base_kind") == "edge" ? PartitionBase::Edge : PartitionBase::T221;
    r.base = zero_based(j.at("base"));
    for (int i = 0; i < 3; ++i)
        r.parts[i] = zero_based(j.at("parts").at(i));
    r.leftover = zero_based(j.at("leftover"));
    r.n = j.at("n").get<int>();
    r.fractions = j.at("fractions").get<std::array<double, 3>>();
    r.objective = j.at("objective").get<double>();
    r.objective_numerator = j.at("objective_numerator").get<std::int64_t>();
    r.disjoint = j.at("disjoint").get<bool>();
    r.min_size_ok = j.at("min_size_ok").get<bool>();
    r.leftover_ok = j.at("leftover_ok").get<bool>();
}

void to_json(json& j, const BoundCheck& c) {
    j = json{{"name", c.name},
             {"computed", c.computed},
             {"claimed", c.claimed},
             {"computed_value", c.computed_value},
             {"matches_claim", c.matches_claim},
             {"below_bound", c.below_bound},
             {"pass", c.pass()}};
}
void from_json(const json& j, BoundCheck& c) {
    c.name = j.at("name").get<std::string>();
    c.computed = j.at("computed").get<std::string>();
    c.claimed = j.at("claimed").get<std::string>();
    c.computed_value = j.at("computed_value").get<double>();
    c.matches_claim = j.at("matches_claim").get<bool>();
    c.below_bound = j.at("below_bound").get<bool>();
}

void to_json(json& j, const MaximizeStage& s) {
    j = json{{"step", s.step}, {"argmax", s.argmax}, {"value", s.value}};
}
void from_json(const json& j, MaximizeStage& s) {
    s.step = j.at("step").get<double>();
    s.argmax = j.at("argmax").get<std::array<double, 3>>();
    s.value = j.at("value").get<double>();
}

void to_json(json& j, const MaximizeResult& r) {
    j = json{{"argmax", r.argmax}, {"value", r.value}, {"stages", r.stages}};
}
void from_json(const json& j, MaximizeResult& r) {
    r.argmax = j.at("argmax").get<std::array<double, 3>>();
    r.value = j.at("value").get<double>();
    r.stages = j.at("stages").get<std::vector<MaximizeStage>>();
}

void to_json(json& j, const CriterionResult& r) {
    j = json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}, {"seconds", r.seconds}};
}
void from_json(const json& j, CriterionResult& r) {
    r.id = j.at("id").get<int>();
    r.name = j.at("name").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.details = j.at("details").get<std::vector<std::string>>();
    r.seconds = j.at("seconds").get<double>();
}

void to_json(json& j, const ReproduceSummary& s) { j = json{{"rows", s.rows}, {"all_pass", s.all_pass()}}; }
void from_json(const json& j, ReproduceSummary& s) { s.rows = j.at("rows").get<std::vector<CriterionResult>>(); }

json catalog_json(const std::vector<CatalogEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries)
        out.push_back({{"name", e.name},
                       {"source", std::string(to_string(e.source))},
                       {"graph", e.graph},
                       {"verifiable", e.verifiable}});
    return out;
}

json hsequence_json(const HSequence& seq, int max_n) {
    json rows = json::array();
    for (int n = 0; n <= max_n; ++n)
        rows.push_back({{"n", n}, {"h", seq.value(n)}, {"split", seq.split(n)}, {"s_edges", s_edge_count(n)}});
    return rows;
}

json construction_json(const ValidatedConstruction& v, const ConstructionSpec& spec, int n) {
    return json{{"n", n},
                {"kind", std::string(to_string(spec.kind))},
                {"angles", spec.shape.angles()},
                {"dim", v.points.dim()},
                {"requested_ratio", v.requested_ratio},
                {"ratio", v.ratio},
                {"halvings", v.halvings},
                {"similar", v.similar},
                {"pattern_edges", v.pattern.edge_count()},
                {"missing", v.missing},
                {"spurious", v.spurious},
                {"validated", v.validated}};
}

} // namespace simtri

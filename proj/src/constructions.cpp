#include "simtri/constructions.hpp"

#include "simtri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace simtri {

namespace {

constexpr std::string_view kHSeqHeader = "# simtri-hseq v1";

// 24 * (x^3 - x)/24: an upper bound for 24 h(x), tight at powers of 3.
std::int64_t cubic_bound24(std::int64_t x) { return x * x * x - x; }

} // namespace

void HSequence::extend(int max_n) {
    if (max_n < 0)
        throw ArgumentError("n must be non-negative");
    for (int m = static_cast<int>(values_.size()); m <= max_n; ++m) {
        if (m < 3) {
            values_.push_back(0);
            splits_.push_back({0, 0, 0});
            continue;
        }
        auto value_of = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
            return a * b * c + values_[a] + values_[b] + values_[c];
        };
        const Split start = balanced_split(m);
        std::tuple<std::int64_t, int, int, int> best{value_of(start[0], start[1], start[2]), start[0], start[1],
                                                     start[2]};
        const std::int64_t top = cubic_bound24(m);
        // 24(abc + U(a)+U(b)+U(c)) = (m^3 - m) - 3[a(b-c)^2 + b(a-c)^2 + c(a-b)^2], and U bounds h,
        // so partitions far from balanced are cut without evaluating them.
        for (std::int64_t a = (m + 2) / 3; a < m; ++a) {
            const std::int64_t rest = m - a;
            if (6 * a * rest * rest + cubic_bound24(a) + cubic_bound24(rest) < 24 * std::get<0>(best))
                continue;
            for (std::int64_t b = (rest + 1) / 2; b <= std::min(a, rest); ++b) {
                const std::int64_t c = rest - b;
                if (3 * a * (b - c) * (b - c) > top - 24 * std::get<0>(best))
                    break;
                std::tuple<std::int64_t, int, int, int> cand{value_of(a, b, c), static_cast<int>(a),
                                                             static_cast<int>(b), static_cast<int>(c)};
                best = std::max(best, cand);
            }
        }
        values_.push_back(std::get<0>(best));
        splits_.push_back({std::get<1>(best), std::get<2>(best), std::get<3>(best)});
    }
}

std::int64_t HSequence::value(int n) const {
    if (n < 0 || n > max_n())
        throw ArgumentError("h(" + std::to_string(n) + ") is outside the table");
    return values_[n];
}

Split HSequence::split(int n) const {
    if (n < 0 || n > max_n())
        throw ArgumentError("split(" + std::to_string(n) + ") is outside the table");
    return splits_[n];
}

std::string HSequence::serialize() const {
    std::ostringstream out;
    out << kHSeqHeader << '\n';
    for (int n = 0; n <= max_n(); ++n)
        out << n << ' ' << values_[n] << ' ' << splits_[n][0] << ' ' << splits_[n][1] << ' ' << splits_[n][2]
            << '\n';
    return out.str();
}

std::optional<HSequence> HSequence::deserialize(const std::string& text, std::string* problem) {
    auto fail = [&](std::string why) -> std::optional<HSequence> {
        if (problem)
            *problem = std::move(why);
        return std::nullopt;
    };
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kHSeqHeader)
        return fail("missing or unknown header");
    HSequence seq;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::int64_t n = 0, h = 0;
        Split s{};
        std::string extra;
        if (!(row >> n >> h >> s[0] >> s[1] >> s[2]) || (row >> extra))
            return fail("line " + std::to_string(lineno) + ": expected `n h a b c`");
        if (n != seq.max_n() + 1)
            return fail("line " + std::to_string(lineno) + ": rows out of order");
        const bool trivial = n < 3 && h == 0 && s == Split{0, 0, 0};
        if (!trivial) {
            if (n < 3 || s[0] < s[1] || s[1] < s[2] || s[2] < 0 || s[0] + s[1] + s[2] != n || s[0] == n)
                return fail("line " + std::to_string(lineno) + ": invalid split");
            if (h != std::int64_t{s[0]} * s[1] * s[2] + seq.values_[s[0]] + seq.values_[s[1]] + seq.values_[s[2]])
                return fail("line " + std::to_string(lineno) + ": value does not match its split");
        }
        seq.values_.push_back(h);
        seq.splits_.push_back(s);
    }
    return seq;
}

HSequence HSequence::from_rows(std::vector<std::int64_t> values, std::vector<Split> splits) {
    if (values.size() != splits.size())
        throw ArgumentError("value and split tables differ in length");
    HSequence seq;
    seq.values_ = std::move(values);
    seq.splits_ = std::move(splits);
    return seq;
}

namespace {

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

HSequence& shared_table() {
    static HSequence table;
    return table;
}

} // namespace

std::int64_t h_value(int n) {
    std::lock_guard lock(table_mutex());
    shared_table().extend(n);
    return shared_table().value(n);
}

Split best_split(int n) {
    std::lock_guard lock(table_mutex());
    shared_table().extend(n);
    return shared_table().split(n);
}

Split balanced_split(int n) {
    if (n < 0)
        throw ArgumentError("n must be non-negative");
    const int a = (n + 2) / 3;
    const int c = n / 3;
    return {a, n - a - c, c};
}

std::int64_t s_edge_count(int n) {
    static std::mutex m;
    static std::map<int, std::int64_t> memo;
    if (n < 0)
        throw ArgumentError("n must be non-negative");
    if (n < 3)
        return 0;
    {
        std::lock_guard lock(m);
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
    }
    const Split s = balanced_split(n);
    const std::int64_t v =
        std::int64_t{s[0]} * s[1] * s[2] + s_edge_count(s[0]) + s_edge_count(s[1]) + s_edge_count(s[2]);
    std::lock_guard lock(m);
    memo[n] = v;
    return v;
}

namespace {

std::vector<int> group_sizes(int n, int parts) {
    std::vector<int> sizes(parts, n / parts);
    for (int i = 0; i < n % parts; ++i)
        ++sizes[i];
    return sizes;
}

void blowup_edges(int offset, int n, int parts, std::vector<Triple>& out) {
    if (n < 3)
        return;
    const auto sizes = group_sizes(n, parts);
    std::vector<int> start(parts + 1, offset);
    for (int g = 0; g < parts; ++g)
        start[g + 1] = start[g] + sizes[g];
    for (int g1 = 0; g1 < parts; ++g1)
        for (int g2 = g1 + 1; g2 < parts; ++g2)
            for (int g3 = g2 + 1; g3 < parts; ++g3)
                for (int x = start[g1]; x < start[g1 + 1]; ++x)
                    for (int y = start[g2]; y < start[g2 + 1]; ++y)
                        for (int z = start[g3]; z < start[g3 + 1]; ++z)
                            out.push_back({x, y, z});
    for (int g = 0; g < parts; ++g)
        blowup_edges(start[g], sizes[g], parts, out);
}

} // namespace

ThreeGraph build_blowup(int n, int parts) {
    if (n < 0)
        throw ArgumentError("n must be non-negative");
    if (parts < 3)
        throw ArgumentError("a blow-up needs at least three parts");
    std::vector<Triple> edges;
    blowup_edges(0, n, parts, edges);
    return ThreeGraph(n, std::move(edges));
}

// The ceil/floor group sizes for three parts coincide with balanced_split.
ThreeGraph build_S(int n) { return build_blowup(n, 3); }

std::string_view to_string(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::PlanarIterated:
        return "planar";
    case ConstructionKind::Disphenoid:
        return "disphenoid";
    case ConstructionKind::RegularSimplex:
        return "simplex";
    }
    return "unknown";
}

ConstructionKind construction_kind_from_string(std::string_view s) {
    if (s == "planar" || s == "planar-iterated")
        return ConstructionKind::PlanarIterated;
    if (s == "disphenoid")
        return ConstructionKind::Disphenoid;
    if (s == "simplex" || s == "regular-simplex")
        return ConstructionKind::RegularSimplex;
    throw ArgumentError("unknown construction kind '" + std::string(s) + "'");
}

namespace {

bool is_equilateral_shape(const TriangleShape& t) {
    for (double a : t.angles())
        if (std::abs(a - std::numbers::pi / 3) > kAngleSumTolerance)
            return false;
    return true;
}

void check_ratio(double ratio) {
    if (!(ratio > 0 && ratio <= kMaxRatio))
        throw ArgumentError("contraction ratio must lie in (0, 0.2]");
}

void check_simplex_shape(int d, const TriangleShape& shape) {
    if (d < 3)
        throw ArgumentError("simplex constructions need dimension at least 3");
    if (d == 3 && !shape.is_acute())
        throw ArgumentError("the 3-dimensional construction needs a strictly acute shape");
    if (d >= 4 && !is_equilateral_shape(shape))
        throw ArgumentError("dimension " + std::to_string(d) + " needs the equilateral shape");
}

// Recursive placement shared by both kinds: group g of a pattern centred at `center` with
// scale s sits at center + s (W_g - centroid).
void place_groups(int n, const std::vector<Coordinates>& base, const Coordinates& centroid, double ratio,
                  const Coordinates& center, double scale, bool top, std::vector<Coordinates>& out) {
    if (n == 0)
        return;
    if (n == 1) {
        out.push_back(center);
        return;
    }
    const int parts = static_cast<int>(base.size());
    const auto sizes = group_sizes(n, parts);
    for (int g = 0; g < parts; ++g) {
        Coordinates c = base[g];
        if (!top)
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] = center[i] + scale * (base[g][i] - centroid[i]);
        place_groups(sizes[g], base, centroid, ratio, c, top ? ratio : scale * ratio, false, out);
    }
}

PointSet place(int n, const std::vector<Coordinates>& base, double ratio) {
    if (n < 0)
        throw ArgumentError("n must be non-negative");
    const int dim = static_cast<int>(base.front().size());
    Coordinates centroid(dim, 0.0);
    for (const auto& p : base)
        for (int i = 0; i < dim; ++i)
            centroid[i] += p[i] / static_cast<double>(base.size());
    std::vector<Coordinates> out;
    // The top level puts groups exactly on the base vertices.
    place_groups(n, base, centroid, ratio, centroid, 1.0, true, out);
    return PointSet(dim, std::move(out));
}

} // namespace

void validate_spec(const ConstructionSpec& spec) {
    check_ratio(spec.ratio);
    switch (spec.kind) {
    case ConstructionKind::PlanarIterated:
        break;
    case ConstructionKind::Disphenoid:
        if (spec.dim != 3)
            throw ArgumentError("the disphenoid construction lives in dimension 3");
        if (!spec.shape.is_acute())
            throw ArgumentError("the disphenoid construction needs a strictly acute shape");
        break;
    case ConstructionKind::RegularSimplex:
        if (spec.dim < 3)
            throw ArgumentError("simplex constructions need dimension at least 3");
        if (!is_equilateral_shape(spec.shape))
            throw ArgumentError("the regular-simplex construction needs the equilateral shape");
        break;
    }
}

PointSet build_planar_construction(int n, const ConstructionSpec& spec) {
    validate_spec(spec);
    if (spec.kind != ConstructionKind::PlanarIterated)
        throw ArgumentError("not a planar construction spec");
    // Angles ascending at V0, V1, V2; the side V0V1 opposite the largest angle has length 1.
    const auto& ang = spec.shape.angles();
    const double len = std::sin(ang[1]) / std::sin(ang[2]);
    const std::vector<Coordinates> base{{0.0, 0.0}, {1.0, 0.0}, {len * std::cos(ang[0]), len * std::sin(ang[0])}};
    return place(n, base, spec.ratio);
}

std::array<std::array<double, 3>, 4> make_disphenoid(std::array<double, 3> sides) {
    const auto [a, b, c] = sides;
    if (!(a > 0 && b > 0 && c > 0))
        throw ArgumentError("side lengths must be positive");
    const double p2 = (b * b + c * c - a * a) / 2;
    const double q2 = (a * a + c * c - b * b) / 2;
    const double r2 = (a * a + b * b - c * c) / 2;
    if (!(p2 > 0 && q2 > 0 && r2 > 0))
        throw InfeasibleError("a disphenoid needs a strictly acute triangle");
    const double p = std::sqrt(p2), q = std::sqrt(q2), r = std::sqrt(r2);
    return {{{0, 0, 0}, {p, q, 0}, {p, 0, r}, {0, q, r}}};
}

std::vector<Coordinates> regular_simplex(int d) {
    if (d < 1)
        throw ArgumentError("simplex dimension must be positive");
    // Rows of the Cholesky factor of the Gram matrix (1 on the diagonal, 1/2 elsewhere) give
    // d unit vectors at pairwise distance 1; together with the origin they span the simplex.
    std::vector<Coordinates> out(d + 1, Coordinates(d, 0.0));
    std::vector<std::vector<double>> l(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = i == j ? 1.0 : 0.5;
            for (int k = 0; k < j; ++k)
                s -= l[i][k] * l[j][k];
            l[i][j] = i == j ? std::sqrt(s) : s / l[j][j];
        }
        out[i + 1] = l[i];
    }
    return out;
}

PointSet build_simplex_construction(int n, int d, const ConstructionSpec& spec) {
    check_ratio(spec.ratio);
    check_simplex_shape(d, spec.shape);
    std::vector<Coordinates> base;
    if (d == 3) {
        for (const auto& p : make_disphenoid(spec.shape.unit_sides()))
            base.emplace_back(p.begin(), p.end());
    } else {
        base = regular_simplex(d);
    }
    return place(n, base, spec.ratio);
}

std::int64_t expected_simplex_count(std::int64_t n, int d) {
    if (d < 3)
        throw ArgumentError("dimension must be at least 3");
    if (n < 1 || n > 1'000'000)
        throw ArgumentError("n must lie in [1, 10^6]");
    const std::int64_t parts = d + 1;
    std::int64_t m = n;
    int k = 0;
    while (m % parts == 0) {
        m /= parts;
        ++k;
    }
    if (m != 1)
        throw ArgumentError(std::to_string(n) + " is not a power of " + std::to_string(parts));
    const std::int64_t triples = parts * (parts - 1) * (parts - 2) / 6;
    std::int64_t total = 0, copies = 1, size = n;
    for (int i = 1; i <= k; ++i) {
        size /= parts;
        total += triples * copies * size * size * size;
        copies *= parts;
    }
    return total;
}

ValidatedConstruction compare_with_pattern(PointSet points, ThreeGraph pattern, const TriangleShape& shape,
                                           double eps, int threads) {
    if (static_cast<int>(points.size()) != pattern.vertex_count())
        throw ArgumentError("point set and pattern differ in size");
    ValidatedConstruction out;
    const auto g = build_similarity_graph(points, shape, eps, threads).graph;
    const auto have = g.edges();
    const auto want = pattern.edges();
    std::vector<Triple> diff;
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(diff));
    out.missing = diff.size();
    diff.clear();
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(diff));
    out.spurious = diff.size();
    out.similar = g.edge_count();
    out.validated = out.missing == 0 && out.spurious == 0;
    out.points = std::move(points);
    out.pattern = std::move(pattern);
    return out;
}

ValidatedConstruction realize_construction(int n, const ConstructionSpec& spec, double eps, int threads,
                                           int max_halvings) {
    validate_spec(spec);
    const bool planar = spec.kind == ConstructionKind::PlanarIterated;
    const int d = spec.kind == ConstructionKind::Disphenoid ? 3 : spec.dim;
    ThreeGraph pattern = planar ? build_S(n) : build_blowup(n, d + 1);
    ConstructionSpec attempt = spec;
    ValidatedConstruction result;
    for (int halvings = 0;; ++halvings) {
        PointSet points = planar ? build_planar_construction(n, attempt) : build_simplex_construction(n, d, attempt);
        result = compare_with_pattern(std::move(points), pattern, spec.shape, eps, threads);
        result.requested_ratio = spec.ratio;
        result.ratio = attempt.ratio;
        result.halvings = halvings;
        if (result.validated || halvings == max_halvings)
            return result;
        attempt.ratio /= 2;
    }
}

} // namespace simtri

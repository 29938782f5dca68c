#include "simtri/turan.hpp"

#include "simtri/catalog.hpp"
#include "simtri/constructions.hpp"
#include "simtri/detail/matcher.hpp"
#include "simtri/errors.hpp"
#include "simtri/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace simtri {

Family family_by_name(const std::string& name) {
    if (name == "F")
        return {"F", catalog_family()};
    if (const CatalogEntry* e = find_catalog_entry(name))
        return {e->name, {e->graph}};
    throw ArgumentError("unknown family '" + name + "' (use F or a catalog name)");
}

std::uint64_t family_fingerprint(const Family& family) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    for (const ThreeGraph& g : family.members) {
        mix(static_cast<std::uint64_t>(g.vertex_count()));
        for (const Triple& t : g.edges())
            mix(static_cast<std::uint64_t>(t.a) | static_cast<std::uint64_t>(t.b) << 16 |
                static_cast<std::uint64_t>(t.c) << 32);
        mix(~std::uint64_t{0});
    }
    return h;
}

namespace {

constexpr std::string_view kCheckpointHeader = "# simtri-turan-checkpoint v1";

} // namespace

std::string serialize_checkpoint(const TuranCheckpoint& cp) {
    std::ostringstream out;
    out << kCheckpointHeader << '\n';
    out << "n " << cp.n << '\n';
    out << "family " << cp.family_id << '\n';
    out << "fingerprint " << std::hex << cp.fingerprint << std::dec << '\n';
    out << "nodes " << cp.nodes << '\n';
    out << "best " << cp.best << '\n';
    out << "complete " << (cp.complete ? 1 : 0) << '\n';
    out << "witness " << cp.witness.size() << '\n';
    for (const Triple& t : cp.witness)
        out << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
    out << "path ";
    if (cp.path.empty())
        out << '-';
    for (auto c : cp.path)
        out << (c ? '1' : '0');
    out << '\n';
    return out.str();
}

std::optional<TuranCheckpoint> deserialize_checkpoint(const std::string& text, std::string* problem) {
    auto fail = [&](std::string why) -> std::optional<TuranCheckpoint> {
        if (problem)
            *problem = std::move(why);
        return std::nullopt;
    };
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCheckpointHeader)
        return fail("missing or unknown header");
    TuranCheckpoint cp;
    auto field = [&](const char* key, auto& value, bool hex = false) {
        std::string k;
        if (!std::getline(in, line))
            return false;
        std::istringstream row(line);
        if (hex)
            row >> k >> std::hex >> value;
        else
            row >> k >> value;
        std::string extra;
        return row && k == key && !(row >> extra);
    };
    int complete = 0;
    std::size_t witness_size = 0;
    if (!field("n", cp.n) || !field("family", cp.family_id) || !field("fingerprint", cp.fingerprint, true) ||
        !field("nodes", cp.nodes) || !field("best", cp.best) || !field("complete", complete) ||
        !field("witness", witness_size))
        return fail("malformed header fields");
    if (cp.n < 0 || cp.n > 64 || (complete != 0 && complete != 1) || witness_size > triple_count(cp.n))
        return fail("field out of range");
    cp.complete = complete == 1;
    for (std::size_t i = 0; i < witness_size; ++i) {
        int a = 0, b = 0, c = 0;
        if (!std::getline(in, line) || !(std::istringstream(line) >> a >> b >> c))
            return fail("malformed witness edge");
        if (a < 1 || b <= a || c <= b || c > cp.n)
            return fail("witness edge out of range");
        cp.witness.push_back({a - 1, b - 1, c - 1});
    }
    std::string key, bits;
    if (!std::getline(in, line) || !(std::istringstream(line) >> key >> bits) || key != "path")
        return fail("missing path");
    if (bits != "-")
        for (char ch : bits) {
            if (ch != '0' && ch != '1')
                return fail("path must be a 0/1 string");
            cp.path.push_back(ch == '1');
        }
    if (cp.path.size() > triple_count(cp.n))
        return fail("path longer than the triple list");
    if (static_cast<std::size_t>(std::max(cp.best, 0)) != cp.witness.size() && cp.best >= 0)
        return fail("best does not match the witness");
    return cp;
}

namespace {

// Mutable host for the matcher: symmetric pair masks and degrees, n <= 64.
class MaskHost {
  public:
    explicit MaskHost(int n) : n_(n), masks_(static_cast<std::size_t>(n) * n, 0), degrees_(n, 0) {}

    int vertex_count() const { return n_; }
    int degree(Vertex v) const { return degrees_[v]; }
    bool has_edge(Vertex x, Vertex y, Vertex z) const { return (mask(x, y) >> z) & 1U; }
    bool masked() const { return true; }
    std::uint64_t mask(Vertex a, Vertex b) const { return masks_[static_cast<std::size_t>(a) * n_ + b]; }
    void thirds(Vertex a, Vertex b, std::vector<Vertex>& out) const {
        out.clear();
        for (std::uint64_t m = mask(a, b); m; m &= m - 1)
            out.push_back(std::countr_zero(m));
    }

    void toggle(const Triple& t) {
        flip(t.a, t.b, t.c);
        flip(t.a, t.c, t.b);
        flip(t.b, t.c, t.a);
    }
    void add(const Triple& t) {
        toggle(t);
        ++degrees_[t.a], ++degrees_[t.b], ++degrees_[t.c];
    }
    void remove(const Triple& t) {
        toggle(t);
        --degrees_[t.a], --degrees_[t.b], --degrees_[t.c];
    }

  private:
    void flip(Vertex x, Vertex y, Vertex z) {
        masks_[static_cast<std::size_t>(x) * n_ + y] ^= std::uint64_t{1} << z;
        masks_[static_cast<std::size_t>(y) * n_ + x] ^= std::uint64_t{1} << z;
    }

    int n_;
    std::vector<std::uint64_t> masks_;
    std::vector<int> degrees_;
};

class Search {
  public:
    Search(int n, const Family& family, const std::vector<int>& ex_below, const TuranOptions& options)
        : n_(n), family_(family), options_(options), host_(n), ex_below_(ex_below) {
        for (const ThreeGraph& h : family.members) {
            if (h.vertex_count() > n)
                continue;
            for (const Triple& f : h.edges()) {
                const auto seeds = f.vertices();
                plans_.push_back(detail::make_plan(h, seeds));
            }
        }
        for (int i = 0; i < static_cast<int>(triple_count(n)); ++i)
            triples_.push_back(triple_unrank(n, i));
        block_end_.assign(n, 0);
        for (int i = 0; i < static_cast<int>(triples_.size()); ++i)
            block_end_[triples_[i].a] = i + 1;
        // Any family-free graph on n vertices averages to at most n ex(n-1) / (n-3) edges.
        cap_ = static_cast<int>(triples_.size());
        if (n >= 4)
            cap_ = std::min<long>(cap_, static_cast<long>(n) * ex_below_[n - 1] / (n - 3));
    }

    SearchResult run(int seed_best) {
        best_ = seed_best;
        if (options_.resume) {
            const TuranCheckpoint& cp = *options_.resume;
            nodes_ = cp.nodes;
            if (cp.best > best_) {
                best_ = cp.best;
                witness_ = cp.witness;
                found_ = true;
            }
            forced_ = cp.path;
            replaying_ = !forced_.empty();
            if (cp.complete)
                return finish(true);
        }
        dfs(0);
        return finish(!stopped_);
    }

  private:
    bool blocked(const Triple& t) {
        const auto anchor = t.vertices();
        for (const auto& plan : plans_) {
            if (!detail::degree_dominates(host_, plan))
                continue;
            detail::Matcher<MaskHost> m(host_, plan);
            std::array<Vertex, 3> img = anchor;
            do {
                if (m.run(img))
                    return true;
            } while (std::next_permutation(img.begin(), img.end()));
        }
        return false;
    }

    TuranCheckpoint snapshot(bool complete) const {
        TuranCheckpoint cp;
        cp.n = n_;
        cp.family_id = family_.id;
        cp.fingerprint = family_fingerprint(family_);
        cp.best = found_ ? best_ : -1;
        cp.witness = witness_;
        cp.complete = complete;
        if (!complete) {
            cp.path = path_;
            cp.nodes = nodes_ - 1; // the node on the path is expanded again on resume
        } else {
            cp.nodes = nodes_;
        }
        return cp;
    }

    void save(const TuranCheckpoint& cp) const {
        if (!options_.checkpoint_file)
            return;
        const auto tmp = options_.checkpoint_file->string() + ".tmp";
        io::write_file(tmp, serialize_checkpoint(cp));
        std::filesystem::rename(tmp, *options_.checkpoint_file);
    }

    SearchResult finish(bool complete) {
        SearchResult r;
        r.n = n_;
        r.family_id = family_.id;
        r.max_edges = std::max(best_, 0);
        r.witness = ThreeGraph(n_, witness_);
        r.nodes_expanded = complete ? nodes_ : nodes_ - 1;
        r.complete = complete;
        if (complete) {
            if (!options_.resume || !options_.resume->complete)
                save(snapshot(true));
        } else {
            r.checkpoint = stop_point_;
        }
        return r;
    }

    // Returns false when the search must unwind (node limit or cap reached).
    bool dfs(std::size_t i) {
        // Replay ends for good at the checkpointed node; everything after it is new work.
        const bool replay = replaying_ && path_.size() < forced_.size();
        replaying_ = replay;
        if (!replay) {
            ++nodes_;
            if (options_.node_limit && nodes_ > *options_.node_limit) {
                stop_point_ = snapshot(false);
                save(*stop_point_);
                stopped_ = true;
                return false;
            }
            if (options_.checkpoint_interval && nodes_ % options_.checkpoint_interval == 0)
                save(snapshot(false));
        }
        if (i == triples_.size()) {
            if (current_ > best_) {
                best_ = current_;
                witness_ = edges_;
                found_ = true;
            }
            return best_ < cap_;
        }
        const Triple& t = triples_[i];
        if (!replay) {
            const int ub = current_ + (block_end_[t.a] - static_cast<int>(i)) + ex_below_[n_ - t.a - 1];
            if (ub <= best_)
                return true;
        }
        const int forced = replay ? forced_[path_.size()] : -1;
        if (forced != 0) {
            host_.add(t);
            if (forced == 1 || !blocked(t)) {
                edges_.push_back(t);
                ++current_;
                path_.push_back(1);
                const bool go_on = dfs(i + 1);
                path_.pop_back();
                --current_;
                edges_.pop_back();
                if (!go_on) {
                    host_.remove(t);
                    return false;
                }
            }
            host_.remove(t);
        }
        path_.push_back(0);
        const bool go_on = dfs(i + 1);
        path_.pop_back();
        return go_on;
    }

    int n_;
    const Family& family_;
    const TuranOptions& options_;
    MaskHost host_;
    std::vector<int> ex_below_;
    std::vector<detail::PatternPlan> plans_;
    std::vector<Triple> triples_;
    std::vector<int> block_end_;
    int cap_ = 0;

    int best_ = -1;
    bool found_ = false;
    int current_ = 0;
    std::vector<Triple> witness_;
    std::vector<Triple> edges_;
    std::vector<std::uint8_t> path_;
    std::vector<std::uint8_t> forced_;
    bool replaying_ = false;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    std::optional<TuranCheckpoint> stop_point_;
};

} // namespace

SearchResult exact_turan(int n, const Family& family, const TuranOptions& options) {
    if (n < 0)
        throw ArgumentError("n must be non-negative");
    if (n > 64)
        throw SizeError("exact_turan supports at most 64 vertices");
    if (n > kTuranDefaultMaxN && !options.force)
        throw SizeError("n = " + std::to_string(n) + " exceeds the default limit of " +
                        std::to_string(kTuranDefaultMaxN) + "; pass force to run anyway");
    if (family.members.empty())
        throw ArgumentError("family must not be empty");
    for (const ThreeGraph& h : family.members)
        if (h.edge_count() == 0)
            throw ArgumentError("family members must have at least one edge");
    if (options.resume) {
        const TuranCheckpoint& cp = *options.resume;
        if (cp.n != n || cp.fingerprint != family_fingerprint(family))
            throw ArgumentError("checkpoint belongs to a different n or family");
    }

    // Starting just below e(S(m)) keeps the first maximum graph as the witness.
    auto seed_for = [&](int m) {
        const ThreeGraph s = build_S(m);
        return is_family_free(s, family.members) ? static_cast<int>(s.edge_count()) - 1 : -1;
    };
    // ex(m) for m < n, used by the bound.
    std::vector<int> ex_below(std::max(n, 1), 0);
    for (int m = 3; m < n; ++m) {
        const std::vector<int> prefix(ex_below.begin(), ex_below.begin() + m);
        TuranOptions plain;
        plain.force = true;
        Search sub(m, family, prefix, plain);
        ex_below[m] = sub.run(seed_for(m)).max_edges;
    }
    Search search(n, family, ex_below, options);
    return search.run(seed_for(n));
}

bool verify_witness(const SearchResult& result, const Family& family) {
    return result.witness.vertex_count() == result.n &&
           static_cast<int>(result.witness.edge_count()) == result.max_edges &&
           is_family_free(result.witness, family.members);
}

} // namespace simtri

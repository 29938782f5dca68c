#include "simtri/io.hpp"

#include "simtri/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace simtri::io {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        out.push_back({number, line});
    }
    return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
T parse_number(std::string_view field, const std::string& source, std::size_t line) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(source, line, "cannot parse number '" + std::string(field) + "'");
    return value;
}

} // namespace

std::string format_hypergraph(const ThreeGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Triple& t : g.edges())
        out << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
    return out.str();
}

std::vector<ThreeGraph> parse_hypergraph_family(std::string_view text, const std::string& source) {
    const auto lines = content_lines(text);
    std::vector<ThreeGraph> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        const auto header = split_fields(lines[i].text);
        if (header.size() != 2)
            throw ParseError(source, lines[i].number, "expected header 'n m'");
        const int n = parse_number<int>(header[0], source, lines[i].number);
        const auto m = parse_number<std::size_t>(header[1], source, lines[i].number);
        if (n < 0)
            throw ParseError(source, lines[i].number, "negative vertex count");
        const std::size_t header_line = lines[i].number;
        ++i;
        std::vector<Triple> edges;
        edges.reserve(m);
        for (std::size_t e = 0; e < m; ++e, ++i) {
            if (i >= lines.size())
                throw ParseError(source, header_line,
                                 "header announces " + std::to_string(m) + " edges, found " + std::to_string(e));
            const auto f = split_fields(lines[i].text);
            if (f.size() != 3)
                throw ParseError(source, lines[i].number, "expected three vertices 'i j k'");
            std::array<int, 3> v{};
            for (int k = 0; k < 3; ++k) {
                v[k] = parse_number<int>(f[k], source, lines[i].number);
                if (v[k] < 1 || v[k] > n)
                    throw ParseError(source, lines[i].number,
                                     "vertex " + std::to_string(v[k]) + " outside 1.." + std::to_string(n));
            }
            if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2])
                throw ParseError(source, lines[i].number, "edge repeats a vertex");
            edges.push_back(make_triple(v[0] - 1, v[1] - 1, v[2] - 1));
        }
        try {
            out.emplace_back(n, std::move(edges));
        } catch (const ArgumentError& err) {
            throw ParseError(source, header_line, err.what());
        }
    }
    return out;
}

ThreeGraph parse_hypergraph(std::string_view text, const std::string& source) {
    auto graphs = parse_hypergraph_family(text, source);
    if (graphs.size() != 1)
        throw ParseError(source, 0, "expected exactly one hypergraph, found " + std::to_string(graphs.size()));
    return std::move(graphs.front());
}

std::string format_point_set(const PointSet& points) {
    std::string out = "dim " + std::to_string(points.dim()) + "\n";
    char buf[64];
    for (const auto& p : points.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i)
                out += ' ';
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p[i]);
            out.append(buf, end);
        }
        out += '\n';
    }
    return out;
}

PointSet parse_point_set(std::string_view text, const std::string& source) {
    const auto lines = content_lines(text);
    std::size_t i = 0;
    int dim = -1;
    if (!lines.empty()) {
        auto f = split_fields(lines[0].text);
        if (!f.empty() && f[0] == "dim") {
            if (f.size() != 2)
                throw ParseError(source, lines[0].number, "expected 'dim d'");
            dim = parse_number<int>(f[1], source, lines[0].number);
            if (dim < 2)
                throw ParseError(source, lines[0].number, "dimension must be at least 2");
            i = 1;
        }
    }
    std::vector<Coordinates> pts;
    for (; i < lines.size(); ++i) {
        const auto f = split_fields(lines[i].text);
        if (dim < 0)
            dim = static_cast<int>(f.size());
        if (static_cast<int>(f.size()) != dim)
            throw ParseError(source, lines[i].number,
                             "expected " + std::to_string(dim) + " coordinates, found " + std::to_string(f.size()));
        Coordinates c;
        c.reserve(dim);
        for (auto field : f)
            c.push_back(parse_number<double>(field, source, lines[i].number));
        pts.push_back(std::move(c));
    }
    if (dim < 0)
        dim = 2;
    try {
        return PointSet(dim, std::move(pts));
    } catch (const ArgumentError& err) {
        throw ParseError(source, 0, err.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out)
        throw Error("failed writing '" + path + "'");
}

} // namespace simtri::io

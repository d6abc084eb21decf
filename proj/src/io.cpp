#include "dispersion/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "dispersion/errors.hpp"

namespace dispersion {

namespace {

struct Row {
    std::size_t line;
    std::vector<double> values;
};

std::optional<double> parse_number(std::string_view token) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

// Numeric rows with comments and blank lines dropped.
std::vector<Row> read_rows(std::istream& in) {
    std::vector<Row> rows;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        Row row{number, {}};
        std::size_t pos = 0;
        while (pos < line.size()) {
            const auto start = line.find_first_not_of(" \t\r,", pos);
            if (start == std::string::npos) break;
            auto stop = line.find_first_of(" \t\r,", start);
            if (stop == std::string::npos) stop = line.size();
            const std::string_view token(line.data() + start, stop - start);
            const auto v = parse_number(token);
            if (!v) throw ParseError("not a finite number: '" + std::string(token) + "'", number);
            row.values.push_back(*v);
            pos = stop;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<std::size_t> as_vertex(double v) {
    if (v < 0.0 || v != std::floor(v) || v > 1e9) return std::nullopt;
    return static_cast<std::size_t>(v);
}

WeightedCompleteGraph graph_from_matrix(const std::vector<Row>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].values.size() != n)
            throw ParseError("matrix row has " + std::to_string(rows[i].values.size()) + " entries, expected " +
                                 std::to_string(n),
                             rows[i].line);
        std::copy(rows[i].values.begin(), rows[i].values.end(), w.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        w[i * n + i] = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (w[i * n + j] != w[j * n + i])
                throw ParseError("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")",
                                 rows[j].line);
            if (!(w[i * n + j] > 0.0))
                throw ParseError("edge weights must be positive", rows[i].line);
        }
    }
    return WeightedCompleteGraph(n, std::move(w));
}

WeightedCompleteGraph graph_from_edges(const std::vector<Row>& rows) {
    std::map<std::pair<std::size_t, std::size_t>, double> edges;
    std::size_t n = 0;
    for (const Row& row : rows) {
        if (row.values.size() != 3) throw ParseError("edge line must read 'i j w'", row.line);
        const auto i = as_vertex(row.values[0]), j = as_vertex(row.values[1]);
        if (!i || !j) throw ParseError("vertex ids must be non-negative integers", row.line);
        if (*i == *j) throw ParseError("self-loop edge", row.line);
        const double w = row.values[2];
        if (!(w > 0.0)) throw ParseError("edge weights must be positive", row.line);
        const auto key = std::minmax(*i, *j);
        const auto [it, inserted] = edges.emplace(key, w);
        if (!inserted && it->second != w) throw ParseError("conflicting weights for one pair", row.line);
        n = std::max(n, std::max(*i, *j) + 1);
    }
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto it = edges.find({i, j});
            if (it == edges.end())
                throw ParseError("edge list is missing pair (" + std::to_string(i) + ", " + std::to_string(j) + ")", 0);
            w[i * n + j] = w[j * n + i] = it->second;
        }
    return WeightedCompleteGraph(n, std::move(w));
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return in;
}

}  // namespace

PointSet parse_points(std::istream& in) {
    const std::vector<Row> rows = read_rows(in);
    if (rows.empty()) throw ParseError("input contains no points", 0);
    const std::size_t dim = rows.front().values.size();
    std::vector<double> coords;
    coords.reserve(rows.size() * dim);
    for (const Row& row : rows) {
        if (row.values.size() != dim)
            throw ParseError("expected " + std::to_string(dim) + " columns, found " + std::to_string(row.values.size()),
                             row.line);
        coords.insert(coords.end(), row.values.begin(), row.values.end());
    }
    return PointSet(dim, std::move(coords));
}

PointSet read_points_file(const std::string& path) {
    if (path == "-") return parse_points(std::cin);
    std::ifstream in = open_or_throw(path);
    return parse_points(in);
}

void write_points(std::ostream& out, const PointSet& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points.point(i);
        for (std::size_t t = 0; t < p.size(); ++t) out << (t ? " " : "") << format_double(p[t]);
        out << '\n';
    }
}

WeightedCompleteGraph parse_graph(std::istream& in, GraphFormat format) {
    const std::vector<Row> rows = read_rows(in);
    if (rows.empty()) throw ParseError("input contains no graph", 0);
    try {
        switch (format) {
            case GraphFormat::matrix: return graph_from_matrix(rows);
            case GraphFormat::edge_list: return graph_from_edges(rows);
            case GraphFormat::automatic: break;
        }
        const bool square = std::all_of(rows.begin(), rows.end(),
                                        [&](const Row& r) { return r.values.size() == rows.size(); });
        if (!square) return graph_from_edges(rows);
        try {
            return graph_from_matrix(rows);
        } catch (const ParseError& matrix_error) {
            if (rows.size() != 3) throw;
            try {
                return graph_from_edges(rows);
            } catch (const ParseError&) {
                throw matrix_error;
            }
        }
    } catch (const UsageError& e) {
        throw ParseError(e.what(), 0);
    }
}

WeightedCompleteGraph read_graph_file(const std::string& path, GraphFormat format) {
    if (path == "-") return parse_graph(std::cin, format);
    std::ifstream in = open_or_throw(path);
    return parse_graph(in, format);
}

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "auto") return GraphFormat::automatic;
    if (name == "matrix") return GraphFormat::matrix;
    if (name == "edges") return GraphFormat::edge_list;
    throw UsageError("unknown graph format '" + name + "' (expected auto, matrix or edges)");
}

std::string format_double(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace dispersion

#include "siglap/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

#include "siglap/errors.hpp"

namespace siglap {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n)
{
    std::set<Edge> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        if (u >= n_ || v >= n_)
            throw IllFormedInput("edge " + std::to_string(e + 1) + " has an endpoint outside 1.." +
                                 std::to_string(n_));
        if (u == v)
            throw IllFormedInput("edge " + std::to_string(e + 1) + " is a loop");
        if (!seen.insert(std::minmax(u, v)).second)
            throw IllFormedInput("edge " + std::to_string(e + 1) + " repeats an earlier edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_index(std::string_view tok, std::size_t lineno)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        if (!tok.empty() && tok.front() == '-')
            throw ParseError(lineno, "vertex index must be at least 1, got '" + std::string(tok) + "'");
        throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in)
{
    std::optional<std::size_t> header_n;
    std::size_t max_index = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    std::set<Edge> seen;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;

        if (toks.front() == "n") {
            if (toks.size() != 2)
                throw ParseError(lineno, "header must read 'n <count>'");
            if (header_n)
                throw ParseError(lineno, "repeated 'n' header");
            header_n = parse_index(toks[1], lineno);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError(lineno, "expected two vertex indices, got " + std::to_string(toks.size()) +
                                         " tokens");

        const std::size_t u = parse_index(toks[0], lineno);
        const std::size_t v = parse_index(toks[1], lineno);
        if (u < 1 || v < 1)
            throw ParseError(lineno, "vertex index must be at least 1");
        if (u == v)
            throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u - 1, v - 1);
        edge_lines.push_back(lineno);
    }

    std::size_t n = header_n.value_or(max_index);
    if (n == 0)
        throw ParseError(0, "empty graph");
    if (header_n) {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first >= n || edges[e].second >= n)
                throw ParseError(edge_lines[e], "vertex index exceeds declared n = " + std::to_string(n));
    }
    return Graph(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

bool is_connected(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return false;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    Bipartition b{std::vector<int>(n, 0)};
    for (std::size_t s = 0; s < n; ++s) {
        if (b.side[s] != 0)
            continue;
        b.side[s] = 1;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto w : g.neighbors(v)) {
                if (b.side[w] == 0) {
                    b.side[w] = -b.side[v];
                    q.push(w);
                } else if (b.side[w] == b.side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return b;
}

RatVector degrees(const Graph& g)
{
    RatVector d(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        d[v] = static_cast<long>(g.degree(v));
    return d;
}

std::optional<std::size_t> odd_walk_length(const Graph& g, std::size_t u)
{
    const std::size_t n = g.vertex_count();
    if (u >= n)
        throw IllFormedInput("vertex " + std::to_string(u + 1) + " out of range");

    // State 2*v + parity.
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(2 * n, unseen);
    std::queue<std::size_t> q;
    dist[2 * u] = 0;
    q.push(2 * u);
    while (!q.empty()) {
        auto s = q.front();
        q.pop();
        if (s == 2 * u + 1)
            return dist[s];
        const std::size_t v = s / 2, parity = s % 2;
        for (auto w : g.neighbors(v)) {
            auto t = 2 * w + (1 - parity);
            if (dist[t] == unseen) {
                dist[t] = dist[s] + 1;
                q.push(t);
            }
        }
    }
    return std::nullopt;
}

}  // namespace siglap

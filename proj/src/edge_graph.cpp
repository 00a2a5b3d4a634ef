#include "edgesums/edge_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace edgesums {

EdgeGraph EdgeGraph::from_pairs(std::uint32_t vertex_count, std::vector<IndexPair> raw) {
    EdgeGraph g;
    g.vertex_count = vertex_count;
    g.edges.reserve(raw.size());
    for (IndexPair e : raw) {
        if (e.first == e.second) continue;  // loops carry no edge statistic
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first >= vertex_count || e.second >= vertex_count) {
            throw std::invalid_argument("EdgeGraph: index out of range");
        }
        g.edges.push_back(e);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

void EdgeGraph::validate() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& [a, b] = edges[i];
        if (a >= b) throw std::invalid_argument("EdgeGraph: edge not oriented (i < j)");
        if (b >= vertex_count) throw std::invalid_argument("EdgeGraph: index out of range");
        if (i > 0 && !(edges[i - 1] < edges[i])) {
            throw std::invalid_argument("EdgeGraph: edges not sorted/unique");
        }
    }
    if (ordered_pairs) {
        std::vector<IndexPair> projected;
        projected.reserve(ordered_pairs->size());
        for (IndexPair p : *ordered_pairs) {
            if (p.first >= vertex_count || p.second >= vertex_count) {
                throw std::invalid_argument("EdgeGraph: ordered pair out of range");
            }
            if (p.first == p.second) continue;
            if (p.first > p.second) std::swap(p.first, p.second);
            projected.push_back(p);
        }
        std::sort(projected.begin(), projected.end());
        projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
        if (projected != edges) {
            throw std::invalid_argument(
                "EdgeGraph: ordered pairs do not project onto the edge list");
        }
    }
}

std::vector<std::uint64_t> EdgeGraph::degrees() const {
    std::vector<std::uint64_t> deg(vertex_count, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

void EdgeGraph::write(std::ostream& out) const {
    out << vertex_count << ' ' << edges.size() << '\n';
    for (const auto& [a, b] : edges) {
        out << a << ' ' << b << '\n';
    }
}

EdgeGraph EdgeGraph::read(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("EdgeGraph::read: empty input");
    std::istringstream header(line);
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    if (!(header >> n >> m)) throw std::runtime_error("EdgeGraph::read: bad header");
    std::vector<IndexPair> raw;
    raw.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw std::runtime_error("EdgeGraph::read: truncated");
        std::istringstream row(line);
        std::uint32_t a = 0, b = 0;
        if (!(row >> a >> b)) throw std::runtime_error("EdgeGraph::read: bad edge line");
        raw.emplace_back(a, b);
    }
    EdgeGraph g = from_pairs(n, std::move(raw));
    if (g.edges.size() != m) throw std::runtime_error("EdgeGraph::read: loops or duplicates");
    return g;
}

EdgeGraph complete_graph(std::uint32_t n) {
    EdgeGraph g;
    g.vertex_count = n;
    g.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            g.edges.emplace_back(i, j);
        }
    }
    return g;
}

}  // namespace edgesums

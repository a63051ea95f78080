#ifndef DRGSPEC_GRAPH_HPP
#define DRGSPEC_GRAPH_HPP

#include "drgspec/errors.hpp"
#include "drgspec/sym_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drgspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite, simple, connected, undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v), sorted and deduplicated, so two
/// graphs built from the same edge set compare equal regardless of input
/// order. Construction throws GraphError for loops or out-of-range endpoints
/// and DisconnectedError when the graph has more than one component.
class Graph {
public:
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n)
    {
        if (n == 0)
            throw GraphError("graph must have at least one vertex");
        for (auto& [u, v] : edges) {
            if (u >= n || v >= n)
                throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") has an endpoint outside [0, " + std::to_string(n) + ")");
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);

        neighbors_.resize(n);
        for (const auto& [u, v] : edges_) {
            neighbors_[u].push_back(v);
            neighbors_[v].push_back(u);
        }
        for (auto& nb : neighbors_)
            std::sort(nb.begin(), nb.end());

        check_connected();
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex u) const { return neighbors_[u]; }
    std::size_t degree(Vertex u) const { return neighbors_[u].size(); }

    bool adjacent(Vertex u, Vertex v) const
    {
        return std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v);
    }

    /// Common degree if every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const
    {
        const std::size_t k = degree(0);
        for (Vertex u = 1; u < n_; ++u)
            if (degree(u) != k)
                return std::nullopt;
        return k;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    void check_connected() const
    {
        std::vector<bool> seen(n_, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors_[u])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n_) {
            const auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
            throw DisconnectedError("graph is disconnected: vertex " + std::to_string(missing) +
                                    " is unreachable from vertex 0 (" + std::to_string(reached) + " of " +
                                    std::to_string(n_) + " vertices reached)");
        }
    }

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> neighbors_;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<std::size_t> parse_index(std::string_view tok)
{
    std::size_t value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return value;
}

} // namespace detail

/// Parses the edge-list text format.
///
///     # comment
///     n 4        (optional; must precede every edge line)
///     0 1
///     1 2        # trailing comments are allowed
///
/// Without an `n` line the order is max index + 1. Duplicate edges collapse.
/// Throws ParseError for malformed lines, loops, out-of-range endpoints and
/// empty input; DisconnectedError for disconnected graphs.
inline Graph parse_edge_list(std::string_view text)
{
    std::optional<std::size_t> declared;
    std::vector<Edge> edges;
    std::size_t max_index = 0;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;

        const auto where = "line " + std::to_string(line_no) + ": ";
        const auto tokens = detail::split_ws(line);
        if (tokens.size() != 2)
            throw ParseError(where + "expected two fields, got \"" + std::string(line) + "\"");

        if (tokens[0] == "n") {
            if (declared)
                throw ParseError(where + "duplicate vertex-count line");
            if (!edges.empty())
                throw ParseError(where + "vertex-count line must precede the edges");
            const auto count = detail::parse_index(tokens[1]);
            if (!count || *count == 0)
                throw ParseError(where + "vertex count must be a positive integer");
            declared = count;
            continue;
        }

        const auto u = detail::parse_index(tokens[0]);
        const auto v = detail::parse_index(tokens[1]);
        if (!u || !v)
            throw ParseError(where + "vertex labels must be nonnegative integers, got \"" + std::string(line) + "\"");
        if (*u == *v)
            throw ParseError(where + "self-loop at vertex " + std::to_string(*u));
        if (declared && (*u >= *declared || *v >= *declared))
            throw ParseError(where + "vertex index out of range for n = " + std::to_string(*declared));
        max_index = std::max({max_index, *u, *v});
        edges.emplace_back(*u, *v);
    }

    if (!declared && edges.empty())
        throw ParseError("empty edge list");
    const std::size_t n = declared ? *declared : max_index + 1;
    return Graph(n, std::move(edges));
}

/// Canonical text form accepted by parse_edge_list. The `n` line is written
/// only for the edgeless graph K1, where it cannot be inferred.
inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    if (g.size() == 0)
        out << "n " << g.order() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

inline SymMatrix adjacency_matrix(const Graph& g)
{
    SymMatrix a(g.order());
    for (const auto& [u, v] : g.edges())
        a.set(u, v, 1.0);
    return a;
}

/// L = K - A with K the diagonal degree matrix.
inline SymMatrix laplacian_matrix(const Graph& g)
{
    SymMatrix l(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        l.set(u, u, static_cast<double>(g.degree(u)));
    for (const auto& [u, v] : g.edges())
        l.set(u, v, -1.0);
    return l;
}

/// All-pairs hop distances plus the distance-layer sizes k_i(u).
class DistanceData {
public:
    explicit DistanceData(const Graph& g) : n_(g.order()), dist_(n_ * n_, kUnset)
    {
        std::deque<Vertex> queue;
        for (Vertex s = 0; s < n_; ++s) {
            std::size_t* row = &dist_[s * n_];
            row[s] = 0;
            queue.assign(1, s);
            while (!queue.empty()) {
                const Vertex u = queue.front();
                queue.pop_front();
                for (Vertex w : g.neighbors(u))
                    if (row[w] == kUnset) {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
            }
        }
        diameter_ = *std::max_element(dist_.begin(), dist_.end());

        counts_.assign(n_ * (diameter_ + 1), 0);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = 0; v < n_; ++v)
                ++counts_[u * (diameter_ + 1) + dist_[u * n_ + v]];
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t diameter() const noexcept { return diameter_; }
    std::size_t distance(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }

    /// k_i(u) = |Γ_i(u)|; zero for i beyond the diameter.
    std::size_t layer_size(std::size_t i, Vertex u) const
    {
        return i > diameter_ ? 0 : counts_[u * (diameter_ + 1) + i];
    }

    /// k_i(u) for every vertex u.
    std::vector<std::size_t> layer_sizes(std::size_t i) const
    {
        std::vector<std::size_t> out(n_);
        for (Vertex u = 0; u < n_; ++u)
            out[u] = layer_size(i, u);
        return out;
    }

    /// A_i as a 0/1 matrix; the zero matrix for i > D.
    SymMatrix distance_matrix(std::size_t i) const
    {
        SymMatrix a(n_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u; v < n_; ++v)
                if (dist_[u * n_ + v] == i)
                    a.set(u, v, 1.0);
        return a;
    }

private:
    static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

    std::size_t n_;
    std::vector<std::size_t> dist_;
    std::size_t diameter_ = 0;
    std::vector<std::size_t> counts_;
};

inline DistanceData distance_data(const Graph& g) { return DistanceData(g); }

struct DegreeStats {
    double mean_degree;        // k̄
    double mean_square_degree; // mean of deg(u)^2
};

inline DegreeStats degree_stats(const Graph& g)
{
    double s1 = 0.0;
    double s2 = 0.0;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto k = static_cast<double>(g.degree(u));
        s1 += k;
        s2 += k * k;
    }
    const auto n = static_cast<double>(g.order());
    return {s1 / n, s2 / n};
}

} // namespace drgspec

#endif // DRGSPEC_GRAPH_HPP

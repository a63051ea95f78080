#ifndef DRGSPEC_GENERATORS_HPP
#define DRGSPEC_GENERATORS_HPP

#include "drgspec/errors.hpp"
#include "drgspec/graph.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace drgspec {

enum class Family { path, cycle, complete, complete_bipartite, star, petersen, hypercube };

namespace detail {

inline void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw ParseError(msg);
}

inline void require_arity(std::string_view name, const std::vector<std::size_t>& params, std::size_t arity)
{
    require(params.size() == arity, std::string(name) + " takes " + std::to_string(arity) + " parameter(s), got " +
                                        std::to_string(params.size()));
}

} // namespace detail

/// Path P_k on 0..k-1, edges {i, i+1}. Requires k >= 1.
inline Graph path_graph(std::size_t k)
{
    detail::require(k >= 1, "path needs k >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i)
        e.emplace_back(i, i + 1);
    return Graph(k, std::move(e));
}

/// Cycle C_k: path edges plus {0, k-1}. Requires k >= 3.
inline Graph cycle_graph(std::size_t k)
{
    detail::require(k >= 3, "cycle needs k >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    return Graph(k, std::move(e));
}

/// K_k, every pair adjacent. Requires k >= 1.
inline Graph complete_graph(std::size_t k)
{
    detail::require(k >= 1, "complete needs k >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j)
            e.emplace_back(i, j);
    return Graph(k, std::move(e));
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}. Requires a, b >= 1.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    detail::require(a >= 1 && b >= 1, "complete_bipartite needs both parts >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

/// Star K_{1,k}: center 0, leaves 1..k. Requires k >= 1.
inline Graph star_graph(std::size_t k)
{
    detail::require(k >= 1, "star needs k >= 1");
    return complete_bipartite_graph(1, k);
}

/// Petersen graph as the Kneser graph K(5,2). Vertex i is the i-th 2-subset
/// of {0..4} in lexicographic order ({0,1}, {0,2}, ..., {3,4}); two vertices
/// are adjacent iff their subsets are disjoint.
inline Graph petersen_graph()
{
    std::vector<std::array<int, 2>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            subsets.push_back({a, b});
    std::vector<Edge> e;
    for (Vertex i = 0; i < subsets.size(); ++i)
        for (Vertex j = i + 1; j < subsets.size(); ++j) {
            const auto& s = subsets[i];
            const auto& t = subsets[j];
            if (s[0] != t[0] && s[0] != t[1] && s[1] != t[0] && s[1] != t[1])
                e.emplace_back(i, j);
        }
    return Graph(subsets.size(), std::move(e));
}

/// Hypercube Q_q on 0..2^q-1; adjacent iff labels differ in exactly one bit.
/// Requires 1 <= q <= 20.
inline Graph hypercube_graph(std::size_t q)
{
    detail::require(q >= 1 && q <= 20, "hypercube needs 1 <= q <= 20");
    const std::size_t n = std::size_t{1} << q;
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (std::size_t bit = 0; bit < q; ++bit) {
            const Vertex v = u ^ (std::size_t{1} << bit);
            if (u < v)
                e.emplace_back(u, v);
        }
    return Graph(n, std::move(e));
}

inline Graph generate(Family family, const std::vector<std::size_t>& params)
{
    switch (family) {
    case Family::path:
        detail::require_arity("path", params, 1);
        return path_graph(params[0]);
    case Family::cycle:
        detail::require_arity("cycle", params, 1);
        return cycle_graph(params[0]);
    case Family::complete:
        detail::require_arity("complete", params, 1);
        return complete_graph(params[0]);
    case Family::complete_bipartite:
        detail::require_arity("complete_bipartite", params, 2);
        return complete_bipartite_graph(params[0], params[1]);
    case Family::star:
        detail::require_arity("star", params, 1);
        return star_graph(params[0]);
    case Family::petersen:
        detail::require_arity("petersen", params, 0);
        return petersen_graph();
    case Family::hypercube:
        detail::require_arity("hypercube", params, 1);
        return hypercube_graph(params[0]);
    }
    throw ParseError("unknown family");
}

inline Family parse_family(std::string_view name)
{
    if (name == "path")
        return Family::path;
    if (name == "cycle")
        return Family::cycle;
    if (name == "complete")
        return Family::complete;
    if (name == "complete_bipartite")
        return Family::complete_bipartite;
    if (name == "star")
        return Family::star;
    if (name == "petersen")
        return Family::petersen;
    if (name == "hypercube")
        return Family::hypercube;
    throw ParseError("unknown graph family \"" + std::string(name) + "\"");
}

/// Parses "family" or "family:p1,p2,..." (e.g. "path:4",
/// "complete_bipartite:2,3", "petersen") and builds the graph.
inline Graph generate(std::string_view spec)
{
    const auto colon = spec.find(':');
    const auto family = parse_family(spec.substr(0, colon));
    std::vector<std::size_t> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const auto tok = rest.substr(0, comma);
            const auto value = detail::parse_index(tok);
            if (!value)
                throw ParseError("bad generator parameter \"" + std::string(tok) + "\" in \"" + std::string(spec) + "\"");
            params.push_back(*value);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }
    return generate(family, params);
}

} // namespace drgspec

#endif // DRGSPEC_GENERATORS_HPP

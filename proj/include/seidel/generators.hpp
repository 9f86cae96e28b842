#ifndef SEIDEL_GENERATORS_HPP
#define SEIDEL_GENERATORS_HPP

// Named graph families and the fixture graphs used throughout the tests.
//
// Index conventions for fixtures with named vertices:
//   fig1         v=0 x=1 y=2 z=3; edges vx vy xy yz
//   tadpole(3,4) triangle {0,1,2}, tail 2-3-4-5; u=1 v=3
//   fig3_g1      path 0-1-2-3-4, x=2
//   fig3_g2      path 1-0-2 plus isolated 3 and 4, x=0
//   cube_q3      vertex i adjacent to i^1, i^2, i^4
//   prism_c3p2   triangles {0,1,2} and {3,4,5}, rungs i -- i+3
//   complete_bipartite(m,n)  parts {0..m-1} and {m..m+n-1}
//   star(k)      centre 0, leaves 1..k

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace detail

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) { return complement(Graph(n)); }

/// Path with the given number of edges (order length + 1).
inline Graph path_graph(int length)
{
    detail::require(length >= 0, "path: negative length");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < length; ++i)
        e.emplace_back(i, i + 1);
    return make_graph(length + 1, e);
}

inline Graph cycle_graph(int n)
{
    detail::require(n >= 3, "cycle: order must be at least 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

/// K_{1,leaves}.
inline Graph star_graph(int leaves)
{
    detail::require(leaves >= 0, "star: negative leaf count");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return make_graph(leaves + 1, e);
}

inline Graph complete_bipartite(int m, int n)
{
    detail::require(m >= 0 && n >= 0 && m + n >= 1, "complete_bipartite: bad part sizes");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            e.emplace_back(i, m + j);
    return make_graph(m + n, e);
}

inline Graph cube_q3()
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 8; ++i)
        for (int b : {1, 2, 4})
            if (i < (i ^ b))
                e.emplace_back(i, i ^ b);
    return make_graph(8, e);
}

inline Graph prism_c3p2()
{
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// T_{cycle,path}: a cycle on 0..cycle-1 and a path on `path` vertices
/// sharing vertex cycle-1, so the tail adds path-1 vertices.
inline Graph tadpole(int cycle, int path)
{
    detail::require(cycle >= 3 && path >= 1, "tadpole: need cycle >= 3 and path >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < cycle; ++i)
        e.emplace_back(i, (i + 1) % cycle);
    int prev = cycle - 1;
    for (int t = 0; t < path - 1; ++t) {
        e.emplace_back(prev, cycle + t);
        prev = cycle + t;
    }
    return make_graph(cycle + path - 1, e);
}

namespace fixture {

inline constexpr int fig1_v = 0, fig1_x = 1, fig1_y = 2, fig1_z = 3;
inline constexpr int tadpole_u = 1, tadpole_v = 3;
inline constexpr int fig3_g1_x = 2, fig3_g2_x = 0;

} // namespace fixture

inline Graph fig1() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

inline Graph fig3_g1() { return path_graph(4); }

inline Graph fig3_g2() { return make_graph(5, {{0, 1}, {0, 2}}); }

/// A on 0..m-1, B on m..m+n-1, each a clique or independent set, joined by
/// exactly mn/2 cross edges. With n even, a_i is joined to
/// b_{(i*n/2 + j) mod n} for j < n/2; with n odd the same rule runs from B
/// into A.
inline Graph half_join(int m, int n, bool a_complete, bool b_complete)
{
    detail::require(m >= 1 && n >= 1, "half_join: part sizes must be positive");
    detail::require(m % 2 == 0 || n % 2 == 0, "half_join: m and n are both odd");
    std::vector<std::pair<int, int>> e;
    if (a_complete)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                e.emplace_back(i, j);
    if (b_complete)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e.emplace_back(m + i, m + j);
    if (n % 2 == 0) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n / 2; ++j)
                e.emplace_back(i, m + (i * (n / 2) + j) % n);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m / 2; ++j)
                e.emplace_back(m + i, (i * (m / 2) + j) % m);
    }
    return make_graph(m + n, e);
}

inline VertexSet half_join_part_a(int m, int n) { return {m + n, full_mask(m)}; }
inline VertexSet half_join_part_b(int m, int n) { return {m + n, full_mask(m + n) & ~full_mask(m)}; }

/// Edge xy (x=0, y=1) plus a clique on 2..p+1; x is joined to the first
/// edges_to_x clique vertices and y to the remaining ones.
inline Graph path_plus_clique(int p, int edges_to_x)
{
    detail::require(p >= 0 && p <= kMaxOrder - 2, "path_plus_clique: clique size out of range");
    detail::require(edges_to_x >= 0 && edges_to_x <= p, "path_plus_clique: split out of range");
    std::vector<std::pair<int, int>> e{{0, 1}};
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            e.emplace_back(2 + i, 2 + j);
    for (int i = 0; i < p; ++i)
        e.emplace_back(i < edges_to_x ? 0 : 1, 2 + i);
    return make_graph(p + 2, e);
}

inline VertexSet path_plus_clique_part(int p) { return {p + 2, full_mask(p + 2) & ~Mask{3}}; }

/// Builds a family by name from integer parameters; flags a_complete and
/// b_complete only matter for half_join.
inline Graph gen(const std::string& family, const std::vector<int>& params,
                 bool a_complete = false, bool b_complete = false)
{
    auto arity = [&](std::size_t k) {
        detail::require(params.size() == k, family + ": expected " + std::to_string(k) +
                                                " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "complete") {
        arity(1);
        return complete_graph(params[0]);
    }
    if (family == "empty") {
        arity(1);
        return empty_graph(params[0]);
    }
    if (family == "path") {
        arity(1);
        return path_graph(params[0]);
    }
    if (family == "cycle") {
        arity(1);
        return cycle_graph(params[0]);
    }
    if (family == "star") {
        arity(1);
        return star_graph(params[0]);
    }
    if (family == "complete_bipartite") {
        arity(2);
        return complete_bipartite(params[0], params[1]);
    }
    if (family == "cube_q3") {
        arity(0);
        return cube_q3();
    }
    if (family == "prism_c3p2") {
        arity(0);
        return prism_c3p2();
    }
    if (family == "tadpole") {
        arity(2);
        return tadpole(params[0], params[1]);
    }
    if (family == "fig1") {
        arity(0);
        return fig1();
    }
    if (family == "fig3_g1") {
        arity(0);
        return fig3_g1();
    }
    if (family == "fig3_g2") {
        arity(0);
        return fig3_g2();
    }
    if (family == "half_join") {
        arity(2);
        return half_join(params[0], params[1], a_complete, b_complete);
    }
    if (family == "path_plus_clique") {
        arity(2);
        return path_plus_clique(params[0], params[1]);
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

inline const std::vector<std::string>& family_names()
{
    static const std::vector<std::string> names{
        "complete", "empty", "path", "cycle", "star", "complete_bipartite", "cube_q3",
        "prism_c3p2", "tadpole", "fig1", "fig3_g1", "fig3_g2", "half_join", "path_plus_clique"};
    return names;
}

} // namespace seidel

#endif // SEIDEL_GENERATORS_HPP

#ifndef SEIDEL_ISS_HPP
#define SEIDEL_ISS_HPP

// Identity Seidel switches: vertex subsets S with S(G) isomorphic to G.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/iso.hpp"
#include "seidel/switching.hpp"

namespace seidel {

inline constexpr int kMaxFamilyOrder = 10;

inline bool is_iss(const Graph& g, const VertexSet& s)
{
    check_same_order(g, s);
    return is_isomorphic(switch_set(g, s), g);
}

/// Three members S, T of a family whose symmetric difference is not a member.
struct ClosureWitness {
    VertexSet s;
    VertexSet t;
    VertexSet sum;
};

struct IssFamily {
    Graph graph;
    std::vector<VertexSet> members; // sorted by mask
    bool closed_under_delta = true;
    std::optional<ClosureWitness> witness;

    std::size_t size() const noexcept { return members.size(); }

    bool contains(const VertexSet& s) const
    {
        return std::binary_search(members.begin(), members.end(), s);
    }
};

/// All identity switches of g. Only subsets avoiding vertex 0 are switched;
/// each hit S also contributes V \ S, which has the same switch.
inline IssFamily iss_family(const Graph& g)
{
    const int n = g.order();
    check_bound("iss_family", n, kMaxFamilyOrder);
    const CanonicalForm self = canonical_form(g);
    const Mask all = g.vertex_mask();
    const Mask half = Mask{1} << (n - 1);

    IssFamily family{g, {}, true, std::nullopt};
    std::vector<char> member(std::size_t{1} << n, 0);
    for (Mask k = 0; k < half; ++k) {
        const Mask s = k << 1;
        if (canonical_form(switch_set(g, VertexSet(n, s))) == self) {
            member[s] = 1;
            member[s ^ all] = 1;
        }
    }
    for (Mask s = 0; s <= all; ++s)
        if (member[s])
            family.members.emplace_back(n, s);

    for (const auto& a : family.members) {
        for (const auto& b : family.members) {
            const Mask d = a.mask() ^ b.mask();
            if (!member[d]) {
                family.closed_under_delta = false;
                family.witness = ClosureWitness{a, b, VertexSet(n, d)};
                return family;
            }
        }
    }
    return family;
}

inline VertexSet vertex_iss_set(const Graph& g)
{
    const CanonicalForm self = canonical_form(g);
    Mask out = 0;
    for (int v = 0; v < g.order(); ++v)
        if (canonical_form(switch_vertex(g, v)) == self)
            out |= bit(v);
    return {g.order(), out};
}

inline bool all_vertices_iss(const Graph& g)
{
    return vertex_iss_set(g).mask() == g.vertex_mask();
}

enum class LemmaVerdict { holds, violated, vacuous };

/// Minimum/maximum-degree adjacency condition for graphs whose every vertex
/// is a vertex-ISS. witness holds a non-adjacent (min-degree, max-degree)
/// pair when violated.
struct DegreeExtremesCheck {
    LemmaVerdict verdict = LemmaVerdict::vacuous;
    std::optional<std::pair<int, int>> witness;
};

inline DegreeExtremesCheck check_delta_Delta(const Graph& g)
{
    if (!all_vertices_iss(g))
        return {};
    const auto deg = degrees(g);
    const int lo = *std::min_element(deg.begin(), deg.end());
    const int hi = *std::max_element(deg.begin(), deg.end());
    for (int x = 0; x < g.order(); ++x) {
        if (deg[static_cast<std::size_t>(x)] != lo)
            continue;
        for (int y = 0; y < g.order(); ++y)
            if (y != x && deg[static_cast<std::size_t>(y)] == hi && !g.adjacent(x, y))
                return {LemmaVerdict::violated, std::pair{x, y}};
    }
    return {LemmaVerdict::holds, std::nullopt};
}

inline void check_edge(const Graph& g, int x, int y)
{
    check_vertex(g, x);
    check_vertex(g, y);
    if (!g.adjacent(x, y))
        throw std::invalid_argument("{" + std::to_string(x) + "," + std::to_string(y) +
                                    "} is not an edge");
}

inline VertexSet edge_set(const Graph& g, int x, int y)
{
    return {g.order(), bit(x) | bit(y)};
}

inline bool edge_iss_direct(const Graph& g, int x, int y)
{
    check_edge(g, x, y);
    return is_iss(g, edge_set(g, x, y));
}

/// Both routes to an edge-ISS verdict for the edge xy: the direct
/// isomorphism test and the degree-sum / core-automorphism conditions.
struct EdgeIssReport {
    int x = 0;
    int y = 0;
    bool direct = false;
    bool condition_i = false;  // deg x + deg y == n
    bool condition_ii = false; // some automorphism of the core swaps the neighbourhood patterns
    bool theorem_verdict = false;
    bool agree = false;
    /// Witness for condition (ii), acting on core indices.
    std::optional<Permutation> core_automorphism;
};

/// The core of the edge xy: the subgraph induced by V \ {x, y}.
inline InducedSubgraph edge_core(const Graph& g, int x, int y)
{
    return induced_subgraph(g, edge_set(g, x, y).complement());
}

/// Whether some automorphism of the core maps N(x) \ {y} onto
/// V(core) \ N(y). Precondition: order >= 3.
inline std::optional<Permutation> find_core_automorphism(const Graph& g, int x, int y)
{
    const auto core = edge_core(g, x, y);
    auto to_core = [&](Mask m) {
        Mask out = 0;
        for (; m; m &= m - 1)
            out |= bit(core.old_to_new[static_cast<std::size_t>(std::countr_zero(m))]);
        return out;
    };
    const Mask core_all = g.vertex_mask() & ~bit(x) & ~bit(y);
    const Mask from = to_core(g.row(x) & ~bit(y));
    const Mask to = to_core(core_all & ~g.row(y));
    std::optional<Permutation> found;
    for_each_automorphism(core.graph, [&](const Permutation& p) {
        if (p.apply(from) == to) {
            found = p;
            return false;
        }
        return true;
    });
    return found;
}

inline EdgeIssReport edge_iss_theorem(const Graph& g, int x, int y)
{
    check_edge(g, x, y);
    EdgeIssReport r;
    r.x = x;
    r.y = y;
    r.direct = is_iss(g, edge_set(g, x, y));
    r.condition_i = popcount(g.row(x)) + popcount(g.row(y)) == g.order();
    if (g.order() == 2) {
        // Empty core: the empty map is the required automorphism.
        r.condition_ii = true;
    } else {
        r.core_automorphism = find_core_automorphism(g, x, y);
        r.condition_ii = r.core_automorphism.has_value();
    }
    r.theorem_verdict = r.condition_i && r.condition_ii;
    r.agree = r.direct == r.theorem_verdict;
    return r;
}

/// Whether N(x) \ {y} and N(y) \ {x} partition V \ {x, y}.
/// Precondition: xy is an edge-ISS.
inline bool check_neighborhood_decomposition(const Graph& g, int x, int y)
{
    if (!edge_iss_direct(g, x, y))
        throw std::invalid_argument("check_neighborhood_decomposition: edge is not an edge-ISS");
    const Mask core_all = g.vertex_mask() & ~bit(x) & ~bit(y);
    const Mask nx = g.row(x) & ~bit(y);
    const Mask ny = g.row(y) & ~bit(x);
    return (nx & ny) == 0 && (nx | ny) == core_all;
}

struct EdgeRemovalCheck {
    bool edge_iss = false;        // {x,y} is an ISS of g
    bool iss_without_edge = false; // {x,y} is an ISS of g - xy

    bool agree() const noexcept { return edge_iss == iss_without_edge; }
};

inline EdgeRemovalCheck check_g_minus_e_remark(const Graph& g, int x, int y)
{
    check_edge(g, x, y);
    const VertexSet s = edge_set(g, x, y);
    return {is_iss(g, s), is_iss(remove_edge(g, x, y), s)};
}

/// g with the core V \ {x, y} complemented; adjacencies at x and y kept.
inline Graph complement_core(const Graph& g, int x, int y)
{
    check_vertex(g, x);
    check_vertex(g, y);
    const Mask core = g.vertex_mask() & ~bit(x) & ~bit(y);
    Graph::Rows rows = g.rows();
    for (Mask m = core; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        rows[static_cast<std::size_t>(v)] ^= core & ~bit(v);
    }
    return Graph(Graph::Unchecked{}, g.order(), rows);
}

/// Whether xy stays an edge-ISS after complementing its core.
/// Precondition: xy is an edge-ISS of g.
inline bool check_core_complement_corollary(const Graph& g, int x, int y)
{
    if (!edge_iss_direct(g, x, y))
        throw std::invalid_argument("check_core_complement_corollary: edge is not an edge-ISS");
    return edge_iss_direct(complement_core(g, x, y), x, y);
}

} // namespace seidel

#endif // SEIDEL_ISS_HPP

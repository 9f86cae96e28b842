#ifndef SEIDEL_SWITCHING_HPP
#define SEIDEL_SWITCHING_HPP

// Seidel switching by a vertex subset, and executable forms of the
// switching identities.

#include <optional>
#include <span>
#include <utility>

#include "seidel/graph.hpp"

namespace seidel {

/// Toggles every adjacency between s and its complement. Pairs inside s and
/// inside V \ s are untouched, so s = {} and s = V return g unchanged.
inline Graph switch_set(const Graph& g, const VertexSet& s)
{
    check_same_order(g, s);
    const Mask in = s.mask();
    const Mask out = ~in & g.vertex_mask();
    Graph::Rows rows = g.rows();
    for (int v = 0; v < g.order(); ++v)
        rows[static_cast<std::size_t>(v)] ^= (in >> v) & 1U ? out : in;
    return Graph(Graph::Unchecked{}, g.order(), rows);
}

inline Graph switch_vertex(const Graph& g, int v)
{
    check_vertex(g, v);
    return switch_set(g, VertexSet(g.order(), bit(v)));
}

/// Applies single-vertex switches left to right; only the parity of each
/// vertex's multiplicity matters.
inline Graph switch_sequence(const Graph& g, std::span<const int> vs)
{
    Mask parity = 0;
    for (int v : vs) {
        check_vertex(g, v);
        parity ^= bit(v);
    }
    return switch_set(g, VertexSet(g.order(), parity));
}

/// Two graphs that should have been equal.
struct GraphMismatch {
    Graph lhs;
    Graph rhs;
};

/// Outcome of an identity check: holds() is true when both sides agree;
/// otherwise mismatch carries the two sides.
struct IdentityCheck {
    std::optional<GraphMismatch> mismatch;

    bool holds() const noexcept { return !mismatch; }
    explicit operator bool() const noexcept { return holds(); }
};

inline IdentityCheck compare_graphs(Graph lhs, Graph rhs)
{
    if (lhs == rhs)
        return {};
    return {GraphMismatch{std::move(lhs), std::move(rhs)}};
}

/// s(t(g)) against (s xor t)(g).
inline IdentityCheck check_symmetric_difference(const Graph& g, const VertexSet& s,
                                                const VertexSet& t)
{
    return compare_graphs(switch_set(switch_set(g, t), s),
                          switch_set(g, s.symmetric_difference(t)));
}

/// s(g) against (V \ s)(g).
inline IdentityCheck check_complement_switch(const Graph& g, const VertexSet& s)
{
    return compare_graphs(switch_set(g, s), switch_set(g, s.complement()));
}

/// complement(s(g)) against s(complement(g)).
inline IdentityCheck check_complement_commutes(const Graph& g, const VertexSet& s)
{
    return compare_graphs(complement(switch_set(g, s)), switch_set(complement(g), s));
}

/// V(g) as a switch leaves g fixed.
inline IdentityCheck check_full_switch(const Graph& g)
{
    return compare_graphs(switch_set(g, VertexSet::all(g.order())), g);
}

} // namespace seidel

#endif // SEIDEL_SWITCHING_HPP

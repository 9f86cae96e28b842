#ifndef SEIDEL_ISO_HPP
#define SEIDEL_ISO_HPP

// Canonical labeling, isomorphism and automorphisms for small graphs.
//
// The canonical form is found by individualization-refinement: the unit
// partition is refined to an equitable ordered partition, then every
// discrete refinement reachable by individualizing vertices of the first
// smallest non-singleton cell is visited, and the leaf whose relabeled
// upper triangle is lexicographically smallest wins. Subtrees that are
// images of an explored sibling under an automorphism already discovered
// (and fixing the current individualization prefix) are skipped.

#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

inline constexpr int kMaxIsoOrder = 12;
inline constexpr int kMaxAutOrder = 10;

/// Upper triangle of the canonically relabeled graph, packed eight bits
/// per byte in graph6 order. Ordered by (order, bytes).
class CanonicalForm {
public:
    CanonicalForm() = default;
    CanonicalForm(int n, std::vector<std::uint8_t> bytes) : n_(n), bytes_(std::move(bytes)) {}

    int order() const noexcept { return n_; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    /// The canonical representative itself.
    Graph graph() const
    {
        Graph::Rows rows{};
        std::size_t k = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if ((bytes_[k / 8] >> (7 - k % 8)) & 1U) {
                    rows[static_cast<std::size_t>(i)] |= bit(j);
                    rows[static_cast<std::size_t>(j)] |= bit(i);
                }
        return Graph(Graph::Unchecked{}, n_, rows);
    }

    std::string to_graph6() const { return seidel::to_graph6(graph()); }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

private:
    int n_ = 1;
    std::vector<std::uint8_t> bytes_;
};

struct CanonicalForm_hash {
    std::size_t operator()(const CanonicalForm& c) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(c.order()) * 0x9e3779b97f4a7c15ULL;
        for (auto b : c.bytes())
            h = (h ^ b) * 0x100000001b3ULL;
        return h;
    }
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// Sends each vertex of the input to its canonical position.
    Permutation labeling;
};

struct AutomorphismGroup {
    std::vector<Permutation> elements;

    std::size_t order() const noexcept { return elements.size(); }
};

namespace detail {

using Cells = std::vector<Mask>;
using Code = std::array<Mask, kMaxOrder>;

/// Splits cells by neighbour counts into each cell until the ordered
/// partition is equitable. Only cell order and counts are consulted, so the
/// result commutes with relabeling.
inline void refine(const Graph& g, Cells& cells)
{
    std::array<Mask, kMaxOrder + 1> by_count{};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size(); ++w) {
            const Mask splitter = cells[w];
            Cells next;
            next.reserve(static_cast<std::size_t>(g.order()));
            bool split = false;
            for (Mask cell : cells) {
                if (popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                int lo = INT_MAX;
                int hi = -1;
                for (Mask m = cell; m; m &= m - 1) {
                    const int v = std::countr_zero(m);
                    const int k = popcount(g.row(v) & splitter);
                    by_count[static_cast<std::size_t>(k)] |= bit(v);
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                }
                for (int k = lo; k <= hi; ++k) {
                    auto& piece = by_count[static_cast<std::size_t>(k)];
                    if (piece) {
                        next.push_back(piece);
                        piece = 0;
                    }
                }
                split = split || lo != hi;
            }
            if (split) {
                cells = std::move(next);
                changed = true;
            }
        }
    }
}

inline Cells equitable_partition(const Graph& g)
{
    Cells cells{g.vertex_mask()};
    refine(g, cells);
    return cells;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run()
    {
        visit(Cells{g_.vertex_mask()});
    }

    CanonicalLabeling result() const
    {
        const auto nn = static_cast<std::size_t>(n_);
        const std::size_t nbits = nn * (nn - 1) / 2;
        std::vector<std::uint8_t> bytes((nbits + 7) / 8, 0);
        std::size_t k = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if ((best_code_[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1U)
                    bytes[k / 8] |= static_cast<std::uint8_t>(1U << (7 - k % 8));
        std::vector<int> position(nn);
        for (std::size_t p = 0; p < nn; ++p)
            position[static_cast<std::size_t>(best_lab_[p])] = static_cast<int>(p);
        return {CanonicalForm(n_, std::move(bytes)), Permutation(std::move(position))};
    }

    const std::vector<Permutation>& automorphisms() const noexcept { return autos_; }

private:
    void visit(Cells cells)
    {
        refine(g_, cells);
        std::size_t target = cells.size();
        int target_size = INT_MAX;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const int sz = popcount(cells[i]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const Mask candidates = cells[target];
        Mask explored = 0;
        for (Mask m = candidates; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (explored && in_explored_orbit(v, explored))
                continue;
            explored |= bit(v);
            Cells child = cells;
            child[target] = bit(v);
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1,
                         candidates & ~bit(v));
            prefix_.push_back(v);
            visit(std::move(child));
            prefix_.pop_back();
        }
    }

    // Orbit of the explored children under the known automorphisms that fix
    // every individualized vertex.
    bool in_explored_orbit(int v, Mask explored) const
    {
        Mask orbit = explored;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& a : autos_) {
                if (!fixes_prefix(a))
                    continue;
                const Mask img = a.apply(orbit);
                if (img & ~orbit) {
                    orbit |= img;
                    grew = true;
                }
            }
        }
        return (orbit >> v) & 1U;
    }

    bool fixes_prefix(const Permutation& a) const
    {
        for (int p : prefix_)
            if (a(p) != p)
                return false;
        return true;
    }

    void leaf(const Cells& cells)
    {
        std::vector<int> lab(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k)
            lab[k] = std::countr_zero(cells[k]);
        Code code{};
        for (int j = 1; j < n_; ++j) {
            Mask col = 0;
            const Mask row = g_.row(lab[static_cast<std::size_t>(j)]);
            for (int i = 0; i < j; ++i)
                if ((row >> lab[static_cast<std::size_t>(i)]) & 1U)
                    col |= bit(j - 1 - i);
            code[static_cast<std::size_t>(j)] = col;
        }
        if (!have_best_ || code < best_code_) {
            have_best_ = true;
            best_code_ = code;
            best_lab_ = std::move(lab);
            return;
        }
        if (code == best_code_) {
            std::vector<int> img(static_cast<std::size_t>(n_));
            for (std::size_t k = 0; k < lab.size(); ++k)
                img[static_cast<std::size_t>(best_lab_[k])] = lab[k];
            Permutation a(std::move(img));
            if (!a.is_identity() && autos_.size() < kMaxStoredAutos)
                autos_.push_back(std::move(a));
        }
    }

    static constexpr std::size_t kMaxStoredAutos = 256;

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    Code best_code_{};
    std::vector<int> best_lab_;
    std::vector<int> prefix_;
    std::vector<Permutation> autos_;
};

} // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g)
{
    check_bound("canonical_form", g.order(), kMaxIsoOrder);
    detail::CanonicalSearch search(g);
    search.run();
    return search.result();
}

inline CanonicalForm canonical_form(const Graph& g)
{
    return canonical_labeling(g).form;
}

/// Maps vertices of g onto vertices of h preserving adjacency, if possible.
inline std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h)
{
    check_bound("find_isomorphism", g.order(), kMaxIsoOrder);
    check_bound("find_isomorphism", h.order(), kMaxIsoOrder);
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const auto lg = canonical_labeling(g);
    const auto lh = canonical_labeling(h);
    if (lg.form != lh.form)
        return std::nullopt;
    return lh.labeling.inverse().compose(lg.labeling);
}

inline bool is_isomorphic(const Graph& g, const Graph& h)
{
    check_bound("is_isomorphic", g.order(), kMaxIsoOrder);
    check_bound("is_isomorphic", h.order(), kMaxIsoOrder);
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}

/// Plain backtracking over vertex assignments, pruned only by degree. Shares
/// no code with the canonical labeling path.
inline std::optional<Permutation> search_isomorphism(const Graph& g, const Graph& h)
{
    check_bound("search_isomorphism", g.order(), kMaxIsoOrder);
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const int n = g.order();
    const auto dg = degrees(g);
    const auto dh = degrees(h);
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    Mask used = 0;
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1U || dg[static_cast<std::size_t>(v)] != dh[static_cast<std::size_t>(w)])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == h.adjacent(img[static_cast<std::size_t>(u)], w);
            if (!ok)
                continue;
            img[static_cast<std::size_t>(v)] = w;
            used |= bit(w);
            if (extend(v + 1))
                return true;
            used &= ~bit(w);
        }
        return false;
    };
    if (!extend(0))
        return std::nullopt;
    return Permutation(std::move(img));
}

/// Calls visit(p) for every automorphism p of g, in lexicographic order of
/// image vectors. visit returns false to stop early; the function returns
/// false iff it was stopped.
inline bool for_each_automorphism(const Graph& g,
                                  const std::function<bool(const Permutation&)>& visit)
{
    check_bound("automorphisms", g.order(), kMaxAutOrder);
    const int n = g.order();
    const detail::Cells cells = detail::equitable_partition(g);
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (Mask m = cells[c]; m; m &= m - 1)
            colour[static_cast<std::size_t>(std::countr_zero(m))] = static_cast<int>(c);

    std::vector<int> img(static_cast<std::size_t>(n), -1);
    Mask used = 0;
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == n)
            return visit(Permutation(img));
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1U || colour[static_cast<std::size_t>(w)] != colour[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == g.adjacent(img[static_cast<std::size_t>(u)], w);
            if (!ok)
                continue;
            img[static_cast<std::size_t>(v)] = w;
            used |= bit(w);
            const bool keep_going = extend(v + 1);
            used &= ~bit(w);
            if (!keep_going)
                return false;
        }
        return true;
    };
    return extend(0);
}

/// Every automorphism of g, listed in full.
inline AutomorphismGroup automorphisms(const Graph& g)
{
    AutomorphismGroup group;
    for_each_automorphism(g, [&](const Permutation& p) {
        group.elements.push_back(p);
        return true;
    });
    return group;
}

/// Vertex orbits under Aut(g), each block sorted, blocks ordered by their
/// smallest vertex.
inline std::vector<std::vector<int>> similarity_orbits(const Graph& g)
{
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for_each_automorphism(g, [&](const Permutation& p) {
        for (int v = 0; v < n; ++v) {
            const int a = find(v);
            const int b = find(p(v));
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
        return true;
    });
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        if (block_of[static_cast<std::size_t>(r)] < 0) {
            block_of[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(r)])].push_back(v);
    }
    return blocks;
}

inline bool similar(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    bool found = false;
    for_each_automorphism(g, [&](const Permutation& p) {
        found = p(u) == v;
        return !found;
    });
    return found;
}

} // namespace seidel

#endif // SEIDEL_ISO_HPP

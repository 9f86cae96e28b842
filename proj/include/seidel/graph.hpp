#ifndef SEIDEL_GRAPH_HPP
#define SEIDEL_GRAPH_HPP

// Immutable simple graphs on at most 62 vertices, stored as one 64-bit
// adjacency row per vertex, together with vertex-set masks, permutations
// and graph6 text I/O.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seidel {

inline constexpr int kMaxOrder = 62;

using Mask = std::uint64_t;

constexpr Mask full_mask(int n) noexcept
{
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

/// Thrown when an operation's order bound (iso engine, polynomial, census)
/// is exceeded.
class OrderBoundError : public std::length_error {
public:
    OrderBoundError(const char* what, int n, int bound)
        : std::length_error(std::string(what) + ": order " + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound))
    {
    }
};

inline void check_bound(const char* what, int n, int bound)
{
    if (n > bound)
        throw OrderBoundError(what, n, bound);
}

inline void check_order(int n)
{
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " outside [1, 62]");
}

/// Subset of {0..n-1}, the argument of a Seidel switch.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(int n, Mask mask) : n_(n), mask_(mask)
    {
        check_order(n);
        if (mask & ~full_mask(n))
            throw std::out_of_range("vertex set has bits beyond order " +
                                    std::to_string(n));
    }

    VertexSet(int n, std::initializer_list<int> members)
        : VertexSet(n, std::vector<int>(members))
    {
    }

    VertexSet(int n, const std::vector<int>& members) : n_(n)
    {
        check_order(n);
        for (int v : members) {
            if (v < 0 || v >= n)
                throw std::out_of_range("vertex " + std::to_string(v) +
                                        " out of range for order " +
                                        std::to_string(n));
            mask_ |= bit(v);
        }
    }

    static VertexSet empty(int n) { return {n, Mask{0}}; }
    static VertexSet all(int n) { return {n, full_mask(n)}; }

    int order() const noexcept { return n_; }
    Mask mask() const noexcept { return mask_; }
    int size() const noexcept { return popcount(mask_); }
    bool is_empty() const noexcept { return mask_ == 0; }
    bool contains(int v) const noexcept
    {
        return v >= 0 && v < n_ && (mask_ >> v) & 1U;
    }

    VertexSet complement() const { return {n_, ~mask_ & full_mask(n_)}; }

    VertexSet symmetric_difference(const VertexSet& other) const
    {
        same_order(other);
        return {n_, mask_ ^ other.mask_};
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (Mask m = mask_; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    /// Comma-separated indices, e.g. "0,2,5"; empty string for the empty set.
    std::string to_string() const
    {
        std::string s;
        for (int v : members()) {
            if (!s.empty())
                s += ',';
            s += std::to_string(v);
        }
        return s;
    }

    /// Binary form with vertex n-1 leftmost.
    std::string to_binary() const
    {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int v = 0; v < n_; ++v)
            if (contains(v))
                s[static_cast<std::size_t>(n_ - 1 - v)] = '1';
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    void same_order(const VertexSet& other) const
    {
        if (other.n_ != n_)
            throw std::invalid_argument("vertex sets over different orders");
    }

    int n_ = 1;
    Mask mask_ = 0;
};

/// Bijection on {0..n-1}; image()[v] is where v is sent.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> image) : image_(std::move(image))
    {
        const int n = size();
        std::vector<bool> seen(image_.size(), false);
        for (int x : image_) {
            if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("image is not a bijection");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& image() const noexcept { return image_; }

    Permutation inverse() const
    {
        std::vector<int> inv(image_.size());
        for (int v = 0; v < size(); ++v)
            inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(v)])] = v;
        return Permutation(std::move(inv));
    }

    /// (this * other)(v) = this(other(v)).
    Permutation compose(const Permutation& other) const
    {
        std::vector<int> img(image_.size());
        for (int v = 0; v < size(); ++v)
            img[static_cast<std::size_t>(v)] = (*this)(other(v));
        return Permutation(std::move(img));
    }

    bool is_identity() const noexcept
    {
        for (int v = 0; v < size(); ++v)
            if (image_[static_cast<std::size_t>(v)] != v)
                return false;
        return true;
    }

    Mask apply(Mask m) const
    {
        Mask out = 0;
        for (; m; m &= m - 1)
            out |= bit((*this)(std::countr_zero(m)));
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// Simple undirected graph. Row i holds the neighbourhood of vertex i.
class Graph {
public:
    using Rows = std::array<Mask, kMaxOrder>;

    Graph() : Graph(1) {}

    /// Edgeless graph of order n.
    explicit Graph(int n) : n_(n) { check_order(n); }

    /// Builds from raw rows and validates symmetry, irreflexivity and range.
    static Graph from_rows(int n, const Rows& rows)
    {
        Graph g(n);
        g.rows_ = rows;
        for (int i = n; i < kMaxOrder; ++i)
            if (rows[static_cast<std::size_t>(i)])
                throw std::invalid_argument("adjacency row beyond order");
        for (int i = 0; i < n; ++i) {
            const Mask r = rows[static_cast<std::size_t>(i)];
            if (r & ~full_mask(n))
                throw std::invalid_argument("adjacency bit beyond order");
            if (r & bit(i))
                throw std::invalid_argument("loop at vertex " + std::to_string(i));
            for (Mask m = r; m; m &= m - 1) {
                const int j = std::countr_zero(m);
                if (!((rows[static_cast<std::size_t>(j)] >> i) & 1U))
                    throw std::invalid_argument("asymmetric adjacency");
            }
        }
        return g;
    }

    int order() const noexcept { return n_; }
    Mask row(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
    const Rows& rows() const noexcept { return rows_; }
    Mask vertex_mask() const noexcept { return full_mask(n_); }

    bool adjacent(int u, int v) const noexcept { return (row(u) >> v) & 1U; }

    int edge_count() const noexcept
    {
        int twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += popcount(row(v));
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for (Mask m = row(i) & ~full_mask(i + 1); m; m &= m - 1)
                out.emplace_back(i, std::countr_zero(m));
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    // Only switching/relabeling kernels build graphs row by row; they are
    // responsible for keeping the invariants.
    struct Unchecked {};
    Graph(Unchecked, int n, const Rows& rows) noexcept : n_(n), rows_(rows) {}

private:
    int n_;
    Rows rows_{};
};

inline void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(g.order()));
}

inline void check_same_order(const Graph& g, const VertexSet& s)
{
    if (s.order() != g.order())
        throw std::invalid_argument("vertex set order " +
                                    std::to_string(s.order()) +
                                    " does not match graph order " +
                                    std::to_string(g.order()));
}

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges)
{
    check_order(n);
    Graph::Rows rows{};
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (i == j)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(i));
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
    }
    return Graph(Graph::Unchecked{}, n, rows);
}

inline Graph complement(const Graph& g)
{
    Graph::Rows rows{};
    const Mask all = g.vertex_mask();
    for (int v = 0; v < g.order(); ++v)
        rows[static_cast<std::size_t>(v)] = ~g.row(v) & all & ~bit(v);
    return Graph(Graph::Unchecked{}, g.order(), rows);
}

inline VertexSet neighborhood(const Graph& g, int v)
{
    check_vertex(g, v);
    return {g.order(), g.row(v)};
}

inline int degree(const Graph& g, int v)
{
    check_vertex(g, v);
    return popcount(g.row(v));
}

inline std::vector<int> degrees(const Graph& g)
{
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        d[static_cast<std::size_t>(v)] = popcount(g.row(v));
    return d;
}

/// Graph with vertex v renamed to p(v).
inline Graph relabel(const Graph& g, const Permutation& p)
{
    if (p.size() != g.order())
        throw std::invalid_argument("permutation size does not match graph order");
    Graph::Rows rows{};
    for (int v = 0; v < g.order(); ++v)
        rows[static_cast<std::size_t>(p(v))] = p.apply(g.row(v));
    return Graph(Graph::Unchecked{}, g.order(), rows);
}

inline bool is_automorphism(const Graph& g, const Permutation& p)
{
    return p.size() == g.order() && relabel(g, p) == g;
}

/// Result of induced_subgraph: the subgraph and, for each old vertex, its
/// new index (or -1 when the vertex was dropped).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    check_same_order(g, s);
    if (s.is_empty())
        throw std::invalid_argument("induced subgraph of the empty set");
    InducedSubgraph out{Graph(s.size()), std::vector<int>(static_cast<std::size_t>(g.order()), -1), s.members()};
    for (std::size_t k = 0; k < out.new_to_old.size(); ++k)
        out.old_to_new[static_cast<std::size_t>(out.new_to_old[k])] = static_cast<int>(k);
    Graph::Rows rows{};
    for (std::size_t a = 0; a < out.new_to_old.size(); ++a)
        for (std::size_t b = 0; b < out.new_to_old.size(); ++b)
            if (g.adjacent(out.new_to_old[a], out.new_to_old[b]))
                rows[a] |= bit(static_cast<int>(b));
    out.graph = Graph(Graph::Unchecked{}, s.size(), rows);
    return out;
}

/// Removes the edge {u, v} if present.
inline Graph remove_edge(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    Graph::Rows rows = g.rows();
    rows[static_cast<std::size_t>(u)] &= ~bit(v);
    rows[static_cast<std::size_t>(v)] &= ~bit(u);
    return Graph(Graph::Unchecked{}, g.order(), rows);
}

// graph6 ------------------------------------------------------------------
//
// Size byte n+63, then the upper triangle read column by column
// ((0,1),(0,2),(1,2),(0,3),...) packed six bits per byte, high bit first,
// zero padded, each byte offset by 63.

inline std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    if (filled)
        out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

inline Graph from_graph6(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126)
            throw std::invalid_argument("graph6: byte outside printable range 63..126");
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63)
        throw std::invalid_argument("graph6: orders above 62 are not supported");
    if (n < 1)
        throw std::invalid_argument("graph6: order 0 is not supported");
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() < expected)
        throw std::invalid_argument("graph6: truncated adjacency data");
    if (text.size() > expected)
        throw std::invalid_argument("graph6: trailing garbage after adjacency data");

    Graph::Rows rows{};
    std::size_t k = 0;
    auto next_bit = [&]() {
        const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        const int b = (byte >> (5 - static_cast<int>(k % 6))) & 1;
        ++k;
        return b;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit()) {
                rows[static_cast<std::size_t>(i)] |= bit(j);
                rows[static_cast<std::size_t>(j)] |= bit(i);
            }
    while (k % 6)
        if (next_bit())
            throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph(Graph::Unchecked{}, n, rows);
}

} // namespace seidel

#endif // SEIDEL_GRAPH_HPP

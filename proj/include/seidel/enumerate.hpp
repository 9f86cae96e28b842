#ifndef SEIDEL_ENUMERATE_HPP
#define SEIDEL_ENUMERATE_HPP

// Exhaustive small-graph enumeration and a deterministic parallel map.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/iso.hpp"

namespace seidel {

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Labeled graph whose upper-triangle bits, in graph6 order, are the bits of
/// code from least significant upward.
inline Graph labeled_graph(int n, std::uint64_t code)
{
    Graph::Rows rows{};
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1U) {
                rows[static_cast<std::size_t>(i)] |= bit(j);
                rows[static_cast<std::size_t>(j)] |= bit(i);
            }
    return Graph(Graph::Unchecked{}, n, rows);
}

inline std::uint64_t labeled_graph_count(int n)
{
    check_bound("labeled graph enumeration", n, 11);
    return std::uint64_t{1} << pair_count(n);
}

template <class Fn>
void for_each_labeled_graph(int n, Fn&& fn)
{
    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t code = 0; code < count; ++code)
        fn(labeled_graph(n, code));
}

/// Canonical forms of all isomorphism classes of order n, sorted. Every
/// graph of order n is a graph of order n-1 plus one vertex, so classes
/// are grown one vertex at a time and deduplicated canonically.
inline std::vector<CanonicalForm> iso_classes(int n)
{
    check_order(n);
    check_bound("iso_classes", n, kMaxIsoOrder);
    std::vector<CanonicalForm> level{canonical_form(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<CanonicalForm, CanonicalForm_hash> seen;
        for (const auto& cf : level) {
            const Graph base = cf.graph();
            for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
                Graph::Rows rows = base.rows();
                rows[static_cast<std::size_t>(k - 1)] = nb;
                for (Mask m = nb; m; m &= m - 1)
                    rows[static_cast<std::size_t>(std::countr_zero(m))] |= bit(k - 1);
                seen.insert(canonical_form(Graph(Graph::Unchecked{}, k, rows)));
            }
        }
        level.assign(seen.begin(), seen.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

/// Same classes found by canonicalizing every labeled graph; used to
/// cross-check iso_classes for small orders.
inline std::vector<CanonicalForm> iso_classes_by_labeled(int n)
{
    std::unordered_set<CanonicalForm, CanonicalForm_hash> seen;
    for_each_labeled_graph(n, [&](const Graph& g) { seen.insert(canonical_form(g)); });
    std::vector<CanonicalForm> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Representatives of iso_classes(n).
inline std::vector<Graph> iso_class_graphs(int n)
{
    std::vector<Graph> out;
    for (const auto& cf : iso_classes(n))
        out.push_back(cf.graph());
    return out;
}

/// out[i] = fn(i) for i < count, computed by up to `jobs` threads striding
/// over the index range. The result does not depend on `jobs`.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, int jobs, Fn&& fn)
{
    std::vector<T> out(count);
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers)
                    out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace seidel

#endif // SEIDEL_ENUMERATE_HPP

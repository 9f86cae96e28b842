#ifndef SEIDEL_CLASSES_HPP
#define SEIDEL_CLASSES_HPP

// Switching classes: the isomorphism classes reachable from a graph by
// Seidel switches, and the census of all switching classes of an order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "seidel/enumerate.hpp"
#include "seidel/graph.hpp"
#include "seidel/invariants.hpp"
#include "seidel/iso.hpp"
#include "seidel/iss.hpp"
#include "seidel/switching.hpp"

namespace seidel {

inline constexpr int kMaxClassOrder = 10;
inline constexpr int kMaxCensusOrder = 7;

struct SwitchingClass {
    CanonicalForm representative; // smallest member
    std::vector<CanonicalForm> members; // sorted

    std::size_t size() const noexcept { return members.size(); }
};

/// Isomorphism classes of S(g) over all S. S and V \ S give the same
/// graph, so only subsets avoiding vertex 0 are switched.
inline SwitchingClass switching_class(const Graph& g)
{
    const int n = g.order();
    check_bound("switching_class", n, kMaxClassOrder);
    std::set<CanonicalForm> seen;
    for (Mask k = 0; k < (Mask{1} << (n - 1)); ++k)
        seen.insert(canonical_form(switch_set(g, VertexSet(n, k << 1))));
    SwitchingClass sc;
    sc.members.assign(seen.begin(), seen.end());
    sc.representative = sc.members.front();
    return sc;
}

struct CensusRecord {
    int order = 0;
    int class_id = 0;
    std::string rep_g6;
    std::size_t iso_class_count = 0;
    /// Labeled graphs on {0..n-1} lying in the class.
    std::uint64_t labeled_count = 0;
    IntPolynomial seidel_poly;
    std::size_t iss_min = 0;
    std::size_t iss_max = 0;

    CanonicalForm representative;
    std::vector<CanonicalForm> members;
};

inline std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<std::uint64_t>(k);
    return f;
}

inline std::uint64_t automorphism_count(const Graph& g)
{
    std::uint64_t count = 0;
    for_each_automorphism(g, [&](const Permutation&) {
        ++count;
        return true;
    });
    return count;
}

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/// Groups of iso-class indices, each sorted, ordered by first element.
inline std::vector<std::vector<std::size_t>> groups_of(UnionFind& uf, std::size_t n)
{
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < n; ++i)
        by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : by_root)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Partition of the iso classes of order n into switching classes by
/// union-find over single switch steps. Candidates are looked up only in
/// the Seidel-polynomial bucket of the source graph.
inline std::vector<std::vector<CanonicalForm>> switching_partition_union_find(int n, int jobs = 1)
{
    check_bound("census", n, kMaxCensusOrder);
    const auto classes = iso_classes(n);
    std::map<IntPolynomial, std::map<CanonicalForm, std::size_t>> buckets;
    std::vector<IntPolynomial> poly(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        poly[i] = seidel_char_poly(classes[i].graph());
        buckets[poly[i]].emplace(classes[i], i);
    }
    const auto targets = parallel_map<std::vector<std::size_t>>(
        classes.size(), jobs, [&](std::size_t i) {
            const Graph g = classes[i].graph();
            const auto& bucket = buckets.at(poly[i]);
            std::vector<std::size_t> hit;
            for (Mask k = 1; k < (Mask{1} << (n - 1)); ++k) {
                const auto it = bucket.find(canonical_form(switch_set(g, VertexSet(n, k << 1))));
                if (it == bucket.end())
                    throw std::logic_error("census: switch left its Seidel-polynomial bucket");
                hit.push_back(it->second);
            }
            return hit;
        });
    detail::UnionFind uf(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j : targets[i])
            uf.unite(i, j);
    std::vector<std::vector<CanonicalForm>> out;
    for (const auto& group : detail::groups_of(uf, classes.size())) {
        out.emplace_back();
        for (std::size_t i : group)
            out.back().push_back(classes[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Same partition computed by taking the full switching orbit of each
/// not-yet-covered iso class.
inline std::vector<std::vector<CanonicalForm>> switching_partition_orbits(int n)
{
    check_bound("census", n, kMaxCensusOrder);
    std::set<CanonicalForm> covered;
    std::vector<std::vector<CanonicalForm>> out;
    for (const auto& cf : iso_classes(n)) {
        if (covered.count(cf))
            continue;
        auto sc = switching_class(cf.graph());
        covered.insert(sc.members.begin(), sc.members.end());
        out.push_back(std::move(sc.members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// One record per switching class of order n, ordered by representative
/// (class_id is the index in that order).
inline std::vector<CensusRecord> census(int n, int jobs = 1)
{
    const auto partition = switching_partition_union_find(n, jobs);
    auto records = parallel_map<CensusRecord>(partition.size(), jobs, [&](std::size_t c) {
        const auto& members = partition[c];
        CensusRecord r;
        r.order = n;
        r.members = members;
        r.representative = members.front();
        r.rep_g6 = r.representative.to_graph6();
        r.iso_class_count = members.size();
        r.seidel_poly = seidel_char_poly(r.representative.graph());
        r.iss_min = SIZE_MAX;
        for (const auto& cf : members) {
            const Graph g = cf.graph();
            r.labeled_count += factorial(n) / automorphism_count(g);
            const std::size_t iss = iss_family(g).size();
            r.iss_min = std::min(r.iss_min, iss);
            r.iss_max = std::max(r.iss_max, iss);
        }
        return r;
    });
    for (std::size_t c = 0; c < records.size(); ++c)
        records[c].class_id = static_cast<int>(c);
    return records;
}

struct ClassSizeCheck {
    std::size_t class_size = 0;
    std::size_t complement_class_size = 0;

    bool holds() const noexcept { return class_size == complement_class_size; }
};

inline ClassSizeCheck check_complement_class(const Graph& g)
{
    check_bound("check_complement_class", g.order(), 8);
    return {switching_class(g).size(), switching_class(complement(g)).size()};
}

} // namespace seidel

#endif // SEIDEL_CLASSES_HPP

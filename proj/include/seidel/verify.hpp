#ifndef SEIDEL_VERIFY_HPP
#define SEIDEL_VERIFY_HPP

// Verification suites. Each suite sweeps a set of graphs and evaluates a
// fixed list of claims. Asserted claims are theorems whose proofs are
// complete; a single disagreement fails the suite. Swept claims are only
// measured: disagreements become findings with graph6 and subset
// witnesses, and never fail the run.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "seidel/classes.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/generators.hpp"
#include "seidel/graph.hpp"
#include "seidel/invariants.hpp"
#include "seidel/iso.hpp"
#include "seidel/iss.hpp"
#include "seidel/switching.hpp"

namespace seidel::verify {

struct Finding {
    std::string claim_id;
    std::string graph6;
    std::vector<Mask> witness_masks;
    std::string detail;

    friend bool operator==(const Finding&, const Finding&) = default;
};

struct ClaimReport {
    std::string claim_id;
    bool asserted = false;
    std::uint64_t checked = 0;
    std::uint64_t agree = 0;
    std::uint64_t disagree = 0;
    std::vector<Finding> findings;

    bool passed() const noexcept { return !asserted || disagree == 0; }

    void record(bool ok, const Graph& g, std::vector<Mask> witness = {}, std::string detail = {})
    {
        ++checked;
        if (ok) {
            ++agree;
            return;
        }
        ++disagree;
        findings.push_back({claim_id, to_graph6(g), std::move(witness), std::move(detail)});
    }

    void merge(const ClaimReport& other)
    {
        checked += other.checked;
        agree += other.agree;
        disagree += other.disagree;
        findings.insert(findings.end(), other.findings.begin(), other.findings.end());
    }
};

struct SuiteReport {
    std::string suite;
    int max_order = 0;
    std::vector<ClaimReport> claims;

    bool passed() const
    {
        return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed(); });
    }

    std::size_t finding_count() const
    {
        std::size_t k = 0;
        for (const auto& c : claims)
            k += c.findings.size();
        return k;
    }

    const ClaimReport& claim(const std::string& id) const
    {
        for (const auto& c : claims)
            if (c.claim_id == id)
                return c;
        throw std::out_of_range("no claim '" + id + "' in suite " + suite);
    }
};

struct Options {
    int max_order = 5;
    int jobs = 1;
};

namespace detail {

struct ClaimSpec {
    const char* id;
    bool asserted;
};

inline std::vector<ClaimReport> fresh(const std::vector<ClaimSpec>& specs)
{
    std::vector<ClaimReport> out;
    for (const auto& s : specs)
        out.push_back(ClaimReport{s.id, s.asserted, 0, 0, 0, {}});
    return out;
}

inline void sort_findings(std::vector<ClaimReport>& claims)
{
    for (auto& c : claims)
        std::stable_sort(c.findings.begin(), c.findings.end(), [](const Finding& a, const Finding& b) {
            return std::tie(a.graph6, a.witness_masks, a.detail) <
                   std::tie(b.graph6, b.witness_masks, b.detail);
        });
}

using GraphCheck = std::function<void(const Graph&, std::vector<ClaimReport>&)>;

/// Graphs of order n to sweep: every labeled graph up to labeled_upto,
/// otherwise one representative per isomorphism class.
inline std::vector<Graph> sweep_graphs(int n, int labeled_upto)
{
    if (n <= labeled_upto) {
        std::vector<Graph> out;
        out.reserve(static_cast<std::size_t>(labeled_graph_count(n)));
        for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
        return out;
    }
    return iso_class_graphs(n);
}

inline SuiteReport sweep(const std::string& suite, const Options& opt, int min_order, int max_order,
                         int labeled_upto, const std::vector<ClaimSpec>& specs, const GraphCheck& check)
{
    SuiteReport report{suite, opt.max_order, fresh(specs)};
    for (int n = min_order; n <= max_order; ++n) {
        const auto graphs = sweep_graphs(n, labeled_upto);
        const auto parts = parallel_map<std::vector<ClaimReport>>(graphs.size(), opt.jobs, [&](std::size_t i) {
            auto local = fresh(specs);
            check(graphs[i], local);
            return local;
        });
        for (const auto& part : parts)
            for (std::size_t c = 0; c < specs.size(); ++c)
                report.claims[c].merge(part[c]);
    }
    sort_findings(report.claims);
    return report;
}

/// Deterministic relabeling derived from the graph itself.
inline Permutation scramble(const Graph& g)
{
    std::vector<int> img(static_cast<std::size_t>(g.order()));
    std::iota(img.begin(), img.end(), 0);
    const std::string g6 = to_graph6(g);
    std::seed_seq seed(g6.begin(), g6.end());
    std::mt19937 rng(seed);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

inline std::string vset(const VertexSet& s) { return "{" + s.to_string() + "}"; }

} // namespace detail

inline SuiteReport run_algebra(const Options& opt)
{
    return detail::sweep(
        "algebra", opt, 1, opt.max_order, 5,
        {{"switch-symmetric-difference", true},
         {"switch-complement-set", true},
         {"switch-full-set", true},
         {"switch-complement-commutes", true},
         {"switch-vertex-order", true},
         {"switch-involution", true},
         {"switch-preserves-sides", true}},
        [](const Graph& g, std::vector<ClaimReport>& c) {
            const int n = g.order();
            const Mask all = g.vertex_mask();
            for (Mask s = 0; s <= all; ++s) {
                const VertexSet S(n, s);
                for (Mask t = 0; t <= all; ++t)
                    c[0].record(check_symmetric_difference(g, S, VertexSet(n, t)).holds(), g, {s, t});
                c[1].record(check_complement_switch(g, S).holds(), g, {s});
                c[3].record(check_complement_commutes(g, S).holds(), g, {s});
                const Graph switched = switch_set(g, S);
                c[5].record(switch_set(switched, S) == g, g, {s});
                bool sides = true;
                for (const VertexSet& side : {S, S.complement()})
                    if (!side.is_empty())
                        sides = sides && induced_subgraph(switched, side).graph == induced_subgraph(g, side).graph;
                c[6].record(sides, g, {s});
            }
            c[2].record(check_full_switch(g).holds(), g, {all});
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    c[4].record(switch_vertex(switch_vertex(g, u), v) == switch_vertex(switch_vertex(g, v), u),
                                g, {bit(u), bit(v)});
        });
}

inline SuiteReport run_iso(const Options& opt)
{
    return detail::sweep(
        "iso", opt, 1, std::min(opt.max_order, kMaxAutOrder), 0,
        {{"similar-vertices-switch", true},
         {"similar-vertices-converse", false},
         {"canonical-vs-search", true},
         {"orbit-stabilizer", true}},
        [](const Graph& g, std::vector<ClaimReport>& c) {
            const int n = g.order();
            const auto orbits = similarity_orbits(g);
            std::vector<int> orbit_of(static_cast<std::size_t>(n));
            for (std::size_t b = 0; b < orbits.size(); ++b)
                for (int v : orbits[b])
                    orbit_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
            std::vector<CanonicalForm> switched;
            for (int v = 0; v < n; ++v)
                switched.push_back(canonical_form(switch_vertex(g, v)));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const bool iso = switched[static_cast<std::size_t>(u)] == switched[static_cast<std::size_t>(v)];
                    if (orbit_of[static_cast<std::size_t>(u)] == orbit_of[static_cast<std::size_t>(v)])
                        c[0].record(iso, g, {bit(u), bit(v)});
                    else
                        c[1].record(!iso, g, {bit(u), bit(v)}, "u(G) ~= v(G) with u, v in different orbits");
                }

            const Graph h = relabel(g, detail::scramble(g));
            c[2].record(is_isomorphic(g, h) && search_isomorphism(g, h).has_value(), g, {}, "relabeled copy");
            for (int v = 0; v < n; ++v) {
                const Graph sv = switch_vertex(g, v);
                const bool by_form = is_isomorphic(g, sv);
                const bool by_search = search_isomorphism(g, sv).has_value();
                c[2].record(by_form == by_search, g, {bit(v)}, "switch at vertex");
            }

            const auto group = automorphisms(g);
            for (int v = 0; v < n; ++v) {
                std::size_t stab = 0;
                for (const auto& p : group.elements)
                    stab += p(v) == v ? 1 : 0;
                const auto orbit = orbits[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(v)])].size();
                c[3].record(group.order() == orbit * stab, g, {bit(v)});
            }
        });
}

inline SuiteReport run_invariants(const Options& opt)
{
    return detail::sweep(
        "invariants", opt, 1, std::min(opt.max_order, kMaxPolyOrder), 5,
        {{"seidel-switch-invariant", true}, {"seidel-trace-zero", true}, {"seidel-relabel-invariant", true}},
        [](const Graph& g, std::vector<ClaimReport>& c) {
            const int n = g.order();
            const auto base = seidel_char_poly(g);
            for (Mask s = 0; s <= g.vertex_mask(); ++s)
                c[0].record(seidel_char_poly(switch_set(g, VertexSet(n, s))) == base, g, {s});
            c[1].record(base[n - 1] == 0, g);
            c[2].record(seidel_char_poly(relabel(g, detail::scramble(g))) == base, g);
        });
}

inline SuiteReport run_iss(const Options& opt)
{
    return detail::sweep(
        "iss", opt, 1, std::min(opt.max_order, kMaxFamilyOrder), 0,
        {{"iss-trivial-members", true},
         {"iss-complement-closed", true},
         {"iss-orbit-invariant", true},
         {"vertex-iss-degree-extremes", true},
         {"iss-closure", false}},
        [](const Graph& g, std::vector<ClaimReport>& c) {
            const int n = g.order();
            const auto family = iss_family(g);
            c[0].record(family.contains(VertexSet::empty(n)) && family.contains(VertexSet::all(n)), g);
            bool complement_closed = true;
            for (const auto& s : family.members)
                complement_closed = complement_closed && family.contains(s.complement());
            c[1].record(complement_closed, g);

            const VertexSet viss = vertex_iss_set(g);
            for (const auto& orbit : similarity_orbits(g))
                for (std::size_t k = 1; k < orbit.size(); ++k)
                    c[2].record(viss.contains(orbit[0]) == viss.contains(orbit[k]), g,
                                {bit(orbit[0]), bit(orbit[k])});

            const auto extremes = check_delta_Delta(g);
            if (extremes.verdict != LemmaVerdict::vacuous) {
                std::vector<Mask> w;
                if (extremes.witness)
                    w = {bit(extremes.witness->first), bit(extremes.witness->second)};
                c[3].record(extremes.verdict == LemmaVerdict::holds, g, w);
            }

            if (family.closed_under_delta) {
                c[4].record(true, g);
            } else {
                const auto& w = *family.witness;
                c[4].record(false, g, {w.s.mask(), w.t.mask(), w.sum.mask()},
                            detail::vset(w.s) + " and " + detail::vset(w.t) +
                                " are ISS but their symmetric difference is not");
            }
        });
}

inline SuiteReport run_edge_iss(const Options& opt)
{
    return detail::sweep(
        "edge-iss", opt, 2, std::min(opt.max_order, kMaxAutOrder + 2), 0,
        {{"edge-iss-sufficiency", true},
         {"edge-iss-necessity", false},
         {"edge-iss-equivalence", false},
         {"edge-iss-neighborhood-decomposition", false},
         {"edge-iss-g-minus-e", false},
         {"edge-iss-core-complement", false}},
        [](const Graph& g, std::vector<ClaimReport>& c) {
            for (auto [x, y] : g.edges()) {
                const Mask e = bit(x) | bit(y);
                const auto r = edge_iss_theorem(g, x, y);
                const std::string conds = std::string("direct=") + (r.direct ? "1" : "0") +
                                          " condition_i=" + (r.condition_i ? "1" : "0") +
                                          " condition_ii=" + (r.condition_ii ? "1" : "0");
                if (r.theorem_verdict)
                    c[0].record(r.direct, g, {e}, conds);
                if (r.direct)
                    c[1].record(r.theorem_verdict, g, {e}, conds);
                c[2].record(r.agree, g, {e}, conds);
                if (r.direct) {
                    c[3].record(check_neighborhood_decomposition(g, x, y), g, {e},
                                "N(x)-y and N(y)-x do not partition V-{x,y}");
                    c[5].record(check_core_complement_corollary(g, x, y), g, {e},
                                "edge-ISS lost after complementing the core");
                }
                const auto rem = check_g_minus_e_remark(g, x, y);
                c[4].record(rem.agree(), g, {e},
                            std::string("iss_in_g=") + (rem.edge_iss ? "1" : "0") +
                                " iss_in_g_minus_e=" + (rem.iss_without_edge ? "1" : "0"));
            }
        });
}

inline SuiteReport run_classes(const Options& opt)
{
    SuiteReport report{"classes", opt.max_order,
                       detail::fresh({{"census-dual-method", true},
                                      {"census-partition", true},
                                      {"seidel-constant-on-class", true},
                                      {"complement-class-size", true},
                                      {"no-self-complementary-mod4", true}})};
    auto& c = report.claims;
    for (int n = 1; n <= std::min(opt.max_order, kMaxCensusOrder); ++n) {
        const auto a = switching_partition_union_find(n, opt.jobs);
        const auto b = switching_partition_orbits(n);
        const Graph probe(n);
        c[0].record(a == b, probe, {}, "order " + std::to_string(n) + ": union-find and orbit partitions differ");

        const auto classes = iso_classes(n);
        std::vector<CanonicalForm> flat;
        for (const auto& group : a)
            flat.insert(flat.end(), group.begin(), group.end());
        std::sort(flat.begin(), flat.end());
        c[1].record(flat == classes, probe, {}, "order " + std::to_string(n) + ": classes do not partition iso classes");

        for (const auto& group : a) {
            const auto p = seidel_char_poly(group.front().graph());
            bool same = true;
            for (const auto& cf : group)
                same = same && seidel_char_poly(cf.graph()) == p;
            c[2].record(same, group.front().graph());
        }
    }
    for (int n = 1; n <= std::min(opt.max_order, 8); ++n) {
        const auto graphs = iso_class_graphs(n);
        const auto checks = parallel_map<ClassSizeCheck>(graphs.size(), opt.jobs,
                                                         [&](std::size_t i) { return check_complement_class(graphs[i]); });
        for (std::size_t i = 0; i < graphs.size(); ++i)
            c[3].record(checks[i].holds(), graphs[i], {},
                        std::to_string(checks[i].class_size) + " vs " + std::to_string(checks[i].complement_class_size));
        if (n % 4 == 2 || n % 4 == 3)
            for (const auto& g : graphs)
                c[4].record(!is_isomorphic(g, complement(g)), g, {}, "self-complementary");
    }
    detail::sort_findings(report.claims);
    return report;
}

/// One half_join instance and the ISS status of its two sides.
struct HalfJoinOutcome {
    int m = 0;
    int n = 0;
    bool a_complete = false;
    bool b_complete = false;
    std::string graph6;
    int cross_edges = 0;
    bool a_iss = false;
    bool b_iss = false;
    /// Every positive verdict confirmed by the backtracking isomorphism search.
    bool reverified = true;
};

inline std::vector<HalfJoinOutcome> half_join_sweep()
{
    std::vector<HalfJoinOutcome> out;
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            if (m % 2 && n % 2)
                continue;
            for (bool ac : {false, true})
                for (bool bc : {false, true}) {
                    const Graph g = half_join(m, n, ac, bc);
                    HalfJoinOutcome o{m, n, ac, bc, to_graph6(g), 0, false, false, true};
                    for (auto [i, j] : g.edges())
                        o.cross_edges += (i < m) != (j < m) ? 1 : 0;
                    const VertexSet a = half_join_part_a(m, n);
                    const VertexSet b = half_join_part_b(m, n);
                    o.a_iss = is_iss(g, a);
                    o.b_iss = is_iss(g, b);
                    if (o.a_iss)
                        o.reverified = o.reverified && search_isomorphism(switch_set(g, a), g).has_value();
                    if (o.b_iss)
                        o.reverified = o.reverified && search_isomorphism(switch_set(g, b), g).has_value();
                    out.push_back(o);
                }
        }
    return out;
}

struct PathCliqueOutcome {
    int p = 0;
    int edges_to_x = 0;
    std::string graph6;
    bool edge_iss = false;
    bool clique_iss = false;
};

inline std::vector<PathCliqueOutcome> path_plus_clique_sweep(int max_p = 5)
{
    std::vector<PathCliqueOutcome> out;
    for (int p = 0; p <= max_p; ++p)
        for (int k = 0; k <= p; ++k) {
            const Graph g = path_plus_clique(p, k);
            out.push_back({p, k, to_graph6(g), edge_iss_direct(g, 0, 1),
                           p == 0 || is_iss(g, path_plus_clique_part(p))});
        }
    return out;
}

/// Results of the fixture checks taken from the worked examples, one entry
/// per example.
inline std::vector<std::pair<std::string, bool>> worked_example_checks()
{
    using namespace fixture;
    std::vector<std::pair<std::string, bool>> out;

    const Graph f1 = switch_vertex(fig1(), fig1_v);
    out.emplace_back("fig1-switch-at-v",
                     f1 == make_graph(4, {{fig1_v, fig1_z}, {fig1_x, fig1_y}, {fig1_y, fig1_z}}));

    const Graph t = tadpole(3, 4);
    out.emplace_back("tadpole-switches-isomorphic",
                     is_isomorphic(switch_vertex(t, tadpole_u), switch_vertex(t, tadpole_v)));
    out.emplace_back("tadpole-not-similar", !similar(t, tadpole_u, tadpole_v));

    const Graph k23 = complete_bipartite(2, 3);
    bool k23_ok = true;
    for (int v = 2; v < 5; ++v)
        k23_ok = k23_ok && is_iss(k23, VertexSet(5, bit(v)));
    out.emplace_back("k23-three-part-vertex-iss", k23_ok);

    bool knn1 = true;
    for (int n = 1; n <= 3; ++n) {
        const Graph g = complete_bipartite(n, n + 1);
        for (int v = n; v < 2 * n + 1; ++v)
            knn1 = knn1 && degree(g, v) == n && is_iss(g, VertexSet(2 * n + 1, bit(v)));
    }
    out.emplace_back("k-n-n+1-degree-n-vertex-iss", knn1);

    bool kmn = true;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const Graph g = complete_bipartite(m, n);
            for (auto [x, y] : g.edges())
                kmn = kmn && edge_iss_direct(g, x, y);
        }
    out.emplace_back("kmn-every-edge-iss", kmn);

    const Graph q3 = cube_q3();
    bool q3_none = true;
    for (auto [x, y] : q3.edges())
        q3_none = q3_none && !edge_iss_direct(q3, x, y);
    out.emplace_back("q3-no-edge-iss", q3_none);

    const Graph prism = prism_c3p2();
    bool prism_ok = true;
    for (auto [x, y] : prism.edges()) {
        const bool rung = (x < 3) != (y < 3);
        prism_ok = prism_ok && edge_iss_direct(prism, x, y) == rung;
    }
    out.emplace_back("prism-rungs-exactly-edge-iss", prism_ok);

    out.emplace_back("fig3-g1-unique-vertex-iss", vertex_iss_set(fig3_g1()) == VertexSet(5, bit(fig3_g1_x)));
    out.emplace_back("fig3-g2-unique-vertex-iss", vertex_iss_set(fig3_g2()) == VertexSet(5, bit(fig3_g2_x)));

    // P4, C4 and K4 must land in three distinct classes, and there are three.
    const auto c4 = census(4);
    std::set<int> ids;
    for (const Graph& expected : {path_graph(3), cycle_graph(4), complete_graph(4)})
        for (const auto& r : c4)
            if (std::binary_search(r.members.begin(), r.members.end(), canonical_form(expected)))
                ids.insert(r.class_id);
    const bool order4 = c4.size() == 3 && ids.size() == 3;
    out.emplace_back("order4-three-classes-p4-c4-k4", order4);
    return out;
}

inline SuiteReport run_constructions(const Options& opt)
{
    SuiteReport report{"constructions", opt.max_order,
                       detail::fresh({{"worked-examples", true},
                                      {"half-join-edge-count", true},
                                      {"half-join-reverified", true},
                                      {"half-join-iss", false},
                                      {"path-plus-clique-edge-iss", false},
                                      {"path-plus-clique-clique-iss", false}})};
    auto& c = report.claims;
    for (const auto& [name, ok] : worked_example_checks())
        c[0].record(ok, Graph(1), {}, name);

    for (const auto& o : half_join_sweep()) {
        const Graph g = from_graph6(o.graph6);
        const std::string tag = "half_join(" + std::to_string(o.m) + "," + std::to_string(o.n) + ",a=" +
                                (o.a_complete ? "complete" : "empty") + ",b=" +
                                (o.b_complete ? "complete" : "empty") + ")";
        c[1].record(o.cross_edges * 2 == o.m * o.n, g, {}, tag);
        c[2].record(o.reverified, g, {}, tag);
        const VertexSet a = half_join_part_a(o.m, o.n);
        c[3].record(o.a_iss && o.b_iss, g, {a.mask(), a.complement().mask()},
                    tag + std::string(" a_iss=") + (o.a_iss ? "1" : "0") + " b_iss=" + (o.b_iss ? "1" : "0"));
    }
    for (const auto& o : path_plus_clique_sweep()) {
        const Graph g = from_graph6(o.graph6);
        const std::string tag = "path_plus_clique(" + std::to_string(o.p) + "," + std::to_string(o.edges_to_x) + ")";
        c[4].record(o.edge_iss, g, {Mask{3}}, tag);
        c[5].record(o.clique_iss, g, {path_plus_clique_part(o.p).mask()}, tag);
    }
    detail::sort_findings(report.claims);
    return report;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"algebra", "iso",     "invariants",    "iss",
                                                "edge-iss", "classes", "constructions"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const Options& opt)
{
    if (name == "algebra")
        return run_algebra(opt);
    if (name == "iso")
        return run_iso(opt);
    if (name == "invariants")
        return run_invariants(opt);
    if (name == "iss")
        return run_iss(opt);
    if (name == "edge-iss")
        return run_edge_iss(opt);
    if (name == "classes")
        return run_classes(opt);
    if (name == "constructions")
        return run_constructions(opt);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

/// Runs one suite, or every suite for "all".
inline std::vector<SuiteReport> run(const std::string& name, const Options& opt)
{
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& s : suite_names())
            out.push_back(run_suite(s, opt));
    } else {
        out.push_back(run_suite(name, opt));
    }
    return out;
}

} // namespace seidel::verify

#endif // SEIDEL_VERIFY_HPP

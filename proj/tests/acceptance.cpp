// Acceptance run: one PASS/FAIL line per acceptance criterion. Exit status
// is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seidel/report.hpp"
#include "seidel/seidel.hpp"

using namespace seidel;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Graph> labeled_graphs(int n)
{
    std::vector<Graph> out;
    oracle::each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

Outcome switching_algebra()
{
    const auto t0 = Clock::now();
    std::uint64_t checks = 0;
    std::uint64_t bad = 0;
    for (int n = 1; n <= 5; ++n) {
        const Mask sets = Mask{1} << n;
        for (const Graph& g : labeled_graphs(n)) {
            bad += check_full_switch(g) ? 0 : 1;
            ++checks;
            for (Mask a = 0; a < sets; ++a) {
                const VertexSet s(n, a);
                bad += check_complement_switch(g, s) ? 0 : 1;
                bad += check_complement_commutes(g, s) ? 0 : 1;
                checks += 2;
                for (Mask b = 0; b < sets; ++b) {
                    bad += check_symmetric_difference(g, s, VertexSet(n, b)) ? 0 : 1;
                    ++checks;
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && secs < 30.0,
            std::to_string(checks) + " identity checks, " + std::to_string(bad) + " violations, " +
                std::to_string(secs) + " s"};
}

Outcome fig1_reproduction()
{
    using namespace fixture;
    const Graph s = switch_vertex(fig1(), fig1_v);
    const oracle::EdgeSet expected{oracle::norm(fig1_v, fig1_z), oracle::norm(fig1_x, fig1_y),
                                   oracle::norm(fig1_y, fig1_z)};
    return {oracle::edge_set(s) == expected, "switched graph " + to_graph6(s)};
}

Outcome order4_census()
{
    const auto t0 = Clock::now();
    const auto records = census(4);
    const double secs = seconds_since(t0);
    std::vector<int> hit;
    for (const Graph& g : {path_graph(3), cycle_graph(4), complete_graph(4)})
        for (const auto& r : records)
            if (oracle::isomorphic_brute(r.representative.graph(), g) ||
                std::binary_search(r.members.begin(), r.members.end(), canonical_form(g)))
                hit.push_back(r.class_id);
    std::sort(hit.begin(), hit.end());
    const bool ok = records.size() == 3 && hit == std::vector<int>{0, 1, 2} && secs < 1.0;
    return {ok, std::to_string(records.size()) + " classes, P4/C4/K4 in classes " +
                    (hit.size() == 3 ? std::to_string(hit[0]) + "," + std::to_string(hit[1]) + "," +
                                           std::to_string(hit[2])
                                     : std::string("?")) +
                    ", " + std::to_string(secs) + " s"};
}

Outcome tadpole_example()
{
    using namespace fixture;
    const Graph t = tadpole(3, 4);
    const Graph su = switch_vertex(t, tadpole_u);
    const Graph sv = switch_vertex(t, tadpole_v);
    const bool iso = is_isomorphic(su, sv) && oracle::isomorphic_brute(su, sv);
    bool orbit_split = !similar(t, tadpole_u, tadpole_v);
    orbit_split = orbit_split && !oracle::any_permutation(t.order(), [&](const std::vector<int>& p) {
        return p[tadpole_u] == tadpole_v && oracle::maps_edges(t, t, p);
    });
    return {iso && orbit_split, std::string("switches isomorphic=") + (iso ? "yes" : "no") +
                                    ", different orbits=" + (orbit_split ? "yes" : "no")};
}

Outcome vertex_iss_examples()
{
    bool ok = true;
    const Graph k23 = complete_bipartite(2, 3);
    for (int v = 2; v < 5; ++v)
        ok = ok && is_iss(k23, VertexSet(5, {v}));
    int checked = 3;
    for (int n = 1; n <= 3; ++n) {
        const Graph g = complete_bipartite(n, n + 1);
        for (int v = 0; v < g.order(); ++v)
            if (degree(g, v) == n) {
                ok = ok && is_iss(g, VertexSet(g.order(), {v})) &&
                     oracle::isomorphic_brute(g, oracle::switch_set_literal(g, bit(v)));
                ++checked;
            }
    }
    return {ok, std::to_string(checked) + " singletons checked"};
}

Outcome edge_iss_examples()
{
    bool kmn = true;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const Graph g = complete_bipartite(m, n);
            for (auto [x, y] : g.edges())
                kmn = kmn && edge_iss_direct(g, x, y);
        }
    bool q3 = true;
    const Graph cube = cube_q3();
    for (auto [x, y] : cube.edges())
        q3 = q3 && !edge_iss_direct(cube, x, y);
    bool prism = true;
    const Graph pr = prism_c3p2();
    for (auto [x, y] : pr.edges())
        prism = prism && edge_iss_direct(pr, x, y) == (y == x + 3);
    return {kmn && q3 && prism, std::string("K_{m,n} all edges=") + (kmn ? "yes" : "no") +
                                    ", Q3 none=" + (q3 ? "yes" : "no") +
                                    ", prism rungs only=" + (prism ? "yes" : "no")};
}

Outcome sufficiency()
{
    const auto t0 = Clock::now();
    std::uint64_t positive = 0;
    std::uint64_t edges = 0;
    std::uint64_t bad = 0;
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : labeled_graphs(n))
            for (auto [x, y] : g.edges()) {
                const auto r = edge_iss_theorem(g, x, y);
                ++edges;
                if (!r.theorem_verdict)
                    continue;
                ++positive;
                bad += r.direct ? 0 : 1;
            }
    return {bad == 0, std::to_string(edges) + " labeled edges, " + std::to_string(positive) +
                          " meet both conditions, " + std::to_string(bad) + " not edge-ISS, " +
                          std::to_string(seconds_since(t0)) + " s"};
}

Outcome swept_report()
{
    const verify::Options opt{6, 1};
    auto once = [&] {
        return verify::run("edge-iss", opt).front();
    };
    const auto a = once();
    const auto b = once();
    const auto iss_a = verify::run_suite("iss", opt);
    const auto iss_b = verify::run_suite("iss", opt);
    const bool same = findings_jsonl({a, iss_a}) == findings_jsonl({b, iss_b}) &&
                      summary_text({a, iss_a}) == summary_text({b, iss_b});
    bool complete = true;
    std::string counts;
    for (const auto& [report, id] : std::vector<std::pair<const verify::SuiteReport*, std::string>>{
             {&a, "edge-iss-necessity"},
             {&a, "edge-iss-neighborhood-decomposition"},
             {&a, "edge-iss-g-minus-e"},
             {&iss_a, "iss-closure"}}) {
        const auto& c = report->claim(id);
        complete = complete && c.checked > 0 && c.agree + c.disagree == c.checked &&
                   c.findings.size() == c.disagree;
        counts += " " + id + "=" + std::to_string(c.agree) + "/" + std::to_string(c.disagree);
    }
    return {same && complete, std::string("deterministic=") + (same ? "yes" : "no") + ", agree/disagree:" + counts};
}

Outcome seidel_invariance()
{
    std::uint64_t switches = 0;
    std::uint64_t bad = 0;
    auto check_all_subsets = [&](const Graph& g) {
        const auto p = seidel_char_poly(g);
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
            bad += seidel_char_poly(switch_set(g, VertexSet(g.order(), s))) == p ? 0 : 1;
            ++switches;
        }
    };
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : labeled_graphs(n))
            check_all_subsets(g);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k)
        check_all_subsets(oracle::random_graph(8, rng));
    return {bad == 0, std::to_string(switches) + " switches compared, " + std::to_string(bad) + " mismatches"};
}

Outcome complement_class_sizes()
{
    std::uint64_t graphs = 0;
    std::uint64_t bad = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : iso_class_graphs(n)) {
            ++graphs;
            bad += check_complement_class(g).holds() ? 0 : 1;
        }
    return {bad == 0, std::to_string(graphs) + " isomorphism classes, " + std::to_string(bad) + " mismatches"};
}

Outcome iso_oracle_equivalence()
{
    std::uint64_t pairs = 0;
    std::uint64_t bad = 0;
    for (int n = 1; n <= 5; ++n) {
        const auto graphs = labeled_graphs(n);
        std::vector<CanonicalForm> forms;
        for (const auto& g : graphs)
            forms.push_back(canonical_form(g));
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i; j < graphs.size(); ++j) {
                ++pairs;
                bad += (forms[i] == forms[j]) == search_isomorphism(graphs[i], graphs[j]).has_value() ? 0 : 1;
            }
    }
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> order(6, 8);
    for (int k = 0; k < 500; ++k) {
        const int n = order(rng);
        const Graph g = oracle::random_graph(n, rng);
        const Graph h = k % 2 ? relabel(g, oracle::random_permutation(n, rng)) : oracle::random_graph(n, rng);
        const bool canon = canonical_form(g) == canonical_form(h);
        ++pairs;
        bad += canon == search_isomorphism(g, h).has_value() && canon == oracle::isomorphic_brute(g, h) ? 0 : 1;
    }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " disagreements"};
}

Outcome half_join_report()
{
    const auto a = verify::half_join_sweep();
    const auto b = verify::half_join_sweep();
    bool same = a.size() == b.size();
    bool verified = true;
    int positives = 0;
    for (std::size_t i = 0; same && i < a.size(); ++i) {
        same = a[i].graph6 == b[i].graph6 && a[i].a_iss == b[i].a_iss && a[i].b_iss == b[i].b_iss;
        verified = verified && a[i].reverified && a[i].cross_edges == a[i].m * a[i].n / 2;
        positives += (a[i].a_iss ? 1 : 0) + (a[i].b_iss ? 1 : 0);
    }
    return {same && verified && a.size() == 32,
            std::to_string(a.size()) + " instances, " + std::to_string(positives) + " ISS sides, deterministic=" +
                (same ? "yes" : "no") + ", re-verified=" + (verified ? "yes" : "no")};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"switching-algebra-exhaustive", switching_algebra},
        {"fig1-reproduction", fig1_reproduction},
        {"order4-census", order4_census},
        {"tadpole-example", tadpole_example},
        {"vertex-iss-examples", vertex_iss_examples},
        {"edge-iss-examples", edge_iss_examples},
        {"edge-iss-sufficiency-order6", sufficiency},
        {"swept-report-order6", swept_report},
        {"seidel-invariant", seidel_invariance},
        {"complement-class-size-order6", complement_class_sizes},
        {"iso-oracle-equivalence", iso_oracle_equivalence},
        {"half-join-sweep", half_join_report},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.ok ? 0 : 1;
        std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

// seidel: command-line front end for switching, ISS queries, the census
// and the verification suites.
//
// Exit codes: 0 ok, 1 asserted-claim violation, 2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seidel/report.hpp"
#include "seidel/seidel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphInput {
    std::string graph6;
    bool from_stdin = false;

    std::vector<seidel::Graph> load() const
    {
        if (from_stdin == !graph6.empty())
            throw UsageError("give exactly one of --graph or --stdin");
        std::vector<seidel::Graph> out;
        if (!from_stdin) {
            out.push_back(seidel::from_graph6(graph6));
            return out;
        }
        std::string line;
        while (std::getline(std::cin, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (!line.empty())
                out.push_back(seidel::from_graph6(line));
        }
        if (out.empty())
            throw UsageError("no graph on stdin");
        return out;
    }
};

void add_graph_input(CLI::App* cmd, GraphInput& in)
{
    cmd->add_option("--graph", in.graph6, "graph6 string");
    cmd->add_flag("--stdin", in.from_stdin, "read graph6 lines from stdin");
}

std::vector<int> parse_index_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad vertex index '" + item + "'");
        }
        if (used != item.size())
            throw UsageError("bad vertex index '" + item + "'");
        out.push_back(v);
    }
    return out;
}

/// Writes primary output to --out when given, else stdout. Summary lines go
/// to stdout when primary output is a file and to stderr otherwise, so
/// stdout stays machine readable.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw UsageError("cannot write '" + path + "'");
        }
    }

    std::ostream& data() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    std::ostream& summary() { return file_.is_open() ? std::cout : std::cerr; }

private:
    std::ofstream file_;
};

int cmd_switch(const GraphInput& in, const std::string& set_text)
{
    const auto members = parse_index_list(set_text);
    for (const auto& g : in.load()) {
        const seidel::VertexSet s(g.order(), members);
        std::cout << seidel::to_graph6(seidel::switch_set(g, s)) << '\n';
    }
    return kExitOk;
}

int cmd_iss(const GraphInput& in, const std::string& mode, const std::string& out_path)
{
    using nlohmann::ordered_json;
    Sink sink(out_path);
    for (const auto& g : in.load()) {
        seidel::check_bound("iss", g.order(), seidel::kMaxFamilyOrder);
        const std::string g6 = seidel::to_graph6(g);
        auto emit = [&](ordered_json j) {
            ordered_json line;
            line["graph6"] = g6;
            line.update(j);
            sink.data() << line.dump() << '\n';
        };
        if (mode == "family") {
            const auto family = seidel::iss_family(g);
            for (const auto& s : family.members) {
                ordered_json j;
                j["kind"] = "member";
                j.update(seidel::to_json(s));
                emit(j);
            }
            ordered_json j;
            j["kind"] = "closure";
            j["members"] = family.size();
            j["closed_under_delta"] = family.closed_under_delta;
            if (family.witness)
                j["witness"] = {seidel::to_json(family.witness->s), seidel::to_json(family.witness->t),
                                seidel::to_json(family.witness->sum)};
            emit(j);
        } else if (mode == "vertices") {
            const auto viss = seidel::vertex_iss_set(g);
            for (int v = 0; v < g.order(); ++v) {
                ordered_json j;
                j["vertex"] = v;
                j["iss"] = viss.contains(v);
                emit(j);
            }
        } else if (mode == "edges") {
            for (auto [x, y] : g.edges())
                emit(seidel::to_json(seidel::edge_iss_theorem(g, x, y)));
        } else {
            throw UsageError("unknown mode '" + mode + "' (family, vertices, edges)");
        }
    }
    return kExitOk;
}

int cmd_census(int order, const std::string& out_path, int jobs)
{
    if (order < 1)
        throw UsageError("--order must be at least 1");
    Sink sink(out_path);
    const auto records = seidel::census(order, jobs);
    sink.data() << seidel::to_jsonl(records);
    sink.summary() << records.size() << (records.size() == 1 ? " class" : " classes") << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& suite, int max_order, const std::string& out_path, int jobs)
{
    if (suite != "all" && std::find(seidel::verify::suite_names().begin(), seidel::verify::suite_names().end(),
                                    suite) == seidel::verify::suite_names().end())
        throw UsageError("unknown suite '" + suite + "'");
    if (max_order < 1)
        throw UsageError("--max-order must be at least 1");
    Sink sink(out_path);
    const auto reports = seidel::verify::run(suite, {max_order, jobs});
    sink.data() << seidel::findings_jsonl(reports);
    sink.summary() << seidel::summary_text(reports);
    for (const auto& r : reports)
        if (!r.passed())
            return kExitViolation;
    return kExitOk;
}

std::string complete_or_empty(const std::string& value)
{
    if (value != "complete" && value != "empty")
        throw UsageError("expected 'complete' or 'empty', got '" + value + "'");
    return value;
}

int cmd_gen(const std::string& family, const std::vector<int>& params, const std::string& a,
            const std::string& b)
{
    const bool a_complete = complete_or_empty(a) == "complete";
    const bool b_complete = complete_or_empty(b) == "complete";
    std::cout << seidel::to_graph6(seidel::gen(family, params, a_complete, b_complete)) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Seidel switching, switching classes and identity switches of small graphs"};
    app.require_subcommand(1);

    GraphInput switch_in;
    std::string set_text;
    auto* sw = app.add_subcommand("switch", "switch a graph by a vertex set");
    add_graph_input(sw, switch_in);
    sw->add_option("--set", set_text, "comma-separated vertex indices");

    GraphInput iss_in;
    std::string mode = "family";
    std::string iss_out;
    auto* iss = app.add_subcommand("iss", "identity switches of a graph");
    add_graph_input(iss, iss_in);
    iss->add_option("--mode", mode, "family | vertices | edges")->capture_default_str();
    iss->add_option("--out", iss_out, "write JSONL here instead of stdout");

    int order = 0;
    int jobs = 1;
    std::string census_out;
    auto* cen = app.add_subcommand("census", "all switching classes of one order");
    cen->add_option("--order", order, "graph order (at most 7)")->required();
    cen->add_option("--out", census_out, "write JSONL here instead of stdout");
    cen->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    std::string suite = "all";
    int max_order = 5;
    std::string verify_out;
    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", suite,
                    "algebra | iso | invariants | iss | edge-iss | classes | constructions | all")
        ->capture_default_str();
    ver->add_option("--max-order", max_order, "largest graph order swept")->capture_default_str();
    ver->add_option("--out", verify_out, "write findings JSONL here instead of stdout");
    ver->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    std::string family;
    std::vector<int> params;
    std::string a_kind = "empty";
    std::string b_kind = "empty";
    auto* gen = app.add_subcommand("gen", "print a named graph as graph6");
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", params, "integer parameters");
    gen->add_option("--a", a_kind, "half_join side A: complete | empty")->capture_default_str();
    gen->add_option("--b", b_kind, "half_join side B: complete | empty")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sw)
            return cmd_switch(switch_in, set_text);
        if (*iss)
            return cmd_iss(iss_in, mode, iss_out);
        if (*cen)
            return cmd_census(order, census_out, jobs);
        if (*ver)
            return cmd_verify(suite, max_order, verify_out, jobs);
        if (*gen)
            return cmd_gen(family, params, a_kind, b_kind);
    } catch (const std::exception& e) {
        std::cerr << "seidel: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

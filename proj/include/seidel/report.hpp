#ifndef SEIDEL_REPORT_HPP
#define SEIDEL_REPORT_HPP

// JSONL serialization of census records, findings and ISS reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "seidel/classes.hpp"
#include "seidel/iss.hpp"
#include "seidel/verify.hpp"

namespace seidel {

inline nlohmann::ordered_json to_json(const IntPolynomial& p)
{
    auto arr = nlohmann::ordered_json::array();
    for (auto c : p.coefficients)
        arr.push_back(c);
    return arr;
}

/// Field names and order are fixed: order, class_id, rep_g6,
/// iso_class_count, labeled_count, seidel_poly, iss_min, iss_max.
inline nlohmann::ordered_json to_json(const CensusRecord& r)
{
    nlohmann::ordered_json j;
    j["order"] = r.order;
    j["class_id"] = r.class_id;
    j["rep_g6"] = r.rep_g6;
    j["iso_class_count"] = r.iso_class_count;
    j["labeled_count"] = r.labeled_count;
    j["seidel_poly"] = to_json(r.seidel_poly);
    j["iss_min"] = r.iss_min;
    j["iss_max"] = r.iss_max;
    return j;
}

inline nlohmann::ordered_json to_json(const verify::Finding& f)
{
    nlohmann::ordered_json j;
    j["claim_id"] = f.claim_id;
    j["graph6"] = f.graph6;
    j["witness_masks"] = f.witness_masks;
    j["detail"] = f.detail;
    return j;
}

inline nlohmann::ordered_json to_json(const VertexSet& s)
{
    nlohmann::ordered_json j;
    j["mask"] = s.to_binary();
    j["set"] = s.members();
    return j;
}

inline nlohmann::ordered_json to_json(const EdgeIssReport& r)
{
    nlohmann::ordered_json j;
    j["edge"] = {r.x, r.y};
    j["direct"] = r.direct;
    j["condition_i"] = r.condition_i;
    j["condition_ii"] = r.condition_ii;
    j["theorem_verdict"] = r.theorem_verdict;
    j["agree"] = r.agree;
    return j;
}

/// One JSON object per line.
template <class Range>
std::string to_jsonl(const Range& items)
{
    std::string out;
    for (const auto& item : items) {
        out += to_json(item).dump();
        out += '\n';
    }
    return out;
}

inline std::string findings_jsonl(const std::vector<verify::SuiteReport>& reports)
{
    std::string out;
    for (const auto& r : reports)
        for (const auto& c : r.claims)
            out += to_jsonl(c.findings);
    return out;
}

/// Human-readable summary: one line per claim, then a verdict line.
inline std::string summary_text(const std::vector<verify::SuiteReport>& reports)
{
    std::string out;
    bool ok = true;
    for (const auto& r : reports) {
        for (const auto& c : r.claims) {
            out += r.suite + " " + c.claim_id + (c.asserted ? " [asserted] " : " [swept] ") +
                   "checked=" + std::to_string(c.checked) + " agree=" + std::to_string(c.agree) +
                   " disagree=" + std::to_string(c.disagree);
            if (c.asserted)
                out += c.passed() ? " PASS" : " FAIL";
            out += '\n';
        }
        ok = ok && r.passed();
    }
    out += ok ? "verify: PASS\n" : "verify: FAIL\n";
    return out;
}

} // namespace seidel

#endif // SEIDEL_REPORT_HPP

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccseq/constructions.hpp"
#include "ccseq/phase.hpp"
#include "ccseq/radix_profile.hpp"
#include "ccseq/verification.hpp"

namespace ccseq {

// Malformed or unreadable codeset documents.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CodesetKind { gcp, igc, zcac, zcacs };

inline const char* kind_name(CodesetKind k)
{
    switch (k) {
    case CodesetKind::gcp: return "gcp";
    case CodesetKind::igc: return "igc";
    case CodesetKind::zcac: return "zcac";
    case CodesetKind::zcacs: return "zcacs";
    }
    return "?";
}

// In-memory form of a codeset file. `codes` is used by gcp (one code of two
// rows) and igc; `array_sets` by zcac (exactly one set) and zcacs.
struct CodesetDocument {
    CodesetKind kind = CodesetKind::igc;
    int lambda = 2;
    std::vector<PrimePower> profile;
    std::optional<int> boolean_m;
    std::vector<PhaseCode> codes;
    std::vector<std::vector<PhaseArray2D>> array_sets;
    std::vector<ZetaQuad> quads; // one per array set

    friend bool operator==(const CodesetDocument&, const CodesetDocument&) = default;
};

namespace detail {

inline nlohmann::json rows_json(const std::vector<PhaseSequence>& rows)
{
    auto out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back(r.phases);
    return out;
}

inline nlohmann::json array_json(const PhaseArray2D& x)
{
    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < x.rows; ++i)
        out.push_back(x.row(i).phases);
    return out;
}

template <typename T>
T required(const nlohmann::json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw format_error(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("field '") + key + "': " + e.what());
    }
}

inline std::vector<int> phase_row(const nlohmann::json& j, int lambda)
{
    if (!j.is_array())
        throw format_error("phase row is not an array");
    std::vector<int> row;
    row.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw format_error("phases must be integers");
        const auto p = v.get<std::int64_t>();
        if (p < 0 || p >= lambda)
            throw format_error("phase " + std::to_string(p) + " outside Z_" + std::to_string(lambda));
        row.push_back(static_cast<int>(p));
    }
    return row;
}

inline PhaseArray2D parse_array(const nlohmann::json& j, int lambda)
{
    if (!j.is_array() || j.empty())
        throw format_error("array must be a non-empty list of rows");
    std::vector<int> data;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto row = phase_row(j[i], lambda);
        if (i == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw format_error("array rows are ragged");
        data.insert(data.end(), row.begin(), row.end());
    }
    return {lambda, j.size(), cols, std::move(data)};
}

inline nlohmann::json quad_json(const ZetaQuad& q)
{
    return {{"s1", q.s1}, {"s2", q.s2}, {"t1", q.t1}, {"t2", q.t2}};
}

} // namespace detail

inline nlohmann::json codeset_to_json(const CodesetDocument& doc)
{
    nlohmann::json j;
    j["kind"] = kind_name(doc.kind);
    j["lambda"] = doc.lambda;
    auto profile = nlohmann::json::array();
    for (const auto& f : doc.profile)
        profile.push_back({f.p, f.m});
    j["profile"] = profile;
    if (doc.boolean_m)
        j["boolean_m"] = *doc.boolean_m;
    auto labels = nlohmann::json::array();
    auto phases = nlohmann::json::array();
    switch (doc.kind) {
    case CodesetKind::gcp:
    case CodesetKind::igc:
        for (const auto& c : doc.codes) {
            if (doc.kind == CodesetKind::igc)
                labels.push_back({{"s", c.label.s}, {"t", c.label.t}});
            phases.push_back(detail::rows_json(c.rows));
        }
        break;
    case CodesetKind::zcac:
    case CodesetKind::zcacs:
        for (const auto& q : doc.quads)
            labels.push_back(detail::quad_json(q));
        for (const auto& set : doc.array_sets) {
            auto arrays = nlohmann::json::array();
            for (const auto& x : set)
                arrays.push_back(detail::array_json(x));
            phases.push_back(std::move(arrays));
        }
        break;
    }
    j["labels"] = labels;
    j["phases"] = phases;
    return j;
}

inline std::string encode_codeset(const CodesetDocument& doc) { return codeset_to_json(doc).dump() + "\n"; }

inline CodesetDocument codeset_from_json(const nlohmann::json& j)
{
    CodesetDocument doc;
    const auto kind = detail::required<std::string>(j, "kind");
    if (kind == "gcp")
        doc.kind = CodesetKind::gcp;
    else if (kind == "igc")
        doc.kind = CodesetKind::igc;
    else if (kind == "zcac")
        doc.kind = CodesetKind::zcac;
    else if (kind == "zcacs")
        doc.kind = CodesetKind::zcacs;
    else
        throw format_error("unknown kind '" + kind + "'");
    doc.lambda = detail::required<int>(j, "lambda");
    if (doc.lambda < 1)
        throw format_error("lambda must be positive");
    for (const auto& f : detail::required<std::vector<std::vector<int>>>(j, "profile")) {
        if (f.size() != 2)
            throw format_error("profile entries must be [p, m] pairs");
        doc.profile.push_back({f[0], f[1]});
    }
    if (j.contains("boolean_m"))
        doc.boolean_m = detail::required<int>(j, "boolean_m");
    const auto labels = detail::required<nlohmann::json>(j, "labels");
    const auto phases = detail::required<nlohmann::json>(j, "phases");
    if (!labels.is_array() || !phases.is_array())
        throw format_error("labels and phases must be arrays");

    switch (doc.kind) {
    case CodesetKind::gcp:
    case CodesetKind::igc:
        if (doc.kind == CodesetKind::igc && labels.size() != phases.size())
            throw format_error("one label per code expected");
        for (std::size_t c = 0; c < phases.size(); ++c) {
            PhaseCode code{doc.lambda, {}, {}};
            if (!phases[c].is_array())
                throw format_error("code must be a list of rows");
            for (const auto& row : phases[c])
                code.rows.emplace_back(doc.lambda, detail::phase_row(row, doc.lambda));
            if (doc.kind == CodesetKind::igc)
                code.label = {detail::required<std::vector<int>>(labels[c], "s"),
                              detail::required<std::vector<int>>(labels[c], "t")};
            doc.codes.push_back(std::move(code));
        }
        break;
    case CodesetKind::zcac:
    case CodesetKind::zcacs:
        if (labels.size() != phases.size())
            throw format_error("one label per array set expected");
        for (std::size_t s = 0; s < phases.size(); ++s) {
            const auto& l = labels[s];
            doc.quads.push_back({detail::required<std::vector<int>>(l, "s1"), detail::required<std::vector<int>>(l, "s2"),
                                 detail::required<std::vector<int>>(l, "t1"), detail::required<std::vector<int>>(l, "t2")});
            if (!phases[s].is_array())
                throw format_error("array set must be a list of arrays");
            std::vector<PhaseArray2D> set;
            for (const auto& x : phases[s])
                set.push_back(detail::parse_array(x, doc.lambda));
            doc.array_sets.push_back(std::move(set));
        }
        break;
    }
    return doc;
}

inline CodesetDocument decode_codeset(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error(std::string("invalid JSON: ") + e.what());
    }
    return codeset_from_json(j);
}

inline nlohmann::json report_to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["claim"] = claim_name(r.claim);
    j["params"] = r.params;
    j["passed"] = r.passed;
    j["peak"] = r.peak;
    auto violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"ids", v.ids},
                              {"shifts", v.shifts},
                              {"counts", v.counts},
                              {"magnitude", v.magnitude},
                              {"expected", v.expected}});
    j["violations"] = violations;
    j["violation_count"] = r.violation_count;
    j["values_checked"] = r.values_checked;
    j["max_zero_residual"] = r.max_zero_residual;
    return j;
}

} // namespace ccseq

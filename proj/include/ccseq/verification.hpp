#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccseq/correlation.hpp"
#include "ccseq/errors.hpp"
#include "ccseq/parallel.hpp"
#include "ccseq/phase.hpp"

namespace ccseq {

enum class Claim { gcp, zccs, igc, zcac, zcacs, bound };

inline const char* claim_name(Claim c)
{
    switch (c) {
    case Claim::gcp: return "GCP";
    case Claim::zccs: return "ZCCS";
    case Claim::igc: return "IGC";
    case Claim::zcac: return "ZCAC";
    case Claim::zcacs: return "ZCACS";
    case Claim::bound: return "BOUND";
    }
    return "?";
}

// A correlation value that differs from what the claim requires.
struct Violation {
    std::vector<std::size_t> ids;     // code / array-set indices involved, if any
    std::vector<std::int64_t> shifts; // tau, or (tau1, tau2)
    std::vector<std::int64_t> counts; // exact value as omega-exponent counts
    double magnitude = 0.0;
    std::int64_t expected = 0;
};

struct VerificationReport {
    static constexpr std::size_t max_listed_violations = 100;

    Claim claim = Claim::gcp;
    std::map<std::string, std::int64_t> params;
    bool passed = true;
    std::int64_t peak = 0;
    std::vector<Violation> violations; // first max_listed_violations, scan order
    std::size_t violation_count = 0;
    std::size_t values_checked = 0;
    // Largest |float image| / term count among values found exactly zero.
    double max_zero_residual = 0.0;
};

namespace detail {

struct ScanTally {
    std::vector<Violation> violations;
    std::size_t violation_count = 0;
    std::size_t values_checked = 0;
    double max_zero_residual = 0.0;

    void check(const CorrelationValue& v, std::int64_t expected, std::vector<std::size_t> ids,
               std::vector<std::int64_t> shifts)
    {
        ++values_checked;
        const CorrelationValue diff = expected == 0 ? v : v - CorrelationValue::integer(v.lambda(), expected);
        if (diff.is_zero()) {
            if (expected == 0) {
                const double terms = static_cast<double>(std::max<std::int64_t>(1, v.term_count()));
                max_zero_residual = std::max(max_zero_residual, std::abs(v.complex()) / terms);
            }
            return;
        }
        ++violation_count;
        if (violations.size() < VerificationReport::max_listed_violations)
            violations.push_back({std::move(ids), std::move(shifts), v.counts(), std::abs(v.complex()), expected});
    }

    void merge(ScanTally&& o)
    {
        for (auto& v : o.violations)
            if (violations.size() < VerificationReport::max_listed_violations)
                violations.push_back(std::move(v));
        violation_count += o.violation_count;
        values_checked += o.values_checked;
        max_zero_residual = std::max(max_zero_residual, o.max_zero_residual);
    }
};

inline void finish(VerificationReport& r, std::vector<ScanTally>&& parts)
{
    ScanTally all;
    for (auto& p : parts)
        all.merge(std::move(p));
    r.violations = std::move(all.violations);
    r.violation_count = all.violation_count;
    r.values_checked = all.values_checked;
    r.max_zero_residual = all.max_zero_residual;
    r.passed = r.violation_count == 0;
}

inline void check_codes(const std::vector<PhaseCode>& codes)
{
    for (const auto& c : codes) {
        if (c.lambda != codes.front().lambda)
            throw domain_error("codes use different moduli");
        if (c.row_count() != codes.front().row_count() || c.length() != codes.front().length())
            throw domain_error("codes have different shapes");
        for (const auto& r : c.rows)
            if (r.size() != c.length() || r.lambda != c.lambda)
                throw domain_error("code rows are ragged");
    }
}

inline void check_arrays(const std::vector<PhaseArray2D>& arrays, const PhaseArray2D& ref)
{
    for (const auto& x : arrays)
        if (x.lambda != ref.lambda || x.rows != ref.rows || x.cols != ref.cols)
            throw domain_error("arrays have different shapes or moduli");
}

inline void check_zone(std::int64_t z, std::size_t len, const char* what)
{
    if (z < 1 || static_cast<std::size_t>(z) > len)
        throw domain_error(std::string(what) + " must lie in [1, " + std::to_string(len) + "]");
}

// Shared scan for ZCCS/IGC: same code and same group inside |tau| < Z,
// different groups (when `grouped`) over every |tau| < L.
inline VerificationReport verify_code_set(Claim claim, const std::vector<PhaseCode>& codes, std::int64_t zcz,
                                          bool grouped)
{
    VerificationReport report;
    report.claim = claim;
    if (codes.empty())
        return report;
    check_codes(codes);
    const auto L = static_cast<std::int64_t>(codes.front().length());
    const auto M = static_cast<std::int64_t>(codes.front().row_count());
    check_zone(zcz, static_cast<std::size_t>(L), "Z");
    const std::size_t n = codes.size();
    std::map<std::vector<int>, std::int64_t> groups;
    for (const auto& c : codes)
        ++groups[c.label.t];
    report.params = {{"K", static_cast<std::int64_t>(n)}, {"M", M}, {"L", L}, {"Z", zcz}};
    if (grouped)
        report.params["groups"] = static_cast<std::int64_t>(groups.size());
    report.peak = code_accf(codes.front(), codes.front(), 0).counts()[0];

    auto parts = parallel_map<ScanTally>(n * n, [&](std::size_t pair) {
        ScanTally tally;
        const std::size_t i = pair / n, j = pair % n;
        const bool same_group = !grouped || codes[i].label.t == codes[j].label.t;
        const std::int64_t reach = same_group ? zcz : L;
        for (std::int64_t tau = -(reach - 1); tau < reach; ++tau) {
            const std::int64_t expected = (i == j && tau == 0) ? M * L : 0;
            tally.check(code_accf(codes[i], codes[j], tau), expected, {i, j}, {tau});
        }
        return tally;
    });
    finish(report, std::move(parts));
    return report;
}

} // namespace detail

// Golay pair: A(a)(tau) + A(b)(tau) = 0 for 0 < |tau| < L and 2L at the origin.
inline VerificationReport verify_gcp(const PhaseSequence& a, const PhaseSequence& b)
{
    if (a.size() != b.size() || a.lambda != b.lambda)
        throw domain_error("verify_gcp: sequences differ in length or modulus");
    VerificationReport report;
    report.claim = Claim::gcp;
    const auto L = static_cast<std::int64_t>(a.size());
    report.params = {{"L", L}, {"Z", L}};
    detail::ScanTally tally;
    for (std::int64_t tau = -(L - 1); tau < L; ++tau) {
        const auto v = aacf(a, tau) + aacf(b, tau);
        if (tau == 0)
            report.peak = v.counts()[0];
        tally.check(v, tau == 0 ? 2 * L : 0, {}, {tau});
    }
    std::vector<detail::ScanTally> parts;
    parts.push_back(std::move(tally));
    detail::finish(report, std::move(parts));
    return report;
}

// Z-complementary code set with zone Z: every ordered code pair vanishes inside |tau| < Z
// except the ML peak of each code at the origin.
inline VerificationReport verify_zccs(const std::vector<PhaseCode>& codes, std::int64_t zcz)
{
    return detail::verify_code_set(Claim::zccs, codes, zcz, false);
}

// IGC code set: groups are the codes sharing label.t. Intra-group pairs are
// checked inside |tau| < Z, inter-group pairs over every |tau| < L.
inline VerificationReport verify_igc(const std::vector<PhaseCode>& codes, std::int64_t zcz)
{
    return detail::verify_code_set(Claim::igc, codes, zcz, true);
}

struct BoundCheck {
    bool feasible = false;
    bool optimal = false;
};

// K <= M floor(L/Z); equality means the set is optimal.
inline BoundCheck verify_zccs_bound(std::int64_t K, std::int64_t M, std::int64_t L, std::int64_t Z)
{
    if (K < 1 || M < 1 || L < 1 || Z < 1 || Z > L)
        throw domain_error("verify_zccs_bound: need positive K, M, L and 1 <= Z <= L");
    const std::int64_t cap = M * (L / Z);
    return {K <= cap, K == cap};
}

// 2-D ZCAC: sum_i A(X_i)(tau1, tau2) is M L1 L2 at the origin and zero
// elsewhere inside |tau1| < Z1, |tau2| < Z2.
inline VerificationReport verify_zcac(const std::vector<PhaseArray2D>& arrays, std::int64_t z1, std::int64_t z2)
{
    VerificationReport report;
    report.claim = Claim::zcac;
    if (arrays.empty())
        return report;
    const auto& ref = arrays.front();
    detail::check_arrays(arrays, ref);
    detail::check_zone(z1, ref.rows, "Z1");
    detail::check_zone(z2, ref.cols, "Z2");
    const auto M = static_cast<std::int64_t>(arrays.size());
    const auto L1 = static_cast<std::int64_t>(ref.rows), L2 = static_cast<std::int64_t>(ref.cols);
    report.params = {{"M", M}, {"L1", L1}, {"L2", L2}, {"Z1", z1}, {"Z2", z2}};
    CorrelationValue origin(ref.lambda);
    for (const auto& x : arrays)
        origin += accf_2d(x, x, 0, 0);
    report.peak = origin.counts()[0];

    auto parts = parallel_map<detail::ScanTally>(static_cast<std::size_t>(2 * z1 - 1), [&](std::size_t row) {
        detail::ScanTally tally;
        const std::int64_t tau1 = static_cast<std::int64_t>(row) - (z1 - 1);
        for (std::int64_t tau2 = -(z2 - 1); tau2 < z2; ++tau2) {
            CorrelationValue sum(ref.lambda);
            for (const auto& x : arrays)
                sum += accf_2d(x, x, tau1, tau2);
            const bool origin_shift = tau1 == 0 && tau2 == 0;
            tally.check(sum, origin_shift ? M * L1 * L2 : 0, {}, {tau1, tau2});
        }
        return tally;
    });
    detail::finish(report, std::move(parts));
    return report;
}

// 2-D ZCACS: each member is a ZCAC, and for distinct members u != v the sum
// sum_i C(X_i^u, X_i^v)(tau1, tau2) vanishes on the whole zone including the origin.
inline VerificationReport verify_zcacs(const std::vector<std::vector<PhaseArray2D>>& sets, std::int64_t z1,
                                       std::int64_t z2)
{
    VerificationReport report;
    report.claim = Claim::zcacs;
    if (sets.empty() || sets.front().empty())
        return report;
    const auto& ref = sets.front().front();
    for (const auto& s : sets) {
        if (s.size() != sets.front().size())
            throw domain_error("verify_zcacs: member sets differ in size");
        detail::check_arrays(s, ref);
    }
    detail::check_zone(z1, ref.rows, "Z1");
    detail::check_zone(z2, ref.cols, "Z2");
    const std::size_t K = sets.size();
    const auto M = static_cast<std::int64_t>(sets.front().size());
    const auto L1 = static_cast<std::int64_t>(ref.rows), L2 = static_cast<std::int64_t>(ref.cols);
    report.params = {{"K", static_cast<std::int64_t>(K)}, {"M", M}, {"L1", L1},
                     {"L2", L2}, {"Z1", z1}, {"Z2", z2}};
    CorrelationValue origin(ref.lambda);
    for (const auto& x : sets.front())
        origin += accf_2d(x, x, 0, 0);
    report.peak = origin.counts()[0];

    const auto width = static_cast<std::size_t>(2 * z1 - 1);
    auto parts = parallel_map<detail::ScanTally>(K * K * width, [&](std::size_t job) {
        detail::ScanTally tally;
        const std::size_t pair = job / width;
        const std::size_t u = pair / K, v = pair % K;
        const std::int64_t tau1 = static_cast<std::int64_t>(job % width) - (z1 - 1);
        for (std::int64_t tau2 = -(z2 - 1); tau2 < z2; ++tau2) {
            CorrelationValue sum(ref.lambda);
            for (std::size_t i = 0; i < sets[u].size(); ++i)
                sum += accf_2d(sets[u][i], sets[v][i], tau1, tau2);
            const bool peak = u == v && tau1 == 0 && tau2 == 0;
            tally.check(sum, peak ? M * L1 * L2 : 0, {u, v}, {tau1, tau2});
        }
        return tally;
    });
    detail::finish(report, std::move(parts));
    return report;
}

} // namespace ccseq

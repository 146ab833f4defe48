#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ccseq/errors.hpp"
#include "ccseq/mixed_radix.hpp"
#include "ccseq/phase.hpp"
#include "ccseq/poly.hpp"
#include "ccseq/radix_profile.hpp"

namespace ccseq {

// Element of Z_p1 x ... x Z_pk (one residue per prime of the profile).
using LabelVector = std::vector<int>;

inline LabelVector label_from_index(const RadixProfile& profile, std::uint64_t index)
{
    return to_mixed_radix(index, profile.label_domain()).digits;
}

inline std::uint64_t label_index(const RadixProfile& profile, const LabelVector& label)
{
    return from_mixed_radix({profile.label_domain(), label});
}

namespace detail {

inline void check_permutation(const std::vector<int>& perm, std::size_t n, const std::string& what)
{
    if (perm.size() != n)
        throw parameter_error(what + ": expected a permutation of " + std::to_string(n) + " elements");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
            throw parameter_error(what + ": not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

inline void check_label(const RadixProfile& profile, const LabelVector& label, const std::string& what)
{
    if (label.size() != profile.k())
        throw parameter_error(what + ": expected " + std::to_string(profile.k()) + " components");
    for (std::size_t a = 0; a < label.size(); ++a)
        if (label[a] < 0 || label[a] >= profile.factors()[a].p)
            throw parameter_error(what + ": component " + std::to_string(a) + " out of range");
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Fisher-Yates on raw engine output; reproducible across standard libraries.
inline std::vector<int> random_permutation(std::mt19937_64& rng, std::size_t n)
{
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = static_cast<int>(i);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[below(rng, i)]);
    return perm;
}

// Copy of `poly` as a polynomial over `target`, with its variables placed at
// positions offset, offset+1, ... of the target domain.
inline MultivarPoly embed(const MultivarPoly& poly, const Domain& target, std::size_t offset)
{
    MultivarPoly out(target, poly.lambda());
    for (const auto& [m, c] : poly.terms()) {
        Monomial wide(target.variable_count(), 0);
        for (std::size_t v = 0; v < m.size(); ++v)
            wide[offset + v] = m[v];
        out.add_term(wide, c);
    }
    return out;
}

} // namespace detail

// Parameters of the IGC construction: for each prime factor alpha a
// permutation of its m_alpha - 1 variables (0-based), linear coefficients
// c_{alpha,beta} and a constant c_alpha, all in Z_lambda.
struct IgcParams {
    RadixProfile profile;
    std::vector<std::vector<int>> perms;
    std::vector<std::vector<int>> lin_coeffs;
    std::vector<int> consts;

    // Identity permutations and zero coefficients.
    static IgcParams defaults(const RadixProfile& profile)
    {
        IgcParams p{profile, {}, {}, std::vector<int>(profile.k(), 0)};
        for (const auto& f : profile.factors()) {
            std::vector<int> id(static_cast<std::size_t>(f.m - 1));
            for (std::size_t i = 0; i < id.size(); ++i)
                id[i] = static_cast<int>(i);
            p.perms.push_back(id);
            p.lin_coeffs.emplace_back(id.size(), 0);
        }
        return p;
    }

    static IgcParams random(const RadixProfile& profile, std::mt19937_64& rng)
    {
        IgcParams p{profile, {}, {}, {}};
        const auto lambda = static_cast<std::uint64_t>(profile.lambda());
        for (const auto& f : profile.factors()) {
            const auto n = static_cast<std::size_t>(f.m - 1);
            p.perms.push_back(detail::random_permutation(rng, n));
            std::vector<int> lin(n);
            for (auto& c : lin)
                c = static_cast<int>(detail::below(rng, lambda));
            p.lin_coeffs.push_back(std::move(lin));
            p.consts.push_back(static_cast<int>(detail::below(rng, lambda)));
        }
        return p;
    }

    void validate() const
    {
        const std::size_t k = profile.k();
        if (perms.size() != k || lin_coeffs.size() != k || consts.size() != k)
            throw parameter_error("IGC parameters must provide one entry per prime factor");
        for (std::size_t a = 0; a < k; ++a) {
            const auto n = static_cast<std::size_t>(profile.factors()[a].m - 1);
            detail::check_permutation(perms[a], n, "permutation of factor " + std::to_string(a));
            if (lin_coeffs[a].size() != n)
                throw parameter_error("factor " + std::to_string(a) + " needs " + std::to_string(n) +
                                      " linear coefficients");
        }
    }
};

// s, t, gamma of a sequence a_{s,t}^gamma.
struct GroupLabel {
    LabelVector s;
    LabelVector t;
    LabelVector gamma;
};

// Parameters of a Golay pair over Z_2^m: permutation pi of the m variables
// (0-based), linear coefficients g, offsets e (for a) and e2 (for b).
struct GcpParams {
    int m = 1;
    int lambda = 2;
    std::vector<int> pi;
    std::vector<int> g;
    int e = 0;
    int e2 = 0;

    static GcpParams defaults(int m, int lambda)
    {
        GcpParams p{m, lambda, {}, std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), 0), 0, 0};
        for (int i = 0; i < m; ++i)
            p.pi.push_back(i);
        return p;
    }

    static GcpParams random(int m, int lambda, std::mt19937_64& rng)
    {
        GcpParams p{m, lambda, detail::random_permutation(rng, static_cast<std::size_t>(m)), {}, 0, 0};
        const auto l = static_cast<std::uint64_t>(lambda);
        for (int i = 0; i < m; ++i)
            p.g.push_back(static_cast<int>(detail::below(rng, l)));
        p.e = static_cast<int>(detail::below(rng, l));
        p.e2 = static_cast<int>(detail::below(rng, l));
        return p;
    }

    void validate() const
    {
        if (m < 1)
            throw parameter_error("Boolean dimension m must be at least 1");
        if (m > 20)
            throw parameter_error("Boolean dimension m is too large");
        if (lambda < 2 || lambda % 2 != 0)
            throw parameter_error("Golay pair construction needs an even lambda, got " + std::to_string(lambda));
        detail::check_permutation(pi, static_cast<std::size_t>(m), "Golay permutation");
        if (g.size() != static_cast<std::size_t>(m))
            throw parameter_error("Golay pair needs " + std::to_string(m) + " linear coefficients");
    }

    Domain domain() const { return Domain({{2, m}}); }
};

// (s1, s2, t1, t2) selecting the two IGC groups interleaved by a 2-D array set.
struct ZetaQuad {
    LabelVector s1;
    LabelVector s2;
    LabelVector t1;
    LabelVector t2;

    friend bool operator==(const ZetaQuad&, const ZetaQuad&) = default;
};

// f_alpha over Z_p^(m-1) (alpha is 0-based):
//   (lambda/p) sum_beta v_{pi(beta)} v_{pi(beta+1)} + sum_beta c_{alpha,beta} v_beta + c_alpha.
inline MultivarPoly build_f_alpha(const IgcParams& params, std::size_t alpha)
{
    params.validate();
    if (alpha >= params.profile.k())
        throw range_error("factor index " + std::to_string(alpha) + " out of range");
    const auto [p, m] = params.profile.factors()[alpha];
    const int lambda = params.profile.lambda();
    const int scale = lambda / p;
    const auto& pi = params.perms[alpha];
    MultivarPoly f(Domain({{p, m - 1}}), lambda);
    for (std::size_t b = 0; b + 1 < pi.size(); ++b)
        f.add_product(static_cast<std::size_t>(pi[b]), static_cast<std::size_t>(pi[b + 1]), scale);
    for (std::size_t b = 0; b < pi.size(); ++b)
        f.add_linear(b, params.lin_coeffs[alpha][b]);
    f.add_constant(params.consts[alpha]);
    return f;
}

// f = f_1 + ... + f_k over the reduced domain.
inline MultivarPoly build_f(const IgcParams& params)
{
    const Domain dom = params.profile.reduced_domain();
    MultivarPoly f(dom, params.profile.lambda());
    for (std::size_t a = 0; a < params.profile.k(); ++a)
        f += detail::embed(build_f_alpha(params, a), dom, params.profile.reduced_offset(a));
    return f;
}

// R_t^gamma = f + sum_alpha (lambda/p_alpha)(gamma_alpha v_{pi(1)} + t_alpha v_{pi(m-1)}).
inline MultivarPoly build_R(const IgcParams& params, const LabelVector& t, const LabelVector& gamma)
{
    detail::check_label(params.profile, t, "t");
    detail::check_label(params.profile, gamma, "gamma");
    MultivarPoly r = build_f(params);
    const int lambda = params.profile.lambda();
    for (std::size_t a = 0; a < params.profile.k(); ++a) {
        const int scale = lambda / params.profile.factors()[a].p;
        const std::size_t off = params.profile.reduced_offset(a);
        const auto& pi = params.perms[a];
        r.add_linear(off + static_cast<std::size_t>(pi.front()), scale * gamma[a]);
        r.add_linear(off + static_cast<std::size_t>(pi.back()), scale * t[a]);
    }
    return r;
}

// T_s = sum_alpha (lambda/p_alpha) s_alpha v'_alpha over Z_p1 x ... x Z_pk.
inline MultivarPoly build_T(const IgcParams& params, const LabelVector& s)
{
    detail::check_label(params.profile, s, "s");
    MultivarPoly t(params.profile.label_domain(), params.profile.lambda());
    for (std::size_t a = 0; a < params.profile.k(); ++a)
        t.add_linear(a, params.profile.lambda() / params.profile.factors()[a].p * s[a]);
    return t;
}

// a_{s,t}^gamma = R_t^gamma + T_s over reduced_domain x label_domain.
inline MultivarPoly build_a(const IgcParams& params, const GroupLabel& label)
{
    const Domain dom = params.profile.code_domain();
    const auto reduced = params.profile.reduced_domain().variable_count();
    return detail::embed(build_R(params, label.t, label.gamma), dom, 0) +
           detail::embed(build_T(params, label.s), dom, reduced);
}

// C_{s,t}: row i is psi(a_{s,t}^gamma) with gamma the i-th label in mixed-radix order.
inline PhaseCode build_code(const IgcParams& params, const LabelVector& s, const LabelVector& t)
{
    PhaseCode code{params.profile.lambda(), {}, {s, t}};
    const std::uint64_t rows = params.profile.M();
    for (std::uint64_t g = 0; g < rows; ++g)
        code.rows.push_back(materialize_sequence(build_a(params, {s, t, label_from_index(params.profile, g)})));
    return code;
}

// {C_{s,t}}: code index = index(s) + M * index(t), so group t occupies a
// contiguous run of M codes.
inline std::vector<PhaseCode> build_igc_codeset(const IgcParams& params)
{
    params.validate();
    const std::uint64_t m = params.profile.M();
    std::vector<PhaseCode> codes;
    codes.reserve(m * m);
    for (std::uint64_t t = 0; t < m; ++t)
        for (std::uint64_t s = 0; s < m; ++s)
            codes.push_back(build_code(params, label_from_index(params.profile, s), label_from_index(params.profile, t)));
    return codes;
}

// Functions a = f + e and b = f + (lambda/2) x_{pi(1)} + e2 over Z_2^m with
// f = (lambda/2) sum x_{pi(beta)} x_{pi(beta+1)} + sum g_beta x_beta.
inline std::pair<MultivarPoly, MultivarPoly> paterson_functions(const GcpParams& gp)
{
    gp.validate();
    const int half = gp.lambda / 2;
    MultivarPoly f(gp.domain(), gp.lambda);
    for (std::size_t b = 0; b + 1 < gp.pi.size(); ++b)
        f.add_product(static_cast<std::size_t>(gp.pi[b]), static_cast<std::size_t>(gp.pi[b + 1]), half);
    for (std::size_t b = 0; b < gp.g.size(); ++b)
        f.add_linear(b, gp.g[b]);
    MultivarPoly a = f;
    a.add_constant(gp.e);
    MultivarPoly b = f;
    b.add_linear(static_cast<std::size_t>(gp.pi.front()), half);
    b.add_constant(gp.e2);
    return {std::move(a), std::move(b)};
}

inline std::pair<PhaseSequence, PhaseSequence> paterson_pair(const GcpParams& gp)
{
    const auto [a, b] = paterson_functions(gp);
    return {materialize_sequence(a), materialize_sequence(b)};
}

namespace detail {

inline void check_2d_params(const IgcParams& params, const GcpParams& gp, const ZetaQuad& quad)
{
    params.validate();
    gp.validate();
    if (gp.lambda != params.profile.lambda())
        throw parameter_error("Golay pair and IGC parameters use different lambda");
    check_label(params.profile, quad.s1, "s1");
    check_label(params.profile, quad.s2, "s2");
    check_label(params.profile, quad.t1, "t1");
    check_label(params.profile, quad.t2, "t2");
    if (quad.t1 == quad.t2)
        throw parameter_error("t1 and t2 must differ");
}

inline MultivarPoly build_F_d_unchecked(const IgcParams& params, const ZetaQuad& quad, const LabelVector& gamma,
                                        int a_of_d, int b_of_d)
{
    const Domain z2({{2, 1}});
    const std::size_t v2 = params.profile.code_domain().variable_count();
    MultivarPoly low = build_a(params, {quad.s1, quad.t1, gamma}).extended(z2);
    low.add_constant(a_of_d);
    MultivarPoly high = build_a(params, {quad.s2, quad.t2, gamma}).extended(z2);
    high.add_constant(b_of_d);
    // (1 - v'') low + v'' high = low + v'' (high - low)
    return low + (high - low).times_variable(v2);
}

} // namespace detail

// F_d over reduced_domain x label_domain x Z_2; the last variable v'' picks
// between a_{s1,t1}^gamma + a(d) (v''=0) and a_{s2,t2}^gamma + b(d) (v''=1).
inline MultivarPoly build_F_d(const IgcParams& params, const GcpParams& gp, const ZetaQuad& quad,
                              const LabelVector& gamma, const std::vector<int>& d)
{
    detail::check_2d_params(params, gp, quad);
    detail::check_label(params.profile, gamma, "gamma");
    const auto [a, b] = paterson_functions(gp);
    const MixedRadixIndex point{gp.domain(), d};
    return detail::build_F_d_unchecked(params, quad, gamma, eval_poly(a, point), eval_poly(b, point));
}

// One 2^m x 2L array per gamma (mixed-radix order); row i is F_d with d the
// i-th element of Z_2^m.
inline std::vector<PhaseArray2D> build_zcac(const IgcParams& params, const GcpParams& gp, const ZetaQuad& quad)
{
    detail::check_2d_params(params, gp, quad);
    const auto [a, b] = paterson_functions(gp);
    const auto a_seq = materialize_sequence(a);
    const auto b_seq = materialize_sequence(b);
    std::vector<PhaseArray2D> arrays;
    for (std::uint64_t g = 0; g < params.profile.M(); ++g) {
        const LabelVector gamma = label_from_index(params.profile, g);
        std::vector<MultivarPoly> rows;
        for (std::size_t d = 0; d < a_seq.size(); ++d)
            rows.push_back(detail::build_F_d_unchecked(params, quad, gamma, a_seq.phases[d], b_seq.phases[d]));
        arrays.push_back(materialize_array(rows, params.profile.lambda()));
    }
    return arrays;
}

enum class LambdaStrategy { greedy, random };

// Checks t1 != t2 inside every quad and distinctness of all t's across quads.
inline void validate_lambda_set(const RadixProfile& profile, const std::vector<ZetaQuad>& quads)
{
    std::vector<bool> used(profile.M(), false);
    for (const auto& q : quads) {
        for (const auto* s : {&q.s1, &q.s2})
            detail::check_label(profile, *s, "s");
        for (const auto* t : {&q.t1, &q.t2}) {
            detail::check_label(profile, *t, "t");
            const auto idx = label_index(profile, *t);
            if (used[idx])
                throw parameter_error("t components of the quadruple set are not all distinct");
            used[idx] = true;
        }
    }
}

// floor(M/2) quadruples with pairwise-distinct t components. Greedy pairs
// t-indices (0,1), (2,3), ... with s1 = s2 = 0; random shuffles the
// t-indices and draws s1, s2 from `seed`.
inline std::vector<ZetaQuad> enumerate_lambda_set(const RadixProfile& profile,
                                                  LambdaStrategy strategy = LambdaStrategy::greedy,
                                                  std::uint64_t seed = 0)
{
    const std::uint64_t m = profile.M();
    if (m < 2)
        throw parameter_error("need at least two labels to form a quadruple");
    std::vector<int> order(m);
    for (std::size_t i = 0; i < m; ++i)
        order[i] = static_cast<int>(i);
    std::mt19937_64 rng(seed);
    if (strategy == LambdaStrategy::random)
        order = detail::random_permutation(rng, m);
    std::vector<ZetaQuad> quads;
    const LabelVector zero(profile.k(), 0);
    for (std::size_t i = 0; i + 1 < m; i += 2) {
        ZetaQuad q{zero, zero, label_from_index(profile, static_cast<std::uint64_t>(order[i])),
                   label_from_index(profile, static_cast<std::uint64_t>(order[i + 1]))};
        if (strategy == LambdaStrategy::random) {
            q.s1 = label_from_index(profile, detail::below(rng, m));
            q.s2 = label_from_index(profile, detail::below(rng, m));
        }
        quads.push_back(std::move(q));
    }
    return quads;
}

// One ZCAC per quadruple of `lambda_set`.
inline std::vector<std::vector<PhaseArray2D>> build_zcacs(const IgcParams& params, const GcpParams& gp,
                                                          const std::vector<ZetaQuad>& lambda_set)
{
    validate_lambda_set(params.profile, lambda_set);
    std::vector<std::vector<PhaseArray2D>> sets;
    sets.reserve(lambda_set.size());
    for (const auto& q : lambda_set)
        sets.push_back(build_zcac(params, gp, q));
    return sets;
}

} // namespace ccseq

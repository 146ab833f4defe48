#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ccseq/constructions.hpp"
#include "ccseq/correlation.hpp"
#include "ccseq/verification.hpp"
#include "oracles.hpp"

using namespace ccseq;

namespace {

using TermMap = std::map<Monomial, int>;

void add(TermMap& t, Monomial m, long long c, int lambda)
{
    const int v = static_cast<int>(((t[m] + c) % lambda + lambda) % lambda);
    if (v == 0)
        t.erase(m);
    else
        t[m] = v;
}

Monomial unit(std::size_t n, std::initializer_list<std::size_t> vars)
{
    Monomial m(n, 0);
    for (auto v : vars)
        ++m[v];
    return m;
}

// Term expansion of a_{s,t}^gamma written out from the defining sums, one
// variable block per prime in declaration order, then one label variable per prime.
TermMap expand_a(const IgcParams& p, const LabelVector& s, const LabelVector& t, const LabelVector& g)
{
    const auto& fs = p.profile.factors();
    const int lambda = p.profile.lambda();
    std::size_t reduced = 0;
    for (const auto& f : fs)
        reduced += static_cast<std::size_t>(f.m - 1);
    const std::size_t n = reduced + fs.size();
    TermMap terms;
    std::size_t off = 0;
    for (std::size_t a = 0; a < fs.size(); ++a) {
        const int q = lambda / fs[a].p;
        const auto& pi = p.perms[a];
        for (std::size_t b = 0; b + 1 < pi.size(); ++b)
            add(terms, unit(n, {off + static_cast<std::size_t>(pi[b]), off + static_cast<std::size_t>(pi[b + 1])}), q,
                lambda);
        for (std::size_t b = 0; b < pi.size(); ++b)
            add(terms, unit(n, {off + b}), p.lin_coeffs[a][b], lambda);
        add(terms, unit(n, {}), p.consts[a], lambda);
        add(terms, unit(n, {off + static_cast<std::size_t>(pi.front())}), q * g[a], lambda);
        add(terms, unit(n, {off + static_cast<std::size_t>(pi.back())}), q * t[a], lambda);
        add(terms, unit(n, {reduced + a}), q * s[a], lambda);
        off += pi.size();
    }
    return terms;
}

std::vector<std::vector<PrimePower>> small_profiles()
{
    return {{{2, 2}}, {{3, 2}}, {{2, 3}}, {{3, 3}}, {{5, 2}}, {{2, 2}, {3, 2}}, {{2, 4}}};
}

std::int64_t product_of_powers(const RadixProfile& prof, int shift)
{
    std::int64_t v = 1;
    for (const auto& f : prof.factors())
        v *= static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(f.p), f.m + shift));
    return v;
}

} // namespace

TEST(RadixProfile, Sizes)
{
    const RadixProfile prof({{2, 2}, {3, 2}}, 6);
    EXPECT_EQ(prof.M(), 6u);
    EXPECT_EQ(prof.N(), 6u);
    EXPECT_EQ(prof.L(), 36u);
    EXPECT_EQ(prof.K(), 36u);
    EXPECT_EQ(prof.Z(), 6u);
}

TEST(RadixProfile, Rejections)
{
    EXPECT_THROW(RadixProfile({{4, 2}}, 4), parameter_error);
    EXPECT_THROW(RadixProfile({{2, 1}}, 2), parameter_error);
    EXPECT_THROW(RadixProfile({{3, 2}}, 4), parameter_error);
    EXPECT_THROW(RadixProfile({{2, 2}, {2, 3}}, 2), parameter_error);
    EXPECT_THROW(RadixProfile({}, 2), parameter_error);
}

TEST(DefaultLambda, Examples)
{
    EXPECT_EQ(default_lambda({{2, 2}, {3, 2}}, true), 6);
    EXPECT_EQ(default_lambda({{3, 2}}, true), 6);
    EXPECT_EQ(default_lambda({{2, 2}}, false), 2);
    EXPECT_EQ(default_lambda({{3, 2}}, false), 3);
    EXPECT_EQ(default_lambda({{3, 2}, {5, 2}}, true), 30);
}

TEST(FAlpha, EmptyQuadraticSum)
{
    const RadixProfile prof({{2, 2}}, 2);
    const auto f = build_f_alpha(IgcParams::defaults(prof), 0);
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.variable_count(), 1u);
}

TEST(FAlpha, SingleChainTerm)
{
    const RadixProfile prof({{3, 3}}, 3);
    const auto f = build_f_alpha(IgcParams::defaults(prof), 0);
    EXPECT_EQ(f.terms(), (TermMap{{{1, 1}, 1}}));
}

TEST(FAlpha, PermutedChainWithLinearPart)
{
    // p = 2, m = 4, permutation (2,1,3) in 1-based terms, lambda = 4.
    const RadixProfile prof({{2, 4}}, 4);
    auto params = IgcParams::defaults(prof);
    params.perms[0] = {1, 0, 2};
    EXPECT_EQ(build_f_alpha(params, 0).terms(), (TermMap{{{1, 1, 0}, 2}, {{1, 0, 1}, 2}}));
    params.lin_coeffs[0] = {1, 3, 0};
    params.consts[0] = 2;
    EXPECT_EQ(build_f_alpha(params, 0).terms(),
              (TermMap{{{1, 1, 0}, 2}, {{1, 0, 1}, 2}, {{1, 0, 0}, 1}, {{0, 1, 0}, 3}, {{0, 0, 0}, 2}}));
}

TEST(FAlpha, Errors)
{
    const RadixProfile prof({{2, 3}}, 2);
    auto params = IgcParams::defaults(prof);
    EXPECT_THROW(build_f_alpha(params, 1), range_error);
    params.perms[0] = {0, 0};
    EXPECT_THROW(build_f_alpha(params, 0), parameter_error);
    params.perms[0] = {0, 1};
    params.lin_coeffs[0] = {0};
    EXPECT_THROW(build_f_alpha(params, 0), parameter_error);
}

TEST(BuildA, ZeroLabelsGiveF)
{
    for (const auto& factors : small_profiles()) {
        const RadixProfile prof(factors, default_lambda(factors, false));
        std::mt19937_64 rng(1);
        const auto params = IgcParams::random(prof, rng);
        const LabelVector zero(prof.k(), 0);
        EXPECT_EQ(build_a(params, {zero, zero, zero}), build_f(params).extended(prof.label_domain()));
    }
}

TEST(BuildA, TermsMatchExpansion)
{
    std::mt19937_64 rng(2);
    for (const auto& factors : small_profiles()) {
        const RadixProfile prof(factors, 2 * default_lambda(factors, false));
        for (int trial = 0; trial < 10; ++trial) {
            const auto params = IgcParams::random(prof, rng);
            const auto s = label_from_index(prof, rng() % prof.M());
            const auto t = label_from_index(prof, rng() % prof.M());
            const auto g = label_from_index(prof, rng() % prof.M());
            ASSERT_EQ(build_a(params, {s, t, g}).terms(), expand_a(params, s, t, g));
        }
    }
}

TEST(BuildA, LabelRangeChecked)
{
    const RadixProfile prof({{3, 2}}, 3);
    const auto params = IgcParams::defaults(prof);
    EXPECT_THROW(build_a(params, {{3}, {0}, {0}}), parameter_error);
    EXPECT_THROW(build_a(params, {{0}, {0}, {0, 0}}), parameter_error);
}

TEST(IgcCodeset, SmallSizes)
{
    const RadixProfile prof({{2, 2}}, 2);
    const auto codes = build_igc_codeset(IgcParams::defaults(prof));
    EXPECT_EQ(codes.size(), 4u);
    for (const auto& c : codes) {
        EXPECT_EQ(c.row_count(), 2u);
        EXPECT_EQ(c.length(), 4u);
    }
    EXPECT_EQ(prof.Z(), 2u);
}

TEST(IgcCodeset, MixedSizesAndGrouping)
{
    const RadixProfile prof({{2, 2}, {3, 2}}, 6);
    const auto codes = build_igc_codeset(IgcParams::defaults(prof));
    ASSERT_EQ(codes.size(), 36u);
    EXPECT_EQ(codes[0].row_count(), 6u);
    EXPECT_EQ(codes[0].length(), 36u);
    // Group t occupies a contiguous run of M codes.
    for (std::size_t i = 0; i < codes.size(); ++i) {
        EXPECT_EQ(label_index(prof, codes[i].label.t), i / 6);
        EXPECT_EQ(label_index(prof, codes[i].label.s), i % 6);
    }
}

TEST(IgcCodeset, PassesOnSmallProfiles)
{
    std::mt19937_64 rng(3);
    for (const auto& factors : small_profiles()) {
        for (int lambda_mult : {1, 2}) {
            const RadixProfile prof(factors, lambda_mult * default_lambda(factors, false));
            if (prof.L() > 64)
                continue;
            const auto params = lambda_mult == 1 ? IgcParams::defaults(prof) : IgcParams::random(prof, rng);
            const auto codes = build_igc_codeset(params);
            const auto report = verify_igc(codes, static_cast<std::int64_t>(prof.Z()));
            EXPECT_TRUE(report.passed) << "profile of " << prof.k() << " factors, lambda " << prof.lambda();
            EXPECT_EQ(report.peak, product_of_powers(prof, 1));
            // Optimality: K = M floor(L / Z).
            EXPECT_TRUE(verify_zccs_bound(static_cast<std::int64_t>(prof.K()), static_cast<std::int64_t>(prof.M()),
                                          static_cast<std::int64_t>(prof.L()), static_cast<std::int64_t>(prof.Z()))
                            .optimal);
        }
    }
}

TEST(Orthogonality, RowFamilySumsToDeltaOverZone)
{
    // sum over gamma of C(R_t1^gamma, R_t2^gamma)(tau): full energy at t1 = t2, tau = 0,
    // zero elsewhere inside the zone.
    std::mt19937_64 rng(4);
    for (const auto& factors : std::vector<std::vector<PrimePower>>{{{2, 2}}, {{3, 2}}, {{2, 2}, {3, 2}}, {{2, 3}}}) {
        const RadixProfile prof(factors, default_lambda(factors, false));
        const auto params = IgcParams::random(prof, rng);
        const auto N = static_cast<std::int64_t>(prof.N());
        for (std::uint64_t t1 = 0; t1 < prof.M(); ++t1)
            for (std::uint64_t t2 = 0; t2 < prof.M(); ++t2)
                for (std::int64_t tau = -(N - 1); tau < N; ++tau) {
                    CorrelationValue sum(prof.lambda());
                    for (std::uint64_t g = 0; g < prof.M(); ++g) {
                        const auto gamma = label_from_index(prof, g);
                        sum += accf(materialize_sequence(build_R(params, label_from_index(prof, t1), gamma)),
                                    materialize_sequence(build_R(params, label_from_index(prof, t2), gamma)), tau);
                    }
                    const std::int64_t expected = (t1 == t2 && tau == 0) ? product_of_powers(prof, 0) : 0;
                    ASSERT_TRUE(sum.exactly_equals(CorrelationValue::integer(prof.lambda(), expected)));
                }
    }
}

TEST(Orthogonality, LabelCharactersAreOrthogonal)
{
    for (const auto& factors : std::vector<std::vector<PrimePower>>{{{2, 2}}, {{3, 2}}, {{2, 2}, {3, 2}}}) {
        const RadixProfile prof(factors, default_lambda(factors, false));
        const auto params = IgcParams::defaults(prof);
        for (std::uint64_t s1 = 0; s1 < prof.M(); ++s1)
            for (std::uint64_t s2 = 0; s2 < prof.M(); ++s2) {
                const auto v = accf(materialize_sequence(build_T(params, label_from_index(prof, s1))),
                                    materialize_sequence(build_T(params, label_from_index(prof, s2))), 0);
                const std::int64_t expected = s1 == s2 ? static_cast<std::int64_t>(prof.M()) : 0;
                ASSERT_TRUE(v.exactly_equals(CorrelationValue::integer(prof.lambda(), expected)));
            }
    }
}

TEST(Paterson, LengthOne)
{
    const auto [a, b] = paterson_pair(GcpParams::defaults(1, 2));
    EXPECT_EQ(a.phases, (std::vector<int>{0, 0}));
    EXPECT_EQ(b.phases, (std::vector<int>{0, 1}));
}

TEST(Paterson, TruthTable)
{
    const auto [a, b] = paterson_pair(GcpParams::defaults(2, 2));
    EXPECT_EQ(a.phases, (std::vector<int>{0, 0, 0, 1}));
    EXPECT_EQ(b.phases, (std::vector<int>{0, 1, 0, 0}));
}

TEST(Paterson, RandomPairsAreComplementary)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int lambda = 2 * (1 + static_cast<int>(rng() % 5));
        const auto [a, b] = paterson_pair(GcpParams::random(m, lambda, rng));
        const auto L = static_cast<std::int64_t>(a.size());
        for (std::int64_t tau = 1; tau < L; ++tau)
            ASSERT_LT(std::abs(oracle::accf(a, a, tau) + oracle::accf(b, b, tau)), 1e-9);
        EXPECT_TRUE(verify_gcp(a, b).passed);
    }
}

TEST(Paterson, Errors)
{
    EXPECT_THROW(paterson_pair(GcpParams::defaults(2, 3)), parameter_error);
    EXPECT_THROW(paterson_pair(GcpParams::defaults(0, 2)), parameter_error);
    auto gp = GcpParams::defaults(3, 2);
    gp.pi = {0, 1, 1};
    EXPECT_THROW(paterson_pair(gp), parameter_error);
}

TEST(FD, SlicesAreOffsetGroupSequences)
{
    std::mt19937_64 rng(6);
    const RadixProfile prof({{2, 2}, {3, 2}}, 6);
    const auto params = IgcParams::random(prof, rng);
    const auto gp = GcpParams::random(2, 6, rng);
    const auto [a, b] = paterson_pair(gp);
    const ZetaQuad quad{{1, 2}, {0, 1}, {0, 0}, {1, 2}};
    for (int trial = 0; trial < 8; ++trial) {
        const auto gamma = label_from_index(prof, rng() % prof.M());
        const std::uint64_t di = rng() % 4;
        const std::vector<int> d{static_cast<int>(di & 1), static_cast<int>(di >> 1)};
        const auto seq = materialize_sequence(build_F_d(params, gp, quad, gamma, d));
        const auto low = materialize_sequence(build_a(params, {quad.s1, quad.t1, gamma}));
        const auto high = materialize_sequence(build_a(params, {quad.s2, quad.t2, gamma}));
        ASSERT_EQ(seq.size(), 2 * prof.L());
        std::vector<int> expected;
        for (int p : low.phases)
            expected.push_back((p + a.phases[di]) % 6);
        for (int p : high.phases)
            expected.push_back((p + b.phases[di]) % 6);
        ASSERT_EQ(seq.phases, expected);
    }
}

TEST(FD, Errors)
{
    const RadixProfile prof({{3, 2}}, 6);
    const auto params = IgcParams::defaults(prof);
    EXPECT_THROW(build_F_d(params, GcpParams::defaults(1, 6), {{0}, {0}, {1}, {1}}, {0}, {0}), parameter_error);
    EXPECT_THROW(build_F_d(params, GcpParams::defaults(1, 2), {{0}, {0}, {0}, {1}}, {0}, {0}), parameter_error);
    const RadixProfile odd({{3, 2}}, 3);
    EXPECT_THROW(build_F_d(IgcParams::defaults(odd), GcpParams::defaults(1, 3), {{0}, {0}, {0}, {1}}, {0}, {0}),
                 parameter_error);
}

TEST(Zcac, Sizes)
{
    const RadixProfile prof({{2, 2}}, 2);
    const auto arrays = build_zcac(IgcParams::defaults(prof), GcpParams::defaults(2, 2), {{0}, {0}, {0}, {1}});
    ASSERT_EQ(arrays.size(), 2u);
    for (const auto& x : arrays) {
        EXPECT_EQ(x.rows, 4u);
        EXPECT_EQ(x.cols, 8u);
    }
    const auto report = verify_zcac(arrays, 4, 2);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.peak, 64);
}

TEST(Zcac, RowsAreFd)
{
    const RadixProfile prof({{3, 2}}, 6);
    std::mt19937_64 rng(7);
    const auto params = IgcParams::random(prof, rng);
    const auto gp = GcpParams::random(2, 6, rng);
    const ZetaQuad quad{{2}, {1}, {2}, {0}};
    const auto arrays = build_zcac(params, gp, quad);
    for (std::uint64_t g = 0; g < prof.M(); ++g)
        for (std::size_t d = 0; d < 4; ++d)
            ASSERT_EQ(arrays[g].row(d),
                      materialize_sequence(build_F_d(params, gp, quad, label_from_index(prof, g),
                                                     {static_cast<int>(d & 1), static_cast<int>(d >> 1)})));
}

TEST(Zcac, PassesOnDeskInstances)
{
    std::mt19937_64 rng(8);
    for (const auto& factors : small_profiles()) {
        for (int m = 1; m <= 4; ++m) {
            const RadixProfile prof(factors, default_lambda(factors, true));
            if ((std::uint64_t{1} << m) * 2 * prof.L() > 1152)
                continue;
            const auto params = IgcParams::random(prof, rng);
            const auto gp = GcpParams::random(m, prof.lambda(), rng);
            const auto quads = enumerate_lambda_set(prof, LambdaStrategy::random, rng());
            const auto arrays = build_zcac(params, gp, quads.front());
            const auto report =
                verify_zcac(arrays, std::int64_t{1} << m, static_cast<std::int64_t>(prof.N()));
            EXPECT_TRUE(report.passed) << "m " << m << " L " << prof.L();
            EXPECT_EQ(report.peak, (std::int64_t{2} << m) * product_of_powers(prof, 1));
        }
    }
}

TEST(LambdaSet, Greedy)
{
    const RadixProfile two({{2, 2}}, 2);
    const auto q2 = enumerate_lambda_set(two);
    ASSERT_EQ(q2.size(), 1u);
    EXPECT_EQ(q2[0], (ZetaQuad{{0}, {0}, {0}, {1}}));

    const RadixProfile six({{2, 2}, {3, 2}}, 6);
    const auto q6 = enumerate_lambda_set(six);
    ASSERT_EQ(q6.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(label_index(six, q6[i].t1), 2 * i);
        EXPECT_EQ(label_index(six, q6[i].t2), 2 * i + 1);
        EXPECT_EQ(q6[i].s1, (LabelVector{0, 0}));
    }
}

TEST(LambdaSet, TComponentsDistinct)
{
    for (const auto& factors : small_profiles())
        for (auto strategy : {LambdaStrategy::greedy, LambdaStrategy::random})
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const RadixProfile prof(factors, default_lambda(factors, true));
                const auto quads = enumerate_lambda_set(prof, strategy, seed);
                EXPECT_EQ(quads.size(), prof.M() / 2);
                std::vector<std::uint64_t> ts;
                for (const auto& q : quads) {
                    ts.push_back(label_index(prof, q.t1));
                    ts.push_back(label_index(prof, q.t2));
                }
                std::sort(ts.begin(), ts.end());
                EXPECT_EQ(std::adjacent_find(ts.begin(), ts.end()), ts.end());
                EXPECT_NO_THROW(validate_lambda_set(prof, quads));
            }
}

TEST(LambdaSet, RejectsSharedT)
{
    const RadixProfile prof({{2, 2}, {3, 2}}, 6);
    EXPECT_THROW(validate_lambda_set(prof, {{{0, 0}, {0, 0}, {0, 0}, {1, 0}}, {{0, 0}, {0, 0}, {1, 0}, {0, 1}}}),
                 parameter_error);
}

TEST(Zcacs, Sizes)
{
    const RadixProfile prof({{2, 2}, {3, 2}}, 6);
    const auto sets = build_zcacs(IgcParams::defaults(prof), GcpParams::defaults(2, 6), enumerate_lambda_set(prof));
    ASSERT_EQ(sets.size(), 3u);
    for (const auto& s : sets) {
        ASSERT_EQ(s.size(), 6u);
        for (const auto& x : s) {
            EXPECT_EQ(x.rows, 4u);
            EXPECT_EQ(x.cols, 72u);
        }
        EXPECT_TRUE(verify_zcac(s, 4, 6).passed);
    }
}

TEST(Zcacs, PassesOnDeskInstances)
{
    std::mt19937_64 rng(9);
    for (const auto& factors : small_profiles()) {
        for (int m = 1; m <= 3; ++m) {
            const RadixProfile prof(factors, default_lambda(factors, true));
            if ((std::uint64_t{1} << m) * 2 * prof.L() > 1152)
                continue;
            const auto params = IgcParams::random(prof, rng);
            const auto gp = GcpParams::random(m, prof.lambda(), rng);
            const auto sets = build_zcacs(params, gp, enumerate_lambda_set(prof, LambdaStrategy::random, rng()));
            EXPECT_TRUE(verify_zcacs(sets, std::int64_t{1} << m, static_cast<std::int64_t>(prof.N())).passed)
                << "m " << m << " L " << prof.L();
        }
    }
}

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "ccseq/errors.hpp"

namespace ccseq {

using IntPoly = std::vector<std::int64_t>; // coefficient of x^i at index i

namespace detail {

inline void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact quotient of `num` by the monic polynomial `den`.
inline IntPoly divide_exact(IntPoly num, const IntPoly& den)
{
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size())
        return {};
    IntPoly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::int64_t c = num[i];
        if (c == 0)
            continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            num[i - dd + j] -= c * den[j];
    }
    return q;
}

inline IntPoly compute_cyclotomic(int n, std::map<int, IntPoly>& cache);

inline const IntPoly& cyclotomic_cached(int n, std::map<int, IntPoly>& cache)
{
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_cyclotomic(n, cache)).first;
    return it->second;
}

inline IntPoly compute_cyclotomic(int n, std::map<int, IntPoly>& cache)
{
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = divide_exact(std::move(p), cyclotomic_cached(d, cache));
    trim(p);
    return p;
}

} // namespace detail

// Integer coefficients of the n-th cyclotomic polynomial.
inline IntPoly cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw domain_error("cyclotomic polynomial index must be positive");
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    std::lock_guard lock(mutex);
    return detail::cyclotomic_cached(n, cache);
}

// Exact test of sum_e counts[e] * omega_lambda^e == 0, i.e. divisibility of
// sum_e counts[e] x^e by Phi_lambda over the integers.
inline bool root_sum_is_zero(std::span<const std::int64_t> counts, int lambda)
{
    if (lambda < 1 || counts.size() != static_cast<std::size_t>(lambda))
        throw domain_error("root_sum_is_zero: expected one count per residue");
    const IntPoly phi = cyclotomic_polynomial(lambda);
    const std::size_t deg = phi.size() - 1;
    IntPoly r(counts.begin(), counts.end());
    for (std::size_t i = r.size(); i-- > deg;) {
        const std::int64_t c = r[i];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= deg; ++j)
            r[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 0; i < deg && i < r.size(); ++i)
        if (r[i] != 0)
            return false;
    return true;
}

} // namespace ccseq

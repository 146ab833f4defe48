#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ccseq/errors.hpp"
#include "ccseq/mixed_radix.hpp"

namespace ccseq {

constexpr bool is_prime(int n) noexcept
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

struct PrimePower {
    int p = 2;
    int m = 2;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Distinct primes p_1..p_k with exponents m_alpha >= 2 and a modulus lambda
// divisible by every p_alpha.
class RadixProfile {
public:
    RadixProfile(std::vector<PrimePower> factors, int lambda) : factors_(std::move(factors)), lambda_(lambda)
    {
        if (factors_.empty())
            throw parameter_error("profile needs at least one prime factor");
        if (lambda_ < 1)
            throw parameter_error("lambda must be positive");
        for (std::size_t a = 0; a < factors_.size(); ++a) {
            const auto [p, m] = factors_[a];
            if (!is_prime(p))
                throw parameter_error(std::to_string(p) + " is not prime");
            if (m < 2)
                throw parameter_error("exponent for prime " + std::to_string(p) + " must be at least 2");
            if (lambda_ % p != 0)
                throw parameter_error("lambda " + std::to_string(lambda_) + " is not divisible by " +
                                      std::to_string(p));
            for (std::size_t b = 0; b < a; ++b)
                if (factors_[b].p == p)
                    throw parameter_error("prime " + std::to_string(p) + " appears more than once");
        }
    }

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::size_t k() const noexcept { return factors_.size(); }
    int lambda() const noexcept { return lambda_; }

    // M = prod p_alpha.
    std::uint64_t M() const
    {
        std::uint64_t r = 1;
        for (const auto& f : factors_)
            r *= static_cast<std::uint64_t>(f.p);
        return r;
    }
    // N = Z = prod p_alpha^(m_alpha - 1).
    std::uint64_t N() const
    {
        std::uint64_t r = 1;
        for (const auto& f : factors_)
            r *= ipow(static_cast<std::uint64_t>(f.p), f.m - 1);
        return r;
    }
    std::uint64_t Z() const { return N(); }
    // L = prod p_alpha^m_alpha = N * M.
    std::uint64_t L() const { return N() * M(); }
    // K = M^2.
    std::uint64_t K() const { return M() * M(); }

    // Z_p1^(m1-1) x ... x Z_pk^(mk-1): the domain of f and R_t^gamma.
    Domain reduced_domain() const
    {
        std::vector<RadixBlock> blocks;
        for (const auto& f : factors_)
            blocks.push_back({f.p, f.m - 1});
        return Domain(std::move(blocks));
    }

    // Z_p1 x ... x Z_pk: the domain of T_s and of the labels s, t, gamma.
    Domain label_domain() const
    {
        std::vector<RadixBlock> blocks;
        for (const auto& f : factors_)
            blocks.push_back({f.p, 1});
        return Domain(std::move(blocks));
    }

    // Domain of a_{s,t}^gamma: reduced_domain() x label_domain().
    Domain code_domain() const { return reduced_domain().then(label_domain()); }

    // Offset of the first variable of block alpha inside reduced_domain().
    std::size_t reduced_offset(std::size_t alpha) const
    {
        std::size_t off = 0;
        for (std::size_t a = 0; a < alpha; ++a)
            off += static_cast<std::size_t>(factors_[a].m - 1);
        return off;
    }

    friend bool operator==(const RadixProfile&, const RadixProfile&) = default;

private:
    std::vector<PrimePower> factors_;
    int lambda_;
};

// Least lambda divisible by every prime of the profile, doubled when evenness
// is required and the lcm is odd.
inline int default_lambda(const std::vector<PrimePower>& factors, bool need_even)
{
    int l = 1;
    for (const auto& f : factors)
        l = std::lcm(l, f.p);
    if (need_even && l % 2 != 0)
        l *= 2;
    return l;
}

} // namespace ccseq

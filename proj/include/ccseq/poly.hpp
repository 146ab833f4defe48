#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ccseq/errors.hpp"
#include "ccseq/mixed_radix.hpp"
#include "ccseq/phase.hpp"

namespace ccseq {

// Exponent of each variable of the domain, least significant variable first.
using Monomial = std::vector<int>;

// Z_lambda-linear combination of monomials over a mixed-radix domain.
// Exponents of a radix-p variable are kept in {0, ..., p-1}; no reduction
// via x^p = x is applied.
class MultivarPoly {
public:
    MultivarPoly() = default;
    MultivarPoly(Domain domain, int lambda) : domain_(std::move(domain)), lambda_(lambda)
    {
        check_modulus(lambda_);
    }

    const Domain& domain() const noexcept { return domain_; }
    int lambda() const noexcept { return lambda_; }
    const std::map<Monomial, int>& terms() const noexcept { return terms_; }
    std::size_t variable_count() const noexcept { return domain_.variable_count(); }

    MultivarPoly& add_term(const Monomial& exponents, std::int64_t coeff)
    {
        const auto& radices = domain_.radices();
        if (exponents.size() != radices.size())
            throw domain_error("monomial has " + std::to_string(exponents.size()) +
                               " exponents, domain has " + std::to_string(radices.size()) +
                               " variables");
        for (std::size_t v = 0; v < radices.size(); ++v)
            if (exponents[v] < 0 || exponents[v] >= radices[v])
                throw domain_error("exponent " + std::to_string(exponents[v]) + " of variable " +
                                   std::to_string(v) + " outside {0.." + std::to_string(radices[v] - 1) +
                                   "}");
        const int c = mod_lambda(coeff, lambda_);
        if (c == 0)
            return *this;
        auto [it, inserted] = terms_.try_emplace(exponents, c);
        if (!inserted) {
            it->second = mod_lambda(it->second + c, lambda_);
            if (it->second == 0)
                terms_.erase(it);
        }
        return *this;
    }

    MultivarPoly& add_constant(std::int64_t coeff) { return add_term(Monomial(variable_count(), 0), coeff); }

    MultivarPoly& add_linear(std::size_t var, std::int64_t coeff)
    {
        Monomial m(variable_count(), 0);
        check_var(var);
        m[var] = 1;
        return add_term(m, coeff);
    }

    MultivarPoly& add_product(std::size_t var1, std::size_t var2, std::int64_t coeff)
    {
        Monomial m(variable_count(), 0);
        check_var(var1);
        check_var(var2);
        ++m[var1];
        ++m[var2];
        return add_term(m, coeff);
    }

    // Highest total degree among nonzero terms; 0 for the zero polynomial.
    int order() const
    {
        int best = 0;
        for (const auto& [m, c] : terms_)
            best = std::max(best, std::accumulate(m.begin(), m.end(), 0));
        return best;
    }

    bool is_zero() const noexcept { return terms_.empty(); }

    // Same polynomial viewed over domain() x `tail` (new variables more significant).
    MultivarPoly extended(const Domain& tail) const
    {
        MultivarPoly out(domain_.then(tail), lambda_);
        for (const auto& [m, c] : terms_) {
            Monomial wide = m;
            wide.resize(out.variable_count(), 0);
            out.terms_.emplace(std::move(wide), c);
        }
        return out;
    }

    // Product with the single variable `var`.
    MultivarPoly times_variable(std::size_t var) const
    {
        check_var(var);
        MultivarPoly out(domain_, lambda_);
        for (const auto& [m, c] : terms_) {
            Monomial next = m;
            ++next[var];
            out.add_term(next, c);
        }
        return out;
    }

    MultivarPoly operator-() const
    {
        MultivarPoly out(domain_, lambda_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, mod_lambda(-c, lambda_));
        return out;
    }

    MultivarPoly& operator+=(const MultivarPoly& other)
    {
        check_compatible(other);
        for (const auto& [m, c] : other.terms_)
            add_term(m, c);
        return *this;
    }

    MultivarPoly& operator-=(const MultivarPoly& other) { return *this += -other; }

    friend MultivarPoly operator+(MultivarPoly a, const MultivarPoly& b) { return a += b; }
    friend MultivarPoly operator-(MultivarPoly a, const MultivarPoly& b) { return a -= b; }
    friend bool operator==(const MultivarPoly&, const MultivarPoly&) = default;

    // Value at `digits` (one digit per variable, assumed in range).
    int evaluate_unchecked(std::span<const int> digits) const noexcept
    {
        std::int64_t acc = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t t = c;
            for (std::size_t v = 0; v < m.size() && t != 0; ++v)
                for (int e = 0; e < m[v]; ++e)
                    t = (t * digits[v]) % lambda_;
            acc += t;
        }
        return mod_lambda(acc, lambda_);
    }

private:
    void check_var(std::size_t var) const
    {
        if (var >= variable_count())
            throw domain_error("variable index " + std::to_string(var) + " out of range");
    }

    void check_compatible(const MultivarPoly& other) const
    {
        if (other.lambda_ != lambda_)
            throw domain_error("polynomial modulus mismatch");
        if (!other.domain_.same_variables(domain_))
            throw domain_error("polynomial domain mismatch");
    }

    Domain domain_;
    int lambda_ = 1;
    std::map<Monomial, int> terms_;
};

inline int eval_poly(const MultivarPoly& poly, const MixedRadixIndex& point)
{
    if (!point.domain.same_variables(poly.domain()))
        throw domain_error("eval_poly: point domain does not match polynomial domain");
    const auto& radices = poly.domain().radices();
    if (point.digits.size() != radices.size())
        throw domain_error("eval_poly: digit count does not match domain");
    for (std::size_t v = 0; v < radices.size(); ++v)
        if (point.digits[v] < 0 || point.digits[v] >= radices[v])
            throw domain_error("eval_poly: digit out of range");
    return poly.evaluate_unchecked(point.digits);
}

// phases[j] = poly(to_mixed_radix(j)) for every j in the domain.
inline PhaseSequence materialize_sequence(const MultivarPoly& poly)
{
    const auto& radices = poly.domain().radices();
    std::vector<int> digits(radices.size(), 0);
    std::vector<int> phases;
    phases.reserve(poly.domain().size());
    do {
        phases.push_back(poly.evaluate_unchecked(digits));
    } while (increment_digits(digits, radices));
    return {poly.lambda(), std::move(phases)};
}

// Row i is the materialized sequence of rows[i].
inline PhaseArray2D materialize_array(std::span<const MultivarPoly> rows, int lambda)
{
    check_modulus(lambda);
    if (rows.empty())
        return {lambda, 0, 0, {}};
    const Domain& domain = rows.front().domain();
    std::vector<int> data;
    data.reserve(rows.size() * domain.size());
    for (const auto& row : rows) {
        if (row.lambda() != lambda)
            throw domain_error("materialize_array: row modulus mismatch");
        if (!row.domain().same_variables(domain))
            throw domain_error("materialize_array: rows have inconsistent domains");
        const auto seq = materialize_sequence(row);
        data.insert(data.end(), seq.phases.begin(), seq.phases.end());
    }
    return {lambda, rows.size(), static_cast<std::size_t>(domain.size()), std::move(data)};
}

} // namespace ccseq

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "ccseq/cyclotomic.hpp"
#include "ccseq/errors.hpp"
#include "ccseq/phase.hpp"

namespace ccseq {

// Exact element sum_e counts[e] * omega_lambda^e of Z[omega_lambda].
// Distinct count vectors can denote the same value; compare with
// exactly_equals() or is_zero(), never with the counts themselves.
class CorrelationValue {
public:
    explicit CorrelationValue(int lambda = 1) : lambda_(lambda), counts_(static_cast<std::size_t>(lambda), 0)
    {
        check_modulus(lambda);
    }

    CorrelationValue(int lambda, std::vector<std::int64_t> counts) : lambda_(lambda), counts_(std::move(counts))
    {
        check_modulus(lambda);
        if (counts_.size() != static_cast<std::size_t>(lambda))
            throw domain_error("correlation value needs one count per residue");
    }

    // The rational integer n.
    static CorrelationValue integer(int lambda, std::int64_t n)
    {
        CorrelationValue v(lambda);
        v.counts_[0] = n;
        return v;
    }

    int lambda() const noexcept { return lambda_; }
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

    void add_root(int exponent, std::int64_t times = 1) noexcept
    {
        counts_[static_cast<std::size_t>(mod_lambda(exponent, lambda_))] += times;
    }

    std::complex<double> complex() const
    {
        std::complex<double> z{0.0, 0.0};
        for (int e = 0; e < lambda_; ++e)
            if (counts_[static_cast<std::size_t>(e)] != 0)
                z += static_cast<double>(counts_[static_cast<std::size_t>(e)]) * unit_root(lambda_, e);
        return z;
    }

    // Number of unit-magnitude terms represented (sum of |counts|).
    std::int64_t term_count() const noexcept
    {
        std::int64_t n = 0;
        for (auto c : counts_)
            n += std::llabs(c);
        return n;
    }

    bool is_zero() const { return root_sum_is_zero(counts_, lambda_); }

    bool exactly_equals(const CorrelationValue& other) const { return (*this - other).is_zero(); }

    CorrelationValue conj() const
    {
        CorrelationValue out(lambda_);
        for (int e = 0; e < lambda_; ++e)
            out.counts_[static_cast<std::size_t>(mod_lambda(-e, lambda_))] = counts_[static_cast<std::size_t>(e)];
        return out;
    }

    CorrelationValue& operator+=(const CorrelationValue& o)
    {
        check_same(o);
        for (std::size_t e = 0; e < counts_.size(); ++e)
            counts_[e] += o.counts_[e];
        return *this;
    }

    CorrelationValue& operator-=(const CorrelationValue& o)
    {
        check_same(o);
        for (std::size_t e = 0; e < counts_.size(); ++e)
            counts_[e] -= o.counts_[e];
        return *this;
    }

    friend CorrelationValue operator+(CorrelationValue a, const CorrelationValue& b) { return a += b; }
    friend CorrelationValue operator-(CorrelationValue a, const CorrelationValue& b) { return a -= b; }

    // Product in Z[omega]: cyclic convolution of the count vectors.
    friend CorrelationValue operator*(const CorrelationValue& a, const CorrelationValue& b)
    {
        a.check_same(b);
        CorrelationValue out(a.lambda_);
        for (int x = 0; x < a.lambda_; ++x) {
            const auto cx = a.counts_[static_cast<std::size_t>(x)];
            if (cx == 0)
                continue;
            for (int y = 0; y < a.lambda_; ++y)
                out.counts_[static_cast<std::size_t>((x + y) % a.lambda_)] += cx * b.counts_[static_cast<std::size_t>(y)];
        }
        return out;
    }

private:
    void check_same(const CorrelationValue& o) const
    {
        if (o.lambda_ != lambda_)
            throw domain_error("correlation values over different moduli");
    }

    int lambda_;
    std::vector<std::int64_t> counts_;
};

// Aperiodic cross-correlation C(a, b)(tau) = sum_i psi(a)_i conj(psi(b)_{i+tau}).
// Negative shifts use C(a, b)(-tau) = conj(C(b, a)(tau)).
inline CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, std::int64_t tau)
{
    if (a.lambda != b.lambda)
        throw domain_error("accf: modulus mismatch");
    if (a.size() != b.size())
        throw domain_error("accf: length mismatch (" + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()) + ")");
    if (tau < 0)
        return accf(b, a, -tau).conj();
    const auto len = static_cast<std::int64_t>(a.size());
    std::vector<std::int64_t> counts(static_cast<std::size_t>(a.lambda), 0);
    const int lambda = a.lambda;
    for (std::int64_t i = 0; i + tau < len; ++i) {
        int e = a.phases[static_cast<std::size_t>(i)] - b.phases[static_cast<std::size_t>(i + tau)];
        if (e < 0)
            e += lambda;
        ++counts[static_cast<std::size_t>(e)];
    }
    return {lambda, std::move(counts)};
}

inline CorrelationValue aacf(const PhaseSequence& a, std::int64_t tau) { return accf(a, a, tau); }

// Row-wise sum of accf over two codes of equal shape.
inline CorrelationValue code_accf(const PhaseCode& c1, const PhaseCode& c2, std::int64_t tau)
{
    if (c1.lambda != c2.lambda)
        throw domain_error("code_accf: modulus mismatch");
    if (c1.row_count() != c2.row_count() || c1.length() != c2.length())
        throw domain_error("code_accf: code shapes differ");
    CorrelationValue out(c1.lambda);
    for (std::size_t r = 0; r < c1.row_count(); ++r)
        out += accf(c1.rows[r], c2.rows[r], tau);
    return out;
}

// 2-D aperiodic cross-correlation: sum over the overlap of X_{i,j} conj(Y_{i+tau1, j+tau2}).
inline CorrelationValue accf_2d(const PhaseArray2D& x, const PhaseArray2D& y, std::int64_t tau1, std::int64_t tau2)
{
    if (x.lambda != y.lambda)
        throw domain_error("accf_2d: modulus mismatch");
    if (x.rows != y.rows || x.cols != y.cols)
        throw domain_error("accf_2d: array shapes differ");
    const auto rows = static_cast<std::int64_t>(x.rows);
    const auto cols = static_cast<std::int64_t>(x.cols);
    const int lambda = x.lambda;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(lambda), 0);
    if (tau1 <= -rows || tau1 >= rows || tau2 <= -cols || tau2 >= cols)
        return {lambda, std::move(counts)};
    const std::int64_t i0 = std::max<std::int64_t>(0, -tau1), i1 = std::min(rows, rows - tau1);
    const std::int64_t j0 = std::max<std::int64_t>(0, -tau2), j1 = std::min(cols, cols - tau2);
    for (std::int64_t i = i0; i < i1; ++i) {
        const auto xr = static_cast<std::size_t>(i * cols);
        const auto yr = static_cast<std::size_t>((i + tau1) * cols + tau2);
        for (auto j = static_cast<std::size_t>(j0); j < static_cast<std::size_t>(j1); ++j) {
            int e = x.phases[xr + j] - y.phases[yr + j];
            if (e < 0)
                e += lambda;
            ++counts[static_cast<std::size_t>(e)];
        }
    }
    return {lambda, std::move(counts)};
}

// C(a1 (x) b1, a2 (x) b2)(tau) through the block decomposition
//   C(a1,a2)(q) C(b1,b2)(r) + [r != 0] C(a1,a2)(q+1) C(b1,b2)(r-N),
// with q = floor(tau/N), r = tau mod N, N = |b1|.
inline CorrelationValue accf_via_kronecker(const PhaseSequence& a1, const PhaseSequence& b1,
                                           const PhaseSequence& a2, const PhaseSequence& b2, std::int64_t tau)
{
    if (tau < 0)
        throw range_error("accf_via_kronecker: shift must be non-negative");
    if (a1.size() != a2.size() || b1.size() != b2.size())
        throw domain_error("accf_via_kronecker: factor lengths differ");
    if (a1.lambda != b1.lambda || a1.lambda != a2.lambda || a1.lambda != b2.lambda)
        throw domain_error("accf_via_kronecker: modulus mismatch");
    const auto n = static_cast<std::int64_t>(b1.size());
    if (n == 0)
        return CorrelationValue(a1.lambda);
    const std::int64_t q = tau / n, r = tau % n;
    CorrelationValue out = accf(a1, a2, q) * accf(b1, b2, r);
    if (r != 0)
        out += accf(a1, a2, q + 1) * accf(b1, b2, r - n);
    return out;
}

} // namespace ccseq

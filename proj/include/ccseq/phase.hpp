#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "ccseq/errors.hpp"

namespace ccseq {

// Least non-negative residue of `value` modulo `lambda`.
constexpr int mod_lambda(std::int64_t value, int lambda) noexcept
{
    const auto r = static_cast<int>(value % lambda);
    return r < 0 ? r + lambda : r;
}

inline void check_modulus(int lambda)
{
    if (lambda < 1)
        throw domain_error("modulus must be positive, got " + std::to_string(lambda));
}

// omega_lambda^e.
inline std::complex<double> unit_root(int lambda, std::int64_t e)
{
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_lambda(e, lambda)) / lambda;
    return {std::cos(angle), std::sin(angle)};
}

// Z_lambda-valued sequence; its complex image is psi(seq)_i = omega^phases[i].
struct PhaseSequence {
    int lambda = 1;
    std::vector<int> phases;

    PhaseSequence() = default;
    PhaseSequence(int lambda_, std::vector<int> phases_) : lambda(lambda_), phases(std::move(phases_))
    {
        check_modulus(lambda);
        for (int& p : phases)
            p = mod_lambda(p, lambda);
    }

    std::size_t size() const noexcept { return phases.size(); }

    std::vector<std::complex<double>> to_complex() const
    {
        std::vector<std::complex<double>> out;
        out.reserve(phases.size());
        for (int p : phases)
            out.push_back(unit_root(lambda, p));
        return out;
    }

    friend bool operator==(const PhaseSequence&, const PhaseSequence&) = default;
};

// Row-major L1 x L2 matrix of Z_lambda phases.
struct PhaseArray2D {
    int lambda = 1;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> phases;

    PhaseArray2D() = default;
    PhaseArray2D(int lambda_, std::size_t rows_, std::size_t cols_, std::vector<int> phases_)
        : lambda(lambda_), rows(rows_), cols(cols_), phases(std::move(phases_))
    {
        check_modulus(lambda);
        if (phases.size() != rows * cols)
            throw domain_error("array data does not match its shape");
        for (int& p : phases)
            p = mod_lambda(p, lambda);
    }

    int at(std::size_t i, std::size_t j) const noexcept { return phases[i * cols + j]; }
    int& at(std::size_t i, std::size_t j) noexcept { return phases[i * cols + j]; }

    PhaseSequence row(std::size_t i) const
    {
        return {lambda, std::vector<int>(phases.begin() + static_cast<std::ptrdiff_t>(i * cols),
                                         phases.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols))};
    }

    friend bool operator==(const PhaseArray2D&, const PhaseArray2D&) = default;
};

// (s, t) context of an IGC code; each is a vector in Z_p1 x ... x Z_pk.
struct CodeLabel {
    std::vector<int> s;
    std::vector<int> t;

    friend bool operator==(const CodeLabel&, const CodeLabel&) = default;
};

// M x L matrix of phases: one row per sequence of the code.
struct PhaseCode {
    int lambda = 1;
    std::vector<PhaseSequence> rows;
    CodeLabel label;

    std::size_t row_count() const noexcept { return rows.size(); }
    std::size_t length() const noexcept { return rows.empty() ? 0 : rows.front().size(); }

    friend bool operator==(const PhaseCode&, const PhaseCode&) = default;
};

// result[i*|b| + j] = a[i] + b[j]; the phase image of psi(a) (x) psi(b).
inline PhaseSequence kronecker_phase(const PhaseSequence& a, const PhaseSequence& b)
{
    if (a.lambda != b.lambda)
        throw domain_error("kronecker_phase: modulus mismatch");
    std::vector<int> out;
    out.reserve(a.size() * b.size());
    for (int x : a.phases)
        for (int y : b.phases)
            out.push_back(mod_lambda(x + y, a.lambda));
    return {a.lambda, std::move(out)};
}

} // namespace ccseq

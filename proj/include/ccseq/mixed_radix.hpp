#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccseq/errors.hpp"

namespace ccseq {

// A block Z_radix^multiplicity of variables sharing one radix.
struct RadixBlock {
    int radix = 2;
    int multiplicity = 1;

    friend bool operator==(const RadixBlock&, const RadixBlock&) = default;
};

// Ordered product of radix blocks. Position 0 is the least significant
// digit; earlier blocks vary faster than later ones, and inside a block
// the first variable is the least significant.
class Domain {
public:
    Domain() = default;

    explicit Domain(std::vector<RadixBlock> blocks) : blocks_(std::move(blocks))
    {
        for (const auto& b : blocks_) {
            if (b.radix < 2)
                throw domain_error("radix must be at least 2, got " + std::to_string(b.radix));
            if (b.multiplicity < 0)
                throw domain_error("negative block multiplicity");
            for (int i = 0; i < b.multiplicity; ++i) {
                if (size_ > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(b.radix))
                    throw domain_error("domain too large");
                radices_.push_back(b.radix);
                size_ *= static_cast<std::uint64_t>(b.radix);
            }
        }
    }

    const std::vector<RadixBlock>& blocks() const noexcept { return blocks_; }
    // Radix of every variable, least significant first.
    const std::vector<int>& radices() const noexcept { return radices_; }
    std::size_t variable_count() const noexcept { return radices_.size(); }
    std::uint64_t size() const noexcept { return size_; }

    // Concatenation; `tail` supplies the more significant digits.
    Domain then(const Domain& tail) const
    {
        auto blocks = blocks_;
        blocks.insert(blocks.end(), tail.blocks_.begin(), tail.blocks_.end());
        return Domain(std::move(blocks));
    }

    // Same variable radices in the same order; block grouping is cosmetic.
    bool same_variables(const Domain& other) const noexcept { return radices_ == other.radices_; }

    friend bool operator==(const Domain& a, const Domain& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<RadixBlock> blocks_;
    std::vector<int> radices_;
    std::uint64_t size_ = 1;
};

struct MixedRadixIndex {
    Domain domain;
    std::vector<int> digits;
};

inline MixedRadixIndex to_mixed_radix(std::uint64_t index, const Domain& domain)
{
    if (index >= domain.size())
        throw range_error("index " + std::to_string(index) + " outside domain of size " +
                          std::to_string(domain.size()));
    MixedRadixIndex out{domain, {}};
    out.digits.reserve(domain.variable_count());
    for (int radix : domain.radices()) {
        out.digits.push_back(static_cast<int>(index % static_cast<std::uint64_t>(radix)));
        index /= static_cast<std::uint64_t>(radix);
    }
    return out;
}

inline std::uint64_t from_mixed_radix(const MixedRadixIndex& index)
{
    const auto& radices = index.domain.radices();
    if (index.digits.size() != radices.size())
        throw domain_error("digit count does not match domain");
    std::uint64_t value = 0;
    for (std::size_t pos = radices.size(); pos-- > 0;) {
        const int d = index.digits[pos];
        if (d < 0 || d >= radices[pos])
            throw domain_error("digit " + std::to_string(d) + " out of range for radix " +
                               std::to_string(radices[pos]));
        value = value * static_cast<std::uint64_t>(radices[pos]) + static_cast<std::uint64_t>(d);
    }
    return value;
}

// Advances `digits` to the next index in mixed-radix order. Returns false
// after wrapping around from the last index to zero.
inline bool increment_digits(std::span<int> digits, std::span<const int> radices) noexcept
{
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
        if (++digits[pos] < radices[pos])
            return true;
        digits[pos] = 0;
    }
    return false;
}

} // namespace ccseq

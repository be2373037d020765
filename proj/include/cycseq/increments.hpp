#pragma once

#include <optional>
#include <vector>

#include "cycseq/intpoly.hpp"

namespace cycseq {

/// A (possibly cyclic) list of exponents s_0..s_{N-1} in which successive
/// entries differ by exactly +-1, taken modulo n when a modulus is present.
struct IncrementSeq {
    std::vector<long> exponents;
    std::optional<unsigned> modulus; // present in the cyclic-exponent case
    bool cyclic = true;

    std::size_t size() const { return exponents.size(); }

    /// Checks the +-1 step rule, including the wraparound pair when cyclic.
    bool valid_steps() const;

    /// Occurrence counts per exponent; length is the modulus when present,
    /// otherwise max exponent + 1. Exponents must be non-negative in the
    /// modulus-free case.
    std::vector<long long> multiplicities() const;

    IntPoly to_poly() const;

    /// Shifts modulus-free exponents so the minimum becomes 0.
    IncrementSeq normalized_min_zero() const;
};

enum class Regime { path, cycle };

/// Non-negative occurrence counts b_0..b_{n-1} of the increments y^0..y^{n-1},
/// in either the linear-exponent (path) or modular-exponent (cycle) regime.
struct CoeffVector {
    std::vector<long long> counts;
    Regime regime = Regime::path;

    unsigned size() const { return static_cast<unsigned>(counts.size()); }
    long long total() const;
    bool all_nonnegative() const;

    /// Counts read off a polynomial; in the cycle regime the vector is padded
    /// with zeros up to length n.
    static CoeffVector from_poly(const IntPoly& p, Regime regime,
                                 std::optional<unsigned> n = std::nullopt);
    IntPoly to_poly() const;
};

} // namespace cycseq

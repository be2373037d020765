#include "cycseq/increments.hpp"

#include <algorithm>

namespace cycseq {

namespace {

bool unit_step(long a, long b, std::optional<unsigned> modulus) {
    long d = b - a;
    if (!modulus)
        return d == 1 || d == -1;
    long n = static_cast<long>(*modulus);
    long r = ((d % n) + n) % n;
    return r == 1 % n || r == ((-1 % n) + n) % n;
}

} // namespace

bool IncrementSeq::valid_steps() const {
    if (exponents.size() < 2)
        return !cyclic || exponents.size() != 1 ||
               unit_step(exponents[0], exponents[0], modulus);
    for (std::size_t j = 0; j + 1 < exponents.size(); ++j)
        if (!unit_step(exponents[j], exponents[j + 1], modulus))
            return false;
    if (cyclic && !unit_step(exponents.back(), exponents.front(), modulus))
        return false;
    return true;
}

std::vector<long long> IncrementSeq::multiplicities() const {
    std::size_t len = 0;
    if (modulus) {
        len = *modulus;
    } else {
        long mx = -1;
        for (long e : exponents) {
            if (e < 0)
                throw Error("negative exponent in a modulus-free sequence");
            mx = std::max(mx, e);
        }
        len = static_cast<std::size_t>(mx + 1);
    }
    std::vector<long long> counts(len, 0);
    for (long e : exponents) {
        long idx = e;
        if (modulus) {
            long n = static_cast<long>(*modulus);
            idx = ((e % n) + n) % n;
        }
        ++counts[static_cast<std::size_t>(idx)];
    }
    return counts;
}

IntPoly IncrementSeq::to_poly() const {
    if (exponents.empty())
        return {};
    auto counts = multiplicities();
    std::vector<Int> c(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        c[k] = Int(static_cast<long>(counts[k]));
    return IntPoly(std::move(c));
}

IncrementSeq IncrementSeq::normalized_min_zero() const {
    if (modulus || exponents.empty())
        return *this;
    long mn = *std::min_element(exponents.begin(), exponents.end());
    IncrementSeq out = *this;
    for (auto& e : out.exponents)
        e -= mn;
    return out;
}

long long CoeffVector::total() const {
    long long t = 0;
    for (long long c : counts)
        t += c;
    return t;
}

bool CoeffVector::all_nonnegative() const {
    return std::all_of(counts.begin(), counts.end(),
                       [](long long c) { return c >= 0; });
}

CoeffVector CoeffVector::from_poly(const IntPoly& p, Regime regime,
                                   std::optional<unsigned> n) {
    CoeffVector v;
    v.regime = regime;
    for (const auto& c : p.coeffs()) {
        if (!c.fits_slong_p())
            throw Error("coefficient too large for a count vector");
        v.counts.push_back(c.get_si());
    }
    if (n) {
        if (p.coeffs().size() > *n)
            throw Error("polynomial degree exceeds the modulus");
        v.counts.resize(*n, 0);
    }
    return v;
}

IntPoly CoeffVector::to_poly() const {
    std::vector<Int> c(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        c[k] = Int(static_cast<long>(counts[k]));
    return IntPoly(std::move(c));
}

} // namespace cycseq

#include "cycseq/cyclofield.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace cycseq {

CycElement::CycElement(unsigned n, IntPoly residue)
    : n_(n), residue_(std::move(residue)) {}

CycElement CycElement::zero(unsigned n) { return CycElement(n, IntPoly{}); }

CycElement CycElement::one(unsigned n) { return reduce(n, IntPoly::one()); }

CycElement CycElement::from_power(unsigned n, long k) {
    if (n == 0)
        throw Error("modulus must be >= 1");
    long r = k % static_cast<long>(n);
    if (r < 0)
        r += static_cast<long>(n);
    return reduce(n, IntPoly::x_pow(static_cast<std::size_t>(r)));
}

CycElement CycElement::reduce(unsigned n, const IntPoly& p) {
    if (n == 0)
        throw Error("modulus must be >= 1");
    IntPoly phi = cyclotomic(n);
    if (p.degree() < phi.degree())
        return CycElement(n, p);
    auto dv = divmod(p, phi);
    return CycElement(n, dv.remainder);
}

CycElement operator+(const CycElement& a, const CycElement& b) {
    if (a.n_ != b.n_)
        throw Error("cyclotomic moduli differ");
    return CycElement(a.n_, a.residue_ + b.residue_);
}

CycElement operator-(const CycElement& a, const CycElement& b) {
    if (a.n_ != b.n_)
        throw Error("cyclotomic moduli differ");
    return CycElement(a.n_, a.residue_ - b.residue_);
}

CycElement operator*(const CycElement& a, const CycElement& b) {
    if (a.n_ != b.n_)
        throw Error("cyclotomic moduli differ");
    return CycElement::reduce(a.n_, a.residue_ * b.residue_);
}

std::complex<double> primitive_root_point(unsigned n, long m) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(m) /
                   static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> CycElement::embed(long m) const {
    long mm = m % static_cast<long>(n_);
    if (mm < 0)
        mm += static_cast<long>(n_);
    if (std::gcd(static_cast<long>(n_), mm == 0 ? static_cast<long>(n_) : mm) != 1)
        throw NotCoprime("embedding index must be coprime to the modulus");
    return residue_(primitive_root_point(n_, m));
}

} // namespace cycseq

#pragma once

#include <complex>

#include "cycseq/intpoly.hpp"

namespace cycseq {

/// Residue of an integer polynomial modulo the n-th cyclotomic polynomial:
/// exact arithmetic in Z[zeta_n]. Residues of matching modulus combine as a
/// ring; the result of every operation is fully reduced.
class CycElement {
public:
    static CycElement zero(unsigned n);
    static CycElement one(unsigned n);
    /// x^(k mod n) reduced modulo Phi_n.
    static CycElement from_power(unsigned n, long k);
    static CycElement reduce(unsigned n, const IntPoly& p);

    unsigned modulus() const { return n_; }
    const IntPoly& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }

    friend CycElement operator+(const CycElement& a, const CycElement& b);
    friend CycElement operator-(const CycElement& a, const CycElement& b);
    friend CycElement operator*(const CycElement& a, const CycElement& b);
    bool operator==(const CycElement&) const = default;

    /// Evaluate the residue at e^{2 pi m i / n} in double precision;
    /// m must be coprime to n.
    std::complex<double> embed(long m = 1) const;

private:
    CycElement(unsigned n, IntPoly residue);
    unsigned n_;
    IntPoly residue_;
};

/// Unit-circle point e^{2 pi m i / n}.
std::complex<double> primitive_root_point(unsigned n, long m = 1);

} // namespace cycseq

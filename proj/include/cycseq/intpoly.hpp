#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cycseq/errors.hpp"

namespace cycseq {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational from numerator/denominator.
Rat make_rat(const Int& num, const Int& den);
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// Dense polynomial over arbitrary-precision integers, coefficients stored
/// ascending by degree with no trailing zeros (the zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return IntPoly{1}; }
    static IntPoly x_pow(std::size_t k);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Int coeff(std::size_t k) const;
    const Int& leading() const;

    Int operator()(const Int& x) const;
    Rat operator()(const Rat& y) const;
    std::complex<double> operator()(const std::complex<double>& z) const;

    /// x^{deg p} * p(1/x); requires a nonzero polynomial.
    IntPoly reversed() const;
    bool is_palindromic() const;
    /// p * x^k
    IntPoly shifted_up(std::size_t k) const;
    Int sum_of_coeffs() const { return (*this)(Int(1)); }
    IntPoly derivative() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly operator*(const Int& s) const;

    bool operator==(const IntPoly&) const = default;

    /// Human-readable form, e.g. "3x^2+5x+2".
    std::string to_string() const;

private:
    std::vector<Int> c_;
    void trim();
};

struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
    bool exact; // division succeeded over the integers with zero remainder
};

/// Long division of p by d. For divisors whose leading coefficient divides at
/// every step (monic divisors in particular) the integer quotient/remainder
/// are returned; otherwise pseudo-division is performed and exactness is
/// verified before declaring the result exact.
PolyDivision divmod(const IntPoly& p, const IntPoly& d);

/// True iff d divides p over the integers.
bool divides(const IntPoly& d, const IntPoly& p);

/// n-th cyclotomic polynomial via x^n - 1 = prod_{d | n} Phi_d(x).
IntPoly cyclotomic(unsigned n);

struct RootInterval {
    Rat lo;
    Rat hi; // lo < root < hi, p changes sign across the interval
};

using RealRoot = std::variant<Rat, RootInterval>;

double real_root_approx(const RealRoot& r);
/// Midpoint ordering key usable for sorting mixed exact/interval roots.
Rat real_root_key(const RealRoot& r);

/// All negative real roots of p, rationals exact, irrationals isolated by
/// Sturm bisection and refined until hi - lo <= width.
std::vector<RealRoot> real_roots_negative(const IntPoly& p,
                                          const Rat& width = Rat(1, 1000000000000L));

/// Tightens an isolating interval of p down to the requested width.
RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rat& width);

} // namespace cycseq

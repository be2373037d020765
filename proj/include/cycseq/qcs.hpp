#pragma once

#include <complex>
#include <optional>

#include "cycseq/increments.hpp"
#include "cycseq/intpoly.hpp"

namespace cycseq {

enum class GammaRegime { real_above_one, one, two, complex_at_most_one, limit };

GammaRegime gamma_regime(double value);

/// gamma = 2 (1 + y^2) / (1 - y)^2; invariant under y -> 1/y.
Rat gamma_from_root(const Rat& y);
double gamma_from_root(double y);

/// gamma = 2 cos(theta) / (cos(theta) - 1) for the exterior angle theta in (0, pi].
double gamma_from_angle(double theta);

/// Exact gamma for a root of a*y^2 + b*y + c when the dependence on the root
/// cancels symbolically (it does for every defining quadratic of a real QCS).
std::optional<Rat> gamma_from_quadratic(const Int& a, const Int& b, const Int& c);

/// The two roots {y, 1/y} of (2-gamma) y^2 + 2 gamma y + (2-gamma) = 0.
std::pair<RealRoot, RealRoot> roots_for_gamma(const Rat& gamma);

/// Candidates for the next increment: {u1^2/u2, u2}.
std::pair<Rat, Rat> recurrence_next(const Rat& u_prev2, const Rat& u_prev1);

struct RatVerify {
    bool is_qcs = false;
    std::optional<Rat> gamma;
    // One entry per vertex; disengaged when the left factor vanishes there.
    std::vector<std::optional<Rat>> vertex_gamma;
};
RatVerify verify_qcs(const std::vector<Rat>& values);

struct ComplexVerify {
    bool is_qcs = false;
    std::optional<double> gamma;
    std::vector<std::optional<std::complex<double>>> vertex_gamma;
};
ComplexVerify verify_qcs(const std::vector<std::complex<double>>& values,
                         double tol = 1e-9);

/// True iff every value equals at least one cyclic neighbour (the gamma = 2
/// characterization).
bool classify_gamma2(const std::vector<Rat>& values);

struct RealQcsBuild {
    IntPoly p;               // (x+1) * q
    IncrementSeq increments; // ordering actually used
    bool root_rational = false;
    Rat root_rat;            // engaged when rational
    RootInterval root_iv;    // isolating interval otherwise
    double root = 0.0;
    std::vector<Rat> values_rat; // exact values when the root is rational
    std::vector<double> values;  // numeric values always
    bool gamma_rational = false;
    Rat gamma_rat;
    double gamma = 0.0;
};

/// Builds a real QCS from q (all coefficients strictly positive): p = (x+1)q,
/// y the selected negative root of p (the one in (-1,0) when it exists,
/// otherwise the largest other negative root, falling back to -1), values
/// x_0 = 0, x_{j+1} = x_j + y^{s_j}. The default ordering rises monotonically
/// through the exponents and then inserts all elementary loops at the highest
/// applicable exponent first.
RealQcsBuild build_real_qcs(const IntPoly& q,
                            const std::optional<IncrementSeq>& ordering = std::nullopt);

/// First-term-zero integer normal form (scale by the lcm of denominators,
/// subtract the first term, divide by the gcd). min_zero instead rotates the
/// minimum to the front before shifting.
std::vector<Int> normalize_integer(const std::vector<Rat>& values,
                                   bool min_zero = false);

struct Extraction {
    IntPoly p;
    bool y_rational = false;
    Rat y;        // engaged when rational
    double y_num = 0.0;
    std::optional<RootInterval> y_interval; // numeric input path
    IncrementSeq increments;
    bool gamma_one = false; // y = -1 degenerate case
};

/// Recovers the defining polynomial from exact values: the increment ratio
/// u_1/u_0 fixes the branch, exponents follow from successive ratios, and the
/// counts after a min-zero shift give p (well-defined up to reversal).
Extraction extract_polynomial(const std::vector<Rat>& values);
/// Numeric variant with tolerance-based ratio classification.
Extraction extract_polynomial(const std::vector<double>& values,
                              double tol = 1e-9);

} // namespace cycseq

#pragma once

#include <random>
#include <utility>

#include "cycseq/increments.hpp"

namespace cycseq {

/// Lattice endpoint of a 2-step walk: the pair (k, l) with k + l even. For
/// n = 4 the geometric point is k + i*l; for n = 6 it is 3k/2 + i*sqrt(3)l/2.
struct Endpoint {
    long k = 0;
    long l = 0;
    bool operator==(const Endpoint&) const = default;
};

/// Open walk with turning angle 2*pi/n read two steps at a time (n = 4 or 6).
struct TwoStepWalk {
    unsigned n = 4;
    IncrementSeq increments; // open, exponents mod n
};

/// Exact endpoint from unit-root increment sums.
Endpoint endpoint_of(const TwoStepWalk& w);

/// Defining polynomial of an even-length 2-step walk with turning angle pi/2:
/// p(x) = (x+1)(x-1)(-(l/2)x - k/2) + (L/4)(x+1)(x^2+1).
IntPoly poly_n4(long long L, Endpoint e);

/// Number of 2-step paths of the given defining polynomial:
/// 2 C(b2+b0, b0) C(b3+b1, b1).
Int count_paths_n4(const IntPoly& p);
/// 4^{-L/2} C(b2+b0, b0) C(b3+b1, b1).
Rat probability_n4(const IntPoly& p);

/// Defining polynomial of an even-length 2-step walk with turning angle pi/3
/// and parameters a = b_5, b = b_4; enforces the stated inequalities and
/// integrality.
IntPoly poly_n6(long long L, Endpoint e, long long a, long long b);

/// Closure condition at (0,0): a, b > 0 and 4 max{a,b} < L < 4(a+b).
bool closed_n6_condition(long long a, long long b, long long L);

/// Multiplicity vector of the walk's exponents as a polynomial.
IntPoly walk_to_poly(const TwoStepWalk& w);

enum class FirstStep { horizontal, vertical };

/// The standard walk determined by an even-length 2-step walk with turning
/// angle pi/2: its positions after every second step, identified with the
/// sublattice k + l even. Consecutive points differ by (+-1, +-1).
std::vector<std::pair<long, long>> standard_of_2step(const TwoStepWalk& w);

/// Coordinate change (k, l) -> ((k+l)/2, (l-k)/2) onto the full integer
/// lattice, where each standard step becomes a unit axis move.
std::pair<long, long> standard_project(std::pair<long, long> kl);

/// Inverse of standard_of_2step after the initial binary choice: each
/// diagonal step splits into one horizontal and one vertical increment.
TwoStepWalk twostep_of_standard(const std::vector<std::pair<long, long>>& points,
                                FirstStep choice);

/// Uniform random 2-step walk: random initial direction, then +-1 exponent
/// steps.
TwoStepWalk random_twostep(unsigned n, unsigned length, std::mt19937_64& rng);

} // namespace cycseq

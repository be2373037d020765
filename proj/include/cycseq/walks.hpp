#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "cycseq/increments.hpp"

namespace cycseq {

/// A fixed-turning-angle walk: exponent sequence plus the fundamental
/// increment, either a primitive n-th root of unity (n, m) or a unit-modulus
/// algebraic number given by its polynomial and a numeric value.
struct TurningWalk {
    IncrementSeq increments;
    std::optional<std::pair<unsigned, long>> unity; // (n, m), gcd(m, n) = 1
    std::optional<IntPoly> root_poly;
    std::complex<double> root{1.0, 0.0};
};

/// Cumulative sums of y^{s_j} from start; root-of-unity increments are
/// embedded through the cyclotomic residue ring. N increments produce N+1
/// points (a closed walk repeats its start within rounding error).
std::vector<std::complex<double>> realize(const TurningWalk& w,
                                          std::complex<double> start = {0.0, 0.0});

/// Exact closure of a turning-angle-2*pi*m/n walk with multiplicity vector v:
/// Phi_n divides the polynomial, and (x+1) divides it too when n is even.
bool closed_exact(const IntPoly& p, unsigned n);
bool closed_exact(const CoeffVector& v, unsigned n);

struct SymmetryReport {
    bool all_edges_used = false;
    bool antipodal_balanced = false;
    std::vector<unsigned> missing_edges;    // exponents with b_k = 0
    std::vector<unsigned> unbalanced_pairs; // k < n/2 with b_k != b_{k+n/2}
};

/// Edge usage and antipodal balance of a closed vector at even modulus n.
SymmetryReport symmetry_report(const IntPoly& p, unsigned n);

struct SearchHit {
    std::vector<long long> coeffs; // canonical form (min over rotation/reversal)
    long long total = 0;
};

struct SearchResult {
    std::optional<SearchHit> best;                        // lexicographic min
    std::vector<std::vector<long long>> minimal_hits;     // all canonical hits at min total
};

/// Exhaustively enumerates closed legitimate vectors with total <= max_total
/// omitting at least omit_count edges; deterministic (total ascending, then
/// lexicographic on the canonical form).
SearchResult search_min_omitting(unsigned n, unsigned omit_count,
                                 long long max_total, unsigned threads = 1);

/// Same enumeration filtered for antipodal-unbalanced vectors (n even).
SearchResult search_min_asymmetric(unsigned n, long long max_total,
                                   unsigned threads = 1);

struct ReferenceCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Re-verifies the named constructions for n = 12, 18, 30 and the two
/// unit-modulus algebraic walks: closure, legitimacy, stated lengths,
/// omitted-edge counts and root approximations.
std::vector<ReferenceCheck> reference_checks();

struct NonUnityWalk {
    IntPoly p; // legitimate multiple of q by powers of (x+1)
    TurningWalk walk;
    std::complex<double> root;
};

/// Turns a palindromic q with a unit-modulus non-root-of-unity root into a
/// closed planar walk: q is multiplied by (x+1) until path-legitimate (cap
/// applications), and the root with |y| closest to 1 and positive imaginary
/// part is selected.
NonUnityWalk non_root_of_unity_walk(const IntPoly& q,
                                    unsigned cyclotomic_bound = 200,
                                    unsigned cap = 4);

/// All complex roots by Ehrlich-Aberth simultaneous iteration.
std::vector<std::complex<double>> aberth_roots(const IntPoly& p,
                                               double residual = 1e-12);

/// Lexicographic minimum of a count vector over rotations and reversal.
std::vector<long long> canonical_cycle_form(const std::vector<long long>& v);

/// Visits every non-negative length-n coefficient vector with sum <= max_total
/// whose polynomial the closure divisor divides (closed_exact holds).
void enumerate_closed_vectors(
    unsigned n, long long max_total,
    const std::function<void(const std::vector<long long>&, long long)>& fn);

} // namespace cycseq

#pragma once

#include <optional>
#include <string>

#include "cycseq/increments.hpp"

namespace cycseq {

enum class LoopDir { up, down };

struct ReductionStep {
    unsigned exponent;
    LoopDir dir;
};
using ReductionTrace = std::vector<ReductionStep>;

/// Removes an elementary loop y^k y^{k+1} y^k (up) or y^k y^{k-1} y^k (down)
/// from the multiplicity vector: b_k and its neighbour each drop by one.
CoeffVector remove_loop(const CoeffVector& v, unsigned k, LoopDir dir);
/// Inverse of remove_loop.
CoeffVector insert_loop(const CoeffVector& v, unsigned k, LoopDir dir);
CoeffVector apply_trace(const CoeffVector& v, const ReductionTrace& trace);

/// Quick illegitimacy witness: an exponent k with b_k > b_{k+1} + b_{k-1}
/// (indices mod n in the cycle regime, missing neighbours count 0). Absence
/// proves nothing.
std::optional<unsigned> violates_necessary(const CoeffVector& v);

struct LegitDecision {
    bool legitimate = false;
    std::optional<IncrementSeq> witness; // engaged when legitimate
    std::string reason;                  // short certificate description
};

/// Decides whether v admits a cyclic +-1-step exponent sequence with the
/// prescribed multiplicities. Path regime: the edge-crossing recurrence
/// a_k = b_k - a_{k-1} must stay >= 1 inside the support and vanish at the
/// top. Cycle regime: search over windings and initial flows for a balanced
/// connected one-step digraph; the witness is its Euler circuit.
LegitDecision is_legitimate(const CoeffVector& v);

/// Ground-truth backtracking enumeration for small instances.
bool is_legitimate_bruteforce(const CoeffVector& v, long long budget = 16);

/// Closed-form legitimacy of (x^3+1)(a x^2 + b x + c): all positive and the
/// maximum strictly below the sum of the other two.
bool criterion_n6(long long a, long long b, long long c);
/// Closed-form legitimacy of (x+1)(x^4+1)(a x^2 + b x + c): a, c, a+b, b+c > 0.
bool criterion_n8(long long a, long long b, long long c);

} // namespace cycseq

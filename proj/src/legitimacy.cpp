#include "cycseq/legitimacy.hpp"

#include <algorithm>
#include <functional>

#include "cycseq/digraph.hpp"

namespace cycseq {

namespace {

unsigned neighbour(unsigned k, int delta, unsigned n, Regime regime,
                   bool& exists) {
    long idx = static_cast<long>(k) + delta;
    if (regime == Regime::cycle) {
        exists = true;
        long m = static_cast<long>(n);
        return static_cast<unsigned>(((idx % m) + m) % m);
    }
    exists = idx >= 0 && idx < static_cast<long>(n);
    return exists ? static_cast<unsigned>(idx) : 0;
}

} // namespace

CoeffVector remove_loop(const CoeffVector& v, unsigned k, LoopDir dir) {
    if (k >= v.size())
        throw Error("exponent out of range");
    bool exists = false;
    unsigned j = neighbour(k, dir == LoopDir::up ? 1 : -1, v.size(), v.regime,
                           exists);
    if (!exists)
        throw InsufficientMultiplicity("loop neighbour lies outside the range");
    if (v.counts[k] < 1 || v.counts[j] < 1)
        throw InsufficientMultiplicity("multiplicities too small for a loop at " +
                                       std::to_string(k));
    CoeffVector out = v;
    --out.counts[k];
    --out.counts[j];
    return out;
}

CoeffVector insert_loop(const CoeffVector& v, unsigned k, LoopDir dir) {
    if (k >= v.size())
        throw Error("exponent out of range");
    bool exists = false;
    unsigned j = neighbour(k, dir == LoopDir::up ? 1 : -1, v.size(), v.regime,
                           exists);
    if (!exists)
        throw InsufficientMultiplicity("loop neighbour lies outside the range");
    CoeffVector out = v;
    ++out.counts[k];
    ++out.counts[j];
    return out;
}

CoeffVector apply_trace(const CoeffVector& v, const ReductionTrace& trace) {
    CoeffVector out = v;
    for (const auto& step : trace)
        out = remove_loop(out, step.exponent, step.dir);
    return out;
}

std::optional<unsigned> violates_necessary(const CoeffVector& v) {
    unsigned n = v.size();
    if (n == 0 || (v.regime == Regime::cycle && n < 3))
        return std::nullopt;
    for (unsigned k = 0; k < n; ++k) {
        bool le = false, re = false;
        unsigned l = neighbour(k, -1, n, v.regime, le);
        unsigned r = neighbour(k, +1, n, v.regime, re);
        long long sum = (le ? v.counts[l] : 0) + (re ? v.counts[r] : 0);
        if (v.counts[k] > sum)
            return k;
    }
    return std::nullopt;
}

namespace {

LegitDecision decide_path(const CoeffVector& v) {
    const auto& b = v.counts;
    unsigned n = v.size();
    unsigned lo = 0, hi = n;
    while (lo < n && b[lo] == 0)
        ++lo;
    while (hi > lo && b[hi - 1] == 0)
        --hi;
    if (lo == hi)
        return {false, std::nullopt, "empty support"};
    if (hi - lo == 1)
        return {false, std::nullopt, "single exponent cannot alternate"};
    long long carry = 0;
    for (unsigned k = lo; k < hi; ++k) {
        long long c = b[k] - carry;
        bool interior = k + 1 < hi;
        if (interior && c < 1)
            return {false, std::nullopt,
                    "crossing count drops below 1 at exponent " + std::to_string(k)};
        if (!interior && c != 0)
            return {false, std::nullopt, "crossings unmatched at the top exponent"};
        carry = c;
    }
    auto digraph = OneStepDigraph::from_coeffs(v, 0);
    IncrementSeq witness = digraph.euler_circuit();
    return {true, witness, "crossing counts all positive"};
}

LegitDecision decide_cycle(const CoeffVector& v) {
    const auto& b = v.counts;
    unsigned n = v.size();
    if (n == 1) {
        // Exponents mod 1 make every step legal.
        IncrementSeq w;
        w.modulus = 1;
        w.cyclic = true;
        w.exponents.assign(static_cast<std::size_t>(b[0]), 0);
        return {true, w, "trivial modulus"};
    }
    long long maxb = *std::max_element(b.begin(), b.end());
    for (long long winding = -maxb; winding <= maxb; ++winding) {
        OneStepDigraph d(n, Topology::cycle);
        try {
            d = OneStepDigraph::from_coeffs(v, winding);
        } catch (const InfeasibleFlow&) {
            continue;
        }
        if (!d.connected_support())
            continue;
        IncrementSeq witness = d.euler_circuit();
        return {true, witness,
                "connected flow at winding " + std::to_string(winding)};
    }
    return {false, std::nullopt, "no connected flow for any winding"};
}

} // namespace

LegitDecision is_legitimate(const CoeffVector& v) {
    if (!v.all_nonnegative())
        throw Error("count vector has a negative entry");
    if (v.total() == 0)
        return {false, std::nullopt, "no increments"};
    return v.regime == Regime::path ? decide_path(v) : decide_cycle(v);
}

bool is_legitimate_bruteforce(const CoeffVector& v, long long budget) {
    if (!v.all_nonnegative())
        throw Error("count vector has a negative entry");
    long long total = v.total();
    if (total > budget)
        throw BudgetExceeded("total " + std::to_string(total) +
                             " exceeds the enumeration budget");
    if (total == 0)
        return false;
    unsigned n = v.size();
    if (v.regime == Regime::cycle && n == 1)
        return true;

    std::vector<long long> counts(v.counts);
    unsigned start = 0;
    while (counts[start] == 0)
        ++start;
    --counts[start];

    // Any cyclic witness can be rotated to begin at `start`.
    auto step_ok = [&](unsigned from, unsigned to) {
        if (v.regime == Regime::path)
            return (to == from + 1) || (to + 1 == from);
        unsigned d = (to + n - from) % n;
        return d == 1 % n || d == (n - 1) % n;
    };
    std::function<bool(unsigned, long long)> dfs = [&](unsigned cur,
                                                       long long remaining) {
        if (remaining == 0)
            return step_ok(cur, start);
        for (int delta : {+1, -1}) {
            bool exists = false;
            unsigned nxt = neighbour(cur, delta, n, v.regime, exists);
            if (!exists || counts[nxt] == 0)
                continue;
            --counts[nxt];
            if (dfs(nxt, remaining - 1))
                return true;
            ++counts[nxt];
        }
        return false;
    };
    return dfs(start, total - 1);
}

bool criterion_n6(long long a, long long b, long long c) {
    if (a <= 0 || b <= 0 || c <= 0)
        return false;
    long long mx = std::max({a, b, c});
    return mx < a + b + c - mx;
}

bool criterion_n8(long long a, long long b, long long c) {
    return a > 0 && c > 0 && a + b > 0 && b + c > 0;
}

} // namespace cycseq

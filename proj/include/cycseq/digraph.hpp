#pragma once

#include <string>

#include "cycseq/increments.hpp"

namespace cycseq {

enum class Topology { path, cycle };

/// Balanced multidigraph on vertices 0..n-1 with arcs only between adjacent
/// vertices (mod n for cycle topology), stored as per-edge directed
/// multiplicities: up[k] counts arcs k -> k+1 and down[k] arcs k+1 -> k.
class OneStepDigraph {
public:
    OneStepDigraph(unsigned n, Topology topo);

    /// Solves the balance recurrence f_k = b_k + winding - f_{k-1} for a flow
    /// matching the degree sequence v. Prefers a connected solution when one
    /// exists for this winding; path topology admits a single flow and the
    /// winding must be 0.
    static OneStepDigraph from_coeffs(const CoeffVector& v, long long winding = 0);

    unsigned order() const { return n_; }
    Topology topology() const { return topo_; }
    unsigned edge_slots() const;

    long long up(unsigned k) const { return up_.at(k); }
    long long down(unsigned k) const { return down_.at(k); }
    long long arc_count() const;
    std::vector<long long> degree_sequence() const;
    bool connected_support() const;

    /// Closed walk traversing every arc exactly once, emitted as the sequence
    /// of visited vertices starting from the lowest-index vertex with positive
    /// degree; arcs toward higher vertices are preferred at ties.
    IncrementSeq euler_circuit() const;

    /// Adds / removes an antiparallel arc pair on edge (k, k+1).
    void insert_elementary_walk(unsigned k);
    void remove_elementary_walk(unsigned k);

    /// True iff other equals the image of this digraph under the vertex map
    /// j -> n-1-j with arc directions transported.
    bool reversal_isomorphic(const OneStepDigraph& other) const;

    std::string to_dot() const;

    bool operator==(const OneStepDigraph&) const = default;

private:
    unsigned n_;
    Topology topo_;
    std::vector<long long> up_, down_;
};

struct Concatenation {
    IntPoly p;             // p1 + x^k * p2
    IncrementSeq ordering; // spliced witness
};

/// Splices the monotone-rise ordering of p2 (shifted by k) into p1's ordering.
/// Both inputs must be path-legitimate with a common negative real root and
/// 0 <= k <= deg p1.
Concatenation concatenate(const IntPoly& p1, const IntPoly& p2, unsigned k);

} // namespace cycseq

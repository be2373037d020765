#include <doctest.h>

#include <set>

#include "cycseq/digraph.hpp"
#include "cycseq/legitimacy.hpp"

using namespace cycseq;

namespace {

CoeffVector vec(std::initializer_list<long long> counts, Regime regime) {
    CoeffVector v;
    v.counts = counts;
    v.regime = regime;
    return v;
}

} // namespace

TEST_CASE("path digraph from (x+1)(2x^4+4x^3+x^2+2x+2)") {
    // 2x^5+6x^4+5x^3+3x^2+4x+2: 22 arcs, crossing counts equal to the factor.
    CoeffVector v = vec({2, 4, 3, 5, 6, 2}, Regime::path);
    auto d = OneStepDigraph::from_coeffs(v);
    CHECK(d.arc_count() == 22);
    for (unsigned k = 0; k < d.edge_slots(); ++k)
        CHECK(d.up(k) == d.down(k));
    std::vector<long long> ups;
    for (unsigned k = 0; k < d.edge_slots(); ++k)
        ups.push_back(d.up(k));
    CHECK(ups == std::vector<long long>{2, 2, 1, 4, 2});
    CHECK(d.degree_sequence() == std::vector<long long>{2, 4, 3, 5, 6, 2});
}

TEST_CASE("directed cycle") {
    CoeffVector v = vec({1, 1, 1, 1, 1, 1}, Regime::cycle);
    auto d = OneStepDigraph::from_coeffs(v, 1);
    auto circuit = d.euler_circuit();
    CHECK(circuit.exponents == std::vector<long>{0, 1, 2, 3, 4, 5});
    CHECK(circuit.modulus == 6u);
}

TEST_CASE("winding 0 gives antiparallel pairs") {
    auto d = OneStepDigraph::from_coeffs(vec({2, 2, 2, 2}, Regime::cycle), 0);
    for (unsigned k = 0; k < 4; ++k) {
        CHECK(d.up(k) == 1);
        CHECK(d.down(k) == 1);
    }
}

TEST_CASE("three realizations of the same degree sequence") {
    CoeffVector v = vec({2, 2, 2, 2}, Regime::cycle);
    std::set<std::vector<long long>> up_vectors;
    for (long long w : {0, 1, 2}) {
        auto d = OneStepDigraph::from_coeffs(v, w);
        CHECK(d.degree_sequence() == std::vector<long long>{2, 2, 2, 2});
        auto circuit = d.euler_circuit();
        CHECK(circuit.valid_steps());
        auto mult = circuit.multiplicities();
        CHECK(mult == std::vector<long long>{2, 2, 2, 2});
        std::vector<long long> ups;
        for (unsigned k = 0; k < 4; ++k)
            ups.push_back(d.up(k));
        up_vectors.insert(ups);
    }
    CHECK(up_vectors.size() == 3);
}

TEST_CASE("euler circuits traverse every arc once") {
    auto check_circuit = [](const OneStepDigraph& d, const CoeffVector& v) {
        auto circuit = d.euler_circuit();
        CHECK(circuit.exponents.size() == static_cast<std::size_t>(d.arc_count()));
        CHECK(circuit.valid_steps());
        auto mult = circuit.multiplicities();
        mult.resize(v.counts.size(), 0);
        CHECK(mult == std::vector<long long>(v.counts));
    };
    for (auto v : {vec({2, 5, 3}, Regime::path),
                   vec({2, 4, 3, 5, 6, 2}, Regime::path)})
        check_circuit(OneStepDigraph::from_coeffs(v), v);
    // This degree sequence admits no connected flow at winding 0; the
    // circulation only links up once it winds around.
    CoeffVector ring = vec({1, 2, 2, 1, 2, 2}, Regime::cycle);
    CHECK_THROWS_AS(OneStepDigraph::from_coeffs(ring, 0).euler_circuit(),
                    Disconnected);
    check_circuit(OneStepDigraph::from_coeffs(ring, 1), ring);
}

TEST_CASE("insert then remove is the identity") {
    auto d = OneStepDigraph::from_coeffs(vec({2, 5, 3}, Regime::path));
    auto copy = d;
    d.insert_elementary_walk(1);
    d.remove_elementary_walk(1);
    CHECK(d == copy);
}

TEST_CASE("the doubled directed cycle has no elementary closed walk") {
    auto d = OneStepDigraph::from_coeffs(vec({2, 2, 2, 2}, Regime::cycle), 2);
    for (unsigned k = 0; k < 4; ++k)
        CHECK_THROWS_AS(d.remove_elementary_walk(k), InsufficientArcs);
}

TEST_CASE("removing the last interior pair disconnects") {
    auto d = OneStepDigraph::from_coeffs(vec({1, 2, 2, 1}, Regime::path));
    // Crossing counts are (1, 1, 1): one pair on the middle edge.
    d.remove_elementary_walk(1);
    CHECK_FALSE(d.connected_support());
    CHECK_THROWS_AS(d.euler_circuit(), Disconnected);
    CHECK_THROWS_AS(d.remove_elementary_walk(1), InsufficientArcs);
}

TEST_CASE("infeasible flows are rejected") {
    CHECK_THROWS_AS(OneStepDigraph::from_coeffs(vec({1, 3, 1}, Regime::path)),
                    InfeasibleFlow);
    CHECK_THROWS_AS(OneStepDigraph::from_coeffs(vec({2, 5, 3}, Regime::path), 1),
                    InfeasibleFlow);
}

TEST_CASE("reversal isomorphism") {
    auto d1 = OneStepDigraph::from_coeffs(vec({2, 5, 3}, Regime::path));
    auto d2 = OneStepDigraph::from_coeffs(vec({3, 5, 2}, Regime::path));
    CHECK(d1.reversal_isomorphic(d2));
    CHECK(d2.reversal_isomorphic(d1));

    auto p = OneStepDigraph::from_coeffs(vec({1, 2, 2, 1}, Regime::path));
    CHECK(p.reversal_isomorphic(p)); // palindromic degree sequence

    auto e1 = OneStepDigraph::from_coeffs(vec({1, 2, 1}, Regime::path));
    CHECK_FALSE(d1.reversal_isomorphic(e1));
}

TEST_CASE("dot export names all arcs") {
    auto d = OneStepDigraph::from_coeffs(vec({1, 2, 1}, Regime::path));
    auto dot = d.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0 -> 1") != std::string::npos);
    CHECK(dot.find("1 -> 0") != std::string::npos);
}

TEST_CASE("concatenation of the two worked examples") {
    IntPoly p1{2, 7, 7, 2}; // (x+1)(x+2)(2x+1)
    IntPoly p2{2, 3, 1};    // (x+1)(x+2)

    auto c1 = concatenate(p1, p2, 1);
    CHECK(c1.p == IntPoly{2, 9, 10, 3});
    CHECK(c1.ordering.exponents.size() == 24);
    CHECK(c1.ordering.valid_steps());
    CHECK(is_legitimate(CoeffVector::from_poly(c1.p, Regime::path)).legitimate);
    CHECK(c1.ordering.to_poly() == c1.p);

    auto c0 = concatenate(p1, p2, 0);
    CHECK(c0.p == IntPoly{4, 10, 8, 2});
    CHECK(c0.p == IntPoly{1, 1} * IntPoly{2, 1} * IntPoly{2, 2});
    CHECK(c0.ordering.to_poly() == c0.p);
}

TEST_CASE("self-concatenation two exponents up") {
    IntPoly p{2, 5, 3};
    auto c = concatenate(p, p, 2);
    CHECK(c.p == IntPoly{2, 5, 5, 5, 3});
    CHECK(c.p == IntPoly{1, 0, 1} * IntPoly{2, 5, 3});
    CHECK(c.ordering.exponents.size() == 20);
    CHECK(c.ordering.valid_steps());
    CHECK(c.ordering.to_poly() == c.p);
    CHECK(is_legitimate(CoeffVector::from_poly(c.p, Regime::path)).legitimate);
}

TEST_CASE("concatenation validates its inputs") {
    // No common root: (x+1)(x+2) vs (x+1)(x+3) -> gcd (x+1) is fine, so use
    // inputs with disjoint root sets entirely.
    IntPoly a{2, 3, 1}; // roots -1, -2
    IntPoly b{3, 4, 1}; // roots -1, -3 -> shares -1: legitimate input
    CHECK_NOTHROW(concatenate(a, b, 0));

    IntPoly bad{1, 3, 1}; // not of the (x+1)q form: -1 is not a root
    CHECK_THROWS_AS(concatenate(a, bad, 0), IllegitimateInput);

    CHECK_THROWS_AS(concatenate(a, b, 3), IllegitimateInput);
}

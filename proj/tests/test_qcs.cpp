#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cycseq/qcs.hpp"

using namespace cycseq;

namespace {

std::vector<Rat> rats(std::initializer_list<const char*> vals) {
    std::vector<Rat> out;
    for (const char* v : vals)
        out.push_back(rat_from_string(v));
    return out;
}

IncrementSeq ordering(std::initializer_list<long> exps) {
    IncrementSeq s;
    s.exponents = exps;
    s.cyclic = true;
    return s;
}

} // namespace

TEST_CASE("verify integer order-10 sequences") {
    auto r = verify_qcs(rats({"0", "9", "3", "12", "6", "10", "4", "8", "2", "6"}));
    CHECK(r.is_qcs);
    CHECK(*r.gamma == make_rat(26, 25));

    r = verify_qcs(rats({"0", "9", "3", "7", "1", "10", "4", "8", "2", "6"}));
    CHECK(r.is_qcs);
    CHECK(*r.gamma == make_rat(26, 25));
}

TEST_CASE("verify the order-6 complex sequence") {
    double s = std::sqrt(3.0) / 2.0;
    std::vector<std::complex<double>> vals = {
        {0, 0}, {1, 0}, {0.5, -s}, {0, 0}, {1, 0}, {0.5, s}};
    auto r = verify_qcs(vals, 1e-12);
    CHECK(r.is_qcs);
    CHECK(*r.gamma == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("verify alternating and two-segment sequences") {
    auto r = verify_qcs(rats({"0", "1", "0", "1", "0", "1"}));
    CHECK(r.is_qcs);
    CHECK(*r.gamma == 1);

    r = verify_qcs(rats({"0", "0", "1", "1", "0", "0", "1", "1"}));
    CHECK(r.is_qcs);
    CHECK(*r.gamma == 2);

    CHECK_THROWS_AS(verify_qcs(rats({"3", "3", "3", "1"})), DegenerateVertex);
}

TEST_CASE("non-sequences are rejected") {
    auto r = verify_qcs(rats({"0", "1", "2", "4"}));
    CHECK_FALSE(r.is_qcs);
}

TEST_CASE("gamma from root and angle") {
    CHECK(gamma_from_root(make_rat(-2, 3)) == make_rat(26, 25));
    CHECK(gamma_from_root(Rat(-1)) == 1);
    CHECK(gamma_from_root(Rat(-2)) == make_rat(10, 9));
    CHECK(gamma_from_root(make_rat(-2, 3)) == gamma_from_root(make_rat(-3, 2)));

    CHECK(gamma_from_angle(2.0 * std::numbers::pi / 3.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(gamma_from_angle(std::numbers::pi) == doctest::Approx(1.0));
    CHECK(gamma_from_angle(std::numbers::pi / 2.0) == doctest::Approx(0.0));
}

TEST_CASE("gamma regimes") {
    CHECK(gamma_regime(1.04) == GammaRegime::real_above_one);
    CHECK(gamma_regime(1.0) == GammaRegime::one);
    CHECK(gamma_regime(2.0) == GammaRegime::two);
    CHECK(gamma_regime(0.5) == GammaRegime::complex_at_most_one);
    CHECK(gamma_regime(-std::numeric_limits<double>::infinity()) ==
          GammaRegime::limit);
}

TEST_CASE("roots for gamma") {
    auto pair = roots_for_gamma(make_rat(26, 25));
    CHECK(std::get<Rat>(pair.first) == make_rat(-3, 2));
    CHECK(std::get<Rat>(pair.second) == make_rat(-2, 3));

    pair = roots_for_gamma(Rat(1));
    CHECK(std::get<Rat>(pair.first) == Rat(-1));
    CHECK(std::get<Rat>(pair.second) == Rat(-1));

    pair = roots_for_gamma(make_rat(10, 9));
    CHECK(std::get<Rat>(pair.first) == Rat(-2));
    CHECK(std::get<Rat>(pair.second) == make_rat(-1, 2));

    CHECK_THROWS_AS(roots_for_gamma(make_rat(1, 2)), NoRealRoot);
    CHECK_THROWS_AS(roots_for_gamma(Rat(2)), DegenerateGamma);
}

TEST_CASE("roots_for_gamma inverts gamma_from_root") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(1, 40), den(1, 40);
    for (int i = 0; i < 100; ++i) {
        Rat y = make_rat(-num(rng), den(rng));
        if (y == -1)
            continue;
        auto pair = roots_for_gamma(gamma_from_root(y));
        Rat inv = 1 / y;
        bool match = (std::get<Rat>(pair.first) == y &&
                      std::get<Rat>(pair.second) == inv) ||
                     (std::get<Rat>(pair.first) == inv &&
                      std::get<Rat>(pair.second) == y);
        CHECK(match);
    }
}

TEST_CASE("recurrence candidates") {
    auto c = recurrence_next(Rat(1), make_rat(-2, 3));
    CHECK(c.first == make_rat(4, 9));
    CHECK(c.second == 1);

    c = recurrence_next(Rat(5), Rat(5));
    CHECK(c.first == 5);
    CHECK(c.second == 5);

    c = recurrence_next(Rat(-2), Rat(4));
    CHECK(c.first == -8);
    CHECK(c.second == -2);

    CHECK_THROWS_AS(recurrence_next(Rat(0), Rat(1)), ZeroIncrement);
}

TEST_CASE("build with an explicit ordering") {
    auto built = build_real_qcs(IntPoly{2, 3},
                                ordering({0, 1, 0, 1, 2, 1, 2, 1, 2, 1}));
    CHECK(built.p == IntPoly{2, 5, 3});
    REQUIRE(built.root_rational);
    CHECK(built.root_rat == make_rat(-2, 3));
    CHECK(built.values_rat ==
          rats({"0", "1", "1/3", "4/3", "2/3", "10/9", "4/9", "8/9", "2/9", "2/3"}));
    CHECK(built.gamma_rat == make_rat(26, 25));
    CHECK(normalize_integer(built.values_rat) ==
          std::vector<Int>{0, 9, 3, 12, 6, 10, 4, 8, 2, 6});
}

TEST_CASE("order-6 hexagonal build") {
    auto built = build_real_qcs(IntPoly{2, 1}, ordering({0, 1, 0, 1, 2, 1}));
    CHECK(built.p == IntPoly{2, 3, 1});
    CHECK(built.root_rat == Rat(-2));
    CHECK(built.values_rat == rats({"0", "1", "-1", "0", "-2", "2"}));
    CHECK(normalize_integer(built.values_rat, /*min_zero=*/true) ==
          std::vector<Int>{0, 4, 2, 3, 1, 2});
}

TEST_CASE("default ordering rises then loops from the top") {
    auto built = build_real_qcs(IntPoly{2, 3});
    CHECK(built.increments.exponents ==
          std::vector<long>{0, 1, 2, 1, 2, 1, 2, 1, 0, 1});
    CHECK(built.values_rat.size() == 10);
    auto ver = verify_qcs(built.values_rat);
    CHECK(ver.is_qcs);
    CHECK(*ver.gamma == make_rat(26, 25));
}

TEST_CASE("irrational build: order 12 with gamma 4/3") {
    auto built = build_real_qcs(IntPoly{1, 4, 1});
    CHECK(built.p == IntPoly{1, 5, 5, 1});
    CHECK_FALSE(built.root_rational);
    CHECK(built.root == doctest::Approx(-2.0 + std::sqrt(3.0)).epsilon(1e-10));
    CHECK(built.values.size() == 12);
    CHECK(built.gamma == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(gamma_from_quadratic(Int(1), Int(4), Int(1)) == make_rat(4, 3));
}

TEST_CASE("build validates its inputs") {
    CHECK_THROWS_AS(build_real_qcs(IntPoly{2, 0, 1}), NonPositiveCoefficient);
    CHECK_THROWS_AS(build_real_qcs(IntPoly{-1, 2}), NonPositiveCoefficient);
    CHECK_THROWS_AS(build_real_qcs(IntPoly{2, 3}, ordering({0, 1, 0, 1})),
                    IllegitimateOrdering);
    CHECK_THROWS_AS(build_real_qcs(IntPoly{2, 3},
                                   ordering({1, 2, 1, 2, 3, 2, 3, 2, 3, 2})),
                    IllegitimateOrdering);
}

TEST_CASE("normalize_integer") {
    CHECK(normalize_integer(rats({"0", "5", "10"})) == std::vector<Int>{0, 1, 2});
    CHECK(normalize_integer(rats({"3", "5", "7"})) == std::vector<Int>{0, 1, 2});
}

TEST_CASE("extract from a rotated sequence") {
    auto ext = extract_polynomial(
        rats({"6", "10", "4", "8", "2", "6", "0", "9", "3", "12"}));
    CHECK(ext.p == IntPoly{3, 5, 2});
    CHECK(ext.y == make_rat(-3, 2));
    CHECK_FALSE(ext.gamma_one);
}

TEST_CASE("extract returns the original polynomial") {
    auto ext = extract_polynomial(
        rats({"0", "9", "3", "12", "6", "10", "4", "8", "2", "6"}));
    CHECK(ext.p == IntPoly{2, 5, 3});
    CHECK(ext.y == make_rat(-2, 3));
}

TEST_CASE("extract the alternating degenerate case") {
    auto ext = extract_polynomial(rats({"0", "1", "0", "1"}));
    CHECK(ext.gamma_one);
    CHECK(ext.y == Rat(-1));
    CHECK(ext.p == IntPoly{2, 2});
}

TEST_CASE("extract rejects non-sequences") {
    CHECK_THROWS_AS(extract_polynomial(rats({"0", "1", "5", "2"})), NotQcs);
    CHECK_THROWS_AS(extract_polynomial(rats({"0", "0", "1", "1"})), NotQcs);
}

TEST_CASE("gamma-2 classification") {
    CHECK(classify_gamma2(rats({"0", "0", "1", "1"})));
    CHECK_FALSE(classify_gamma2(rats({"0", "1", "0", "1"})));
    CHECK(classify_gamma2(rats({"5", "5", "5", "2", "2", "9", "9", "9", "9"})));
}

TEST_CASE("affine invariance of verification") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> pick(-30, 30);
    auto base = rats({"0", "9", "3", "12", "6", "10", "4", "8", "2", "6"});
    for (int i = 0; i < 50; ++i) {
        Rat a(pick(rng));
        if (a == 0)
            a = 7;
        Rat b(pick(rng));
        std::vector<Rat> mapped;
        for (const auto& v : base)
            mapped.push_back(a * v + b);
        auto r = verify_qcs(mapped);
        CHECK(r.is_qcs);
        CHECK(*r.gamma == make_rat(26, 25));
    }
}

TEST_CASE("built sequences oscillate and verify") {
    // Small sweep; the acceptance suite runs the exhaustive version.
    std::vector<IntPoly> qs = {IntPoly{1, 1},    IntPoly{2, 3},
                               IntPoly{1, 3},    IntPoly{2, 1},
                               IntPoly{1, 2, 1}, IntPoly{2, 1, 3},
                               IntPoly{1, 1, 1, 1}};
    for (const auto& q : qs) {
        auto built = build_real_qcs(q);
        CHECK(built.increments.size() % 2 == 0);
        CHECK(built.increments.size() ==
              2 * q.sum_of_coeffs().get_ui());
        if (built.root_rational && built.root_rat != -1) {
            auto ver = verify_qcs(built.values_rat);
            CHECK(ver.is_qcs);
            CHECK(*ver.gamma == gamma_from_root(built.root_rat));
            // Increments alternate in sign.
            std::size_t n = built.values_rat.size();
            for (std::size_t j = 0; j < n; ++j) {
                Rat u = built.values_rat[(j + 1) % n] - built.values_rat[j];
                Rat v = built.values_rat[(j + 2) % n] -
                        built.values_rat[(j + 1) % n];
                CHECK(sgn(u) * sgn(v) < 0);
            }
        }
    }
}

#include "cycseq/lattice.hpp"

#include <algorithm>

namespace cycseq {

namespace {

void require_walk(const TwoStepWalk& w) {
    if (w.n != 4 && w.n != 6)
        throw Error("2-step walks are defined for n = 4 and n = 6");
    if (w.increments.cyclic)
        throw Error("2-step walks are open");
    if (!w.increments.modulus || *w.increments.modulus != w.n)
        throw Error("walk exponents must carry modulus n");
    if (!w.increments.valid_steps())
        throw Error("walk violates the +-1 step rule");
}

Int binomial(long long n, long long k) {
    Int b;
    if (k < 0 || k > n)
        return Int(0);
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

} // namespace

Endpoint endpoint_of(const TwoStepWalk& w) {
    require_walk(w);
    if (w.n == 4) {
        // i^e contributes (+-1, 0) or (0, +-1).
        long k = 0, l = 0;
        for (long e : w.increments.exponents) {
            switch (((e % 4) + 4) % 4) {
            case 0: ++k; break;
            case 1: ++l; break;
            case 2: --k; break;
            default: --l; break;
            }
        }
        return {k, l};
    }
    // n = 6: y^e = (A/2, B*sqrt(3)/2) with integer pairs
    // (2,0), (1,1), (-1,1), (-2,0), (-1,-1), (1,-1); the endpoint
    // 3k/2 + i*sqrt(3)l/2 gives k = A/3 and l = B.
    static const long comp[6][2] = {{2, 0},  {1, 1},   {-1, 1},
                                    {-2, 0}, {-1, -1}, {1, -1}};
    long A = 0, B = 0;
    for (long e : w.increments.exponents) {
        long r = ((e % 6) + 6) % 6;
        A += comp[r][0];
        B += comp[r][1];
    }
    if (A % 3 != 0)
        throw Error("endpoint does not lie on the triangular lattice");
    return {A / 3, B};
}

IntPoly poly_n4(long long L, Endpoint e) {
    if (L < 0 || L % 2 != 0)
        throw InfeasibleEndpoint("length must be even and non-negative");
    if ((e.k + e.l) % 2 != 0)
        throw InfeasibleEndpoint("endpoint parity requires k + l even");
    // b0 = L/4 + k/2, b1 = L/4 + l/2, b2 = L/4 - k/2, b3 = L/4 - l/2.
    long long num[4] = {L + 2 * e.k, L + 2 * e.l, L - 2 * e.k, L - 2 * e.l};
    std::vector<Int> c(4);
    for (int i = 0; i < 4; ++i) {
        if (num[i] % 4 != 0)
            throw InfeasibleEndpoint("coefficients are not integers for this length");
        long long b = num[i] / 4;
        if (b < 0)
            throw InfeasibleEndpoint("negative multiplicity for this endpoint");
        c[static_cast<std::size_t>(i)] = Int(static_cast<long>(b));
    }
    return IntPoly(std::move(c));
}

Int count_paths_n4(const IntPoly& p) {
    if (p.degree() > 3)
        throw Error("expected a polynomial of degree <= 3");
    long long b0 = p.coeff(0).get_si(), b1 = p.coeff(1).get_si(),
              b2 = p.coeff(2).get_si(), b3 = p.coeff(3).get_si();
    return 2 * binomial(b2 + b0, b0) * binomial(b3 + b1, b1);
}

Rat probability_n4(const IntPoly& p) {
    long long L = p.sum_of_coeffs().get_si();
    if (L % 2 != 0)
        throw Error("expected an even-length walk polynomial");
    long long b0 = p.coeff(0).get_si(), b1 = p.coeff(1).get_si(),
              b2 = p.coeff(2).get_si(), b3 = p.coeff(3).get_si();
    Int ways = binomial(b2 + b0, b0) * binomial(b3 + b1, b1);
    Int denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 4, static_cast<unsigned long>(L / 2));
    return make_rat(ways, denom);
}

IntPoly poly_n6(long long L, Endpoint e, long long a, long long b) {
    if (L < 0 || L % 2 != 0)
        throw NonIntegerCoefficient("length must be even and non-negative");
    if ((e.k + e.l) % 2 != 0)
        throw InfeasibleEndpoint("endpoint parity requires k + l even");
    long long k = e.k, l = e.l;
    if (k != 0 || l != 0) {
        long long m1 = std::abs(k) + std::abs(l);
        long long m2 = 2 * (a + b) + (k + l);
        long long m3 = 2 * (a + b) - (k - l);
        if (L < std::max({m1, m2, m3}))
            throw InequalityViolated("length below the stated lower bounds");
        if (a < std::max<long long>(0, (k - l) / 2) ||
            b < std::max<long long>(0, -(k + l) / 2))
            throw InequalityViolated("parameters a, b below their lower bounds");
    } else if (!closed_n6_condition(a, b, L)) {
        throw InequalityViolated("closed walks need a,b > 0 and 4 max{a,b} < L < 4(a+b)");
    }

    long long b5 = a;
    long long b4 = b;
    long long b3 = L / 2 - a - b - (k + l) / 2;
    long long b2 = a - (k - l) / 2;
    long long b1 = b + (k + l) / 2;
    long long b0 = L / 2 - a - b + (k - l) / 2;
    std::vector<Int> coeffs;
    for (long long v : {b0, b1, b2, b3, b4, b5}) {
        if (v < 0)
            throw InequalityViolated("a multiplicity came out negative");
        coeffs.emplace_back(static_cast<long>(v));
    }
    return IntPoly(std::move(coeffs));
}

bool closed_n6_condition(long long a, long long b, long long L) {
    if (a <= 0 || b <= 0)
        return false;
    return 4 * std::max(a, b) < L && L < 4 * (a + b);
}

IntPoly walk_to_poly(const TwoStepWalk& w) {
    require_walk(w);
    if (w.increments.exponents.empty())
        return {};
    return w.increments.to_poly();
}

std::vector<std::pair<long, long>> standard_of_2step(const TwoStepWalk& w) {
    require_walk(w);
    if (w.n != 4)
        throw Error("the standard-walk correspondence applies to n = 4");
    if (w.increments.size() % 2 != 0)
        throw Error("the correspondence needs an even number of steps");
    std::vector<std::pair<long, long>> pts;
    pts.reserve(w.increments.size() / 2 + 1);
    long k = 0, l = 0;
    pts.emplace_back(0, 0);
    for (std::size_t j = 0; j < w.increments.size(); ++j) {
        long r = ((w.increments.exponents[j] % 4) + 4) % 4;
        switch (r) {
        case 0: ++k; break;
        case 1: ++l; break;
        case 2: --k; break;
        default: --l; break;
        }
        if (j % 2 == 1)
            pts.emplace_back(k, l);
    }
    return pts;
}

std::pair<long, long> standard_project(std::pair<long, long> kl) {
    if ((kl.first + kl.second) % 2 != 0)
        throw Error("not a standard-lattice point: k + l must be even");
    return {(kl.first + kl.second) / 2, (kl.second - kl.first) / 2};
}

TwoStepWalk twostep_of_standard(const std::vector<std::pair<long, long>>& points,
                                FirstStep choice) {
    TwoStepWalk w;
    w.n = 4;
    w.increments.cyclic = false;
    w.increments.modulus = 4;
    for (std::size_t t = 1; t < points.size(); ++t) {
        long dk = points[t].first - points[t - 1].first;
        long dl = points[t].second - points[t - 1].second;
        if (std::abs(dk) != 1 || std::abs(dl) != 1)
            throw Error("not a standard walk: consecutive points must differ "
                        "by (+-1, +-1)");
        long h = dk == 1 ? 0 : 2; // exponent of the +-1 increment
        long v = dl == 1 ? 1 : 3; // exponent of the +-i increment
        if (choice == FirstStep::horizontal) {
            w.increments.exponents.push_back(h);
            w.increments.exponents.push_back(v);
        } else {
            w.increments.exponents.push_back(v);
            w.increments.exponents.push_back(h);
        }
    }
    if (!w.increments.valid_steps())
        throw Error("reconstructed walk violates the step rule");
    return w;
}

TwoStepWalk random_twostep(unsigned n, unsigned length, std::mt19937_64& rng) {
    if (n != 4 && n != 6)
        throw Error("2-step walks are defined for n = 4 and n = 6");
    TwoStepWalk w;
    w.n = n;
    w.increments.cyclic = false;
    w.increments.modulus = n;
    if (length == 0)
        return w;
    std::uniform_int_distribution<long> first(0, static_cast<long>(n) - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    long e = first(rng);
    w.increments.exponents.push_back(e);
    for (unsigned j = 1; j < length; ++j) {
        e += coin(rng) ? 1 : -1;
        long r = ((e % static_cast<long>(n)) + static_cast<long>(n)) %
                 static_cast<long>(n);
        w.increments.exponents.push_back(r);
        e = r;
    }
    return w;
}

} // namespace cycseq

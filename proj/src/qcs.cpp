#include "cycseq/qcs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cycseq/digraph.hpp"

namespace cycseq {

GammaRegime gamma_regime(double value) {
    if (std::isinf(value) && value < 0)
        return GammaRegime::limit;
    if (value == 2.0)
        return GammaRegime::two;
    if (value == 1.0)
        return GammaRegime::one;
    if (value > 1.0)
        return GammaRegime::real_above_one;
    return GammaRegime::complex_at_most_one;
}

Rat gamma_from_root(const Rat& y) {
    if (y == 1)
        throw Error("gamma is undefined at y = 1");
    Rat num = 2 * (1 + y * y);
    Rat den = (1 - y) * (1 - y);
    return num / den;
}

double gamma_from_root(double y) {
    return 2.0 * (1.0 + y * y) / ((1.0 - y) * (1.0 - y));
}

double gamma_from_angle(double theta) {
    if (!(theta > 0.0) || theta > std::numbers::pi + 1e-15)
        throw Error("exterior angle must lie in (0, pi]");
    double c = std::cos(theta);
    return 2.0 * c / (c - 1.0);
}

std::optional<Rat> gamma_from_quadratic(const Int& a, const Int& b, const Int& c) {
    if (a == 0)
        throw Error("quadratic leading coefficient must be nonzero");
    // With a y^2 + b y + c = 0: 1 + y^2 = ((a - c) - b y)/a and
    // (1 - y)^2 = ((a - c) - (b + 2a) y)/a; gamma is rational iff the
    // y-dependence cancels in the quotient.
    Rat n0 = make_rat(a - c, 1), n1 = make_rat(-b, 1);
    Rat d0 = n0, d1 = make_rat(-(b + 2 * a), 1);
    // 2 (n0 + n1 y) / (d0 + d1 y) constant <=> n0 d1 == n1 d0.
    if (n0 * d1 != n1 * d0)
        return std::nullopt;
    if (d1 != 0)
        return 2 * n1 / d1;
    if (d0 == 0)
        return std::nullopt;
    return 2 * n0 / d0;
}

std::pair<RealRoot, RealRoot> roots_for_gamma(const Rat& gamma) {
    if (gamma < 1)
        throw NoRealRoot("gamma below 1 admits no real fundamental increment");
    if (gamma == 2)
        throw DegenerateGamma("gamma = 2 yields a degenerate quadratic");
    // (2 - gamma) y^2 + 2 gamma y + (2 - gamma) = 0, cleared of denominators.
    Int dg = gamma.get_den();
    Int a = 2 * dg - gamma.get_num();
    Int b = 2 * gamma.get_num();
    IntPoly q{std::vector<Int>{a, b, a}};
    auto roots = real_roots_negative(q);
    if (roots.size() == 1) {
        // Double root at -1 when gamma = 1.
        return {roots[0], roots[0]};
    }
    if (roots.size() != 2)
        throw NoRealRoot("quadratic has no negative real roots");
    return {roots[0], roots[1]};
}

std::pair<Rat, Rat> recurrence_next(const Rat& u_prev2, const Rat& u_prev1) {
    if (u_prev2 == 0)
        throw ZeroIncrement("previous increment vanishes");
    return {u_prev1 * u_prev1 / u_prev2, u_prev2};
}

RatVerify verify_qcs(const std::vector<Rat>& values) {
    std::size_t n = values.size();
    if (n < 3)
        throw Error("a cyclic sequence needs at least 3 terms");
    RatVerify out;
    out.vertex_gamma.resize(n);
    bool contradiction = false;
    std::optional<Rat> common;
    bool mismatch = false;
    for (std::size_t j = 0; j < n; ++j) {
        const Rat& prev = values[(j + n - 1) % n];
        const Rat& cur = values[j];
        const Rat& next = values[(j + 1) % n];
        if (prev == cur && cur == next)
            throw DegenerateVertex("three successive values coincide at index " +
                                   std::to_string(j));
        Rat left = 2 * cur - prev - next;
        Rat a = left * left;
        Rat b = (cur - prev) * (cur - prev) + (cur - next) * (cur - next);
        if (a == 0) {
            // Left factor vanishes: no finite gamma, vertex is indeterminate;
            // a nonzero right side contradicts the relation outright.
            if (b != 0)
                contradiction = true;
            continue;
        }
        Rat g = 2 * b / a;
        out.vertex_gamma[j] = g;
        if (!common)
            common = g;
        else if (*common != g)
            mismatch = true;
    }
    out.is_qcs = !contradiction && !mismatch && common.has_value();
    if (out.is_qcs)
        out.gamma = common;
    return out;
}

ComplexVerify verify_qcs(const std::vector<std::complex<double>>& values,
                         double tol) {
    std::size_t n = values.size();
    if (n < 3)
        throw Error("a cyclic sequence needs at least 3 terms");
    ComplexVerify out;
    out.vertex_gamma.resize(n);

    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        scale = std::max(scale,
                         std::abs(values[(j + 1) % n] - values[j]));
    double eps = 1e-12 * std::max(1.0, scale * scale);

    bool contradiction = false;
    std::optional<std::complex<double>> common;
    bool mismatch = false;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& prev = values[(j + n - 1) % n];
        const auto& cur = values[j];
        const auto& next = values[(j + 1) % n];
        if (std::abs(cur - prev) < eps && std::abs(cur - next) < eps)
            throw DegenerateVertex("three successive values coincide at index " +
                                   std::to_string(j));
        std::complex<double> left = 2.0 * cur - prev - next;
        std::complex<double> a = left * left;
        std::complex<double> b =
            (cur - prev) * (cur - prev) + (cur - next) * (cur - next);
        if (std::abs(a) < eps) {
            if (std::abs(b) >= eps)
                contradiction = true;
            continue;
        }
        std::complex<double> g = 2.0 * b / a;
        out.vertex_gamma[j] = g;
        if (!common) {
            common = g;
        } else if (std::abs(g - *common) > tol * std::max(1.0, std::abs(*common))) {
            mismatch = true;
        }
    }
    bool real_gamma = common &&
                      std::abs(common->imag()) <= tol * std::max(1.0, std::abs(common->real()));
    out.is_qcs = !contradiction && !mismatch && common.has_value() && real_gamma;
    if (out.is_qcs)
        out.gamma = common->real();
    return out;
}

bool classify_gamma2(const std::vector<Rat>& values) {
    std::size_t n = values.size();
    if (n < 4)
        throw Error("classification needs at least 4 terms");
    for (std::size_t j = 0; j < n; ++j) {
        const Rat& prev = values[(j + n - 1) % n];
        const Rat& next = values[(j + 1) % n];
        if (values[j] != prev && values[j] != next)
            return false;
    }
    return true;
}

namespace {

// Selected negative root of p: prefer the largest root in (-1, 0); otherwise
// the largest negative root distinct from -1; otherwise -1 itself.
RealRoot select_root(const std::vector<RealRoot>& roots) {
    const Rat minus_one(-1);
    std::optional<RealRoot> inside, below;
    for (const auto& r : roots) {
        Rat key = real_root_key(r);
        if (std::holds_alternative<Rat>(r) && std::get<Rat>(r) == minus_one)
            continue;
        if (key > minus_one) {
            if (!inside || key > real_root_key(*inside))
                inside = r;
        } else if (!below || key > real_root_key(*below)) {
            below = r;
        }
    }
    if (inside)
        return *inside;
    if (below)
        return *below;
    return RealRoot(minus_one);
}

} // namespace

RealQcsBuild build_real_qcs(const IntPoly& q,
                            const std::optional<IncrementSeq>& ordering) {
    if (q.is_zero())
        throw NonPositiveCoefficient("q must be nonzero");
    for (const auto& c : q.coeffs())
        if (c <= 0)
            throw NonPositiveCoefficient("q must have strictly positive coefficients");

    RealQcsBuild out;
    out.p = IntPoly{1, 1} * q;

    CoeffVector counts = CoeffVector::from_poly(out.p, Regime::path);
    if (ordering) {
        const IncrementSeq& ord = *ordering;
        if (!ord.cyclic || ord.modulus.has_value())
            throw IllegitimateOrdering("ordering must be cyclic and modulus-free");
        if (!ord.valid_steps())
            throw IllegitimateOrdering("ordering violates the +-1 step rule");
        if (!ord.exponents.empty() &&
            *std::min_element(ord.exponents.begin(), ord.exponents.end()) != 0)
            throw IllegitimateOrdering("ordering must use minimum exponent 0");
        if (ord.multiplicities() != counts.counts)
            throw IllegitimateOrdering("ordering multiplicities do not match (x+1)q");
        out.increments = ord;
    } else {
        auto d = OneStepDigraph::from_coeffs(counts, 0);
        out.increments = d.euler_circuit();
    }

    auto roots = real_roots_negative(out.p);
    RealRoot chosen = select_root(roots);
    if (std::holds_alternative<Rat>(chosen)) {
        out.root_rational = true;
        out.root_rat = std::get<Rat>(chosen);
        out.root = out.root_rat.get_d();
        out.root_iv = {out.root_rat, out.root_rat};
    } else {
        out.root_iv = refine_root(out.p, std::get<RootInterval>(chosen),
                                  Rat(1, Int("10000000000000")));
        Rat mid = (out.root_iv.lo + out.root_iv.hi) / 2;
        out.root = mid.get_d();
    }

    long max_exp = *std::max_element(out.increments.exponents.begin(),
                                     out.increments.exponents.end());
    if (out.root_rational) {
        std::vector<Rat> powers(static_cast<std::size_t>(max_exp) + 1);
        powers[0] = 1;
        for (long k = 1; k <= max_exp; ++k)
            powers[static_cast<std::size_t>(k)] =
                powers[static_cast<std::size_t>(k - 1)] * out.root_rat;
        Rat x(0);
        out.values_rat.reserve(out.increments.size());
        for (long e : out.increments.exponents) {
            out.values_rat.push_back(x);
            x += powers[static_cast<std::size_t>(e)];
        }
        if (x != 0)
            throw Error("constructed increments failed to close");
        for (const auto& v : out.values_rat)
            out.values.push_back(v.get_d());
        out.gamma_rational = true;
        out.gamma_rat = gamma_from_root(out.root_rat);
        out.gamma = out.gamma_rat.get_d();
    } else {
        std::vector<double> powers(static_cast<std::size_t>(max_exp) + 1, 1.0);
        for (long k = 1; k <= max_exp; ++k)
            powers[static_cast<std::size_t>(k)] =
                powers[static_cast<std::size_t>(k - 1)] * out.root;
        double x = 0.0;
        for (long e : out.increments.exponents) {
            out.values.push_back(x);
            x += powers[static_cast<std::size_t>(e)];
        }
        out.gamma = gamma_from_root(out.root);
    }
    return out;
}

std::vector<Int> normalize_integer(const std::vector<Rat>& values, bool min_zero) {
    if (values.empty())
        return {};
    std::vector<Rat> v(values);
    if (min_zero) {
        auto it = std::min_element(v.begin(), v.end());
        std::rotate(v.begin(), it, v.end());
    }
    Rat first = v.front();
    Int lcm(1);
    for (auto& x : v) {
        x -= first;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    std::vector<Int> ints;
    ints.reserve(v.size());
    Int g(0);
    for (const auto& x : v) {
        Rat scaled = x * Rat(lcm);
        ints.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (g > 1)
        for (auto& x : ints)
            x /= g;
    return ints;
}

namespace {

template <typename Value, typename RatioEq>
Extraction extract_impl(const std::vector<Value>& values, RatioEq eq,
                        const Value& zero, Value& y_out) {
    std::size_t n = values.size();
    if (n < 2)
        throw NotQcs("need at least 2 values");
    std::vector<Value> u(n);
    for (std::size_t j = 0; j < n; ++j) {
        u[j] = values[(j + 1) % n] - values[j];
        if (eq(u[j], zero))
            throw NotQcs("zero increment at index " + std::to_string(j) +
                         " (gamma = 2 sequences carry no defining polynomial)");
    }
    Value y = u[1] / u[0];
    if (eq(y, Value(1)))
        throw NotQcs("increment ratio 1 admits no oscillating sequence");
    Value inv = Value(1) / y;
    y_out = y;

    if (eq(y, Value(-1))) {
        // y = 1/y: the exponent ladder is ambiguous, but such sequences must
        // simply alternate, and only their length survives into p.
        for (std::size_t j = 0; j < n; ++j)
            if (!eq(u[(j + 1) % n] / u[j], Value(-1)))
                throw NotQcs("ratio -1 sequences must alternate throughout");
        Extraction out;
        out.increments.cyclic = true;
        for (std::size_t j = 0; j < n; ++j)
            out.increments.exponents.push_back(static_cast<long>(j % 2));
        out.p = out.increments.to_poly();
        return out;
    }

    std::vector<long> s(n, 0);
    for (std::size_t j = 1; j < n; ++j) {
        Value r = u[j] / u[j - 1];
        if (eq(r, y))
            s[j] = s[j - 1] + 1;
        else if (eq(r, inv))
            s[j] = s[j - 1] - 1;
        else
            throw NotQcs("increment ratio at index " + std::to_string(j) +
                         " is neither y nor 1/y");
    }
    Value wrap = u[0] / u[n - 1];
    long s_wrap;
    if (eq(wrap, y))
        s_wrap = s[n - 1] + 1;
    else if (eq(wrap, inv))
        s_wrap = s[n - 1] - 1;
    else
        throw NotQcs("wraparound increment ratio is neither y nor 1/y");
    if (s_wrap != s[0])
        throw NotQcs("exponent sequence fails to close");

    long mn = *std::min_element(s.begin(), s.end());
    for (auto& e : s)
        e -= mn;
    Extraction out;
    out.increments.exponents = s;
    out.increments.cyclic = true;
    out.p = out.increments.to_poly();
    return out;
}

} // namespace

Extraction extract_polynomial(const std::vector<Rat>& values) {
    auto eq = [](const Rat& a, const Rat& b) { return a == b; };
    Rat y;
    Extraction out = extract_impl<Rat>(values, eq, Rat(0), y);
    out.y_rational = true;
    out.y = y;
    out.y_num = y.get_d();
    out.gamma_one = (y == -1);
    return out;
}

Extraction extract_polynomial(const std::vector<double>& values, double tol) {
    double scale = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j)
        scale = std::max(scale, std::abs(values[j]));
    double eps = tol * std::max(1.0, scale);
    auto eq = [eps](double a, double b) { return std::abs(a - b) <= eps; };
    double y = 0.0;
    Extraction out = extract_impl<double>(values, eq, 0.0, y);
    out.y_rational = false;
    out.y_num = y;
    out.gamma_one = std::abs(y + 1.0) <= eps;
    // Isolate the numeric root against the recovered polynomial when possible.
    if (!out.p.is_zero()) {
        for (const auto& r : real_roots_negative(out.p)) {
            if (std::holds_alternative<RootInterval>(r)) {
                const auto& iv = std::get<RootInterval>(r);
                if (iv.lo.get_d() - 1e-6 <= y && y <= iv.hi.get_d() + 1e-6) {
                    out.y_interval = iv;
                    break;
                }
            } else if (std::abs(std::get<Rat>(r).get_d() - y) <= 1e-6) {
                out.y = std::get<Rat>(r);
                out.y_rational = true;
                break;
            }
        }
    }
    return out;
}

} // namespace cycseq

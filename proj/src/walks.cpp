#include "cycseq/walks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "cycseq/cyclofield.hpp"
#include "cycseq/legitimacy.hpp"

namespace cycseq {

std::vector<std::complex<double>> realize(const TurningWalk& w,
                                          std::complex<double> start) {
    std::vector<std::complex<double>> pts;
    pts.reserve(w.increments.size() + 1);
    pts.push_back(start);

    std::map<long, std::complex<double>> cache;
    auto increment = [&](long e) {
        auto it = cache.find(e);
        if (it != cache.end())
            return it->second;
        std::complex<double> v;
        if (w.unity) {
            v = CycElement::from_power(w.unity->first, e).embed(w.unity->second);
        } else {
            v = std::pow(w.root, static_cast<double>(e));
        }
        cache.emplace(e, v);
        return v;
    };

    std::complex<double> pos = start;
    for (long e : w.increments.exponents) {
        pos += increment(e);
        pts.push_back(pos);
    }
    return pts;
}

bool closed_exact(const IntPoly& p, unsigned n) {
    if (n == 0)
        throw Error("modulus must be >= 1");
    if (p.is_zero())
        return true;
    if (!divides(cyclotomic(n), p))
        return false;
    if (n % 2 == 0 && !divides(IntPoly{1, 1}, p))
        return false;
    return true;
}

bool closed_exact(const CoeffVector& v, unsigned n) {
    return closed_exact(v.to_poly(), n);
}

SymmetryReport symmetry_report(const IntPoly& p, unsigned n) {
    if (n < 2 || n % 2 != 0)
        throw Error("symmetry analysis expects an even modulus");
    if (p.degree() >= static_cast<long>(n))
        throw Error("polynomial degree exceeds the modulus");
    SymmetryReport rep;
    rep.all_edges_used = true;
    rep.antipodal_balanced = true;
    for (unsigned k = 0; k < n; ++k) {
        if (p.coeff(k) == 0) {
            rep.all_edges_used = false;
            rep.missing_edges.push_back(k);
        }
    }
    for (unsigned k = 0; k < n / 2; ++k) {
        if (p.coeff(k) != p.coeff(k + n / 2)) {
            rep.antipodal_balanced = false;
            rep.unbalanced_pairs.push_back(k);
        }
    }
    return rep;
}

std::vector<long long> canonical_cycle_form(const std::vector<long long>& v) {
    std::size_t n = v.size();
    std::vector<long long> best = v;
    std::vector<long long> cur(n);
    const std::vector<long long> rev(v.rbegin(), v.rend());
    for (const std::vector<long long>* base : {&v, &rev}) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k)
                cur[k] = (*base)[(k + r) % n];
            if (cur < best)
                best = cur;
        }
    }
    return best;
}

namespace {

// Divisor whose multiples are exactly the closed vectors at modulus n.
IntPoly closure_divisor(unsigned n) {
    IntPoly d = cyclotomic(n);
    if (n % 2 == 0)
        d = d * IntPoly{1, 1};
    return d;
}

std::vector<long long> poly_to_ll(const IntPoly& p) {
    std::vector<long long> v;
    for (const auto& c : p.coeffs())
        v.push_back(c.get_si());
    return v;
}

// Enumerates every coefficient vector b >= 0 of length n (top entry pinned to
// zero when anchored) with sum <= max_total such that b = D * q for integer q.
// Vectors are produced as full length-n arrays.
template <typename Fn>
void for_each_closed_vector(unsigned n, long long max_total, bool anchor,
                            long long q0_from, long long q0_to, Fn&& fn) {
    IntPoly D = closure_divisor(n);
    std::vector<long long> d = poly_to_ll(D);
    long dd = D.degree();
    long n_eff = static_cast<long>(n) - (anchor ? 1 : 0);
    long qlen = n_eff - dd;
    if (qlen < 1)
        return;

    std::vector<long long> q(static_cast<std::size_t>(qlen), 0);
    std::vector<long long> b(static_cast<std::size_t>(n_eff), 0);

    auto coeff_at = [&](long k) {
        long long s = 0;
        long jlo = std::max<long>(0, k - qlen + 1);
        long jhi = std::min<long>(dd, k);
        for (long j = jlo; j <= jhi; ++j)
            s += d[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        return s;
    };

    std::function<void(long, long long)> dfs = [&](long t, long long used) {
        if (t == qlen) {
            long long total = used;
            for (long k = qlen; k < n_eff; ++k) {
                long long bk = coeff_at(k);
                if (bk < 0)
                    return;
                total += bk;
                if (total > max_total)
                    return;
                b[static_cast<std::size_t>(k)] = bk;
            }
            std::vector<long long> full(b.begin(), b.end());
            full.resize(n, 0);
            fn(full, total);
            return;
        }
        // b_t = q_t + partial, where partial collects the already-fixed terms.
        long long partial = 0;
        long jhi = std::min<long>(dd, t);
        for (long j = 1; j <= jhi; ++j)
            partial += d[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(t - j)];
        long long lo = -partial;
        long long hi = max_total - used - partial;
        if (t == 0) {
            lo = std::max(lo, q0_from);
            hi = std::min(hi, q0_to);
        }
        for (long long qt = lo; qt <= hi; ++qt) {
            q[static_cast<std::size_t>(t)] = qt;
            long long bt = qt + partial;
            b[static_cast<std::size_t>(t)] = bt;
            dfs(t + 1, used + bt);
        }
        q[static_cast<std::size_t>(t)] = 0;
    };
    dfs(0, 0);
}

template <typename Filter>
SearchResult run_search(unsigned n, long long max_total, bool anchor,
                        unsigned threads, Filter&& filter) {
    // Candidate hits: (total, canonical form). Legitimacy is checked before a
    // vector qualifies.
    auto scan = [&](long long q0_from, long long q0_to,
                    std::vector<std::pair<long long, std::vector<long long>>>& hits) {
        for_each_closed_vector(
            n, max_total, anchor, q0_from, q0_to,
            [&](const std::vector<long long>& full, long long total) {
                if (total == 0 || !filter(full))
                    return;
                CoeffVector v{full, Regime::cycle};
                if (!is_legitimate(v).legitimate)
                    return;
                hits.emplace_back(total, canonical_cycle_form(full));
            });
    };

    std::vector<std::pair<long long, std::vector<long long>>> hits;
    if (threads <= 1) {
        scan(-max_total, max_total, hits);
    } else {
        long long span = 2 * max_total + 1;
        long long chunk = (span + threads - 1) / threads;
        std::vector<std::vector<std::pair<long long, std::vector<long long>>>>
            parts(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            long long from = -max_total + static_cast<long long>(t) * chunk;
            long long to = std::min(max_total, from + chunk - 1);
            pool.emplace_back([&, t, from, to] { scan(from, to, parts[t]); });
        }
        for (auto& th : pool)
            th.join();
        for (auto& part : parts)
            hits.insert(hits.end(), part.begin(), part.end());
    }

    SearchResult res;
    if (hits.empty())
        return res;
    long long best_total = hits.front().first;
    for (const auto& h : hits)
        best_total = std::min(best_total, h.first);
    std::vector<std::vector<long long>> minimal;
    for (auto& h : hits)
        if (h.first == best_total)
            minimal.push_back(std::move(h.second));
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    res.minimal_hits = minimal;
    res.best = SearchHit{minimal.front(), best_total};
    return res;
}

} // namespace

void enumerate_closed_vectors(
    unsigned n, long long max_total,
    const std::function<void(const std::vector<long long>&, long long)>& fn) {
    for_each_closed_vector(n, max_total, /*anchor=*/false, -max_total, max_total,
                           fn);
}

SearchResult search_min_omitting(unsigned n, unsigned omit_count,
                                 long long max_total, unsigned threads) {
    if (omit_count == 0)
        throw Error("omit count must be >= 1");
    return run_search(n, max_total, /*anchor=*/true, threads,
                      [omit_count](const std::vector<long long>& b) {
                          unsigned zeros = 0;
                          for (long long c : b)
                              if (c == 0)
                                  ++zeros;
                          return zeros >= omit_count;
                      });
}

SearchResult search_min_asymmetric(unsigned n, long long max_total,
                                   unsigned threads) {
    if (n % 2 != 0)
        throw Error("asymmetry search expects an even modulus");
    return run_search(n, max_total, /*anchor=*/false, threads,
                      [n](const std::vector<long long>& b) {
                          for (unsigned k = 0; k < n / 2; ++k)
                              if (b[k] != b[k + n / 2])
                                  return true;
                          return false;
                      });
}

// ---------------------------------------------------------------------------
// Ehrlich-Aberth root finding
// ---------------------------------------------------------------------------

std::vector<std::complex<double>> aberth_roots(const IntPoly& p, double residual) {
    long deg = p.degree();
    if (deg < 1)
        return {};
    std::vector<std::complex<double>> a(static_cast<std::size_t>(deg) + 1);
    for (long k = 0; k <= deg; ++k)
        a[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k)).get_d();

    auto eval = [&](std::complex<double> z, std::complex<double>& d) {
        std::complex<double> v = a[static_cast<std::size_t>(deg)];
        d = 0.0;
        for (long k = deg - 1; k >= 0; --k) {
            d = d * z + v;
            v = v * z + a[static_cast<std::size_t>(k)];
        }
        return v;
    };

    double radius = 0.0;
    for (long k = 0; k < deg; ++k)
        radius = std::max(radius, std::abs(a[static_cast<std::size_t>(k)] /
                                           a[static_cast<std::size_t>(deg)]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> z(static_cast<std::size_t>(deg));
    for (long k = 0; k < deg; ++k) {
        double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.35) /
                       static_cast<double>(deg);
        z[static_cast<std::size_t>(k)] =
            0.7 * radius * std::complex<double>(std::cos(angle), std::sin(angle));
    }

    double coeff_scale = 0.0;
    for (const auto& c : a)
        coeff_scale += std::abs(c);

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            std::complex<double> d;
            std::complex<double> v = eval(z[i], d);
            double local_scale =
                coeff_scale * std::max(1.0, std::pow(std::abs(z[i]),
                                                     static_cast<double>(deg)));
            worst = std::max(worst, std::abs(v) / local_scale);
            if (d == 0.0)
                continue;
            std::complex<double> w = v / d;
            std::complex<double> s = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i)
                    s += 1.0 / (z[i] - z[j]);
            z[i] -= w / (1.0 - w * s);
        }
        if (worst < residual)
            break;
    }
    return z;
}

NonUnityWalk non_root_of_unity_walk(const IntPoly& q, unsigned cyclotomic_bound,
                                    unsigned cap) {
    if (q.degree() < 4)
        throw NoUnitModulusRoot(
            "unit-modulus algebraic integers that are not roots of unity need degree >= 4");
    if (!q.is_palindromic())
        throw NoUnitModulusRoot("expected a palindromic polynomial");
    for (unsigned n = 1; n <= cyclotomic_bound; ++n)
        if (divides(cyclotomic(n), q))
            throw NoUnitModulusRoot("polynomial has a cyclotomic factor; its unit roots are roots of unity");

    auto roots = aberth_roots(q);
    std::optional<std::complex<double>> pick;
    double best = 1e9;
    for (const auto& r : roots) {
        if (r.imag() <= 0)
            continue;
        double dist = std::abs(std::abs(r) - 1.0);
        if (dist < best) {
            best = dist;
            pick = r;
        }
    }
    if (!pick || best > 1e-9)
        throw NoUnitModulusRoot("no root of modulus 1 with positive imaginary part");

    IntPoly p = q;
    for (unsigned tries = 0; tries <= cap; ++tries) {
        CoeffVector v = CoeffVector::from_poly(p, Regime::path);
        if (v.all_nonnegative()) {
            auto legit = is_legitimate(v);
            if (legit.legitimate) {
                NonUnityWalk out;
                out.p = p;
                out.root = *pick;
                out.walk.increments = *legit.witness;
                out.walk.root_poly = q;
                out.walk.root = *pick;
                return out;
            }
        }
        p = p * IntPoly{1, 1};
    }
    throw NotAchievedWithinBound("no legitimate multiple within the (x+1) cap");
}

// ---------------------------------------------------------------------------
// Named reference constructions
// ---------------------------------------------------------------------------

namespace {

struct NamedConstruction {
    std::string name;
    unsigned n;
    IntPoly factor; // multiplied by Phi_n and then by (x+1)
    long long length;
    unsigned omitted;
};

IntPoly poly_from_longs(std::initializer_list<long> asc) { return IntPoly(asc); }

} // namespace

std::vector<ReferenceCheck> reference_checks() {
    std::vector<ReferenceCheck> out;

    auto check_construction = [&](const NamedConstruction& c) {
        IntPoly p = IntPoly{1, 1} * cyclotomic(c.n) * c.factor;
        std::ostringstream detail;
        bool ok = true;

        bool closed = closed_exact(p, c.n);
        ok = ok && closed;
        detail << (closed ? "closed" : "NOT closed");

        CoeffVector v = CoeffVector::from_poly(p, Regime::cycle, c.n);
        auto legit = is_legitimate(v);
        ok = ok && legit.legitimate;
        detail << ", " << (legit.legitimate ? "legitimate" : "NOT legitimate");

        long long length = p.sum_of_coeffs().get_si();
        ok = ok && length == c.length;
        detail << ", length " << length << " (want " << c.length << ")";

        unsigned zeros = 0;
        for (long long b : v.counts)
            if (b == 0)
                ++zeros;
        ok = ok && zeros == c.omitted;
        detail << ", omits " << zeros << " (want " << c.omitted << ")";

        out.push_back({c.name, ok, detail.str()});
        return p;
    };

    IntPoly p12a = check_construction(
        {"n=12 length-30 all edges, antipodal-unbalanced", 12,
         poly_from_longs({1, 2, 2, 3, 3, 2, 2}), 30, 0});
    {
        auto rep = symmetry_report(p12a, 12);
        out.push_back({"n=12 length-30 breaks antipodal balance",
                       !rep.antipodal_balanced && rep.all_edges_used,
                       rep.antipodal_balanced ? "unexpectedly balanced"
                                              : "balance fails as asserted"});
    }

    IntPoly p12b = check_construction({"n=12 length-28 omitting one edge", 12,
                                       poly_from_longs({2, 2, 3, 3, 2, 2}), 28, 1});
    {
        auto rep = symmetry_report(p12b, 12);
        bool ok = !rep.all_edges_used && rep.missing_edges ==
                                             std::vector<unsigned>{11};
        out.push_back({"n=12 length-28 skips exactly the top edge", ok,
                       ok ? "edge 11 unused" : "unexpected edge usage"});
    }

    check_construction({"n=18 length-42 omitting two edges", 18,
                        poly_from_longs({2, 2, 2, 3, 3, 3, 2, 2, 2}), 42, 2});
    check_construction({"n=18 length-40 omitting one edge", 18,
                        poly_from_longs({1, 2, 2, 2, 3, 3, 2, 2, 2, 1}), 40, 1});
    check_construction(
        {"n=30 length-92 omitting seven edges", 30,
         poly_from_longs({4, 2, 2, 3, 4, 5, 3, 3, 5, 4, 3, 2, 2, 4}), 92, 7});

    // Unit-modulus algebraic increments that are not roots of unity.
    auto check_seed = [&](const std::string& name, const IntPoly& q,
                          const IntPoly& expect_p,
                          std::complex<double> expect_root) {
        std::ostringstream detail;
        bool ok = true;
        try {
            auto w = non_root_of_unity_walk(q);
            ok = ok && w.p == expect_p;
            detail << (w.p == expect_p ? "polynomial matches" : "polynomial differs");
            bool root_ok = std::abs(w.root.real() - expect_root.real()) < 5e-4 &&
                           std::abs(w.root.imag() - expect_root.imag()) < 5e-4;
            ok = ok && root_ok;
            detail << ", root " << w.root.real() << "+" << w.root.imag() << "i";
            auto pts = realize(w.walk);
            double gap = std::abs(pts.back() - pts.front());
            ok = ok && gap < 1e-6;
            detail << ", closure gap " << gap;
        } catch (const Error& e) {
            ok = false;
            detail << "error: " << e.what();
        }
        out.push_back({name, ok, detail.str()});
    };

    check_seed("unit-modulus quartic walk (seed with all-positive coefficients)",
               poly_from_longs({1, 3, 3, 3, 1}),
               poly_from_longs({1, 4, 6, 6, 4, 1}),
               {-0.191, 0.982});
    check_seed("unit-modulus quartic walk (seed with a zero coefficient)",
               poly_from_longs({1, 2, 0, 2, 1}),
               poly_from_longs({1, 4, 5, 4, 5, 4, 1}),
               {0.366, 0.931});

    return out;
}

} // namespace cycseq

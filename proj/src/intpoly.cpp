#include "cycseq/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace cycseq {

Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw Error("invalid rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs)
        c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::x_pow(std::size_t k) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = 1;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Int IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Int(0);
}

const Int& IntPoly::leading() const {
    if (c_.empty())
        throw Error("zero polynomial has no leading coefficient");
    return c_.back();
}

Int IntPoly::operator()(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rat IntPoly::operator()(const Rat& y) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * y + Rat(*it);
    return acc;
}

std::complex<double> IntPoly::operator()(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + std::complex<double>(it->get_d(), 0.0);
    return acc;
}

IntPoly IntPoly::reversed() const {
    if (is_zero())
        throw Error("cannot reverse the zero polynomial");
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return IntPoly(std::move(c));
}

bool IntPoly::is_palindromic() const {
    if (is_zero())
        return true;
    return *this == reversed();
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (is_zero())
        return {};
    std::vector<Int> c(k, Int(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        c[k - 1] = c_[k] * Int(static_cast<long>(k));
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k)
        c[k] += b.c_[k];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k)
        c[k] -= b.c_[k];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& v : c)
        v = -v;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> c(c_);
    for (auto& v : c)
        v *= s;
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Int& a = c_[static_cast<std::size_t>(k)];
        if (a == 0)
            continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0)
                os << '-';
            first = false;
        } else {
            os << (a < 0 ? '-' : '+');
        }
        if (mag != 1 || k == 0)
            os << mag.get_str();
        if (k >= 1) {
            os << 'x';
            if (k >= 2)
                os << '^' << k;
        }
    }
    return os.str();
}

PolyDivision divmod(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero())
        throw DivisionByZeroPolynomial("division by the zero polynomial");
    if (p.is_zero())
        return {IntPoly{}, IntPoly{}, true};
    if (p.degree() < d.degree())
        return {IntPoly{}, p, false};

    // Pseudo-division: lc(d)^delta * p = q*d + r over the integers.
    const Int& lc = d.leading();
    long delta = p.degree() - d.degree() + 1;
    std::vector<Int> rem(p.coeffs());
    std::vector<Int> quo(static_cast<std::size_t>(delta), Int(0));
    long steps = 0;
    while (static_cast<long>(rem.size()) - 1 >= d.degree() && !rem.empty()) {
        long shift = static_cast<long>(rem.size()) - 1 - d.degree();
        Int head = rem.back();
        for (auto& q : quo)
            q *= lc;
        quo[static_cast<std::size_t>(shift)] += head;
        for (auto& r : rem)
            r *= lc;
        for (std::size_t j = 0; j < d.coeffs().size(); ++j)
            rem[static_cast<std::size_t>(shift) + j] -= head * d.coeffs()[j];
        while (!rem.empty() && rem.back() == 0)
            rem.pop_back();
        ++steps;
    }
    // Invariant: lc^steps * p = quo * d + rem. Undo the scaling when it
    // divides out; otherwise the division is not exact over the integers.
    bool integral = true;
    std::vector<Int> q_out(quo), r_out(rem);
    if (lc != 1 && lc != -1) {
        Int s(1);
        for (long i = 0; i < steps; ++i)
            s *= lc;
        for (auto& v : q_out) {
            if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t())) {
                integral = false;
                break;
            }
            v /= s;
        }
        if (integral) {
            for (auto& v : r_out) {
                if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t())) {
                    integral = false;
                    break;
                }
                v /= s;
            }
        }
    } else if (lc == -1) {
        Int s = (steps % 2 == 0) ? Int(1) : Int(-1);
        for (auto& v : q_out)
            v *= s;
        for (auto& v : r_out)
            v *= s;
    }
    if (integral) {
        IntPoly q(std::move(q_out)), r(std::move(r_out));
        return {q, r, r.is_zero()};
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem)), false};
}

bool divides(const IntPoly& d, const IntPoly& p) {
    if (p.is_zero())
        return !d.is_zero();
    if (d.is_zero())
        return false;
    if (p.degree() < d.degree())
        return false;
    return divmod(p, d).exact;
}

namespace {

IntPoly compute_cyclotomic(unsigned n, std::map<unsigned, IntPoly>& cache);

const IntPoly& cyclotomic_cached(unsigned n, std::map<unsigned, IntPoly>& cache) {
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_cyclotomic(n, cache)).first;
    return it->second;
}

IntPoly compute_cyclotomic(unsigned n, std::map<unsigned, IntPoly>& cache) {
    if (n == 1)
        return IntPoly{-1, 1};
    std::vector<Int> xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPoly num(std::move(xn));
    IntPoly den = IntPoly::one();
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            den = den * cyclotomic_cached(d, cache);
    auto dv = divmod(num, den);
    if (!dv.exact)
        throw Error("cyclotomic recursion produced an inexact division");
    return dv.quotient;
}

} // namespace

IntPoly cyclotomic(unsigned n) {
    if (n == 0)
        throw Error("cyclotomic index must be >= 1");
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_cached(n, cache);
}

// ---------------------------------------------------------------------------
// Real root isolation (rational root test + Sturm bisection)
// ---------------------------------------------------------------------------

namespace {

using QVec = std::vector<Rat>; // ascending, trimmed

void qtrim(QVec& v) {
    while (!v.empty() && sgn(v.back()) == 0)
        v.pop_back();
}

QVec to_qvec(const IntPoly& p) {
    QVec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.emplace_back(c);
    return v;
}

Rat qeval(const QVec& f, const Rat& x) {
    Rat acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int qsign_at(const QVec& f, const Rat& x) { return sgn(qeval(f, x)); }

QVec qderiv(const QVec& f) {
    if (f.size() <= 1)
        return {};
    QVec d(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k)
        d[k - 1] = f[k] * Rat(static_cast<long>(k));
    return d;
}

QVec qrem(QVec num, const QVec& den) {
    while (num.size() >= den.size() && !num.empty()) {
        Rat factor = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= factor * den[j];
        qtrim(num);
        if (num.size() < den.size())
            break;
    }
    return num;
}

QVec qgcd(QVec a, QVec b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QVec r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

QVec qdiv_exact(QVec num, const QVec& den) {
    QVec quo(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat factor = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quo[shift] = factor;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= factor * den[j];
        qtrim(num);
    }
    return quo;
}

std::vector<QVec> sturm_chain(const QVec& f) {
    std::vector<QVec> chain;
    chain.push_back(f);
    QVec d = qderiv(f);
    qtrim(d);
    if (d.empty())
        return chain;
    chain.push_back(d);
    while (true) {
        const QVec& a = chain[chain.size() - 2];
        const QVec& b = chain.back();
        QVec r = qrem(a, b);
        qtrim(r);
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        chain.push_back(std::move(r));
        if (chain.back().size() == 1)
            break;
    }
    return chain;
}

int sign_changes(const std::vector<QVec>& chain, const Rat& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = qsign_at(f, x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

// Divisors of |n| by trial division; n is expected small in this artifact.
std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> divs;
    Int a = abs(n);
    if (a == 0)
        return divs;
    for (Int d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            Int other = a / d;
            if (other != d)
                divs.push_back(other);
        }
    }
    return divs;
}

} // namespace

double real_root_approx(const RealRoot& r) {
    if (std::holds_alternative<Rat>(r))
        return std::get<Rat>(r).get_d();
    const auto& iv = std::get<RootInterval>(r);
    Rat mid = (iv.lo + iv.hi) / 2;
    return mid.get_d();
}

Rat real_root_key(const RealRoot& r) {
    if (std::holds_alternative<Rat>(r))
        return std::get<Rat>(r);
    const auto& iv = std::get<RootInterval>(r);
    return (iv.lo + iv.hi) / 2;
}

RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rat& width) {
    QVec f = to_qvec(p);
    QVec g = qgcd(f, qderiv(f));
    QVec sf = g.size() > 1 ? qdiv_exact(f, g) : f; // square-free part
    int slo = qsign_at(sf, iv.lo);
    if (slo == 0)
        throw Error("refine_root endpoint hits a root");
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = qsign_at(sf, mid);
        if (sm == 0) {
            // Rational midpoint landed on the root; shrink a hair around it.
            Rat eps = width / 4;
            iv.lo = mid - eps;
            iv.hi = mid + eps;
            break;
        }
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

std::vector<RealRoot> real_roots_negative(const IntPoly& p, const Rat& width) {
    if (p.is_zero())
        throw Error("real_roots_negative requires a nonzero polynomial");
    std::vector<RealRoot> out;

    // Strip powers of x (root 0 is not negative).
    std::vector<Int> cs = p.coeffs();
    std::size_t low = 0;
    while (low < cs.size() && cs[low] == 0)
        ++low;
    cs.erase(cs.begin(), cs.begin() + static_cast<long>(low));
    IntPoly work{std::vector<Int>(cs)};
    if (work.degree() < 1)
        return out;

    // Rational roots via the rational root theorem, removed with multiplicity.
    std::set<Rat> rational_roots;
    auto lead_divs = divisors_of(work.leading());
    auto const_divs = divisors_of(work.coeff(0));
    std::set<Rat> candidates;
    for (const auto& r : const_divs)
        for (const auto& s : lead_divs)
            candidates.insert(make_rat(-r, s));
    for (const auto& cand : candidates) {
        if (sgn(cand) >= 0)
            continue;
        while (work.degree() >= 1 && sgn(work(cand)) == 0) {
            rational_roots.insert(cand);
            // Deflate by (den*x - num), which divides exactly.
            IntPoly lin{std::vector<Int>{-cand.get_num(), cand.get_den()}};
            auto dv = divmod(work, lin);
            if (!dv.exact)
                throw Error("rational root deflation failed");
            work = dv.quotient;
        }
    }

    // Remaining negative roots are irrational; isolate them with Sturm.
    if (work.degree() >= 1) {
        QVec f = to_qvec(work);
        QVec g = qgcd(f, qderiv(f));
        QVec sf = g.size() > 1 ? qdiv_exact(f, g) : f;
        auto chain = sturm_chain(sf);
        // Cauchy bound on root magnitude.
        Rat bound(1);
        for (std::size_t k = 0; k + 1 < f.size(); ++k) {
            Rat m = abs(f[k] / f.back());
            if (m > bound)
                bound = m;
        }
        bound += 1;
        Rat lo = -bound, hi(0);
        int total = sign_changes(chain, lo) - sign_changes(chain, hi);
        std::vector<RootInterval> stack;
        if (total > 0)
            stack.push_back({lo, hi});
        while (!stack.empty()) {
            RootInterval iv = stack.back();
            stack.pop_back();
            int cnt = sign_changes(chain, iv.lo) - sign_changes(chain, iv.hi);
            if (cnt == 0)
                continue;
            if (cnt == 1) {
                out.push_back(refine_root(work, iv, width));
                continue;
            }
            Rat mid = (iv.lo + iv.hi) / 2;
            if (qsign_at(sf, mid) == 0) {
                // A rational midpoint cannot be a root here (those were
                // deflated); guard anyway by nudging.
                mid = (iv.lo * 2 + iv.hi) / 3;
            }
            stack.push_back({iv.lo, mid});
            stack.push_back({mid, iv.hi});
        }
    }

    for (const auto& r : rational_roots)
        out.emplace_back(r);
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
        return real_root_key(a) < real_root_key(b);
    });
    return out;
}

} // namespace cycseq

#include "cycseq/digraph.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "cycseq/legitimacy.hpp"

namespace cycseq {

OneStepDigraph::OneStepDigraph(unsigned n, Topology topo)
    : n_(n), topo_(topo) {
    if (n == 0)
        throw Error("digraph order must be >= 1");
    if (topo == Topology::cycle && n < 2)
        throw Error("cycle topology needs at least 2 vertices");
    up_.assign(edge_slots(), 0);
    down_.assign(edge_slots(), 0);
}

unsigned OneStepDigraph::edge_slots() const {
    return topo_ == Topology::path ? n_ - 1 : n_;
}

long long OneStepDigraph::arc_count() const {
    long long t = 0;
    for (std::size_t k = 0; k < up_.size(); ++k)
        t += up_[k] + down_[k];
    return t;
}

std::vector<long long> OneStepDigraph::degree_sequence() const {
    std::vector<long long> deg(n_, 0);
    for (unsigned k = 0; k < edge_slots(); ++k) {
        unsigned hi = (k + 1) % n_;
        deg[k] += up_[k];     // out-arcs k -> k+1
        deg[hi] += down_[k];  // out-arcs k+1 -> k
    }
    return deg;
}

namespace {

struct Flow {
    std::vector<long long> up, down;
};

// Solves up_k = b_k + winding - up_{k-1}, down_k = up_k - winding for a cycle
// vector, with a given up_0. Returns nullopt when any multiplicity would be
// negative or the recurrence fails to close.
std::optional<Flow> cycle_flow(const std::vector<long long>& b, long long winding,
                               long long f0) {
    std::size_t n = b.size();
    Flow fl;
    fl.up.assign(n, 0);
    fl.down.assign(n, 0);
    fl.up[0] = f0;
    for (std::size_t k = 1; k < n; ++k)
        fl.up[k] = b[k] + winding - fl.up[k - 1];
    if (b[0] + winding - fl.up[n - 1] != fl.up[0])
        return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
        fl.down[k] = fl.up[k] - winding;
        if (fl.up[k] < 0 || fl.down[k] < 0)
            return std::nullopt;
    }
    return fl;
}

bool flow_connected(const std::vector<long long>& b, const Flow& fl, bool cycle) {
    std::size_t n = b.size();
    std::vector<char> seen(n, 0);
    std::size_t start = n;
    for (std::size_t k = 0; k < n; ++k)
        if (b[k] > 0) {
            start = k;
            break;
        }
    if (start == n)
        return false;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t edges = cycle ? n : n - 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        auto visit = [&](std::size_t w) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        };
        if (v < edges && fl.up[v] + fl.down[v] > 0)
            visit((v + 1) % n);
        std::size_t prev = (v + n - 1) % n;
        if (prev < edges && fl.up[prev] + fl.down[prev] > 0)
            visit(prev);
    }
    for (std::size_t k = 0; k < n; ++k)
        if (b[k] > 0 && !seen[k])
            return false;
    return true;
}

} // namespace

OneStepDigraph OneStepDigraph::from_coeffs(const CoeffVector& v, long long winding) {
    if (!v.all_nonnegative())
        throw Error("count vector has a negative entry");
    const auto& b = v.counts;
    if (b.empty())
        throw Error("empty count vector");

    if (v.regime == Regime::path) {
        if (winding != 0)
            throw InfeasibleFlow("path topology admits only winding 0");
        OneStepDigraph d(static_cast<unsigned>(b.size()), Topology::path);
        long long carry = 0;
        for (std::size_t k = 0; k < b.size(); ++k) {
            long long c = b[k] - carry;
            if (c < 0)
                throw InfeasibleFlow("negative crossing count at exponent " +
                                     std::to_string(k));
            if (k + 1 == b.size()) {
                if (c != 0)
                    throw InfeasibleFlow("unmatched crossings above the top exponent");
            } else {
                d.up_[k] = d.down_[k] = c;
            }
            carry = c;
        }
        return d;
    }

    if (b.size() < 2)
        throw InfeasibleFlow("cycle regime needs modulus >= 2");
    long long b0 = b[0];
    std::optional<Flow> feasible;
    for (long long f0 = 0; f0 <= b0; ++f0) {
        auto fl = cycle_flow(b, winding, f0);
        if (!fl)
            continue;
        if (flow_connected(b, *fl, true)) {
            feasible = fl;
            break;
        }
        if (!feasible)
            feasible = fl;
    }
    if (!feasible)
        throw InfeasibleFlow("no non-negative flow for this winding");
    OneStepDigraph d(static_cast<unsigned>(b.size()), Topology::cycle);
    d.up_ = feasible->up;
    d.down_ = feasible->down;
    return d;
}

bool OneStepDigraph::connected_support() const {
    auto deg = degree_sequence();
    Flow fl{up_, down_};
    return flow_connected(deg, fl, topo_ == Topology::cycle);
}

IncrementSeq OneStepDigraph::euler_circuit() const {
    auto deg = degree_sequence();
    long long arcs = arc_count();
    if (arcs == 0)
        throw Disconnected("digraph has no arcs");
    if (!connected_support())
        throw Disconnected("digraph support is not connected");

    unsigned start = n_;
    for (unsigned k = 0; k < n_; ++k)
        if (deg[k] > 0) {
            start = k;
            break;
        }

    std::vector<long long> up(up_), down(down_);
    std::vector<unsigned> stack{start};
    std::vector<unsigned> circuit;
    circuit.reserve(static_cast<std::size_t>(arcs) + 1);
    while (!stack.empty()) {
        unsigned v = stack.back();
        unsigned prev = (v + n_ - 1) % n_;
        bool has_up = v < edge_slots() && up[v] > 0;
        bool has_down = prev < edge_slots() && down[prev] > 0;
        if (has_up) {
            --up[v];
            stack.push_back((v + 1) % n_);
        } else if (has_down) {
            --down[prev];
            stack.push_back(prev);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    circuit.pop_back(); // final vertex repeats the start

    IncrementSeq seq;
    seq.cyclic = true;
    if (topo_ == Topology::cycle)
        seq.modulus = n_;
    seq.exponents.assign(circuit.begin(), circuit.end());
    return seq;
}

void OneStepDigraph::insert_elementary_walk(unsigned k) {
    if (k >= edge_slots())
        throw Error("edge index out of range");
    ++up_[k];
    ++down_[k];
}

void OneStepDigraph::remove_elementary_walk(unsigned k) {
    if (k >= edge_slots())
        throw Error("edge index out of range");
    if (up_[k] < 1 || down_[k] < 1)
        throw InsufficientArcs("no antiparallel arc pair on edge " +
                               std::to_string(k));
    --up_[k];
    --down_[k];
}

bool OneStepDigraph::reversal_isomorphic(const OneStepDigraph& other) const {
    if (n_ != other.n_ || topo_ != other.topo_)
        return false;
    // Vertex j maps to n-1-j; the arc k -> k+1 lands on edge n-2-k (mod n)
    // with direction reversed.
    std::vector<long long> up(edge_slots(), 0), down(edge_slots(), 0);
    for (unsigned k = 0; k < edge_slots(); ++k) {
        unsigned img = (2 * n_ - 2 - k) % n_;
        down[img] += up_[k];
        up[img] += down_[k];
    }
    return up == other.up_ && down == other.down_;
}

std::string OneStepDigraph::to_dot() const {
    std::ostringstream os;
    os << "digraph onestep {\n  rankdir=LR;\n";
    for (unsigned v = 0; v < n_; ++v)
        os << "  " << v << ";\n";
    for (unsigned k = 0; k < edge_slots(); ++k) {
        unsigned hi = (k + 1) % n_;
        if (up_[k] > 0)
            os << "  " << k << " -> " << hi << " [label=\"" << up_[k] << "\"];\n";
        if (down_[k] > 0)
            os << "  " << hi << " -> " << k << " [label=\"" << down_[k] << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

Concatenation concatenate(const IntPoly& p1, const IntPoly& p2, unsigned k) {
    if (p1.is_zero() || p2.is_zero())
        throw IllegitimateInput("concatenation inputs must be nonzero");
    if (static_cast<long>(k) > p1.degree())
        throw IllegitimateInput("insertion exponent exceeds deg p1");

    auto legit1 = is_legitimate(CoeffVector::from_poly(p1, Regime::path));
    auto legit2 = is_legitimate(CoeffVector::from_poly(p2, Regime::path));
    if (!legit1.legitimate || !legit2.legitimate)
        throw IllegitimateInput("both inputs must be path-legitimate");

    // Common fundamental increment: the gcd must carry a negative real root.
    IntPoly g = [&] {
        // Euclidean gcd over Q, returned as a primitive integer polynomial.
        std::vector<Rat> a, b;
        for (const auto& c : p1.coeffs())
            a.emplace_back(c);
        for (const auto& c : p2.coeffs())
            b.emplace_back(c);
        auto trim = [](std::vector<Rat>& v) {
            while (!v.empty() && sgn(v.back()) == 0)
                v.pop_back();
        };
        trim(a);
        trim(b);
        while (!b.empty()) {
            // remainder of a by b
            while (a.size() >= b.size() && !a.empty()) {
                Rat f = a.back() / b.back();
                std::size_t shift = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j)
                    a[shift + j] -= f * b[j];
                trim(a);
            }
            std::swap(a, b);
        }
        // scale to integer coefficients
        Int lcm(1);
        for (const auto& c : a)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Int> ic;
        for (const auto& c : a) {
            Rat s = c * Rat(lcm);
            ic.push_back(s.get_num());
        }
        Int gc(0);
        for (const auto& c : ic)
            mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), c.get_mpz_t());
        if (gc > 1)
            for (auto& c : ic)
                c /= gc;
        return IntPoly(std::move(ic));
    }();
    if (g.degree() < 1 || real_roots_negative(g).empty())
        throw IllegitimateInput("inputs share no negative real root");

    IntPoly p = p1 + p2.shifted_up(k);

    const auto& w1 = legit1.witness->exponents;
    const auto& w2 = legit2.witness->exponents;
    IncrementSeq out;
    out.cyclic = true;
    out.exponents.reserve(w1.size() + w2.size());
    out.exponents.insert(out.exponents.end(), w1.begin(), w1.begin() + k);
    for (long e : w2)
        out.exponents.push_back(e + static_cast<long>(k));
    out.exponents.insert(out.exponents.end(), w1.begin() + k, w1.end());
    if (!out.valid_steps())
        throw IllegitimateInput("splice produced an invalid step sequence");
    return {p, out};
}

} // namespace cycseq

// Python bindings for the main operations. Exact rationals cross the
// boundary as strings; everything else maps onto plain Python types.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycseq/digraph.hpp"
#include "cycseq/lattice.hpp"
#include "cycseq/legitimacy.hpp"
#include "cycseq/qcs.hpp"
#include "cycseq/svg.hpp"
#include "cycseq/walks.hpp"

namespace py = pybind11;
using namespace cycseq;

namespace {

IntPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs)
        c.emplace_back(s);
    return IntPoly(std::move(c));
}

std::vector<std::string> poly_to_strings(const IntPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs())
        out.push_back(c.get_str());
    return out;
}

std::vector<Rat> rats_from_strings(const std::vector<std::string>& vals) {
    std::vector<Rat> out;
    out.reserve(vals.size());
    for (const auto& s : vals)
        out.push_back(rat_from_string(s));
    return out;
}

CoeffVector make_vector(const std::vector<long long>& counts,
                        const std::string& regime, std::optional<unsigned> n) {
    CoeffVector v;
    v.counts = counts;
    if (regime == "path") {
        v.regime = Regime::path;
    } else if (regime == "cycle") {
        v.regime = Regime::cycle;
        if (n && v.counts.size() < *n)
            v.counts.resize(*n, 0);
    } else {
        throw Error("regime must be 'path' or 'cycle'");
    }
    return v;
}

} // namespace

PYBIND11_MODULE(cycseq, m) {
    m.doc() = "exact quadratic cyclic sequences, legitimacy decisions and "
              "fixed-turning-angle planar walks";

    py::register_exception<Error>(m, "CycseqError");

    m.def("cyclotomic",
          [](unsigned n) { return poly_to_strings(cyclotomic(n)); },
          py::arg("n"), "coefficients of the n-th cyclotomic polynomial");

    m.def("poly_mul",
          [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              return poly_to_strings(poly_from_strings(a) * poly_from_strings(b));
          });

    m.def(
        "build_real",
        [](const std::vector<std::string>& q,
           std::optional<std::vector<long>> ordering, bool min_zero) {
            std::optional<IncrementSeq> ord;
            if (ordering) {
                IncrementSeq s;
                s.exponents = *ordering;
                s.cyclic = true;
                ord = s;
            }
            auto built = build_real_qcs(poly_from_strings(q), ord);
            py::dict d;
            d["p"] = poly_to_strings(built.p);
            d["exponents"] = built.increments.exponents;
            if (built.root_rational) {
                d["y"] = rat_to_string(built.root_rat);
                d["gamma"] = rat_to_string(built.gamma_rat);
                std::vector<std::string> vals;
                for (const auto& v : built.values_rat)
                    vals.push_back(rat_to_string(v));
                d["values"] = vals;
                std::vector<std::string> norm;
                for (const auto& v : normalize_integer(built.values_rat, min_zero))
                    norm.push_back(v.get_str());
                d["normalized"] = norm;
            } else {
                d["y"] = built.root;
                d["gamma"] = built.gamma;
                d["values"] = built.values;
            }
            return d;
        },
        py::arg("q"), py::arg("ordering") = std::nullopt,
        py::arg("min_zero") = false);

    m.def("verify", [](const std::vector<std::string>& values) {
        auto r = verify_qcs(rats_from_strings(values));
        return py::make_tuple(r.is_qcs,
                              r.gamma ? py::object(py::str(rat_to_string(*r.gamma)))
                                      : py::object(py::none()));
    });

    m.def("verify_complex",
          [](const std::vector<std::complex<double>>& values, double tol) {
              auto r = verify_qcs(values, tol);
              return py::make_tuple(r.is_qcs, r.gamma ? py::object(py::float_(*r.gamma))
                                                      : py::object(py::none()));
          },
          py::arg("values"), py::arg("tol") = 1e-9);

    m.def("extract", [](const std::vector<std::string>& values) {
        auto e = extract_polynomial(rats_from_strings(values));
        py::dict d;
        d["p"] = poly_to_strings(e.p);
        d["y"] = rat_to_string(e.y);
        d["exponents"] = e.increments.exponents;
        d["gamma_one"] = e.gamma_one;
        return d;
    });

    m.def("gamma_from_root",
          [](const std::string& y) {
              return rat_to_string(gamma_from_root(rat_from_string(y)));
          });

    m.def(
        "is_legitimate",
        [](const std::vector<long long>& counts, const std::string& regime,
           std::optional<unsigned> n) {
            auto d = is_legitimate(make_vector(counts, regime, n));
            return py::make_tuple(d.legitimate,
                                  d.witness ? py::object(py::cast(d.witness->exponents))
                                            : py::object(py::none()));
        },
        py::arg("counts"), py::arg("regime") = "path",
        py::arg("n") = std::nullopt);

    m.def("is_legitimate_bruteforce",
          [](const std::vector<long long>& counts, const std::string& regime,
             std::optional<unsigned> n, long long budget) {
              return is_legitimate_bruteforce(make_vector(counts, regime, n),
                                              budget);
          },
          py::arg("counts"), py::arg("regime") = "path",
          py::arg("n") = std::nullopt, py::arg("budget") = 16);

    m.def("criterion_n6", &criterion_n6);
    m.def("criterion_n8", &criterion_n8);

    m.def("closed_exact", [](const std::vector<std::string>& coeffs, unsigned n) {
        return closed_exact(poly_from_strings(coeffs), n);
    });

    m.def("symmetry_report",
          [](const std::vector<std::string>& coeffs, unsigned n) {
              auto rep = symmetry_report(poly_from_strings(coeffs), n);
              py::dict d;
              d["all_edges_used"] = rep.all_edges_used;
              d["antipodal_balanced"] = rep.antipodal_balanced;
              d["missing_edges"] = rep.missing_edges;
              d["unbalanced_pairs"] = rep.unbalanced_pairs;
              return d;
          });

    m.def(
        "search_min_omitting",
        [](unsigned n, unsigned omit, long long max_total, unsigned threads) {
            auto res = search_min_omitting(n, omit, max_total, threads);
            if (!res.best)
                return py::object(py::none());
            py::dict d;
            d["total"] = res.best->total;
            d["coefficients"] = res.best->coeffs;
            d["minimal_hits"] = res.minimal_hits;
            return py::object(d);
        },
        py::arg("n"), py::arg("omit"), py::arg("max_total"),
        py::arg("threads") = 1);

    m.def(
        "search_min_asymmetric",
        [](unsigned n, long long max_total, unsigned threads) {
            auto res = search_min_asymmetric(n, max_total, threads);
            if (!res.best)
                return py::object(py::none());
            py::dict d;
            d["total"] = res.best->total;
            d["coefficients"] = res.best->coeffs;
            return py::object(d);
        },
        py::arg("n"), py::arg("max_total"), py::arg("threads") = 1);

    m.def("reference_checks", [] {
        std::vector<py::tuple> rows;
        for (const auto& c : reference_checks())
            rows.push_back(py::make_tuple(c.name, c.pass, c.detail));
        return rows;
    });

    m.def("realize_unity_walk",
          [](unsigned n, long mult, const std::vector<long>& exponents, bool cyclic) {
              TurningWalk w;
              w.unity = {n, mult};
              w.increments.modulus = n;
              w.increments.cyclic = cyclic;
              w.increments.exponents = exponents;
              return realize(w);
          },
          py::arg("n"), py::arg("m"), py::arg("exponents"),
          py::arg("cyclic") = true);

    m.def("render_svg", [](const std::vector<std::complex<double>>& pts) {
        return render_svg(pts);
    });

    m.def("poly_n4", [](long long L, long k, long l) {
        return poly_to_strings(poly_n4(L, Endpoint{k, l}));
    });
    m.def("count_paths_n4", [](const std::vector<std::string>& p) {
        return count_paths_n4(poly_from_strings(p)).get_str();
    });
    m.def("probability_n4", [](const std::vector<std::string>& p) {
        return rat_to_string(probability_n4(poly_from_strings(p)));
    });
    m.def("poly_n6", [](long long L, long k, long l, long long a, long long b) {
        return poly_to_strings(poly_n6(L, Endpoint{k, l}, a, b));
    });
    m.def("closed_n6_condition", &closed_n6_condition);

    m.def("concatenate",
          [](const std::vector<std::string>& p1, const std::vector<std::string>& p2,
             unsigned k) {
              auto c = concatenate(poly_from_strings(p1), poly_from_strings(p2), k);
              py::dict d;
              d["p"] = poly_to_strings(c.p);
              d["exponents"] = c.ordering.exponents;
              return d;
          });

    m.def("non_root_of_unity_walk", [](const std::vector<std::string>& q) {
        auto w = non_root_of_unity_walk(poly_from_strings(q));
        py::dict d;
        d["p"] = poly_to_strings(w.p);
        d["root"] = w.root;
        d["exponents"] = w.walk.increments.exponents;
        return d;
    });
}

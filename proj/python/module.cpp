// Python bindings for the core operations. Counts are arbitrary-precision on
// the C++ side and cross the boundary as Python ints via their decimal form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibperm/bijections.hpp"
#include "fibperm/enumeration.hpp"
#include "fibperm/gf_formulas.hpp"
#include "fibperm/registry.hpp"
#include "fibperm/sequences.hpp"
#include "fibperm/verify.hpp"

namespace py = pybind11;
using namespace fibperm;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Permutation perm_from(const std::vector<int>& values) { return Permutation(values); }

PatternSet set_from(const std::vector<std::vector<int>>& patterns) {
    std::vector<Permutation> ps;
    ps.reserve(patterns.size());
    for (const auto& p : patterns) ps.emplace_back(p);
    return PatternSet(std::move(ps));
}

py::list perms_to_list(const std::vector<Permutation>& perms) {
    py::list out;
    for (const auto& p : perms) out.append(p.values());
    return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> gf_to_pair(const RationalGF& g) {
    std::vector<std::string> num, den;
    for (const auto& c : g.num().coeffs()) num.push_back(c.str());
    for (const auto& c : g.den().coeffs()) den.push_back(c.str());
    return {num, den};
}

py::list series_to_list(const RationalGF& g, int upto) {
    py::list out;
    for (const auto& c : g.series(upto)) out.append(to_py(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_fibperm, m) {
    m.doc() = "Exact enumeration of pattern-restricted permutations";

    m.def("contains", [](const std::vector<int>& pi, const std::vector<int>& sigma) {
        return contains(Permutation::standardize(pi), Permutation::standardize(sigma));
    }, py::arg("pi"), py::arg("sigma"));

    m.def("avoids_all", [](const std::vector<int>& pi, const std::vector<std::vector<int>>& r) {
        return avoids_all(Permutation::standardize(pi), set_from(r));
    }, py::arg("pi"), py::arg("patterns"));

    m.def("symmetry", [](const std::vector<int>& pi, const std::string& which) {
        return perm_from(pi).apply(symmetry_from_string(which)).values();
    }, py::arg("pi"), py::arg("which"));

    m.def("enumerate_avoiders", [](int n, const std::vector<std::vector<int>>& r) {
        return perms_to_list(enumerate_avoiders(n, set_from(r)));
    }, py::arg("n"), py::arg("patterns"));

    m.def("count_avoiders", [](int n, const std::vector<std::vector<int>>& r) {
        return to_py(count_avoiders(n, set_from(r)));
    }, py::arg("n"), py::arg("patterns"));

    m.def("tau_perm", [](const std::vector<int>& r) { return tau_perm(RSequence(r)).values(); });
    m.def("alpha_perm", [](int s, int t) { return alpha_perm(s, t).values(); });
    m.def("beta_perm", [](int a, int b, int c) { return beta_perm(a, b, c).values(); });
    m.def("gamma_perm", [](int a, int b, int c) { return gamma_perm(a, b, c).values(); });
    m.def("omega_perm", [](int k) { return omega_perm(k).values(); });
    m.def("mu_perm", [](int a, int b) { return mu_perm(a, b).values(); });

    m.def("extend", [](const std::vector<int>& alpha) { return perms_to_list(extend(perm_from(alpha))); });
    m.def("extension_set", [](const std::vector<std::vector<int>>& r, int k) {
        py::list out;
        for (const auto& p : extension_set(set_from(r), k).patterns()) out.append(p.values());
        return out;
    }, py::arg("patterns"), py::arg("k"));
    m.def("restriction_set", [](int k, const std::vector<int>& a) {
        py::list out;
        for (const auto& p : restriction_set(RestrictionSpec(k, a)).patterns())
            out.append(p.values());
        return out;
    }, py::arg("k"), py::arg("a"));

    m.def("tau_gf", [](const std::vector<int>& r) { return gf_to_pair(tau_gf(RSequence(r))); });
    m.def("gamma_gf", [](int a, int b, int c) { return gf_to_pair(gamma_gf(a, b, c)); });
    m.def("omega_gf", [](int k) { return gf_to_pair(omega_gf(k)); });
    m.def("mu_gf", [](int a, int b) { return gf_to_pair(mu_gf(a, b)); });

    m.def("tau_series", [](const std::vector<int>& r, int upto) {
        return series_to_list(tau_gf(RSequence(r)), upto);
    }, py::arg("r"), py::arg("upto"));
    m.def("gamma_series", [](int a, int b, int c, int upto) {
        return series_to_list(gamma_gf(a, b, c), upto);
    });
    m.def("omega_series", [](int k, int upto) { return series_to_list(omega_gf(k), upto); });
    m.def("mu_series", [](int a, int b, int upto) { return series_to_list(mu_gf(a, b), upto); });

    m.def("kgen_fib", [](int k, long long n) { return to_py(kgen_fib(k, n)); });
    m.def("named_sequence",
          [](const std::string& name, long long n) { return to_py(named_sequence(name, n)); });
    m.def("recurrence_count", [](int k, const std::vector<int>& a, long long n) {
        return to_py(recurrence_count(RestrictionSpec(k, a), n));
    }, py::arg("k"), py::arg("a"), py::arg("n"));

    m.def("formula_ids", [] {
        std::vector<std::string> ids;
        for (const auto& f : formula_registry()) ids.push_back(f.id);
        return ids;
    });
    m.def("closed_count",
          [](const std::string& id, long long n) { return to_py(closed_count(id, n)); });
    m.def("verify_formula", [](const std::string& id, int nmax, int oracle_max) {
        const auto rep = verify_formula(id, VerifyOptions{nmax, oracle_max});
        py::dict out;
        out["id"] = rep.id;
        out["pass"] = rep.pass;
        out["first_discrepancy"] = rep.first_discrepancy;
        return out;
    }, py::arg("id"), py::arg("nmax") = 60, py::arg("oracle_max") = 9);

    m.def("enumerate_tilings", [](int n, int max_len) {
        const auto c = max_len > 0 ? TilingConstraint::max_len(max_len) : TilingConstraint::none();
        py::list out;
        for (const auto& t : enumerate_tilings(n, c)) out.append(t.tiles());
        return out;
    }, py::arg("n"), py::arg("max_len") = 0);

    m.def("perm_to_tiling",
          [](const std::vector<int>& pi) { return perm_to_tiling(perm_from(pi)).tiles(); });
    m.def("tiling_to_perm",
          [](const std::vector<int>& t) { return tiling_to_perm(Tiling(t)).values(); });
    m.def("themed_bijection", [](const std::string& theorem, const std::vector<int>& t, int b) {
        return themed_bijection(themed_map_from_string(theorem), Tiling(t), b).values();
    }, py::arg("theorem"), py::arg("tiles"), py::arg("b") = 0);
    m.def("themed_bijection_inverse",
          [](const std::string& theorem, const std::vector<int>& pi, int b) {
              return themed_bijection_inverse(themed_map_from_string(theorem), perm_from(pi), b)
                  .tiles();
          },
          py::arg("theorem"), py::arg("pi"), py::arg("b") = 0);

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
}

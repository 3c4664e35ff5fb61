#include "f2mzv/checks.hpp"
#include "f2mzv/constants.hpp"
#include "f2mzv/depth1.hpp"
#include "f2mzv/json_io.hpp"
#include "f2mzv/quadrature.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace f2mzv;

namespace {

py::object json_to_py(const json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact and numeric engine for multiple zeta values on the degree-2 Fermat curve";

    m.def(
        "eval",
        [](const std::string &index, long terms, double tol, bool oracle) {
            F2Index idx = F2Index::parse(index);
            if (oracle) {
                EvalResult r;
                r.value = quad_oracle(idx);
                r.error_estimate = 1e-8;
                return json_to_py(to_json(r, idx.str()));
            }
            EvalOptions opt;
            opt.terms = terms;
            opt.tol = tol;
            return json_to_py(to_json(eval_series(idx, opt), idx.str()));
        },
        py::arg("index"), py::arg("terms") = 0, py::arg("tol") = 0.0, py::arg("oracle") = false,
        "evaluate zf2(k1,...,kd; p1,...,pd) numerically");

    m.def("compile_index", [](const std::string &index) {
        F2Index idx = F2Index::parse(index);
        json j = to_json(compile(idx));
        j["index"] = idx.str();
        return json_to_py(j);
    });

    m.def("is_admissible", [](const std::string &index) { return is_admissible(F2Index::parse(index)); });

    m.def("shuffle_words", [](const std::string &a, const std::string &b) {
        WordCombo r = shuffle(WordCombo::monomial(word_parse(a)), WordCombo::monomial(word_parse(b)));
        return json_to_py(to_json(r));
    });

    m.def("closed_form", [](int k) {
        json arr = json::array();
        for (auto &t : closed_form_depth1(k))
            arr.push_back(json{{"coeff", t.coeff.str()}, {"l", t.index.str()}});
        return json_to_py(json{{"k", k}, {"terms", arr}, {"value", eval_explicit_depth1(k)}});
    });

    m.def(
        "basis",
        [](int degree, int level, bool sigma_invariant) {
            json arr = json::array();
            if (sigma_invariant) {
                for (auto &[mono, eps] : sigma_invariant_basis(degree))
                    arr.push_back(json{{"monomial", mono.str()}, {"eps", to_json(eps)}});
            } else {
                for (auto &mono : basis_enum(degree, level)) arr.push_back(mono.str());
            }
            return json_to_py(arr);
        },
        py::arg("degree"), py::arg("level") = 4, py::arg("sigma_invariant") = false);

    m.def(
        "dims",
        [](int max_k) {
            return json_to_py(json{{"sigma_invariant_4", dim_series(max_k, DimSeriesKind::SigmaInvariant4)},
                                   {"classical_conjectural", dim_series(max_k, DimSeriesKind::ClassicalConjecture)}});
        },
        py::arg("max_k") = 10);

    m.def(
        "coaction_u",
        [](const std::string &monomial, bool tilde) {
            UElement e = monomial.find('(') != std::string::npos
                             ? UElement::parse(monomial)
                             : UElement::monomial(FTauMonomial::parse(monomial));
            return json_to_py(to_json(tilde ? delta_tilde(e) : u_coaction(e)));
        },
        py::arg("monomial"), py::arg("tilde") = false);

    m.def(
        "coaction_symbol",
        [](const std::string &symbol, bool tilde) {
            IISymbol s = IISymbol::parse(symbol);
            bool concrete = true;
            for (auto &mm : s.word) concrete = concrete && mm.tag == MacroLetter::Tag::Concrete;
            CoactionVariant variant = tilde ? CoactionVariant::Tilde : CoactionVariant::Full;
            TensorExpr t = concrete ? goncharov_coaction(s, variant)
                                    : coaction_on_word_combo(s.start, s.word, s.end, s.kind, variant);
            return json_to_py(to_json(simplify(t)));
        },
        py::arg("symbol"), py::arg("tilde") = false);

    m.def("verify_coaction_uv", &verify_coaction_uv);
    m.def("check_recursion", &check_recursion);
    m.def("bernoulli", [](unsigned long n) { return bernoulli(n).str(); });
    m.def("alpha", [](int n) { return alpha_coeff(n).str(); });
    m.def("beta", [](int n) { return beta_coeff(n).str(); });
    m.def("pi", &const_pi);
    m.def("log2", &const_log2);
    m.def("zeta", &const_zeta);

    m.def("run_checks", []() {
        json arr = json::array();
        for (auto &r : checks::run_all())
            arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        return json_to_py(arr);
    });
}

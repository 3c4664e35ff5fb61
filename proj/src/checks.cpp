#include "f2mzv/checks.hpp"

#include "f2mzv/constants.hpp"
#include "f2mzv/depth1.hpp"
#include "f2mzv/index.hpp"
#include "f2mzv/indexsets.hpp"
#include "f2mzv/quadrature.hpp"
#include "f2mzv/series.hpp"
#include "f2mzv/symbols.hpp"
#include "f2mzv/u4.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

namespace f2mzv::checks {

namespace {

struct Collector {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string &s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

F2Index idx1(int k) { return F2Index({k}, {FormTag::W}); }

double closed_form_value(int k) {
    double pi = const_pi(), l2 = const_log2();
    switch (k) {
    case 1: return pi / 2.0;
    case 2: return pi / 2.0 * l2;
    case 3: return pi / 48.0 * (12.0 * l2 * l2 + pi * pi);
    case 4: return pi / 48.0 * (4.0 * l2 * l2 * l2 + pi * pi * l2 + 6.0 * const_zeta(3));
    case 5:
        return pi / 11520.0 *
               (240.0 * std::pow(l2, 4) + 120.0 * pi * pi * l2 * l2 +
                1440.0 * l2 * const_zeta(3) + 19.0 * std::pow(pi, 4));
    default: throw std::invalid_argument("closed_form_value: k in 1..5");
    }
}

Word random_word(std::mt19937 &rng, int max_deg) {
    std::uniform_int_distribution<int> len(0, max_deg);
    std::uniform_int_distribution<int> let(0, 4);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto &a : w) a = static_cast<Letter>(let(rng));
    return w;
}

} // namespace

CheckResult depth1_numeric_values() {
    Collector c;
    // k = 1 via tail correction at N <= 4e5; k = 2..5 plain at N <= 1e5
    {
        EvalOptions opt;
        opt.terms = 400000;
        double got = eval_series(idx1(1), opt).value;
        double want = closed_form_value(1);
        c.expect(std::fabs(got - want) < 1e-6, "k=1: |" + std::to_string(got) + " - pi/2| >= 1e-6");
    }
    for (int k = 2; k <= 5; ++k) {
        EvalOptions opt;
        opt.terms = 100000;
        double got = eval_series(idx1(k), opt).value;
        double want = closed_form_value(k);
        std::ostringstream what;
        what << "k=" << k << ": |" << got << " - " << want << "| >= 1e-8";
        c.expect(std::fabs(got - want) < 1e-8, what.str());
    }
    return {"depth1-numeric-values", c.pass, c.detail.str()};
}

CheckResult explicit_formula_identity() {
    Collector c;
    for (int k = 1; k <= 8; ++k) {
        EvalOptions opt;
        opt.terms = (k == 1) ? 400000 : 100000;
        EvalResult series = eval_series(idx1(k), opt);
        double explicit_val = eval_explicit_depth1(k);
        double budget = series.error_estimate + 1e-12;
        std::ostringstream what;
        what << "k=" << k << ": |" << explicit_val << " - " << series.value << "| > " << budget;
        c.expect(std::fabs(explicit_val - series.value) <= budget, what.str());
    }
    return {"explicit-formula-identity", c.pass, c.detail.str()};
}

CheckResult oracle_cross_checks() {
    Collector c;
    struct Case {
        F2Index idx;
        long terms;
    };
    std::vector<Case> cases = {
        {F2Index({2}, {FormTag::W}), 100000},
        {F2Index({1, 1}, {FormTag::W, FormTag::W}), 4000000},
        {F2Index({1, 2}, {FormTag::W, FormTag::W1}), 8000000},
    };
    for (auto &tc : cases) {
        EvalOptions opt;
        opt.terms = tc.terms;
        double series = eval_series(tc.idx, opt).value;
        double oracle = quad_oracle(tc.idx);
        std::ostringstream what;
        what << tc.idx.str() << ": |" << series << " - " << oracle << "| >= 1e-6";
        c.expect(std::fabs(series - oracle) < 1e-6, what.str());
    }
    return {"oracle-cross-checks", c.pass, c.detail.str()};
}

CheckResult shuffle_algebra_properties() {
    Collector c;
    std::mt19937 rng(20240605);
    for (int trial = 0; trial < 100; ++trial) {
        WordCombo u = WordCombo::monomial(random_word(rng, 3));
        WordCombo v = WordCombo::monomial(random_word(rng, 3));
        WordCombo w = WordCombo::monomial(random_word(rng, 2));
        c.expect(shuffle(u, v) == shuffle(v, u), "commutativity failed");
        c.expect(shuffle(shuffle(u, v), w) == shuffle(u, shuffle(v, w)), "associativity failed");
        if (!c.pass) break;
    }
    for (unsigned k = 1; k <= 5; ++k) {
        WordCombo eta = MacroLetter::eta().expansion();
        WordCombo pow = shuffle_power(eta, k);
        WordCombo cat = WordCombo::unit();
        for (unsigned j = 0; j < k; ++j) cat = concat(cat, eta);
        c.expect(pow == cat * GaussianRational(Rational(factorial(k))),
                 "shuffle_power identity failed at k=" + std::to_string(k));
    }
    return {"shuffle-algebra-properties", c.pass, c.detail.str()};
}

CheckResult hopf_model() {
    Collector c;
    // coassociativity and multiplicativity on all degree <= 5 monomials
    for (int deg = 0; deg <= 5; ++deg) {
        for (auto &m : basis_enum(deg, 4)) {
            UElement e = UElement::monomial(m);
            UTensor d = u_coaction(e);
            // (Delta (x) id) Delta == (id (x) Delta) Delta in V (x) V (x) U
            std::map<std::tuple<FTauMonomial, FTauMonomial, FTauMonomial>, GaussianRational> lhs, rhs;
            for (auto &[k, coeff] : d.terms()) {
                UTensor left = u_coaction(UElement::monomial(k.first));
                for (auto &[k2, c2] : left.terms()) {
                    auto key = std::make_tuple(k2.first, FTauMonomial{k2.second.js, 0}, k.second);
                    lhs[key] += coeff * c2;
                }
                UTensor right = u_coaction(UElement::monomial(k.second));
                for (auto &[k2, c2] : right.terms()) {
                    auto key = std::make_tuple(k.first, k2.first, k2.second);
                    rhs[key] += coeff * c2;
                }
            }
            auto prune = [](auto &mp) {
                for (auto it = mp.begin(); it != mp.end();)
                    it = it->second.is_zero() ? mp.erase(it) : std::next(it);
            };
            prune(lhs);
            prune(rhs);
            c.expect(lhs == rhs, "coassociativity failed on " + m.str());
        }
    }
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, 3);
        for (int trial = 0; trial < 25; ++trial) {
            auto b4 = basis_enum(pick(rng) + 1, 4);
            std::uniform_int_distribution<std::size_t> sel(0, b4.size() - 1);
            UElement a = UElement::monomial(b4[sel(rng)]);
            UElement b = UElement::monomial(b4[sel(rng)]);
            c.expect(u_coaction(u_shuffle(a, b)) == u_coaction(a).mul(u_coaction(b)),
                     "Delta multiplicativity failed");
        }
    }
    // kernel dimensions, 1 <= k <= 6, plus the sigma-restricted case split
    for (int k = 1; k <= 6; ++k) {
        auto kp = kernel_delta(DeltaVariant::Prime, k);
        auto kt = kernel_delta(DeltaVariant::Tilde, k);
        c.expect(kp.size() == 1, "dim Ker Delta' at k=" + std::to_string(k) + " != 1");
        c.expect(kt.size() == 2, "dim Ker Delta~ at k=" + std::to_string(k) + " != 2");
        FTauMonomial tau_k{{}, k};
        FTauMonomial f_k{{k}, 0};
        bool tau_in = false, f_in = false;
        for (auto &e : kt) {
            if (!e.coeff(tau_k).is_zero() && e.terms().size() == 1) tau_in = true;
            if (!e.coeff(f_k).is_zero() && e.terms().size() == 1) f_in = true;
        }
        c.expect(tau_in && f_in, "Ker Delta~ at k=" + std::to_string(k) + " is not span{tau^k, f_k}");

        auto kplus = kernel_delta(DeltaVariant::Tilde, k, SigmaRestrict::Plus);
        auto kminus = kernel_delta(DeltaVariant::Tilde, k, SigmaRestrict::Minus);
        FTauMonomial expect_plus = (k % 2 == 1) ? f_k : tau_k;
        FTauMonomial expect_minus = (k % 2 == 1) ? tau_k : f_k;
        c.expect(kplus.size() == 1 && !kplus[0].coeff(expect_plus).is_zero() && kplus[0].terms().size() == 1,
                 "sigma-invariant kernel mismatch at k=" + std::to_string(k));
        c.expect(kminus.size() == 1 && !kminus[0].coeff(expect_minus).is_zero() && kminus[0].terms().size() == 1,
                 "sigma-anti-invariant kernel mismatch at k=" + std::to_string(k));
    }
    return {"hopf-model", c.pass, c.detail.str()};
}

CheckResult main1_dimensions() {
    Collector c;
    auto series = dim_series(10, DimSeriesKind::SigmaInvariant4);
    long expected = 1;
    for (int k = 0; k <= 10; ++k) {
        auto basis = sigma_invariant_basis(k);
        c.expect(static_cast<long>(basis.size()) == expected,
                 "count at k=" + std::to_string(k) + " != 2^k");
        c.expect(series[static_cast<std::size_t>(k)] == expected,
                 "series coefficient at k=" + std::to_string(k) + " != 2^k");
        // every listed element is fixed by sigma
        for (auto &[m, eps] : basis) {
            UElement e = UElement::monomial(m, eps);
            c.expect(u_sigma(e) == e, "basis element " + m.str() + " not sigma-fixed");
        }
        if (k >= 1) {
            long plus = 0, minus = 0;
            for (auto &m : basis_enum(k, 4))
                ((k - m.letters()) % 2 == 0 ? plus : minus) += 1;
            c.expect(plus == expected / 2 && minus == expected / 2,
                     "eigenspace split at k=" + std::to_string(k) + " != 2^{k-1}/2^{k-1}");
        }
        expected *= 2;
    }
    return {"main1-dimensions", c.pass, c.detail.str()};
}

CheckResult coaction_recursion() {
    Collector c;
    for (int k = 1; k <= 5; ++k)
        c.expect(verify_coaction_uv(k), "verify_coaction_uv failed at k=" + std::to_string(k));
    return {"coaction-recursion", c.pass, c.detail.str()};
}

CheckResult main2_machinery() {
    Collector c;
    for (int k = 2; k <= 8; ++k)
        c.expect(check_recursion(k), "check_recursion failed at k=" + std::to_string(k));
    for (int k = 1; k <= 8; ++k) {
        std::complex<double> per =
            period_depth1(build_u_tilde(k), GaussianRational(Rational(0), Rational(-1)));
        double want = eval_explicit_depth1(k);
        std::ostringstream what;
        what << "period at k=" << k << ": " << per.real() << (per.imag() < 0 ? "-" : "+")
             << std::fabs(per.imag()) << "i vs " << want;
        c.expect(std::fabs(per.real() - want) < 1e-10 && std::fabs(per.imag()) < 1e-10, what.str());
    }
    return {"main2-machinery", c.pass, c.detail.str()};
}

CheckResult coefficient_spot_values() {
    Collector c;
    c.expect(alpha_coeff(1) == Rational(1, 4), "alpha_1 != 1/4");
    c.expect(beta_coeff(1) == Rational(2), "beta_1 != 2");
    c.expect(beta_coeff(3) == Rational(8, 3), "beta_3 != 8/3");
    c.expect(coeff_c(3, StepForm::W) == Rational(1, 2), "c(3,w) != 1/2");
    c.expect(coeff_c(5, StepForm::W) == Rational(3, 8), "c(5,w) != 3/8");
    c.expect(coeff_c(7, StepForm::W) == Rational(5, 16), "c(7,w) != 5/16");
    return {"coefficient-spot-values", c.pass, c.detail.str()};
}

std::vector<CheckResult> run_all() {
    return {
        depth1_numeric_values(),
        explicit_formula_identity(),
        oracle_cross_checks(),
        shuffle_algebra_properties(),
        hopf_model(),
        main1_dimensions(),
        coaction_recursion(),
        main2_machinery(),
        coefficient_spot_values(),
    };
}

std::vector<CheckResult> run_depth1(int max_k) {
    std::vector<CheckResult> out;
    Collector c;
    for (int k = 1; k <= max_k; ++k) {
        std::complex<double> per =
            period_depth1(build_u_tilde(k), GaussianRational(Rational(0), Rational(-1)));
        double want = eval_explicit_depth1(k);
        c.expect(std::fabs(per.real() - want) < 1e-10 && std::fabs(per.imag()) < 1e-10,
                 "period mismatch at k=" + std::to_string(k));
        EvalResult series = eval_series(idx1(k));
        c.expect(std::fabs(want - series.value) <= series.error_estimate + 1e-12,
                 "series mismatch at k=" + std::to_string(k));
    }
    out.push_back({"depth1-periods-and-series", c.pass, c.detail.str()});

    Collector r;
    for (int k = 2; k <= max_k; ++k)
        r.expect(check_recursion(k), "check_recursion failed at k=" + std::to_string(k));
    out.push_back({"depth1-recursion", r.pass, r.detail.str()});

    Collector s;
    for (int k = 1; k <= max_k; ++k) {
        UElement uk = build_u_tilde(k);
        s.expect(u_sigma(uk) == uk * GaussianRational(-1),
                 "sigma(u~_k) != -u~_k at k=" + std::to_string(k));
    }
    for (int k = 0; k <= std::min(max_k * 2, 20); ++k)
        s.expect(static_cast<long>(enum_index_set(IndexSetKind::I, k).size()) == partition_count(k),
                 "|I_k| mismatch at k=" + std::to_string(k));
    out.push_back({"depth1-sigma-and-counts", s.pass, s.detail.str()});
    return out;
}

} // namespace f2mzv::checks

#include "f2mzv/depth1.hpp"

#include "f2mzv/constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace f2mzv {

namespace {

// sh_{j odd} (beta_j f_j)^{l_j}: per-generator concatenation powers shuffled
// across distinct generators.
UElement odd_shuffle_block(const CompositionIndex &l) {
    UElement r = UElement::unit();
    for (int j = 1; j <= l.size(); j += 2) {
        int lj = l.at(j);
        if (lj == 0) continue;
        FTauMonomial pow{std::vector<int>(static_cast<std::size_t>(lj), j), 0};
        UElement block = UElement::monomial(pow, GaussianRational(beta_coeff(j).pow(static_cast<unsigned long>(lj))));
        r = u_shuffle(r, block);
    }
    return r;
}

} // namespace

UElement build_u_tilde(int k) {
    if (k < 1) throw std::invalid_argument("build_u_tilde: k must be >= 1");
    UElement acc;
    for (auto &[l, lp] : enum_index_set_tilde_odd(k)) {
        UElement block = odd_shuffle_block(l);
        UElement with_tau;
        for (auto &[m, c] : block.terms()) {
            FTauMonomial mt = m;
            mt.l += lp;
            with_tau.add(mt, c);
        }
        acc += with_tau * GaussianRational(alpha_coeff(lp));
    }
    GaussianRational sign(k % 2 == 1 ? 1 : -1);
    return acc * sign;
}

UElement build_v_tilde(int k) {
    if (k < 1) throw std::invalid_argument("build_v_tilde: k must be >= 1");
    UElement acc;
    for (auto &l : enum_index_set(IndexSetKind::IOdd, k))
        acc += odd_shuffle_block(l);
    GaussianRational sign(k % 2 == 1 ? 1 : -1);
    return acc * sign;
}

bool check_recursion(int k) {
    if (k < 2) throw std::invalid_argument("check_recursion: k must be >= 2");
    UElement uk = build_u_tilde(k);
    UTensor lhs = u_coaction(uk);

    UTensor rhs;
    for (int m = 1; m < k; ++m) {
        UElement vm = build_v_tilde(m);
        UElement un = build_u_tilde(k - m);
        for (auto &[mv, cv] : vm.terms())
            for (auto &[mu, cu] : un.terms())
                rhs.add(mv, mu, -(cv * cu));
    }
    for (auto &[m, c] : uk.terms()) rhs.add(FTauMonomial{}, m, c);
    UElement rho_uk = rho(uk);
    for (auto &[m, c] : rho_uk.terms()) rhs.add(m, FTauMonomial{}, c);

    return lhs == rhs;
}

std::complex<double> period_of_tau() { return {0.0, 2.0 * const_pi()}; }

std::complex<double> period_of_f(int j) {
    if (j < 1 || j % 2 == 0)
        throw std::invalid_argument("period_of_f: the realization is defined for odd f_j only");
    if (j == 1) return {-0.5 * const_log2(), 0.0};
    return {std::pow(2.0, 1 - 2 * j) * (1.0 - std::pow(2.0, j - 1)) * const_zeta(j), 0.0};
}

std::complex<double> period_depth1(const UElement &e, const GaussianRational &extension) {
    // group monomials into multiset classes (sorted letter multiset, tau power)
    using ClassKey = std::pair<std::vector<int>, int>;
    struct ClassData {
        GaussianRational coeff;
        std::size_t count = 0;
        bool first = true;
    };
    std::map<ClassKey, ClassData> classes;
    for (auto &[m, c] : e.terms()) {
        for (int j : m.js)
            if (j % 2 == 0)
                throw std::invalid_argument("period_depth1: even generator f" + std::to_string(j) +
                                            " has no assigned period");
        std::vector<int> sorted = m.js;
        std::sort(sorted.begin(), sorted.end());
        auto &cd = classes[{sorted, m.l}];
        if (cd.first) {
            cd.coeff = c;
            cd.first = false;
        } else if (!(cd.coeff == c)) {
            throw std::invalid_argument("period_depth1: element is not symmetric under letter reordering; "
                                        "it lies outside the shuffle subalgebra generated by f_j and tau");
        }
        cd.count += 1;
    }

    std::complex<double> total = 0.0;
    for (auto &[key, cd] : classes) {
        const auto &[letters, l] = key;
        // completeness: the class must contain all distinct orderings
        std::map<int, int> mult;
        for (int j : letters) mult[j] += 1;
        BigInt expected = factorial(letters.size());
        BigInt denom = 1;
        for (auto &[j, m] : mult) denom *= factorial(static_cast<unsigned long>(m));
        expected /= denom;
        if (BigInt(static_cast<long>(cd.count)) != expected)
            throw std::invalid_argument("period_depth1: incomplete symmetric class; element lies outside "
                                        "the shuffle subalgebra generated by f_j and tau");

        std::complex<double> val = 1.0;
        for (int j : letters) val *= period_of_f(j);
        for (auto &[j, m] : mult) val /= factorial(static_cast<unsigned long>(m)).get_d();
        for (int p = 0; p < l; ++p) val *= period_of_tau();
        std::complex<double> coeff(cd.coeff.re.to_double(), cd.coeff.im.to_double());
        total += coeff * val;
    }
    std::complex<double> ext(extension.re.to_double(), extension.im.to_double());
    return total * ext;
}

std::vector<ClosedFormTerm> closed_form_depth1(int k) {
    if (k < 1) throw std::invalid_argument("closed_form_depth1: k must be >= 1");
    std::vector<ClosedFormTerm> out;
    for (auto &l : enum_index_set(IndexSetKind::I, k - 1)) {
        Rational c = Rational(1, 2);
        c /= Rational(factorial(static_cast<unsigned long>(l.at(1))));
        for (int j = 2; j <= l.size(); ++j) {
            int lj = l.at(j);
            if (lj == 0) continue;
            BigInt p2 = BigInt(1) << (j - 1);
            Rational two_pow(p2);
            Rational base = (Rational(1) - Rational(1) / two_pow) / Rational(j);
            c *= base.pow(static_cast<unsigned long>(lj)) / Rational(factorial(static_cast<unsigned long>(lj)));
        }
        out.push_back({c, l});
    }
    return out;
}

} // namespace f2mzv

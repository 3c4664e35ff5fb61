#include "f2mzv/series.hpp"

#include "f2mzv/constants.hpp"
#include "f2mzv/indexsets.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace f2mzv {

Rational coeff_c(int n, StepForm phi) {
    if (n < 0) throw std::invalid_argument("coeff_c: n must be >= 0");
    switch (phi) {
    case StepForm::W0: return Rational(n == 0 ? 1 : 0);
    case StepForm::W1: return Rational(n >= 1 ? 1 : 0);
    default:
        if (n == 0 || n % 2 == 0) return Rational(0);
        return Rational(binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>((n - 1) / 2)),
                        BigInt(1) << (n - 1));
    }
}

void SeriesState::step_w0() {
    for (std::size_t n = a.size(); n-- > 1;) a[n] /= static_cast<double>(n);
    a[0] = 0.0;
}

void SeriesState::step_w1() {
    // a'[n] = (1/n) sum_{u<n} a[u], via a running prefix sum over the old values
    double run = 0.0, comp = 0.0;
    double prev = a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        double y = prev - comp;
        double s = run + y;
        comp = (s - run) - y;
        run = s;
        prev = a[n];
        a[n] = run / static_cast<double>(n);
    }
    a[0] = 0.0;
}

void SeriesState::step_w(const std::vector<double> &cvals) {
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t n = 1; n < a.size(); ++n) {
        double acc = 0.0;
        for (std::size_t v = 1; v <= n; v += 2) acc += cvals[v] * a[n - v];
        out[n] = acc / static_cast<double>(n);
    }
    a = std::move(out);
}

std::vector<double> omega_coeffs(long n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    if (n >= 1) c[1] = 1.0;
    for (long v = 1; v + 2 <= n; v += 2)
        c[static_cast<std::size_t>(v) + 2] = c[static_cast<std::size_t>(v)] * static_cast<double>(v) / static_cast<double>(v + 1);
    return c;
}

std::vector<double> omega_tail_kernel(long n) {
    std::vector<double> g(static_cast<std::size_t>(n) + 1, 0.0);
    g[0] = const_pi() / 2.0;
    if (n >= 1) g[1] = 1.0;
    for (long u = 2; u <= n; ++u)
        g[static_cast<std::size_t>(u)] =
            g[static_cast<std::size_t>(u - 2)] * static_cast<double>(u - 1) / static_cast<double>(u);
    return g;
}

namespace {

std::vector<StepForm> expanded_forms(const F2Index &idx) {
    std::vector<StepForm> forms;
    for (std::size_t j = 0; j < idx.k.size(); ++j) {
        forms.push_back(idx.phi[j] == FormTag::W ? StepForm::W : StepForm::W1);
        for (int m = 1; m < idx.k[j]; ++m) forms.push_back(StepForm::W0);
    }
    return forms;
}

double kahan_sum(const std::vector<double> &a, std::size_t lo, std::size_t hi) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t n = lo; n < hi; ++n) {
        double y = a[n] - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

// Tail estimate from the measured decay rate: windows W1 = sum over (N/4,N/2]
// and W2 = sum over (N/2,N] of a power-law tail give
// sum_{n>N} ~ W2^2/(W1-W2); never reported below the plain |S_N - S_{N/2}|.
double measured_tail_estimate(const std::vector<double> &a) {
    std::size_t n = a.size();
    double w2 = kahan_sum(a, n / 2, n);
    double w1 = kahan_sum(a, n / 4, n / 2);
    double est = w2;
    if (w1 > w2 && w2 > 0.0) est = std::max(w2, w2 * w2 / (w1 - w2));
    return est;
}

bool has_middle_omega_convolution(const std::vector<StepForm> &forms, bool final_w_accelerated) {
    std::size_t last = forms.size();
    if (final_w_accelerated) --last; // the final W is handled by the kernel path
    for (std::size_t j = 1; j < last; ++j)
        if (forms[j] == StepForm::W) return true;
    return false;
}

long default_cap(long fallback) {
    if (const char *env = std::getenv("FERMAT_MZV_PRECISION")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return fallback;
}

// Runs the propagation over forms[0..count) at truncation order n.
SeriesState propagate(const std::vector<StepForm> &forms, std::size_t count, long n) {
    SeriesState st(n);
    std::vector<double> cvals;
    for (std::size_t j = 0; j < count; ++j) {
        switch (forms[j]) {
        case StepForm::W0: st.step_w0(); break;
        case StepForm::W1: st.step_w1(); break;
        case StepForm::W:
            if (j == 0) {
                // first step acts on delta_0: a[n] = c(n, w)/n directly
                auto c = omega_coeffs(n);
                st.a[0] = 0.0;
                for (long m = 1; m <= n; ++m)
                    st.a[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m)] / static_cast<double>(m);
            } else {
                if (cvals.empty()) cvals = omega_coeffs(n);
                st.step_w(cvals);
            }
            break;
        }
    }
    return st;
}

EvalResult eval_once(const F2Index &idx, long n, bool tail_correction) {
    auto forms = expanded_forms(idx);
    bool tail_omega = idx.k.back() == 1 && idx.phi.back() == FormTag::W;

    if (tail_correction && tail_omega && idx.depth() == 1) {
        EvalResult partial = depth1_partial_sum(1, n);
        return tail_correct_depth_tail_omega(partial, idx, n);
    }

    if (tail_correction && tail_omega) {
        // Final integration done exactly against the Beta kernel
        // G(u) = sum_{v odd} c(v,w)/(u+v); only the previous state is truncated.
        SeriesState st = propagate(forms, forms.size() - 1, n);
        auto g = omega_tail_kernel(n);
        std::vector<double> s(st.a.size());
        for (std::size_t u = 0; u < st.a.size(); ++u) s[u] = st.a[u] * g[u];
        EvalResult res;
        res.value = kahan_sum(s, 0, s.size());
        res.error_estimate = measured_tail_estimate(s) + 1e-15 * std::fabs(res.value);
        res.terms_used = n;
        return res;
    }

    SeriesState st = propagate(forms, forms.size(), n);
    EvalResult res;
    res.value = kahan_sum(st.a, 0, st.a.size());
    res.error_estimate = measured_tail_estimate(st.a) + 1e-15 * std::fabs(res.value);
    res.terms_used = n;
    return res;
}

} // namespace

EvalResult depth1_partial_sum(int k, long n_terms) {
    // sum over odd n = 2j+1 <= N of c(n,w)/n^k = C(2j,j)/(4^j (2j+1)^k)
    long jmax = (n_terms - 1) / 2;
    double sum = 0.0, comp = 0.0, t = 1.0;
    for (long j = 0; j <= jmax; ++j) {
        double term = t / std::pow(static_cast<double>(2 * j + 1), k);
        double y = term - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        t *= static_cast<double>(2 * j + 1) / static_cast<double>(2 * j + 2);
    }
    EvalResult r;
    r.value = sum;
    r.terms_used = n_terms;
    // tail ~ int_J^inf x^{-1/2} / (sqrt(pi) 2^k x^k) dx
    double J = static_cast<double>(jmax + 1);
    r.error_estimate = std::pow(J, 0.5 - k) / (std::sqrt(const_pi()) * std::pow(2.0, k) * (k - 0.5));
    return r;
}

EvalResult tail_correct_depth_tail_omega(const EvalResult &partial, const F2Index &idx, long n_terms) {
    if (idx.k.back() != 1 || idx.phi.back() != FormTag::W)
        throw std::invalid_argument(
            "tail_correct_depth_tail_omega: only applies when the final block is (k_d = 1, w); "
            "plain truncation suffices for k_d >= 2");
    if (idx.depth() != 1)
        throw std::invalid_argument("tail_correct_depth_tail_omega: asymptotic form is depth-one only; "
                                    "deeper (1, w)-tailed indices use the kernel path inside eval_series");
    // terms b_j = C(2j,j)/(4^j(2j+1)) ~ (1/sqrt(pi j))(1 - 1/(8j))/(2j+1);
    // add int_{A}^inf of the two-term asymptotic, A = J+1:
    //   int dx/(sqrt(x)(2x+1))      = sqrt(2)(pi/2 - atan sqrt(2x))
    //   int dx/(x^{3/2}(2x+1))      = 2/sqrt(x) - 2 sqrt(2)(pi/2 - atan sqrt(2x)) -> evaluated from A
    double A = static_cast<double>((n_terms - 1) / 2 + 1);
    double arc = const_pi() / 2.0 - std::atan(std::sqrt(2.0 * A));
    double i_main = std::sqrt(2.0) * arc;
    double i_corr = 2.0 / std::sqrt(A) - 2.0 * std::sqrt(2.0) * arc;
    double tail = (i_main - i_corr / 8.0) / std::sqrt(const_pi());

    EvalResult r = partial;
    r.value += tail;
    // leftover is ~ g(A)/2 with g(x) = 1/(sqrt(pi x)(2x+1))
    double g = 1.0 / (std::sqrt(const_pi() * A) * (2.0 * A + 1.0));
    r.error_estimate = g;
    return r;
}

EvalResult eval_series(const F2Index &idx, const EvalOptions &opt) {
    if (!is_admissible(idx))
        throw std::invalid_argument(
            "eval_series: index " + idx.str() +
            " diverges (k_d = 1 and phi_d = w1; converges iff k_d > 1 or phi_d = w)");

    auto forms = expanded_forms(idx);
    bool tail_omega = idx.k.back() == 1 && idx.phi.back() == FormTag::W;
    bool quadratic =
        has_middle_omega_convolution(forms, /*final_w_accelerated=*/tail_omega && opt.tail_correction);

    long n = opt.terms;
    long cap = quadratic ? default_cap(20000) : default_cap(8000000);
    if (n <= 0) n = quadratic ? 10000 : (idx.depth() == 1 ? 200000 : 2000000);
    if (n < idx.weight() + 1)
        throw std::invalid_argument("eval_series: truncation order must be at least the weight");

    EvalResult res = eval_once(idx, n, opt.tail_correction);
    while (opt.tol > 0 && res.error_estimate > opt.tol && n < cap) {
        n = std::min(cap, n * 2);
        res = eval_once(idx, n, opt.tail_correction);
    }
    return res;
}

double eval_explicit_depth1(int k) {
    if (k < 1) throw std::invalid_argument("eval_explicit_depth1: k must be >= 1");
    double log2 = const_log2();
    double sum = 0.0;
    for (auto &l : enum_index_set(IndexSetKind::I, k - 1)) {
        double term = 1.0;
        int l1 = l.at(1);
        term *= std::pow(log2, l1) / factorial(static_cast<unsigned long>(l1)).get_d();
        for (int j = 2; j <= l.size(); ++j) {
            int lj = l.at(j);
            if (lj == 0) continue;
            double base = (1.0 - std::pow(2.0, 1 - j)) / j * const_zeta(j);
            term *= std::pow(base, lj) / factorial(static_cast<unsigned long>(lj)).get_d();
        }
        sum += term;
    }
    return const_pi() / 2.0 * sum;
}

double eval_beta_chain_depth1(int k) {
    // B(1/2,1/2) = pi; psi(1/2)-psi(1) = -2 log 2;
    // psi^{(j-1)}(1/2)-psi^{(j-1)}(1) = (-1)^j (j-1)! (2^j - 2) zeta(j), j > 1;
    // c_r = prod_j (k-1)!/((j!)^{r_j} r_j!).
    double sum = 0.0;
    for (auto &r : enum_index_set(IndexSetKind::I, k - 1)) {
        double c = 1.0, prod = 1.0;
        for (int j = 1; j <= r.size(); ++j) {
            int rj = r.at(j);
            if (rj == 0) continue;
            c /= std::pow(factorial(static_cast<unsigned long>(j)).get_d(), rj) *
                 factorial(static_cast<unsigned long>(rj)).get_d();
            double f = (j == 1) ? -2.0 * const_log2()
                                : ((j % 2 == 0 ? 1.0 : -1.0) *
                                   factorial(static_cast<unsigned long>(j - 1)).get_d() *
                                   (std::pow(2.0, j) - 2.0) * const_zeta(j));
            prod *= std::pow(f, rj);
        }
        c *= factorial(static_cast<unsigned long>(k - 1)).get_d();
        sum += c * prod;
    }
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return sign / (std::pow(2.0, k) * factorial(static_cast<unsigned long>(k - 1)).get_d()) * const_pi() * sum;
}

} // namespace f2mzv

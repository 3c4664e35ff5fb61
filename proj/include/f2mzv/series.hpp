#pragma once

#include "f2mzv/index.hpp"
#include "f2mzv/rational.hpp"

#include <vector>

namespace f2mzv {

/// The three step forms of the power-series propagation.
enum class StepForm { W0, W1, W };

/// Series coefficient c(n, phi): c(n,w) = C(n-1,(n-1)/2)/2^{n-1} for odd n and
/// 0 for even n; c(n,w1) = 1 for n >= 1; c(n,w0) = delta_{n,0}.
Rational coeff_c(int n, StepForm phi);

struct EvalResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long terms_used = 0;
};

/// Coefficient buffer a[0..N] of sum a[n] t^n during form-by-form propagation.
struct SeriesState {
    std::vector<double> a;

    explicit SeriesState(long n) : a(static_cast<std::size_t>(n) + 1, 0.0) { a[0] = 1.0; }
    long order() const { return static_cast<long>(a.size()) - 1; }

    void step_w0();
    void step_w1();
    void step_w(const std::vector<double> &cvals);
};

/// c(n, w) for n = 0..N as doubles (ratio recurrence c(n+2) = c(n)*n/(n+1)).
std::vector<double> omega_coeffs(long n);

struct EvalOptions {
    long terms = 0;           // 0: pick a default for the index shape
    bool tail_correction = true;
    double tol = 0.0;         // > 0: grow N (within caps) until estimate <= tol
};

/// Iterated-sum evaluation of an admissible index: processes the expanded form
/// list phi_1 w0^{k1-1} ... left to right, then sums the final coefficients.
/// With tail_correction and a trailing (k_d = 1, omega) block, the final step
/// is replaced by the documented accelerated path.
EvalResult eval_series(const F2Index &idx, const EvalOptions &opt = {});

/// Depth-one partial sum sum_{2j+1 <= N} C(2j,j)/(4^j (2j+1)^k).
EvalResult depth1_partial_sum(int k, long n_terms);

/// Closed-form asymptotic tail for zeta_F2(1; omega): adds
/// int_{J+1}^inf (1 - 1/(8x)) / (sqrt(pi x)(2x+1)) dx to the partial sum.
/// True error decays like N^{-3/2}. Refuses k_d != 1 shapes.
EvalResult tail_correct_depth_tail_omega(const EvalResult &partial, const F2Index &idx, long n_terms);

/// G(u) = sum_{v odd} c(v,w)/(u+v) = int_0^1 x^u dx/sqrt(1-x^2), u = 0..N,
/// by the Wallis recurrence G(u) = (u-1)/u * G(u-2), G(0) = pi/2, G(1) = 1.
std::vector<double> omega_tail_kernel(long n);

/// Explicit depth-one closed form: (pi/2) sum_{l in I_{k-1}} (log 2)^{l_1}/l_1!
/// prod_{j>=2} (1/l_j!) ((1-2^{1-j})/j zeta(j))^{l_j}.
double eval_explicit_depth1(int k);

/// Same value reconstructed through the beta/polygamma chain:
/// (-1)^{k-1}/(2^k (k-1)!) d^{k-1}/dx^{k-1} B(x,1/2)|_{x=1/2} with the
/// derivative expanded into psi-difference products (test oracle).
double eval_beta_chain_depth1(int k);

} // namespace f2mzv

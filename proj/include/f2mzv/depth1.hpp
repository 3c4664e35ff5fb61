#pragma once

#include "f2mzv/indexsets.hpp"
#include "f2mzv/u4.hpp"

#include <complex>
#include <vector>

namespace f2mzv {

/// u~_k = (-1)^{k-1} sum_{(l;l') in I~_k^odd} alpha_{l'} tau^{l'}
///        sh_j (beta_j f_j)^{l_j}; grade k.
UElement build_u_tilde(int k);

/// v~_k = (-1)^{k-1} sum_{l in I_k^odd} sh_j (beta_j f_j)^{l_j}; tau-free.
UElement build_v_tilde(int k);

/// Checks Delta(u~_k) = -sum_{m+n=k, m,n>0} v~_m (x) u~_n
///                      + 1 (x) u~_k + rho(u~_k) (x) 1 exactly.
bool check_recursion(int k);

/// Generator periods: tau -> 2 pi i, f_1 -> -(1/2) log 2,
/// f_j -> 2^{-2j+1}(1-2^{j-1}) zeta(j) for odd j >= 3.
std::complex<double> period_of_f(int j);
std::complex<double> period_of_tau();

/// Period of an element lying in the shuffle subalgebra generated by odd f_j
/// and tau: decomposes into symmetrized products and evaluates each class as
/// (prod per(f_j)^{m_j} / m_j!) (2 pi i)^l, then multiplies the extension
/// factor. Rejects even f-letters and elements outside the subalgebra.
std::complex<double> period_depth1(const UElement &e, const GaussianRational &extension);

/// One term of the depth-one closed form: coeff * pi * log2^{l1} *
/// prod zeta(j)^{lj}.
struct ClosedFormTerm {
    Rational coeff;          // exact: (1/2) (1/l1!) prod (1/lj!) ((1-2^{1-j})/j)^{lj}
    CompositionIndex index;  // the composition l
};

std::vector<ClosedFormTerm> closed_form_depth1(int k);

} // namespace f2mzv

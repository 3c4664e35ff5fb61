#pragma once

#include "f2mzv/words.hpp"

#include <string>
#include <vector>

namespace f2mzv {

/// The two non-exact forms that can head a block: omega_1 = dx/(1-x) and
/// omega = dx/sqrt(1-x^2).
enum class FormTag { W1, W };

/// Index (k; phi) of an F2 multiple zeta value.
struct F2Index {
    std::vector<int> k;
    std::vector<FormTag> phi;

    F2Index(std::vector<int> kk, std::vector<FormTag> pp);

    int depth() const { return static_cast<int>(k.size()); }
    int weight() const;
    int len_omega() const;

    std::string str() const;               // zf2(k1,...,kd; p1,...,pd)
    static F2Index parse(const std::string &s);
};

/// Converges iff k_d > 1 or phi_d = omega.
bool is_admissible(const F2Index &idx);

struct CompiledSymbol {
    MacroWord tmpl;            // theta_1 eta0^{k1-1} ... theta_d eta0^{kd-1}
    WordCombo word;            // its expansion; degree = weight
    GaussianRational prefactor; // (-i)^{len_omega}
};

/// Level-4 word of an admissible index, with its Gaussian prefactor.
CompiledSymbol compile(const F2Index &idx);

/// Word of the level-N MZV zeta_N(k; eps): single word with sign (-1)^d and
/// letters (eps_j ... eps_d)^{-1} heading each 0-block. N in {1,2,4}.
WordCombo compile_classical(const std::vector<int> &k, const std::vector<Letter> &eps, int level);

/// Whether sigma fixes the compiled pair (word, prefactor):
/// sigma(word) * conj(prefactor) == word * prefactor.
bool sigma_invariance_check(const CompiledSymbol &sym);

} // namespace f2mzv

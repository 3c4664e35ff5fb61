#pragma once

#include "f2mzv/rational.hpp"

#include <string>
#include <vector>

namespace f2mzv {

/// Composition-style index (l_1,...,l_s) with l_s != 0 and weight
/// w(l) = sum_j j*l_j; the empty vector is the designated zero index (0).
struct CompositionIndex {
    std::vector<int> l;

    int weight() const {
        int w = 0;
        for (std::size_t j = 0; j < l.size(); ++j) w += static_cast<int>(j + 1) * l[j];
        return w;
    }
    int size() const { return static_cast<int>(l.size()); }
    int at(int j) const { // 1-based slot access, 0 outside
        return (j >= 1 && j <= size()) ? l[j - 1] : 0;
    }
    bool is_zero_index() const { return l.empty(); }

    std::string str() const;
    friend bool operator==(const CompositionIndex &a, const CompositionIndex &b) { return a.l == b.l; }
    friend bool operator<(const CompositionIndex &a, const CompositionIndex &b) { return a.l < b.l; }
};

enum class IndexSetKind { I, IOdd, IEven, ITildeOdd };

/// All of I_k (resp. I_k^odd, I_k^even); duplicate-free, lexicographic order.
/// I_0 variants contain just the zero index.
std::vector<CompositionIndex> enum_index_set(IndexSetKind kind, int k);

/// Pairs (l; l') with l' >= 1 odd and l in I^odd_{k-l'}.
std::vector<std::pair<CompositionIndex, int>> enum_index_set_tilde_odd(int k);

/// Independent membership-count oracle for |I_k| (= partitions of k).
long partition_count(int k);

/// alpha_n = (1/4) sum_{l in I^even_{n-1}} prod_{j even} (1/l_j!) *
///           (-(1-2^{1-j}) B_j / (2j * j!))^{l_j};   n odd >= 1.
Rational alpha_coeff(int n);

/// beta_n = 2^n / n;   n odd >= 1.
Rational beta_coeff(int n);

} // namespace f2mzv

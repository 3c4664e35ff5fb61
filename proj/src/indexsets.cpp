#include "f2mzv/indexsets.hpp"

#include <stdexcept>

namespace f2mzv {

std::string CompositionIndex::str() const {
    if (l.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(l[j]);
    }
    return s + ")";
}

namespace {

// Extend `cur` with entries for slots > pos until the remaining weight is
// exhausted; step = 1 enumerates all slots, step = 2 only odd or even ones.
void enumerate(int remaining, int slot, int step, std::vector<int> &cur,
               std::vector<CompositionIndex> &out) {
    if (remaining == 0) {
        // trim trailing zeros so l_s != 0
        auto l = cur;
        while (!l.empty() && l.back() == 0) l.pop_back();
        out.push_back(CompositionIndex{std::move(l)});
        return;
    }
    if (slot > remaining) return;
    for (int v = 0; v * slot <= remaining; ++v) {
        cur.resize(static_cast<std::size_t>(slot), 0);
        cur[static_cast<std::size_t>(slot) - 1] = v;
        enumerate(remaining - v * slot, slot + step, step, cur, out);
        cur[static_cast<std::size_t>(slot) - 1] = 0;
    }
}

} // namespace

std::vector<CompositionIndex> enum_index_set(IndexSetKind kind, int k) {
    if (k < 0) throw std::invalid_argument("enum_index_set: k must be >= 0");
    if (kind == IndexSetKind::ITildeOdd)
        throw std::invalid_argument("enum_index_set: use enum_index_set_tilde_odd");
    std::vector<CompositionIndex> out;
    if (k == 0) {
        out.push_back(CompositionIndex{});
        return out;
    }
    std::vector<int> cur;
    switch (kind) {
    case IndexSetKind::I: enumerate(k, 1, 1, cur, out); break;
    case IndexSetKind::IOdd: enumerate(k, 1, 2, cur, out); break;
    case IndexSetKind::IEven: enumerate(k, 2, 2, cur, out); break;
    default: break;
    }
    return out;
}

std::vector<std::pair<CompositionIndex, int>> enum_index_set_tilde_odd(int k) {
    std::vector<std::pair<CompositionIndex, int>> out;
    for (int lp = 1; lp <= k; lp += 2)
        for (auto &l : enum_index_set(IndexSetKind::IOdd, k - lp))
            out.emplace_back(l, lp);
    return out;
}

long partition_count(int k) {
    // plain DP over part sizes, independent of the recursive enumeration
    std::vector<long> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int n = part; n <= k; ++n)
            p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
    return p[static_cast<std::size_t>(k)];
}

Rational alpha_coeff(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("alpha_coeff: n must be a positive odd integer");
    Rational acc(0);
    for (auto &l : enum_index_set(IndexSetKind::IEven, n - 1)) {
        Rational term(1);
        for (int j = 2; j <= l.size(); j += 2) {
            int lj = l.at(j);
            if (lj == 0) continue;
            BigInt p2 = BigInt(1) << (j - 1);
            Rational two_pow(p2);
            Rational base = -(Rational(1) - Rational(1) / two_pow) * bernoulli(static_cast<unsigned long>(j)) /
                            (Rational(2 * j) * Rational(factorial(static_cast<unsigned long>(j))));
            term *= base.pow(static_cast<unsigned long>(lj)) / Rational(factorial(static_cast<unsigned long>(lj)));
        }
        acc += term;
    }
    return acc / Rational(4);
}

Rational beta_coeff(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("beta_coeff: n must be a positive odd integer");
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return Rational(p, BigInt(n));
}

} // namespace f2mzv

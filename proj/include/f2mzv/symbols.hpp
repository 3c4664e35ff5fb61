#pragma once

#include "f2mzv/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace f2mzv {

/// Formal motivic iterated integral I(start; word; end). H-level symbols
/// (kind M) live along the straight path dch; A-level symbols are path-free.
struct IISymbol {
    enum class Kind { M, A } kind;
    Letter start;
    MacroWord word;
    Letter end;

    int degree() const { return static_cast<int>(word.size()); }

    std::string str() const; // Im(0; eta eta0; 1) / Ia(0; i 0 -i; i)
    static IISymbol parse(const std::string &s);

    friend bool operator==(const IISymbol &a, const IISymbol &b) {
        return a.kind == b.kind && a.start == b.start && a.end == b.end && a.word == b.word;
    }
    friend bool operator<(const IISymbol &a, const IISymbol &b);
};

/// A symbol with a scalar in front (substitution and sigma produce signs).
struct ScaledSymbol {
    GaussianRational coeff;
    IISymbol sym;
};

/// Sum of coeff * (product of A-level symbols) (x) (right symbol).
class TensorExpr {
  public:
    struct Key {
        std::vector<IISymbol> left; // kept sorted once canonicalized
        IISymbol right;
        friend bool operator<(const Key &a, const Key &b);
        friend bool operator==(const Key &a, const Key &b) { return !(a < b) && !(b < a); }
    };
    using Terms = std::map<Key, GaussianRational>;

    TensorExpr() = default;
    const Terms &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add(std::vector<IISymbol> left, IISymbol right, const GaussianRational &c);
    TensorExpr &operator+=(const TensorExpr &o);
    TensorExpr &operator-=(const TensorExpr &o);
    friend TensorExpr operator+(TensorExpr a, const TensorExpr &b) { return a += b; }
    friend TensorExpr operator-(TensorExpr a, const TensorExpr &b) { return a -= b; }
    TensorExpr operator*(const GaussianRational &c) const;
    friend bool operator==(const TensorExpr &a, const TensorExpr &b) { return a.t_ == b.t_; }

    std::string str() const;

  private:
    Terms t_;
};

enum class CoactionVariant { Full, Prime, Tilde };

/// Goncharov's formula for a concrete-letter symbol: sum over r and
/// increasing chains; left factors A-level, right keeps the kind of s.
TensorExpr goncharov_coaction(const IISymbol &s, CoactionVariant variant = CoactionVariant::Full);

/// Generalized coaction for macro-letter words: sum over r, concrete letter
/// tuples and chains, with coefficient prod c^{(j_s)}_{a_s}; left factors
/// keep their macro segments, right factors are concrete.
/// Empty left segments are kept so callers can read off the chain shape.
TensorExpr coaction_on_word_combo(Letter start, const MacroWord &tmpl, Letter end,
                                  IISymbol::Kind kind, CoactionVariant variant);

/// MII(5) path reversal (A-level only): (-1)^deg I(end; reversed; start).
ScaledSymbol reverse(const IISymbol &s);

/// MII(7) substitution by c in mu_4. Fails when the macro structure does not
/// survive (eta1 under c = -1, any macro under c = +-i).
ScaledSymbol substitute(const IISymbol &s, Letter c);

/// Galois conjugation on a symbol: conjugates endpoints and letters
/// (eta -> -eta).
ScaledSymbol sigma_symbol(const IISymbol &s);
TensorExpr sigma_tensor(const TensorExpr &e);

/// Canonical form of one A-level factor under the rewrite system:
/// equal-endpoint and empty-word rules, the Lemma-3 / MII(4) zero patterns
/// (checked over the substitution/reversal orbit), then the lexicographically
/// minimal orbit representative. coeff = 0 encodes the zero symbol;
/// an empty optional word (unit) is encoded by a degree-0 symbol.
ScaledSymbol canonical_factor(const IISymbol &s);

/// Normalizes a whole expression: canonicalizes factors, drops units, kills
/// zero terms, merges same-endpoint factors by the shuffle relation, sorts.
TensorExpr simplify(const TensorExpr &e);

/// Collapses a complete telescoping family
///   sum over compositions m_1+...+m_r = M of prod_s Ia(a_s; eta0^{m_s}; a_{s+1})
/// into Ia(a_1; eta0^M; a_{r+1}). `points` is (a_1, ..., a_{r+1}).
/// Throws when the family is not in telescoping shape.
IISymbol telescope_collapse(const std::vector<std::vector<IISymbol>> &family,
                            const std::vector<Letter> &points);

/// u_k = Im(0; eta eta0^{k-1}; 1), v_k = Ia(0; eta eta0^{k-1}; i).
IISymbol u_symbol(int k);
IISymbol v_symbol(int k);

/// Verifies the key recursion Delta~(u_k) = -sum_{r=1}^{k-1} v_{k-r} (x) u_r
/// (and the same with v_k on the right), using only the enumerated rewrite
/// axioms plus telescoping.
bool verify_coaction_uv(int k);

} // namespace f2mzv

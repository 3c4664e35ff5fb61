#pragma once

#include "f2mzv/linalg.hpp"
#include "f2mzv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace f2mzv {

/// Basis monomial f_{j1}...f_{jr} tau^l of U_N; degree = sum js + l.
struct FTauMonomial {
    std::vector<int> js;
    int l = 0;

    int degree() const {
        int d = l;
        for (int j : js) d += j;
        return d;
    }
    int letters() const { return static_cast<int>(js.size()); }
    bool is_unit() const { return js.empty() && l == 0; }

    std::string str() const; // "f1 f3 t^2"; unit prints "1"
    static FTauMonomial parse(const std::string &s);

    friend bool operator==(const FTauMonomial &a, const FTauMonomial &b) {
        return a.l == b.l && a.js == b.js;
    }
    /// Canonical order: tau-exponent, then letter count, then the letter list.
    friend bool operator<(const FTauMonomial &a, const FTauMonomial &b) {
        if (a.l != b.l) return a.l < b.l;
        if (a.js.size() != b.js.size()) return a.js.size() < b.js.size();
        return b.js < a.js;
    }
};

/// Q(i)-linear combination of monomials; zero coefficients never stored.
class UElement {
  public:
    using Terms = std::map<FTauMonomial, GaussianRational>;

    UElement() = default;
    static UElement unit() { return monomial(FTauMonomial{}); }
    static UElement monomial(FTauMonomial m, GaussianRational c = GaussianRational(1));
    static UElement f(int j) { return monomial(FTauMonomial{{j}, 0}); }
    static UElement tau(int l = 1) { return monomial(FTauMonomial{{}, l}); }

    const Terms &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    GaussianRational coeff(const FTauMonomial &m) const;

    void add(const FTauMonomial &m, const GaussianRational &c);
    UElement &operator+=(const UElement &o);
    UElement &operator-=(const UElement &o);
    friend UElement operator+(UElement a, const UElement &b) { return a += b; }
    friend UElement operator-(UElement a, const UElement &b) { return a -= b; }
    UElement operator*(const GaussianRational &c) const;
    friend bool operator==(const UElement &a, const UElement &b) { return a.t_ == b.t_; }

    std::string str() const;
    static UElement parse(const std::string &s);

  private:
    Terms t_;
};

/// Sum of (V-side monomial, l = 0) (x) (U-side monomial) terms.
class UTensor {
  public:
    using Key = std::pair<FTauMonomial, FTauMonomial>;
    using Terms = std::map<Key, GaussianRational>;

    UTensor() = default;
    const Terms &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const FTauMonomial &left, const FTauMonomial &right, const GaussianRational &c);
    UTensor &operator+=(const UTensor &o);
    UTensor &operator-=(const UTensor &o);
    friend UTensor operator+(UTensor a, const UTensor &b) { return a += b; }
    friend UTensor operator-(UTensor a, const UTensor &b) { return a -= b; }
    UTensor operator*(const GaussianRational &c) const;
    friend bool operator==(const UTensor &a, const UTensor &b) { return a.t_ == b.t_; }

    /// Componentwise product (shuffle on both legs).
    UTensor mul(const UTensor &o) const;

    std::string str() const;

  private:
    Terms t_;
};

/// Shuffle product: f-words interleave, tau-exponents add.
UElement u_shuffle(const UElement &a, const UElement &b);

/// Deconcatenation coaction Delta(f_{j1}..f_{jr} tau^l) =
/// sum_s f_{j1}..f_{js} (x) f_{j(s+1)}..f_{jr} tau^l.
UTensor u_coaction(const UElement &a);

/// Delta' = Delta - 1 (x) id, Delta~ = Delta - 1 (x) id - rho (x) 1.
UTensor delta_prime(const UElement &a);
UTensor delta_tilde(const UElement &a);

/// Projection to the tau-free part.
UElement rho(const UElement &a);

/// Galois action: monomial of degree k with r letters maps to (-1)^{k-r}
/// times itself, coefficients conjugated.
UElement u_sigma(const UElement &a);
UTensor u_sigma(const UTensor &t);

/// All degree-k monomials obeying the level constraint, canonical order.
/// Level 4: all j >= 1, all l; level 2: odd j, even l; level 1: odd j >= 3, even l.
std::vector<FTauMonomial> basis_enum(int degree, int level);

/// Degree-k sigma-invariant basis of U~_4: each monomial paired with
/// eps = 1 (k - r even) or i (k - r odd).
std::vector<std::pair<FTauMonomial, GaussianRational>> sigma_invariant_basis(int degree);

enum class DeltaVariant { Prime, Tilde };
enum class SigmaRestrict { None, Plus, Minus };

/// Exact kernel of Delta' or Delta~ on the degree-k slice of U_4 (optionally
/// restricted to a sigma eigenspace), via fraction-free linear algebra.
std::vector<UElement> kernel_delta(DeltaVariant variant, int degree,
                                   SigmaRestrict restrict_to = SigmaRestrict::None);

enum class DimSeriesKind { SigmaInvariant4, ClassicalConjecture };

/// Coefficients of 1/(1-2t) (sigma-invariant dimensions) or of the
/// reference-only 1/(1-t^2-t^3) (classical conjectural dimensions).
std::vector<long> dim_series(int max_k, DimSeriesKind kind);

} // namespace f2mzv

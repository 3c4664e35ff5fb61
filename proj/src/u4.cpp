#include "f2mzv/u4.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace f2mzv {

std::string FTauMonomial::str() const {
    if (is_unit()) return "1";
    std::string s;
    for (std::size_t j = 0; j < js.size(); ++j) {
        if (j) s += ' ';
        s += "f" + std::to_string(js[j]);
    }
    if (l > 0) {
        if (!s.empty()) s += ' ';
        s += (l == 1) ? "t" : "t^" + std::to_string(l);
    }
    return s;
}

FTauMonomial FTauMonomial::parse(const std::string &s) {
    FTauMonomial m;
    if (s == "1" || s.empty()) return m;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == 'f') {
            if (m.l > 0) throw std::invalid_argument("FTauMonomial::parse: f after t in '" + s + "'");
            int j = std::stoi(tok.substr(1));
            if (j < 1) throw std::invalid_argument("FTauMonomial::parse: f-index must be >= 1");
            m.js.push_back(j);
        } else if (tok == "t") {
            m.l += 1;
        } else if (tok.rfind("t^", 0) == 0) {
            m.l += std::stoi(tok.substr(2));
        } else {
            throw std::invalid_argument("FTauMonomial::parse: bad token '" + tok + "' (expected fJ, t or t^L)");
        }
    }
    return m;
}

UElement UElement::monomial(FTauMonomial m, GaussianRational c) {
    UElement r;
    r.add(m, c);
    return r;
}

GaussianRational UElement::coeff(const FTauMonomial &m) const {
    auto it = t_.find(m);
    return it == t_.end() ? GaussianRational(0) : it->second;
}

void UElement::add(const FTauMonomial &m, const GaussianRational &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

UElement &UElement::operator+=(const UElement &o) {
    for (auto &[m, c] : o.t_) add(m, c);
    return *this;
}

UElement &UElement::operator-=(const UElement &o) {
    for (auto &[m, c] : o.t_) add(m, -c);
    return *this;
}

UElement UElement::operator*(const GaussianRational &c) const {
    UElement r;
    if (c.is_zero()) return r;
    for (auto &[m, k] : t_) r.add(m, k * c);
    return r;
}

std::string UElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto &[m, c] : t_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ") " + m.str();
    }
    return s;
}

UElement UElement::parse(const std::string &s) {
    // format produced by str(): "(coeff) mono + (coeff) mono + ..." or "0"
    UElement r;
    if (s == "0") return r;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto open = s.find('(', pos);
        auto close = s.find(')', open);
        if (open == std::string::npos || close == std::string::npos)
            throw std::invalid_argument("UElement::parse: expected '(coeff) monomial' at '" + s.substr(pos) + "'");
        GaussianRational c = GaussianRational::parse(s.substr(open + 1, close - open - 1));
        auto next = s.find(" + ", close);
        std::string mono = s.substr(close + 1, (next == std::string::npos ? s.size() : next) - close - 1);
        while (!mono.empty() && mono.front() == ' ') mono.erase(mono.begin());
        while (!mono.empty() && mono.back() == ' ') mono.pop_back();
        r.add(FTauMonomial::parse(mono), c);
        pos = (next == std::string::npos) ? s.size() : next + 3;
    }
    return r;
}

void UTensor::add(const FTauMonomial &left, const FTauMonomial &right, const GaussianRational &c) {
    if (left.l != 0) throw std::invalid_argument("UTensor: left factor must be tau-free");
    if (c.is_zero()) return;
    Key k{left, right};
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

UTensor &UTensor::operator+=(const UTensor &o) {
    for (auto &[k, c] : o.t_) add(k.first, k.second, c);
    return *this;
}

UTensor &UTensor::operator-=(const UTensor &o) {
    for (auto &[k, c] : o.t_) add(k.first, k.second, -c);
    return *this;
}

UTensor UTensor::operator*(const GaussianRational &c) const {
    UTensor r;
    if (c.is_zero()) return r;
    for (auto &[k, v] : t_) r.add(k.first, k.second, v * c);
    return r;
}

UTensor UTensor::mul(const UTensor &o) const {
    UTensor r;
    for (auto &[ka, ca] : t_)
        for (auto &[kb, cb] : o.t_) {
            UElement left = u_shuffle(UElement::monomial(ka.first), UElement::monomial(kb.first));
            UElement right = u_shuffle(UElement::monomial(ka.second), UElement::monomial(kb.second));
            GaussianRational c = ca * cb;
            for (auto &[ml, cl] : left.terms())
                for (auto &[mr, cr] : right.terms())
                    r.add(ml, mr, c * cl * cr);
        }
    return r;
}

std::string UTensor::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto &[k, c] : t_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ") " + k.first.str() + " (x) " + k.second.str();
    }
    return s;
}

namespace {

void shuffle_js(const std::vector<int> &a, std::size_t ia, const std::vector<int> &b, std::size_t ib,
                std::vector<int> &acc, int l, const GaussianRational &c, UElement &out) {
    if (ia == a.size() && ib == b.size()) {
        out.add(FTauMonomial{acc, l}, c);
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        shuffle_js(a, ia + 1, b, ib, acc, l, c, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        shuffle_js(a, ia, b, ib + 1, acc, l, c, out);
        acc.pop_back();
    }
}

} // namespace

UElement u_shuffle(const UElement &a, const UElement &b) {
    UElement r;
    for (auto &[ma, ca] : a.terms())
        for (auto &[mb, cb] : b.terms()) {
            std::vector<int> acc;
            acc.reserve(ma.js.size() + mb.js.size());
            shuffle_js(ma.js, 0, mb.js, 0, acc, ma.l + mb.l, ca * cb, r);
        }
    return r;
}

UTensor u_coaction(const UElement &a) {
    UTensor r;
    for (auto &[m, c] : a.terms()) {
        for (std::size_t s = 0; s <= m.js.size(); ++s) {
            FTauMonomial left{std::vector<int>(m.js.begin(), m.js.begin() + s), 0};
            FTauMonomial right{std::vector<int>(m.js.begin() + s, m.js.end()), m.l};
            r.add(left, right, c);
        }
    }
    return r;
}

UTensor delta_prime(const UElement &a) {
    UTensor r = u_coaction(a);
    for (auto &[m, c] : a.terms()) r.add(FTauMonomial{}, m, -c);
    return r;
}

UTensor delta_tilde(const UElement &a) {
    UTensor r = delta_prime(a);
    for (auto &[m, c] : a.terms())
        if (m.l == 0) r.add(m, FTauMonomial{}, -c);
    return r;
}

UElement rho(const UElement &a) {
    UElement r;
    for (auto &[m, c] : a.terms())
        if (m.l == 0) r.add(m, c);
    return r;
}

UElement u_sigma(const UElement &a) {
    UElement r;
    for (auto &[m, c] : a.terms()) {
        int sign = (m.degree() - m.letters()) % 2 == 0 ? 1 : -1;
        r.add(m, c.conj() * GaussianRational(sign));
    }
    return r;
}

UTensor u_sigma(const UTensor &t) {
    UTensor r;
    for (auto &[k, c] : t.terms()) {
        int s1 = (k.first.degree() - k.first.letters()) % 2 == 0 ? 1 : -1;
        int s2 = (k.second.degree() - k.second.letters()) % 2 == 0 ? 1 : -1;
        r.add(k.first, k.second, c.conj() * GaussianRational(s1 * s2));
    }
    return r;
}

namespace {

void compositions(int total, int min_part, int step, std::vector<int> &cur,
                  int l, std::vector<FTauMonomial> &out) {
    if (total == 0) {
        out.push_back(FTauMonomial{cur, l});
        return;
    }
    for (int j = min_part; j <= total; j += step) {
        cur.push_back(j);
        compositions(total - j, min_part, step, cur, l, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FTauMonomial> basis_enum(int degree, int level) {
    if (level != 1 && level != 2 && level != 4)
        throw std::invalid_argument("basis_enum: level must be 1, 2 or 4");
    if (degree < 0) throw std::invalid_argument("basis_enum: degree must be >= 0");
    int min_j = (level == 1) ? 3 : 1;
    int j_step = (level == 4) ? 1 : 2;
    int l_step = (level == 4) ? 1 : 2;

    // enumerate in the canonical monomial order: l ascending, then by shape
    std::vector<FTauMonomial> out;
    for (int l = 0; l <= degree; l += l_step) {
        std::vector<FTauMonomial> slice;
        std::vector<int> cur;
        compositions(degree - l, min_j, j_step, cur, l, slice);
        std::sort(slice.begin(), slice.end());
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

std::vector<std::pair<FTauMonomial, GaussianRational>> sigma_invariant_basis(int degree) {
    std::vector<std::pair<FTauMonomial, GaussianRational>> out;
    for (auto &m : basis_enum(degree, 4)) {
        bool even = (degree - m.letters()) % 2 == 0;
        out.emplace_back(m, even ? GaussianRational(1) : GaussianRational::i());
    }
    return out;
}

std::vector<UElement> kernel_delta(DeltaVariant variant, int degree, SigmaRestrict restrict_to) {
    if (degree < 1) throw std::invalid_argument("kernel_delta: degree must be >= 1");
    auto full = basis_enum(degree, 4);
    std::vector<FTauMonomial> basis;
    for (auto &m : full) {
        int sign = (degree - m.letters()) % 2 == 0 ? 1 : -1;
        if (restrict_to == SigmaRestrict::Plus && sign != 1) continue;
        if (restrict_to == SigmaRestrict::Minus && sign != -1) continue;
        basis.push_back(m);
    }

    // image coordinates: map tensor keys to row indices as encountered
    std::map<UTensor::Key, std::size_t> row_of;
    std::vector<UTensor> images;
    images.reserve(basis.size());
    for (auto &m : basis) {
        UElement e = UElement::monomial(m);
        UTensor t = (variant == DeltaVariant::Prime) ? delta_prime(e) : delta_tilde(e);
        for (auto &[k, c] : t.terms())
            row_of.emplace(k, row_of.size());
        images.push_back(std::move(t));
    }

    QMatrix mat(row_of.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (auto &[k, c] : images[col].terms()) {
            if (!c.is_real())
                throw std::logic_error("kernel_delta: coaction matrix should be rational");
            mat.at(row_of[k], col) = c.re;
        }

    std::vector<UElement> out;
    for (auto &v : kernel(mat)) {
        UElement e;
        for (std::size_t col = 0; col < basis.size(); ++col)
            e.add(basis[col], GaussianRational(v[col]));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<long> dim_series(int max_k, DimSeriesKind kind) {
    std::vector<long> d(static_cast<std::size_t>(max_k) + 1, 0);
    d[0] = 1;
    for (int k = 1; k <= max_k; ++k) {
        if (kind == DimSeriesKind::SigmaInvariant4) {
            d[static_cast<std::size_t>(k)] = 2 * d[static_cast<std::size_t>(k - 1)];
        } else {
            long a = (k >= 2) ? d[static_cast<std::size_t>(k - 2)] : 0;
            long b = (k >= 3) ? d[static_cast<std::size_t>(k - 3)] : 0;
            d[static_cast<std::size_t>(k)] = a + b;
        }
    }
    return d;
}

} // namespace f2mzv

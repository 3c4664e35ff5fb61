#include "f2mzv/rational.hpp"

#include <vector>

namespace f2mzv {

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
    return Rational(r);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string &s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    Rational r;
    r.v_ = v;
    r.canonicalize();
    return r;
}

GaussianRational GaussianRational::pow(unsigned long e) const {
    GaussianRational r(1);
    GaussianRational b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    std::string istr = (im == Rational(1)) ? "i" : (im == Rational(-1)) ? "-i" : im.str() + "*i";
    if (re.is_zero()) return istr;
    if (im.sign() > 0) return re.str() + "+" + istr;
    return re.str() + istr; // sign carried by im.str()
}

GaussianRational GaussianRational::parse(const std::string &s) {
    // Accepts the formats produced by str(): a, b*i, i, -i, a+b*i, a-b*i.
    auto parse_imag = [](std::string t) -> Rational {
        if (t == "i") return Rational(1);
        if (t == "-i" || t == "+-i") return Rational(-1);
        auto star = t.rfind("*i");
        if (star == std::string::npos || star + 2 != t.size())
            throw std::invalid_argument("GaussianRational::parse: bad imaginary part '" + t + "'");
        return Rational::parse(t.substr(0, star));
    };
    if (s.empty()) throw std::invalid_argument("GaussianRational::parse: empty string");
    if (s.find('i') == std::string::npos) return GaussianRational(Rational::parse(s));
    // split at the last +/- that is not the leading sign and not inside a fraction
    for (size_t p = s.size(); p-- > 1;) {
        if (s[p] == '+' || s[p] == '-') {
            if (s[p - 1] == '/' || s[p - 1] == '*') continue;
            std::string head = s.substr(0, p), tail = s.substr(p);
            if (tail == "+i") return {Rational::parse(head), Rational(1)};
            if (tail == "-i") return {Rational::parse(head), Rational(-1)};
            if (tail.find('i') == std::string::npos) break;
            Rational im = parse_imag(tail[0] == '+' ? tail.substr(1) : tail);
            return {Rational::parse(head), im};
        }
    }
    return {Rational(0), parse_imag(s)};
}

GaussianRational minus_i_pow(unsigned long l) {
    switch (l % 4) {
    case 0: return GaussianRational(1);
    case 1: return {Rational(0), Rational(-1)};
    case 2: return GaussianRational(-1);
    default: return {Rational(0), Rational(1)};
    }
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational bernoulli(unsigned long n) {
    static std::vector<Rational> cache{Rational(1)};
    // B_n = -1/(n+1) * sum_{j<n} C(n+1,j) B_j
    while (cache.size() <= n) {
        unsigned long m = cache.size();
        Rational acc(0);
        for (unsigned long j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(BigInt(m + 1)));
    }
    return cache[n];
}

} // namespace f2mzv

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace f2mzv {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always canonical: lowest terms, positive
/// denominator, zero stored as 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt &n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canonicalize(); }
    Rational(const BigInt &num, const BigInt &den) : v_(num, den) { canonicalize(); }
    explicit Rational(const mpq_class &v) : v_(v) { canonicalize(); }

    const BigInt num() const { return v_.get_num(); }
    const BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }

    Rational pow(unsigned long e) const;
    double to_double() const { return v_.get_d(); }

    /// "a/b", with "/b" omitted when the denominator is 1.
    std::string str() const;
    static Rational parse(const std::string &s);

  private:
    void canonicalize() {
        if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

/// Element a + b*i of Q(i), componentwise canonical.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational &operator+=(const GaussianRational &o) { re += o.re; im += o.im; return *this; }
    GaussianRational &operator-=(const GaussianRational &o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational &operator*=(const GaussianRational &o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o) {
        Rational n = o.norm2();
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational c = o.conj();
        *this *= c;
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }
    friend bool operator<(const GaussianRational &a, const GaussianRational &b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    GaussianRational pow(unsigned long e) const;

    /// "a/b", "c/d*i" or "a/b+c/d*i".
    std::string str() const;
    static GaussianRational parse(const std::string &s);
};

/// (-i)^l, the prefactor attached to an omega-length-l compiled index.
GaussianRational minus_i_pow(unsigned long l);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Bernoulli numbers for the x/(e^x - 1) generating function, so B_1 = -1/2.
/// Memoized; thread-safety is not attempted (acceptance suites are single-threaded).
Rational bernoulli(unsigned long n);

} // namespace f2mzv

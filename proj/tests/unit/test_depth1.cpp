#include "f2mzv/constants.hpp"
#include "f2mzv/depth1.hpp"
#include "f2mzv/series.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace f2mzv;

namespace {
CompositionIndex CI(std::vector<int> l) { return CompositionIndex{std::move(l)}; }

bool contains(const std::vector<CompositionIndex> &set, const CompositionIndex &x) {
    return std::find(set.begin(), set.end(), x) != set.end();
}
} // namespace

TEST_SUITE("depth1") {

TEST_CASE("index set enumeration") {
    auto i0 = enum_index_set(IndexSetKind::I, 0);
    REQUIRE(i0.size() == 1);
    CHECK(i0[0].is_zero_index());
    CHECK(i0[0].str() == "(0)");

    auto i3 = enum_index_set(IndexSetKind::I, 3);
    CHECK(i3.size() == 3);
    CHECK(contains(i3, CI({3})));
    CHECK(contains(i3, CI({1, 1})));
    CHECK(contains(i3, CI({0, 0, 1})));

    auto e2 = enum_index_set(IndexSetKind::IEven, 2);
    REQUIRE(e2.size() == 1);
    CHECK(e2[0] == CI({0, 1}));

    auto o5 = enum_index_set(IndexSetKind::IOdd, 5);
    for (auto &l : o5) {
        CHECK(l.weight() == 5);
        for (int j = 2; j <= l.size(); j += 2) CHECK(l.at(j) == 0);
    }

    SUBCASE("sizes match the partition-count oracle") {
        for (int k = 0; k <= 20; ++k)
            CHECK(static_cast<long>(enum_index_set(IndexSetKind::I, k).size()) == partition_count(k));
    }
    SUBCASE("no duplicates") {
        for (int k = 0; k <= 10; ++k) {
            auto v = enum_index_set(IndexSetKind::I, k);
            std::sort(v.begin(), v.end());
            CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        }
    }
}

TEST_CASE("tilde index set") {
    auto t2 = enum_index_set_tilde_odd(2);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].first == CI({1}));
    CHECK(t2[0].second == 1);
    for (auto &[l, lp] : enum_index_set_tilde_odd(7)) {
        CHECK(lp % 2 == 1);
        CHECK(l.weight() + lp == 7);
    }
}

TEST_CASE("alpha and beta coefficients") {
    CHECK(alpha_coeff(1) == Rational(1, 4));
    CHECK(alpha_coeff(3) == Rational(-1, 384));
    SUBCASE("alpha_5 from its two even compositions") {
        // l = (0,2): (1/2!)(-(1/2)B_2/(2*2*2!))^2 ; l = (0,0,0,1): -(7/8)B_4/(2*4*4!)
        Rational t1 = Rational(1, 2) * (Rational(-1, 2) * bernoulli(2) / Rational(8)).pow(2);
        Rational t2 = -(Rational(7, 8) * bernoulli(4)) / Rational(192);
        CHECK(alpha_coeff(5) == (t1 + t2) / Rational(4));
        CHECK(alpha_coeff(5) == Rational(19, 368640));
    }
    CHECK(beta_coeff(1) == Rational(2));
    CHECK(beta_coeff(3) == Rational(8, 3));
    CHECK(beta_coeff(5) == Rational(32, 5));
    CHECK_THROWS(alpha_coeff(2));
    CHECK_THROWS(beta_coeff(4));
}

TEST_CASE("u-tilde and v-tilde") {
    CHECK(build_u_tilde(1) == UElement::monomial(FTauMonomial{{}, 1}, GaussianRational(Rational(1, 4))));
    CHECK(build_u_tilde(2) ==
          UElement::monomial(FTauMonomial{{1}, 1}, GaussianRational(Rational(-1, 2))));
    CHECK(build_v_tilde(1) == UElement::f(1) * GaussianRational(2));
    CHECK(build_v_tilde(2) ==
          UElement::monomial(FTauMonomial{{1, 1}, 0}, GaussianRational(Rational(-4))));
    SUBCASE("v_3 mixes f3 and f1^3") {
        UElement v3 = build_v_tilde(3);
        CHECK(v3.coeff(FTauMonomial{{3}, 0}) == GaussianRational(Rational(8, 3)));
        CHECK(v3.coeff(FTauMonomial{{1, 1, 1}, 0}) == GaussianRational(Rational(8)));
    }
    SUBCASE("grades") {
        for (int k = 1; k <= 8; ++k) {
            for (auto &[m, c] : build_u_tilde(k).terms()) CHECK(m.degree() == k);
            for (auto &[m, c] : build_v_tilde(k).terms()) CHECK(m.degree() == k);
        }
    }
}

TEST_CASE("coaction recursion in the model") {
    CHECK(check_recursion(2));
    CHECK(check_recursion(3));
    CHECK(check_recursion(5));
    CHECK_THROWS(check_recursion(1));
}

TEST_CASE("sigma flips u-tilde") {
    for (int k = 1; k <= 6; ++k) {
        UElement uk = build_u_tilde(k);
        CHECK(u_sigma(uk) == uk * GaussianRational(-1));
    }
}

TEST_CASE("period realization") {
    double pi = const_pi();
    SUBCASE("tau against the 1/(2i) factor gives pi") {
        auto per = period_depth1(UElement::tau(), GaussianRational(Rational(0), Rational(-1, 2)));
        CHECK(per.real() == doctest::Approx(pi).epsilon(1e-14));
        CHECK(std::fabs(per.imag()) < 1e-14);
    }
    SUBCASE("the even zeta model value") {
        // -tau^2/24 realizes pi^2/6
        auto per = period_depth1(UElement::tau(2) * GaussianRational(Rational(-1, 24)),
                                 GaussianRational(1));
        CHECK(per.real() == doctest::Approx(pi * pi / 6).epsilon(1e-14));
    }
    SUBCASE("weight-2 value") {
        auto per = period_depth1(build_u_tilde(2), GaussianRational(Rational(0), Rational(-1)));
        CHECK(per.real() == doctest::Approx(pi / 2 * const_log2()).epsilon(1e-13));
        CHECK(std::fabs(per.imag()) < 1e-14);
    }
    SUBCASE("generator values match the alternating double-index series") {
        for (int j : {1, 3, 5}) {
            double direct = 0.0;
            for (long m = 1; m < 4000000; ++m)
                direct += ((m % 2) ? -1.0 : 1.0) / std::pow(2.0 * m, j);
            // j = 1 converges slowly; average consecutive partial sums
            direct += 0.5 * ((4000000 % 2) ? -1.0 : 1.0) / std::pow(2.0 * 4000000, j);
            CHECK(period_of_f(j).real() == doctest::Approx(direct).epsilon(1e-10));
        }
    }
    SUBCASE("rejects even generators and asymmetric elements") {
        CHECK_THROWS(period_depth1(UElement::f(2), GaussianRational(1)));
        UElement lop = UElement::monomial(FTauMonomial{{1, 3}, 0});
        CHECK_THROWS_WITH_AS(period_depth1(lop, GaussianRational(1)),
                             doctest::Contains("symmetric"), std::invalid_argument);
    }
}

TEST_CASE("closed form terms") {
    auto terms = closed_form_depth1(3);
    REQUIRE(terms.size() == 2);
    double value = 0.0;
    for (auto &t : terms) {
        double m = t.coeff.to_double();
        m *= std::pow(const_log2(), t.index.at(1));
        for (int j = 2; j <= t.index.size(); ++j)
            m *= std::pow(const_zeta(j), t.index.at(j));
        value += m * const_pi();
    }
    CHECK(value == doctest::Approx(eval_explicit_depth1(3)).epsilon(1e-14));
}

}

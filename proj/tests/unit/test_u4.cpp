#include "f2mzv/u4.hpp"

#include <doctest.h>

#include <random>

using namespace f2mzv;

namespace {
FTauMonomial M(std::vector<int> js, int l = 0) { return FTauMonomial{std::move(js), l}; }
} // namespace

TEST_SUITE("u4") {

TEST_CASE("monomial text") {
    CHECK(M({1, 3}, 2).str() == "f1 f3 t^2");
    CHECK(M({}, 1).str() == "t");
    CHECK(M({}).str() == "1");
    CHECK(FTauMonomial::parse("f1 f3 t^2") == M({1, 3}, 2));
    CHECK(FTauMonomial::parse("t") == M({}, 1));
    CHECK(FTauMonomial::parse("1") == M({}));
    CHECK_THROWS(FTauMonomial::parse("t f1"));
    CHECK_THROWS(FTauMonomial::parse("g2"));
}

TEST_CASE("shuffle product") {
    UElement f1 = UElement::f(1), f2 = UElement::f(2);
    UElement want;
    want.add(M({1, 2}), GaussianRational(1));
    want.add(M({2, 1}), GaussianRational(1));
    CHECK(u_shuffle(f1, f2) == want);
    CHECK(u_shuffle(UElement::tau(), f1) == UElement::monomial(M({1}, 1)));
    CHECK(u_shuffle(f1, f1) == UElement::monomial(M({1, 1}), GaussianRational(2)));
}

TEST_CASE("deconcatenation coaction") {
    UTensor d = u_coaction(UElement::monomial(M({1}, 1)));
    UTensor want;
    want.add(M({}), M({1}, 1), GaussianRational(1));
    want.add(M({1}), M({}, 1), GaussianRational(1));
    CHECK(d == want);

    UTensor d3 = u_coaction(UElement::tau(3));
    UTensor want3;
    want3.add(M({}), M({}, 3), GaussianRational(1));
    CHECK(d3 == want3);

    UTensor d12 = u_coaction(UElement::monomial(M({1, 2})));
    UTensor want12;
    want12.add(M({}), M({1, 2}), GaussianRational(1));
    want12.add(M({1}), M({2}), GaussianRational(1));
    want12.add(M({1, 2}), M({}), GaussianRational(1));
    CHECK(d12 == want12);
}

TEST_CASE("reduced coactions") {
    CHECK(delta_tilde(UElement::f(3)).is_zero());
    CHECK(delta_prime(UElement::tau(5)).is_zero());
    UTensor want;
    want.add(M({1}), M({2}), GaussianRational(1));
    CHECK(delta_tilde(UElement::monomial(M({1, 2}))) == want);
}

TEST_CASE("rho projection") {
    CHECK(rho(UElement::monomial(M({2}, 1))).is_zero());
    CHECK(rho(UElement::monomial(M({1, 3}))) == UElement::monomial(M({1, 3})));
    CHECK(rho(UElement::tau()).is_zero());
}

TEST_CASE("sigma action") {
    CHECK(u_sigma(UElement::f(2)) == UElement::f(2) * GaussianRational(-1));
    CHECK(u_sigma(UElement::monomial(M({2}, 1))) == UElement::monomial(M({2}, 1)));
    CHECK(u_sigma(UElement::monomial(M({1}), GaussianRational::i())) ==
          UElement::monomial(M({1}), -GaussianRational::i()));
    SUBCASE("involution, commutes with shuffle and coaction") {
        std::mt19937 rng(3);
        for (int deg = 1; deg <= 4; ++deg) {
            auto basis = basis_enum(deg, 4);
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            for (int t = 0; t < 10; ++t) {
                UElement a = UElement::monomial(basis[pick(rng)], GaussianRational::i());
                UElement b = UElement::monomial(basis[pick(rng)]);
                CHECK(u_sigma(u_sigma(a)) == a);
                CHECK(u_sigma(u_shuffle(a, b)) == u_shuffle(u_sigma(a), u_sigma(b)));
                CHECK(u_sigma(u_coaction(a)) == u_coaction(u_sigma(a)));
            }
        }
    }
}

TEST_CASE("graded bases") {
    auto b24 = basis_enum(2, 4);
    REQUIRE(b24.size() == 4);
    CHECK(b24[0] == M({2}));
    CHECK(b24[1] == M({1, 1}));
    CHECK(b24[2] == M({1}, 1));
    CHECK(b24[3] == M({}, 2));

    auto b21 = basis_enum(2, 1);
    REQUIRE(b21.size() == 1);
    CHECK(b21[0] == M({}, 2));

    CHECK(basis_enum(0, 4) == std::vector<FTauMonomial>{M({})});
    CHECK(basis_enum(0, 1) == std::vector<FTauMonomial>{M({})});

    // level 2: odd letters, even tau powers
    auto b32 = basis_enum(3, 2);
    CHECK(b32 == std::vector<FTauMonomial>{M({3}), M({1, 1, 1}), M({1}, 2)});

    for (int k = 1; k <= 8; ++k)
        CHECK(basis_enum(k, 4).size() == (1u << k));
    CHECK_THROWS(basis_enum(2, 3));
}

TEST_CASE("sigma-invariant basis") {
    auto b1 = sigma_invariant_basis(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].first == M({1}));
    CHECK(b1[0].second == GaussianRational(1));
    CHECK(b1[1].first == M({}, 1));
    CHECK(b1[1].second == GaussianRational::i());
    CHECK(sigma_invariant_basis(3).size() == 8);
    for (auto &[m, eps] : sigma_invariant_basis(4)) {
        UElement e = UElement::monomial(m, eps);
        CHECK(u_sigma(e) == e);
    }
}

TEST_CASE("coaction kernels") {
    auto kp4 = kernel_delta(DeltaVariant::Prime, 4);
    REQUIRE(kp4.size() == 1);
    CHECK(kp4[0] == UElement::tau(4));

    auto kt4 = kernel_delta(DeltaVariant::Tilde, 4);
    REQUIRE(kt4.size() == 2);
    bool has_tau = false, has_f = false;
    for (auto &e : kt4) {
        if (e == UElement::tau(4)) has_tau = true;
        if (e == UElement::f(4)) has_f = true;
    }
    CHECK(has_tau);
    CHECK(has_f);

    auto kt1 = kernel_delta(DeltaVariant::Tilde, 1);
    CHECK(kt1.size() == 2);
}

TEST_CASE("dimension series") {
    CHECK(dim_series(4, DimSeriesKind::SigmaInvariant4) == std::vector<long>{1, 2, 4, 8, 16});
    CHECK(dim_series(7, DimSeriesKind::ClassicalConjecture) ==
          std::vector<long>{1, 0, 1, 1, 1, 2, 2, 3});
    CHECK(basis_enum(5, 4).size() == 32);
}

TEST_CASE("tensor product is componentwise shuffle") {
    UTensor a = u_coaction(UElement::f(1));
    UTensor sq = a.mul(a);
    CHECK(sq == u_coaction(u_shuffle(UElement::f(1), UElement::f(1))));
}

TEST_CASE("element text round trip") {
    UElement e;
    e.add(M({1, 2}, 1), GaussianRational(Rational(-1, 2), Rational(3)));
    e.add(M({}, 2), GaussianRational(Rational(7)));
    e.add(M({4}), GaussianRational(Rational(0), Rational(-1)));
    CHECK(UElement::parse(e.str()) == e);
    CHECK(UElement::parse("0").is_zero());
    CHECK(UElement::parse(UElement::unit().str()) == UElement::unit());
}

}

#include "f2mzv/linalg.hpp"
#include "f2mzv/rational.hpp"

#include <doctest.h>

#include <random>

using namespace f2mzv;

namespace {

// Independent Bernoulli oracle: Akiyama-Tanigawa transform, adjusted to the
// x/(e^x - 1) convention (flips the sign of B_1).
Rational bernoulli_oracle(unsigned long n) {
    std::vector<Rational> row;
    for (unsigned long j = 0; j <= n; ++j) row.emplace_back(Rational(1, static_cast<long>(j) + 1));
    for (unsigned long i = 1; i <= n; ++i)
        for (unsigned long j = 0; j <= n - i; ++j)
            row[j] = (row[j] - row[j + 1]) * Rational(static_cast<long>(j) + 1);
    if (n == 1) return -row[0]; // Akiyama-Tanigawa produces B_1 = +1/2
    return row[0];
}

} // namespace

TEST_SUITE("exact") {

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational z{Rational(1, 2), Rational(-1, 3)};
    CHECK(z.conj().conj() == z);
    CHECK(z.norm2() == Rational(1, 4) + Rational(1, 9));
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((z * i).re == Rational(1, 3));
    CHECK(z / z == GaussianRational(1));
    CHECK(minus_i_pow(0) == GaussianRational(1));
    CHECK(minus_i_pow(1) == -i);
    CHECK(minus_i_pow(2) == GaussianRational(-1));
    CHECK(minus_i_pow(3) == i);
    SUBCASE("string round trip") {
        for (auto &g : {z, i, -i, GaussianRational(Rational(-2, 7)), GaussianRational(Rational(0), Rational(5, 3)),
                        GaussianRational(Rational(1), Rational(1))})
            CHECK(GaussianRational::parse(g.str()) == g);
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("bernoulli values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    SUBCASE("matches the independent Akiyama-Tanigawa oracle") {
        for (unsigned long n = 0; n <= 30; ++n) CHECK(bernoulli(n) == bernoulli_oracle(n));
    }
    SUBCASE("odd ones vanish") {
        for (unsigned long n = 3; n <= 30; n += 2) CHECK(bernoulli(n) == Rational(0));
    }
}

TEST_CASE("kernel basics") {
    SUBCASE("identity has trivial kernel") {
        QMatrix m(2, 2);
        m.at(0, 0) = Rational(1);
        m.at(1, 1) = Rational(1);
        CHECK(kernel(m).empty());
    }
    SUBCASE("1x2 difference matrix") {
        QMatrix m(1, 2);
        m.at(0, 0) = Rational(1);
        m.at(0, 1) = Rational(-1);
        auto basis = kernel(m);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<Rational>{Rational(1), Rational(1)});
    }
}

TEST_CASE("kernel vectors satisfy M v = 0 and count cols - rank") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
        QMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(r, c) = Rational(entry(rng), 1 + static_cast<long>(rng() % 3));
        auto basis = kernel(m);
        CHECK(basis.size() == cols - rank(m));
        for (auto &v : basis)
            for (std::size_t r = 0; r < rows; ++r) {
                Rational acc(0);
                for (std::size_t c = 0; c < cols; ++c) acc += m.at(r, c) * v[c];
                CHECK(acc == Rational(0));
            }
    }
}

}

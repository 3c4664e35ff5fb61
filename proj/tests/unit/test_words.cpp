#include "f2mzv/words.hpp"

#include <doctest.h>

#include <random>

using namespace f2mzv;

namespace {

Word W(std::initializer_list<Letter> ls) { return Word(ls); }
constexpr Letter L0 = Letter::Zero, L1 = Letter::One, Lm1 = Letter::MinusOne,
                 Li = Letter::I, Lmi = Letter::MinusI;

// Independent shuffle oracle: enumerate the C(r+s, r) position subsets
// directly instead of recursing.
WordCombo shuffle_oracle(const Word &a, const Word &b) {
    WordCombo out;
    std::size_t r = a.size(), s = b.size();
    std::vector<bool> pick(r + s, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
    std::sort(pick.begin(), pick.end());
    do {
        Word w(r + s, L0);
        std::size_t ia = 0, ib = 0;
        for (std::size_t p = 0; p < r + s; ++p)
            w[p] = pick[p] ? a[ia++] : b[ib++];
        out.add(w, GaussianRational(1));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

Word random_word(std::mt19937 &rng, int max_deg) {
    std::uniform_int_distribution<int> len(0, max_deg), let(0, 4);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto &a : w) a = static_cast<Letter>(let(rng));
    return w;
}

} // namespace

TEST_SUITE("words") {

TEST_CASE("letters") {
    CHECK(letter_str(Lmi) == "-i");
    CHECK(letter_parse("-1") == Lm1);
    CHECK_THROWS(letter_parse("2"));
    CHECK(letter_conj(Li) == Lmi);
    CHECK(letter_conj(L1) == L1);
    CHECK(letter_mul(Li, Li) == Lm1);
    CHECK(letter_mul(Lm1, L0) == L0);
    CHECK(letter_inverse(Li) == Lmi);
    CHECK_THROWS(letter_inverse(L0));
}

TEST_CASE("word text format") {
    CHECK(word_str(W({Li, L0, Lmi})) == "i 0 -i");
    CHECK(word_parse("i 0 -i") == W({Li, L0, Lmi}));
    CHECK(word_parse("(empty)").empty());
}

TEST_CASE("shuffle on single letters") {
    WordCombo got = shuffle(WordCombo::letter(Li), WordCombo::letter(L0));
    WordCombo want;
    want.add(W({Li, L0}), GaussianRational(1));
    want.add(W({L0, Li}), GaussianRational(1));
    CHECK(got == want);
}

TEST_CASE("e0 sh (e0 e1)") {
    WordCombo got = shuffle(WordCombo::letter(L0), WordCombo::monomial(W({L0, L1})));
    WordCombo want;
    want.add(W({L0, L0, L1}), GaussianRational(2));
    want.add(W({L0, L1, L0}), GaussianRational(1));
    CHECK(got == want);
    CHECK(got == shuffle_oracle(W({L0}), W({L0, L1})));
}

TEST_CASE("eta sh eta") {
    WordCombo eta = MacroLetter::eta().expansion();
    WordCombo got = shuffle(eta, eta);
    WordCombo want;
    want.add(W({Li, Li}), GaussianRational(2));
    want.add(W({Lmi, Lmi}), GaussianRational(2));
    want.add(W({Li, Lmi}), GaussianRational(-2));
    want.add(W({Lmi, Li}), GaussianRational(-2));
    CHECK(got == want);
}

TEST_CASE("shuffle matches the subset oracle on random words") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 40; ++t) {
        Word a = random_word(rng, 3), b = random_word(rng, 3);
        if (a.empty() && b.empty()) continue;
        CHECK(shuffle(WordCombo::monomial(a), WordCombo::monomial(b)) == shuffle_oracle(a, b));
    }
}

TEST_CASE("distinct letters give C(r+s, r) terms") {
    WordCombo got = shuffle(WordCombo::monomial(W({L0, L1})), WordCombo::monomial(W({Lm1, Li, Lmi})));
    CHECK(got.size() == 10);
}

TEST_CASE("homogeneous degrees add") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        Word a = random_word(rng, 3), b = random_word(rng, 3);
        WordCombo s = shuffle(WordCombo::monomial(a), WordCombo::monomial(b));
        CHECK(s.homogeneous(a.size() + b.size()));
    }
}

TEST_CASE("shuffle_power") {
    CHECK(shuffle_power(WordCombo::letter(L0), 2) ==
          WordCombo::monomial(W({L0, L0}), GaussianRational(2)));
    CHECK(shuffle_power(WordCombo::letter(L1), 3) ==
          WordCombo::monomial(W({L1, L1, L1}), GaussianRational(6)));
    SUBCASE("equals k! times the concatenation power for degree-1 combos") {
        WordCombo eta = MacroLetter::eta().expansion();
        WordCombo eta0 = MacroLetter::eta0().expansion();
        for (auto &w : {eta, eta0}) {
            GaussianRational fact(1);
            WordCombo cat = WordCombo::unit();
            for (unsigned k = 1; k <= 5; ++k) {
                fact *= GaussianRational(Rational(static_cast<long>(k)));
                cat = concat(cat, w);
                CHECK(shuffle_power(w, k) == cat * fact);
            }
        }
    }
    SUBCASE("rejects inhomogeneous input") {
        WordCombo bad = WordCombo::letter(L0) + WordCombo::monomial(W({L0, L1}));
        CHECK_THROWS(shuffle_power(bad, 2));
        CHECK_THROWS(shuffle_power(WordCombo::monomial(W({L0, L1})), 2));
    }
}

TEST_CASE("concat") {
    CHECK(concat(WordCombo::letter(Li), WordCombo::letter(L0)) == WordCombo::monomial(W({Li, L0})));
    WordCombo w = WordCombo::monomial(W({L1, L0}), GaussianRational(Rational(2, 3)));
    CHECK(concat(WordCombo::unit(), w) == w);
    CHECK(concat(w, WordCombo::unit()) == w);
    WordCombo eta = MacroLetter::eta().expansion();
    WordCombo want;
    want.add(W({Li, L0}), GaussianRational(1));
    want.add(W({Lmi, L0}), GaussianRational(-1));
    CHECK(concat(eta, WordCombo::letter(L0)) == want);
}

TEST_CASE("macro expansion") {
    WordCombo eta;
    eta.add(W({Li}), GaussianRational(1));
    eta.add(W({Lmi}), GaussianRational(-1));
    CHECK(expand_macros({MacroLetter::eta()}) == eta);

    WordCombo eta0;
    eta0.add(W({L0}), GaussianRational(1));
    eta0.add(W({Li}), GaussianRational(-1));
    eta0.add(W({Lmi}), GaussianRational(-1));
    CHECK(expand_macros({MacroLetter::eta0()}) == eta0);

    SUBCASE("eta1 eta0 expands bilinearly") {
        WordCombo got = expand_macros({MacroLetter::eta1(), MacroLetter::eta0()});
        WordCombo want = concat(MacroLetter::eta1().expansion(), MacroLetter::eta0().expansion());
        CHECK(got == want);
        // 3 x 3 distinct products, none cancelling
        CHECK(got.size() == 9);
        CHECK(got.coeff(W({L1, L0})) == GaussianRational(-2));
        CHECK(got.coeff(W({L1, Li})) == GaussianRational(2));
        CHECK(got.coeff(W({Li, Lmi})) == GaussianRational(-1));
    }
}

TEST_CASE("sigma conjugation") {
    CHECK(sigma_conjugate(WordCombo::letter(Li)) == WordCombo::letter(Lmi));
    WordCombo eta = MacroLetter::eta().expansion();
    CHECK(sigma_conjugate(eta) == eta * GaussianRational(-1));
    WordCombo eta0 = MacroLetter::eta0().expansion();
    CHECK(sigma_conjugate(eta0) == eta0);
    SUBCASE("involution and ring homomorphism") {
        std::mt19937 rng(8);
        for (int t = 0; t < 20; ++t) {
            WordCombo u = WordCombo::monomial(random_word(rng, 3), GaussianRational::i());
            WordCombo v = WordCombo::monomial(random_word(rng, 3));
            CHECK(sigma_conjugate(sigma_conjugate(u)) == u);
            CHECK(sigma_conjugate(shuffle(u, v)) == shuffle(sigma_conjugate(u), sigma_conjugate(v)));
            CHECK(sigma_conjugate(concat(u, v)) == concat(sigma_conjugate(u), sigma_conjugate(v)));
        }
    }
}

TEST_CASE("zero pruning and re-canonicalization") {
    WordCombo w;
    w.add(W({Li}), GaussianRational(1));
    w.add(W({Li}), GaussianRational(-1));
    CHECK(w.is_zero());
    WordCombo x = MacroLetter::eta().expansion() - MacroLetter::eta().expansion();
    CHECK(x.is_zero());
}

TEST_CASE("text round trip") {
    std::mt19937 rng(77);
    for (int t = 0; t < 20; ++t) {
        WordCombo w;
        w.add(random_word(rng, 4), GaussianRational(Rational(1, 3), Rational(-2)));
        w.add(random_word(rng, 4), GaussianRational(Rational(-5)));
        CHECK(WordCombo::parse(w.str()) == w);
    }
    CHECK(WordCombo::parse("0").is_zero());
    CHECK(WordCombo::parse(WordCombo::unit().str()) == WordCombo::unit());
}

TEST_CASE("macro word text") {
    MacroWord mw{MacroLetter::eta(), MacroLetter::eta0(), MacroLetter::concrete(Lm1)};
    CHECK(macro_word_str(mw) == "eta eta0 -1");
    CHECK(macro_word_parse("eta eta0 -1") == mw);
}

}

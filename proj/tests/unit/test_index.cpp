#include "f2mzv/index.hpp"

#include <doctest.h>

using namespace f2mzv;

namespace {
constexpr Letter L0 = Letter::Zero, L1 = Letter::One, Lm1 = Letter::MinusOne,
                 Li = Letter::I, Lmi = Letter::MinusI;

// kill the e_{+-i} letters; the all-w1 compiled word then lands on 2^d times
// the classical word (the double cover contributes a 2 per block)
WordCombo drop_imaginary(const WordCombo &w) {
    WordCombo out;
    for (auto &[word, c] : w.terms()) {
        bool keep = true;
        for (Letter a : word) keep = keep && a != Li && a != Lmi;
        if (keep) out.add(word, c);
    }
    return out;
}
} // namespace

TEST_SUITE("index") {

TEST_CASE("parse and print") {
    F2Index idx = F2Index::parse("zf2(3,1; w1,w)");
    CHECK(idx.k == std::vector<int>{3, 1});
    CHECK(idx.phi == std::vector<FormTag>{FormTag::W1, FormTag::W});
    CHECK(idx.str() == "zf2(3,1; w1,w)");
    CHECK(idx.weight() == 4);
    CHECK(idx.depth() == 2);
    CHECK(idx.len_omega() == 1);
    CHECK_THROWS_WITH_AS(F2Index::parse("zf2(1; q)"), doctest::Contains("bad form tag"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(F2Index::parse("zf2(x; w)"), doctest::Contains("bad weight entry"),
                         std::invalid_argument);
    CHECK_THROWS(F2Index::parse("zf(1; w)"));
    CHECK_THROWS(F2Index::parse("zf2(1,2)"));
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(F2Index({1}, {FormTag::W})));
    CHECK_FALSE(is_admissible(F2Index({1}, {FormTag::W1})));
    CHECK(is_admissible(F2Index({3, 1}, {FormTag::W, FormTag::W})));
    CHECK(is_admissible(F2Index({1, 2}, {FormTag::W, FormTag::W1})));
}

TEST_CASE("compile zf2(1; w)") {
    CompiledSymbol sym = compile(F2Index({1}, {FormTag::W}));
    CHECK(sym.tmpl == MacroWord{MacroLetter::eta()});
    CHECK(sym.word == MacroLetter::eta().expansion());
    CHECK(sym.prefactor == -GaussianRational::i());
}

TEST_CASE("compile zf2(2; w1)") {
    CompiledSymbol sym = compile(F2Index({2}, {FormTag::W1}));
    CHECK(sym.tmpl == MacroWord{MacroLetter::eta1(), MacroLetter::eta0()});
    CHECK(sym.word == expand_macros({MacroLetter::eta1(), MacroLetter::eta0()}));
    CHECK(sym.prefactor == GaussianRational(1));
}

TEST_CASE("compile zf2(1,1; w,w)") {
    CompiledSymbol sym = compile(F2Index({1, 1}, {FormTag::W, FormTag::W}));
    WordCombo eta = MacroLetter::eta().expansion();
    CHECK(sym.word == concat(eta, eta));
    CHECK(sym.prefactor == GaussianRational(-1));
}

TEST_CASE("divergent index is rejected with the condition named") {
    CHECK_THROWS_WITH_AS(compile(F2Index({2, 1}, {FormTag::W, FormTag::W1})),
                         doctest::Contains("diverges"), std::invalid_argument);
}

TEST_CASE("compiled degree equals the weight") {
    for (auto idx : {F2Index({1}, {FormTag::W}), F2Index({5, 3}, {FormTag::W1, FormTag::W}),
                     F2Index({2, 2, 2}, {FormTag::W, FormTag::W1, FormTag::W}),
                     F2Index({12}, {FormTag::W})})
        CHECK(compile(idx).word.homogeneous(static_cast<std::size_t>(idx.weight())));
}

TEST_CASE("classical words") {
    CHECK(compile_classical({2}, {L1}, 1) ==
          WordCombo::monomial(Word{L1, L0}, GaussianRational(-1)));
    CHECK(compile_classical({1}, {Lm1}, 2) ==
          WordCombo::monomial(Word{Lm1}, GaussianRational(-1)));
    CHECK(compile_classical({1}, {Li}, 4) ==
          WordCombo::monomial(Word{Lmi}, GaussianRational(-1)));
    // depth 2: letters are inverses of the running tail products
    CHECK(compile_classical({1, 2}, {Li, Li}, 4) ==
          WordCombo::monomial(Word{Lm1, Lmi, L0}, GaussianRational(1)));
    CHECK_THROWS(compile_classical({2}, {L1}, 3));
    CHECK_THROWS(compile_classical({2}, {Li}, 2));
    CHECK_THROWS(compile_classical({1}, {L1}, 1)); // divergent
}

TEST_CASE("sigma invariance of compiled symbols") {
    for (auto idx : {F2Index({1}, {FormTag::W}), F2Index({2}, {FormTag::W1}),
                     F2Index({1, 1}, {FormTag::W, FormTag::W}),
                     F2Index({3, 2}, {FormTag::W, FormTag::W1}),
                     F2Index({1, 1, 2}, {FormTag::W, FormTag::W1, FormTag::W})})
        CHECK(sigma_invariance_check(compile(idx)));
    SUBCASE("prefactor of the wrong parity fails") {
        // the word eta flips under sigma, so a real prefactor cannot balance it
        CompiledSymbol sym = compile(F2Index({1}, {FormTag::W}));
        sym.prefactor = GaussianRational(1);
        CHECK_FALSE(sigma_invariance_check(sym));
        // and a sigma-fixed word cannot carry an imaginary one
        CompiledSymbol sym2 = compile(F2Index({2}, {FormTag::W1}));
        sym2.prefactor = GaussianRational::i();
        CHECK_FALSE(sigma_invariance_check(sym2));
    }
}

TEST_CASE("all-w1 words project onto 2^d times the classical word") {
    for (auto &ks : std::vector<std::vector<int>>{{2}, {3}, {1, 2}, {2, 3}}) {
        F2Index idx(ks, std::vector<FormTag>(ks.size(), FormTag::W1));
        WordCombo projected = drop_imaginary(compile(idx).word);
        WordCombo classical = compile_classical(ks, std::vector<Letter>(ks.size(), L1), 1);
        GaussianRational two_pow_d(1);
        for (std::size_t j = 0; j < ks.size(); ++j) two_pow_d *= GaussianRational(2);
        CHECK(projected == classical * two_pow_d);
    }
}

}

#pragma once

#include "f2mzv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace f2mzv {

/// The five admissible integration points mu~_4 = mu_4 ∪ {0}, in canonical
/// order 0 < 1 < -1 < i < -i.
enum class Letter : int { Zero = 0, One = 1, MinusOne = 2, I = 3, MinusI = 4 };

std::string letter_str(Letter a);
Letter letter_parse(const std::string &s);
GaussianRational letter_value(Letter a);

/// Complex conjugation on mu~_4: swaps i and -i.
Letter letter_conj(Letter a);

/// Multiplication by a root of unity c in mu_4 (c != 0); fixes 0.
Letter letter_mul(Letter c, Letter a);
Letter letter_inverse(Letter c);

using Word = std::vector<Letter>;

/// Canonical term order: length first, then lexicographic in the letter order.
struct WordLess {
    bool operator()(const Word &a, const Word &b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

std::string word_str(const Word &w); // "i 0 -i"; empty word prints "(empty)"
Word word_parse(const std::string &s);

/// Finite Q(i)-linear combination of words; zero coefficients are never stored.
class WordCombo {
  public:
    using Terms = std::map<Word, GaussianRational, WordLess>;

    WordCombo() = default;
    static WordCombo unit() { return monomial(Word{}, GaussianRational(1)); }
    static WordCombo monomial(Word w, GaussianRational c = GaussianRational(1));
    static WordCombo letter(Letter a) { return monomial(Word{a}); }

    const Terms &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    GaussianRational coeff(const Word &w) const;

    /// True when every stored word has the same length d.
    bool homogeneous(std::size_t d) const;

    void add(const Word &w, const GaussianRational &c);
    WordCombo &operator+=(const WordCombo &o);
    WordCombo &operator-=(const WordCombo &o);
    friend WordCombo operator+(WordCombo a, const WordCombo &b) { return a += b; }
    friend WordCombo operator-(WordCombo a, const WordCombo &b) { return a -= b; }
    WordCombo operator*(const GaussianRational &c) const;
    friend bool operator==(const WordCombo &a, const WordCombo &b) { return a.t_ == b.t_; }

    std::string str() const;
    static WordCombo parse(const std::string &s);

  private:
    Terms t_;
};

/// Bilinear concatenation product.
WordCombo concat(const WordCombo &u, const WordCombo &v);

/// Bilinear shuffle product (sum over (r,s)-interleavings).
WordCombo shuffle(const WordCombo &u, const WordCombo &v);

/// w^{sh k} for w homogeneous of degree 1; equals k! times the k-th
/// concatenation power. Rejects inputs that are not degree-1 homogeneous.
WordCombo shuffle_power(const WordCombo &w, unsigned k);

/// Galois conjugation: swaps the letters i and -i and conjugates coefficients.
WordCombo sigma_conjugate(const WordCombo &u);

/// Macro letters: the degree-1 combinations eta = e_i - e_{-i},
/// eta0 = e_0 - e_i - e_{-i}, eta1 = -2e_1 + e_i + e_{-i}, or a plain letter.
struct MacroLetter {
    enum class Tag { Eta, Eta0, Eta1, Concrete } tag;
    Letter letter = Letter::Zero; // used when tag == Concrete

    static MacroLetter eta() { return {Tag::Eta}; }
    static MacroLetter eta0() { return {Tag::Eta0}; }
    static MacroLetter eta1() { return {Tag::Eta1}; }
    static MacroLetter concrete(Letter a) { return {Tag::Concrete, a}; }

    WordCombo expansion() const;
    /// Coefficient of e_a in the expansion.
    GaussianRational coeff_of(Letter a) const;

    friend bool operator==(const MacroLetter &x, const MacroLetter &y) {
        return x.tag == y.tag && (x.tag != Tag::Concrete || x.letter == y.letter);
    }
    friend bool operator<(const MacroLetter &x, const MacroLetter &y) {
        if (x.tag != y.tag) return x.tag < y.tag;
        if (x.tag != Tag::Concrete) return false;
        return x.letter < y.letter;
    }
};

using MacroWord = std::vector<MacroLetter>;

std::string macro_str(const MacroLetter &m);
std::string macro_word_str(const MacroWord &w);
MacroWord macro_word_parse(const std::string &s);

/// Substitute each macro by its defining degree-1 combination and concatenate.
WordCombo expand_macros(const MacroWord &tmpl);

/// Shuffle of plain macro sequences (each macro treated as a degree-1 letter).
std::map<MacroWord, GaussianRational> macro_shuffle(const MacroWord &a, const MacroWord &b);

} // namespace f2mzv

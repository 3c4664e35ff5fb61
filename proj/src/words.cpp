#include "f2mzv/words.hpp"

#include <sstream>

namespace f2mzv {

std::string letter_str(Letter a) {
    switch (a) {
    case Letter::Zero: return "0";
    case Letter::One: return "1";
    case Letter::MinusOne: return "-1";
    case Letter::I: return "i";
    default: return "-i";
    }
}

Letter letter_parse(const std::string &s) {
    if (s == "0") return Letter::Zero;
    if (s == "1") return Letter::One;
    if (s == "-1") return Letter::MinusOne;
    if (s == "i") return Letter::I;
    if (s == "-i") return Letter::MinusI;
    throw std::invalid_argument("letter_parse: '" + s + "' is not in {0, 1, -1, i, -i}");
}

GaussianRational letter_value(Letter a) {
    switch (a) {
    case Letter::Zero: return GaussianRational(0);
    case Letter::One: return GaussianRational(1);
    case Letter::MinusOne: return GaussianRational(-1);
    case Letter::I: return GaussianRational::i();
    default: return -GaussianRational::i();
    }
}

Letter letter_conj(Letter a) {
    if (a == Letter::I) return Letter::MinusI;
    if (a == Letter::MinusI) return Letter::I;
    return a;
}

Letter letter_mul(Letter c, Letter a) {
    if (c == Letter::Zero) throw std::invalid_argument("letter_mul: c must lie in mu_4");
    if (a == Letter::Zero) return Letter::Zero;
    GaussianRational v = letter_value(c) * letter_value(a);
    for (Letter x : {Letter::One, Letter::MinusOne, Letter::I, Letter::MinusI})
        if (letter_value(x) == v) return x;
    throw std::logic_error("letter_mul: product left mu_4");
}

Letter letter_inverse(Letter c) {
    switch (c) {
    case Letter::One: return Letter::One;
    case Letter::MinusOne: return Letter::MinusOne;
    case Letter::I: return Letter::MinusI;
    case Letter::MinusI: return Letter::I;
    default: throw std::invalid_argument("letter_inverse: 0 is not invertible");
    }
}

std::string word_str(const Word &w) {
    if (w.empty()) return "(empty)";
    std::string s;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j) s += ' ';
        s += letter_str(w[j]);
    }
    return s;
}

Word word_parse(const std::string &s) {
    Word w;
    if (s == "(empty)" || s.empty()) return w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) w.push_back(letter_parse(tok));
    return w;
}

WordCombo WordCombo::monomial(Word w, GaussianRational c) {
    WordCombo r;
    r.add(w, c);
    return r;
}

GaussianRational WordCombo::coeff(const Word &w) const {
    auto it = t_.find(w);
    return it == t_.end() ? GaussianRational(0) : it->second;
}

bool WordCombo::homogeneous(std::size_t d) const {
    for (auto &[w, c] : t_)
        if (w.size() != d) return false;
    return true;
}

void WordCombo::add(const Word &w, const GaussianRational &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

WordCombo &WordCombo::operator+=(const WordCombo &o) {
    for (auto &[w, c] : o.t_) add(w, c);
    return *this;
}

WordCombo &WordCombo::operator-=(const WordCombo &o) {
    for (auto &[w, c] : o.t_) add(w, -c);
    return *this;
}

WordCombo WordCombo::operator*(const GaussianRational &c) const {
    WordCombo r;
    if (c.is_zero()) return r;
    for (auto &[w, k] : t_) r.add(w, k * c);
    return r;
}

std::string WordCombo::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto &[w, c] : t_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ") " + word_str(w);
    }
    return s;
}

WordCombo WordCombo::parse(const std::string &s) {
    // format produced by str(): "(coeff) word + (coeff) word + ..." or "0"
    WordCombo r;
    if (s == "0") return r;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto open = s.find('(', pos);
        auto close = s.find(')', open);
        if (open == std::string::npos || close == std::string::npos)
            throw std::invalid_argument("WordCombo::parse: expected '(coeff) word' at '" + s.substr(pos) + "'");
        GaussianRational c = GaussianRational::parse(s.substr(open + 1, close - open - 1));
        auto next = s.find(" + ", close);
        std::string mono = s.substr(close + 1, (next == std::string::npos ? s.size() : next) - close - 1);
        while (!mono.empty() && mono.front() == ' ') mono.erase(mono.begin());
        while (!mono.empty() && mono.back() == ' ') mono.pop_back();
        r.add(word_parse(mono), c);
        pos = (next == std::string::npos) ? s.size() : next + 3;
    }
    return r;
}

WordCombo concat(const WordCombo &u, const WordCombo &v) {
    WordCombo r;
    for (auto &[wu, cu] : u.terms())
        for (auto &[wv, cv] : v.terms()) {
            Word w = wu;
            w.insert(w.end(), wv.begin(), wv.end());
            r.add(w, cu * cv);
        }
    return r;
}

namespace {

void shuffle_words(const Word &a, std::size_t ia, const Word &b, std::size_t ib,
                   Word &acc, const GaussianRational &c, WordCombo &out) {
    if (ia == a.size() && ib == b.size()) {
        out.add(acc, c);
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        shuffle_words(a, ia + 1, b, ib, acc, c, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        shuffle_words(a, ia, b, ib + 1, acc, c, out);
        acc.pop_back();
    }
}

} // namespace

WordCombo shuffle(const WordCombo &u, const WordCombo &v) {
    WordCombo r;
    for (auto &[wu, cu] : u.terms())
        for (auto &[wv, cv] : v.terms()) {
            Word acc;
            acc.reserve(wu.size() + wv.size());
            shuffle_words(wu, 0, wv, 0, acc, cu * cv, r);
        }
    return r;
}

WordCombo shuffle_power(const WordCombo &w, unsigned k) {
    if (!w.homogeneous(1))
        throw std::invalid_argument("shuffle_power: input must be homogeneous of degree 1");
    WordCombo r = WordCombo::unit();
    for (unsigned j = 0; j < k; ++j) r = shuffle(r, w);
    return r;
}

WordCombo sigma_conjugate(const WordCombo &u) {
    WordCombo r;
    for (auto &[w, c] : u.terms()) {
        Word s = w;
        for (auto &a : s) a = letter_conj(a);
        r.add(s, c.conj());
    }
    return r;
}

WordCombo MacroLetter::expansion() const {
    switch (tag) {
    case Tag::Eta: {
        WordCombo r = WordCombo::letter(Letter::I);
        r -= WordCombo::letter(Letter::MinusI);
        return r;
    }
    case Tag::Eta0: {
        WordCombo r = WordCombo::letter(Letter::Zero);
        r -= WordCombo::letter(Letter::I);
        r -= WordCombo::letter(Letter::MinusI);
        return r;
    }
    case Tag::Eta1: {
        WordCombo r = WordCombo::letter(Letter::One) * GaussianRational(-2);
        r += WordCombo::letter(Letter::I);
        r += WordCombo::letter(Letter::MinusI);
        return r;
    }
    default: return WordCombo::letter(letter);
    }
}

GaussianRational MacroLetter::coeff_of(Letter a) const {
    return expansion().coeff(Word{a});
}

std::string macro_str(const MacroLetter &m) {
    switch (m.tag) {
    case MacroLetter::Tag::Eta: return "eta";
    case MacroLetter::Tag::Eta0: return "eta0";
    case MacroLetter::Tag::Eta1: return "eta1";
    default: return letter_str(m.letter);
    }
}

std::string macro_word_str(const MacroWord &w) {
    if (w.empty()) return "(empty)";
    std::string s;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j) s += ' ';
        s += macro_str(w[j]);
    }
    return s;
}

MacroWord macro_word_parse(const std::string &s) {
    MacroWord w;
    if (s == "(empty)" || s.empty()) return w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "eta") w.push_back(MacroLetter::eta());
        else if (tok == "eta0") w.push_back(MacroLetter::eta0());
        else if (tok == "eta1") w.push_back(MacroLetter::eta1());
        else w.push_back(MacroLetter::concrete(letter_parse(tok)));
    }
    return w;
}

WordCombo expand_macros(const MacroWord &tmpl) {
    WordCombo r = WordCombo::unit();
    for (auto &m : tmpl) r = concat(r, m.expansion());
    return r;
}

namespace {

void shuffle_macro(const MacroWord &a, std::size_t ia, const MacroWord &b, std::size_t ib,
                   MacroWord &acc, std::map<MacroWord, GaussianRational> &out) {
    if (ia == a.size() && ib == b.size()) {
        auto [it, fresh] = out.emplace(acc, GaussianRational(1));
        if (!fresh) it->second += GaussianRational(1);
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        shuffle_macro(a, ia + 1, b, ib, acc, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        shuffle_macro(a, ia, b, ib + 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::map<MacroWord, GaussianRational> macro_shuffle(const MacroWord &a, const MacroWord &b) {
    std::map<MacroWord, GaussianRational> out;
    MacroWord acc;
    acc.reserve(a.size() + b.size());
    shuffle_macro(a, 0, b, 0, acc, out);
    return out;
}

} // namespace f2mzv

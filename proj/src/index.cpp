#include "f2mzv/index.hpp"

#include <sstream>

namespace f2mzv {

F2Index::F2Index(std::vector<int> kk, std::vector<FormTag> pp)
    : k(std::move(kk)), phi(std::move(pp)) {
    if (k.empty()) throw std::invalid_argument("F2Index: depth must be >= 1");
    if (k.size() != phi.size())
        throw std::invalid_argument("F2Index: k and phi must have equal length");
    for (int kj : k)
        if (kj < 1) throw std::invalid_argument("F2Index: entries of k must be >= 1");
}

int F2Index::weight() const {
    int w = 0;
    for (int kj : k) w += kj;
    return w;
}

int F2Index::len_omega() const {
    int l = 0;
    for (auto p : phi) l += (p == FormTag::W);
    return l;
}

std::string F2Index::str() const {
    std::string s = "zf2(";
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(k[j]);
    }
    s += "; ";
    for (std::size_t j = 0; j < phi.size(); ++j) {
        if (j) s += ',';
        s += (phi[j] == FormTag::W ? "w" : "w1");
    }
    return s + ")";
}

namespace {

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') { out.push_back(cur); cur.clear(); }
        else if (!isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    out.push_back(cur);
    return out;
}

} // namespace

F2Index F2Index::parse(const std::string &s) {
    auto open = s.find('(');
    auto close = s.rfind(')');
    auto head = s.substr(0, open == std::string::npos ? 0 : open);
    while (!head.empty() && isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
    if (open == std::string::npos || close == std::string::npos || head != "zf2")
        throw std::invalid_argument("F2Index::parse: expected zf2(k1,...,kd; p1,...,pd), got '" + s + "'");
    std::string body = s.substr(open + 1, close - open - 1);
    auto semi = body.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("F2Index::parse: missing ';' between k and phi in '" + s + "'");
    std::vector<int> k;
    for (auto &tok : split_commas(body.substr(0, semi))) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("F2Index::parse: bad weight entry '" + tok + "' (expected a positive integer)");
        k.push_back(std::stoi(tok));
    }
    std::vector<FormTag> phi;
    for (auto &tok : split_commas(body.substr(semi + 1))) {
        if (tok == "w") phi.push_back(FormTag::W);
        else if (tok == "w1") phi.push_back(FormTag::W1);
        else
            throw std::invalid_argument("F2Index::parse: bad form tag '" + tok + "' (expected w or w1)");
    }
    return F2Index(std::move(k), std::move(phi));
}

bool is_admissible(const F2Index &idx) {
    return idx.k.back() > 1 || idx.phi.back() == FormTag::W;
}

CompiledSymbol compile(const F2Index &idx) {
    if (!is_admissible(idx))
        throw std::invalid_argument(
            "compile: index " + idx.str() +
            " diverges (k_d = 1 and phi_d = w1; converges iff k_d > 1 or phi_d = w)");
    CompiledSymbol sym;
    for (std::size_t j = 0; j < idx.k.size(); ++j) {
        sym.tmpl.push_back(idx.phi[j] == FormTag::W ? MacroLetter::eta() : MacroLetter::eta1());
        for (int m = 1; m < idx.k[j]; ++m) sym.tmpl.push_back(MacroLetter::eta0());
    }
    sym.word = expand_macros(sym.tmpl);
    sym.prefactor = minus_i_pow(static_cast<unsigned long>(idx.len_omega()));
    return sym;
}

WordCombo compile_classical(const std::vector<int> &k, const std::vector<Letter> &eps, int level) {
    if (level != 1 && level != 2 && level != 4)
        throw std::invalid_argument("compile_classical: level must be 1, 2 or 4");
    if (k.empty() || k.size() != eps.size())
        throw std::invalid_argument("compile_classical: k and eps must be non-empty and equal length");
    for (Letter e : eps) {
        if (e == Letter::Zero) throw std::invalid_argument("compile_classical: eps entries lie in mu_N");
        if (level == 1 && e != Letter::One)
            throw std::invalid_argument("compile_classical: eps entries must be 1 at level 1");
        if (level == 2 && e != Letter::One && e != Letter::MinusOne)
            throw std::invalid_argument("compile_classical: eps entries must be +-1 at level 2");
    }
    if (k.back() < 2 && eps.back() == Letter::One)
        throw std::invalid_argument("compile_classical: divergent index (k_d = 1 with trivial tail twist)");

    Word w;
    for (std::size_t j = 0; j < k.size(); ++j) {
        Letter prod = Letter::One;
        for (std::size_t m = j; m < eps.size(); ++m) prod = letter_mul(prod, eps[m]);
        w.push_back(letter_inverse(prod));
        for (int m = 1; m < k[j]; ++m) w.push_back(Letter::Zero);
    }
    GaussianRational sign = (k.size() % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
    return WordCombo::monomial(std::move(w), sign);
}

bool sigma_invariance_check(const CompiledSymbol &sym) {
    WordCombo lhs = sigma_conjugate(sym.word) * sym.prefactor.conj();
    WordCombo rhs = sym.word * sym.prefactor;
    return lhs == rhs;
}

} // namespace f2mzv

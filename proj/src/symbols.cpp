#include "f2mzv/symbols.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace f2mzv {

std::string IISymbol::str() const {
    std::string s = (kind == Kind::M) ? "Im(" : "Ia(";
    s += letter_str(start) + "; " + (word.empty() ? "" : macro_word_str(word)) + "; " + letter_str(end) + ")";
    return s;
}

IISymbol IISymbol::parse(const std::string &s) {
    auto open = s.find('(');
    auto close = s.rfind(')');
    std::string head = s.substr(0, open == std::string::npos ? 0 : open);
    while (!head.empty() && isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
    while (!head.empty() && isspace(static_cast<unsigned char>(head.front()))) head.erase(head.begin());
    if (open == std::string::npos || close == std::string::npos || (head != "Im" && head != "Ia"))
        throw std::invalid_argument("IISymbol::parse: expected Im(p; word; q) or Ia(p; word; q), got '" + s + "'");
    std::string body = s.substr(open + 1, close - open - 1);
    auto s1 = body.find(';');
    auto s2 = body.rfind(';');
    if (s1 == std::string::npos || s2 == s1)
        throw std::invalid_argument("IISymbol::parse: expected two ';' separators in '" + s + "'");
    auto trim = [](std::string t) {
        while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        return t;
    };
    IISymbol sym;
    sym.kind = (head == "Im") ? Kind::M : Kind::A;
    sym.start = letter_parse(trim(body.substr(0, s1)));
    sym.word = macro_word_parse(trim(body.substr(s1 + 1, s2 - s1 - 1)));
    sym.end = letter_parse(trim(body.substr(s2 + 1)));
    return sym;
}

bool operator<(const IISymbol &a, const IISymbol &b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end < b.end;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
}

bool operator<(const TensorExpr::Key &a, const TensorExpr::Key &b) {
    if (!(a.right == b.right)) return a.right < b.right;
    return a.left < b.left;
}

void TensorExpr::add(std::vector<IISymbol> left, IISymbol right, const GaussianRational &c) {
    if (c.is_zero()) return;
    Key k{std::move(left), std::move(right)};
    auto [it, fresh] = t_.emplace(std::move(k), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TensorExpr &TensorExpr::operator+=(const TensorExpr &o) {
    for (auto &[k, c] : o.t_) add(k.left, k.right, c);
    return *this;
}

TensorExpr &TensorExpr::operator-=(const TensorExpr &o) {
    for (auto &[k, c] : o.t_) add(k.left, k.right, -c);
    return *this;
}

TensorExpr TensorExpr::operator*(const GaussianRational &c) const {
    TensorExpr r;
    if (c.is_zero()) return r;
    for (auto &[k, v] : t_) r.add(k.left, k.right, v * c);
    return r;
}

std::string TensorExpr::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto &[k, c] : t_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ") ";
        if (k.left.empty()) s += "1";
        for (std::size_t j = 0; j < k.left.size(); ++j) {
            if (j) s += " * ";
            s += k.left[j].str();
        }
        s += " (x) " + k.right.str();
    }
    return s;
}

namespace {

std::vector<Letter> all_letters() {
    return {Letter::Zero, Letter::One, Letter::MinusOne, Letter::I, Letter::MinusI};
}

IISymbol make_a(Letter p, MacroWord w, Letter q) {
    return IISymbol{IISymbol::Kind::A, p, std::move(w), q};
}

void chains(int k, int r, int next, std::vector<int> &cur,
            const std::function<void(const std::vector<int> &)> &emit) {
    if (static_cast<int>(cur.size()) == r) {
        emit(cur);
        return;
    }
    int need = r - static_cast<int>(cur.size());
    for (int j = next; j + need - 1 <= k; ++j) {
        cur.push_back(j);
        chains(k, r, j + 1, cur, emit);
        cur.pop_back();
    }
}

} // namespace

TensorExpr goncharov_coaction(const IISymbol &s, CoactionVariant variant) {
    for (auto &m : s.word)
        if (m.tag != MacroLetter::Tag::Concrete)
            throw std::invalid_argument("goncharov_coaction: concrete letters required; "
                                        "use coaction_on_word_combo for macro words");
    int k = s.degree();
    int r_lo = (variant == CoactionVariant::Full) ? 0 : (variant == CoactionVariant::Prime ? 0 : 1);
    int r_hi = (variant == CoactionVariant::Full) ? k : k - 1;

    auto letter_at = [&](int pos) { // 1-based word position; 0 = start, k+1 = end
        if (pos == 0) return s.start;
        if (pos == k + 1) return s.end;
        return s.word[static_cast<std::size_t>(pos) - 1].letter;
    };

    TensorExpr out;
    for (int r = std::max(r_lo, 0); r <= r_hi; ++r) {
        std::vector<int> cur;
        chains(k, r, 1, cur, [&](const std::vector<int> &js) {
            std::vector<IISymbol> left;
            std::vector<int> bounds;
            bounds.push_back(0);
            bounds.insert(bounds.end(), js.begin(), js.end());
            bounds.push_back(k + 1);
            for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
                MacroWord seg(s.word.begin() + bounds[t], s.word.begin() + bounds[t + 1] - 1);
                left.push_back(make_a(letter_at(bounds[t]), std::move(seg), letter_at(bounds[t + 1])));
            }
            MacroWord rw;
            for (int j : js) rw.push_back(s.word[static_cast<std::size_t>(j) - 1]);
            IISymbol right{s.kind, s.start, std::move(rw), s.end};
            out.add(std::move(left), std::move(right), GaussianRational(1));
        });
    }
    return out;
}

TensorExpr coaction_on_word_combo(Letter start, const MacroWord &tmpl, Letter end,
                                  IISymbol::Kind kind, CoactionVariant variant) {
    int k = static_cast<int>(tmpl.size());
    int r_lo = (variant == CoactionVariant::Tilde) ? 1 : 0;
    int r_hi = (variant == CoactionVariant::Full) ? k : k - 1;

    TensorExpr out;
    for (int r = r_lo; r <= r_hi; ++r) {
        std::vector<int> cur;
        chains(k, r, 1, cur, [&](const std::vector<int> &js) {
            // enumerate concrete letters at the chain slots
            std::vector<Letter> tuple(static_cast<std::size_t>(r));
            std::function<void(int, GaussianRational)> rec = [&](int s, GaussianRational coeff) {
                if (s == r) {
                    std::vector<IISymbol> left;
                    std::vector<int> bounds;
                    bounds.push_back(0);
                    bounds.insert(bounds.end(), js.begin(), js.end());
                    bounds.push_back(k + 1);
                    for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
                        Letter p = (bounds[t] == 0) ? start : tuple[t - 1];
                        Letter q = (bounds[t + 1] == k + 1) ? end : tuple[t];
                        MacroWord seg(tmpl.begin() + bounds[t], tmpl.begin() + bounds[t + 1] - 1);
                        left.push_back(make_a(p, std::move(seg), q));
                    }
                    MacroWord rw;
                    for (Letter a : tuple) rw.push_back(MacroLetter::concrete(a));
                    IISymbol right{kind, start, std::move(rw), end};
                    out.add(std::move(left), std::move(right), coeff);
                    return;
                }
                for (Letter a : all_letters()) {
                    GaussianRational c = tmpl[static_cast<std::size_t>(js[static_cast<std::size_t>(s)]) - 1].coeff_of(a);
                    if (c.is_zero()) continue;
                    tuple[static_cast<std::size_t>(s)] = a;
                    rec(s + 1, coeff * c);
                }
            };
            rec(0, GaussianRational(1));
        });
    }
    return out;
}

ScaledSymbol reverse(const IISymbol &s) {
    if (s.kind != IISymbol::Kind::A)
        throw std::invalid_argument("reverse: H-level symbols are bound to the straight path; "
                                    "reversal is available at the A-level only");
    IISymbol r = s;
    std::swap(r.start, r.end);
    std::reverse(r.word.begin(), r.word.end());
    GaussianRational sign(s.degree() % 2 == 0 ? 1 : -1);
    return {sign, std::move(r)};
}

ScaledSymbol substitute(const IISymbol &s, Letter c) {
    if (c == Letter::Zero) throw std::invalid_argument("substitute: c must lie in mu_4");
    GaussianRational coeff(1);
    IISymbol r = s;
    r.start = letter_mul(c, s.start);
    r.end = letter_mul(c, s.end);
    for (auto &m : r.word) {
        switch (m.tag) {
        case MacroLetter::Tag::Concrete:
            m.letter = letter_mul(c, m.letter);
            break;
        case MacroLetter::Tag::Eta0:
            if (c != Letter::One && c != Letter::MinusOne)
                throw std::invalid_argument("substitute: eta0 survives only c = +-1");
            break;
        case MacroLetter::Tag::Eta:
            if (c == Letter::MinusOne) coeff = -coeff;
            else if (c != Letter::One)
                throw std::invalid_argument("substitute: eta survives only c = +-1");
            break;
        case MacroLetter::Tag::Eta1:
            if (c != Letter::One)
                throw std::invalid_argument("substitute: eta1 survives only c = 1");
            break;
        }
    }
    return {coeff, std::move(r)};
}

ScaledSymbol sigma_symbol(const IISymbol &s) {
    GaussianRational coeff(1);
    IISymbol r = s;
    r.start = letter_conj(s.start);
    r.end = letter_conj(s.end);
    for (auto &m : r.word) {
        switch (m.tag) {
        case MacroLetter::Tag::Concrete: m.letter = letter_conj(m.letter); break;
        case MacroLetter::Tag::Eta: coeff = -coeff; break;
        default: break; // eta0, eta1 fixed
        }
    }
    return {coeff, std::move(r)};
}

TensorExpr sigma_tensor(const TensorExpr &e) {
    TensorExpr out;
    for (auto &[k, c] : e.terms()) {
        GaussianRational coeff = c.conj();
        std::vector<IISymbol> left;
        for (auto &f : k.left) {
            ScaledSymbol sf = sigma_symbol(f);
            coeff *= sf.coeff;
            left.push_back(std::move(sf.sym));
        }
        ScaledSymbol sr = sigma_symbol(k.right);
        coeff *= sr.coeff;
        out.add(std::move(left), std::move(sr.sym), coeff);
    }
    return out;
}

namespace {

bool word_is_eta0_power(const MacroWord &w) {
    for (auto &m : w)
        if (m.tag != MacroLetter::Tag::Eta0) return false;
    return true;
}

bool word_contains_eta1(const MacroWord &w) {
    for (auto &m : w)
        if (m.tag == MacroLetter::Tag::Eta1) return true;
    return false;
}

bool word_all_concrete(const MacroWord &w) {
    for (auto &m : w)
        if (m.tag != MacroLetter::Tag::Concrete) return false;
    return true;
}

bool in_set(Letter a, std::initializer_list<Letter> set) {
    for (Letter x : set)
        if (a == x) return true;
    return false;
}

// The enumerated zero axioms, checked literally (orbit closure is achieved
// by testing every orbit member against this list).
bool matches_zero_axiom(const IISymbol &s) {
    if (s.degree() == 0) return false;
    // MII(3): equal endpoints
    if (s.start == s.end) return true;
    // Lemma 3(1): Ia(-i; eta0^r; i)
    if (word_is_eta0_power(s.word) && s.start == Letter::MinusI && s.end == Letter::I) return true;
    // Lemma 3(2): Ia(+-i; eta0^r; 1)
    if (word_is_eta0_power(s.word) && in_set(s.start, {Letter::I, Letter::MinusI}) && s.end == Letter::One)
        return true;
    // MII(4): Im(0;0;1) = Im(0;1;1) = 0 and their A-level images
    if (s.degree() == 1 && s.word[0].tag == MacroLetter::Tag::Concrete &&
        s.start == Letter::Zero && s.end == Letter::One &&
        in_set(s.word[0].letter, {Letter::Zero, Letter::One}))
        return true;
    return false;
}

std::vector<ScaledSymbol> orbit(const IISymbol &s) {
    std::vector<ScaledSymbol> out;
    std::vector<Letter> subs;
    if (word_all_concrete(s.word))
        subs = {Letter::One, Letter::MinusOne, Letter::I, Letter::MinusI};
    else if (!word_contains_eta1(s.word))
        subs = {Letter::One, Letter::MinusOne};
    else
        subs = {Letter::One};
    for (Letter c : subs) {
        ScaledSymbol t = substitute(s, c);
        out.push_back(t);
        ScaledSymbol rev = reverse(t.sym);
        rev.coeff *= t.coeff;
        out.push_back(std::move(rev));
    }
    return out;
}

} // namespace

ScaledSymbol canonical_factor(const IISymbol &s) {
    if (s.kind != IISymbol::Kind::A)
        throw std::invalid_argument("canonical_factor: left factors are A-level");
    if (s.word.empty()) return {GaussianRational(1), s}; // unit, dropped by simplify
    if (s.start == s.end) return {GaussianRational(0), s};
    auto members = orbit(s);
    for (auto &m : members)
        if (matches_zero_axiom(m.sym)) return {GaussianRational(0), s};
    // lexicographically minimal representative; coeff carries the sign
    const ScaledSymbol *best = &members.front();
    for (auto &m : members)
        if (m.sym < best->sym) best = &m;
    // solve original = coeff * rep: substitution/reversal relations give
    // rep_member: s = member.coeff * member.sym, all coeffs are +-1
    return *best;
}

TensorExpr simplify(const TensorExpr &e) {
    TensorExpr out;
    for (auto &[key, c0] : e.terms()) {
        GaussianRational coeff = c0;
        std::vector<IISymbol> factors;
        bool dead = false;
        for (auto &f : key.left) {
            ScaledSymbol cf = canonical_factor(f);
            if (cf.coeff.is_zero()) { dead = true; break; }
            coeff *= cf.coeff;
            if (cf.sym.word.empty()) continue; // unit factor
            factors.push_back(std::move(cf.sym));
        }
        if (dead) continue;

        // merge same-endpoint factors through the shuffle relation; each merge
        // turns a product into a sum of single-symbol terms
        std::vector<std::pair<GaussianRational, std::vector<IISymbol>>> pending;
        pending.emplace_back(coeff, std::move(factors));
        while (!pending.empty()) {
            auto [c, fs] = std::move(pending.back());
            pending.pop_back();
            bool merged = false;
            for (std::size_t i = 0; !merged && i < fs.size(); ++i)
                for (std::size_t j = i + 1; !merged && j < fs.size(); ++j) {
                    if (fs[i].start == fs[j].start && fs[i].end == fs[j].end) {
                        auto mixed = macro_shuffle(fs[i].word, fs[j].word);
                        std::vector<IISymbol> rest;
                        for (std::size_t t = 0; t < fs.size(); ++t)
                            if (t != i && t != j) rest.push_back(fs[t]);
                        for (auto &[w, mult] : mixed) {
                            auto fs2 = rest;
                            ScaledSymbol cf = canonical_factor(make_a(fs[i].start, w, fs[i].end));
                            if (cf.coeff.is_zero()) continue;
                            fs2.push_back(cf.sym);
                            pending.emplace_back(c * mult * cf.coeff, std::move(fs2));
                        }
                        merged = true;
                    }
                }
            if (!merged) {
                std::sort(fs.begin(), fs.end());
                out.add(std::move(fs), key.right, c);
            }
        }
    }
    return out;
}

IISymbol telescope_collapse(const std::vector<std::vector<IISymbol>> &family,
                            const std::vector<Letter> &points) {
    if (family.empty() || points.size() < 2)
        throw std::invalid_argument("telescope_collapse: empty family");
    std::size_t r = points.size() - 1;
    long total = -1;
    std::map<std::vector<int>, int> seen;
    for (auto &prod : family) {
        if (prod.size() != r)
            throw std::invalid_argument("telescope_collapse: wrong number of segments");
        std::vector<int> comp;
        long m = 0;
        for (std::size_t s = 0; s < r; ++s) {
            const IISymbol &seg = prod[s];
            if (seg.kind != IISymbol::Kind::A || !word_is_eta0_power(seg.word) ||
                seg.start != points[s] || seg.end != points[s + 1])
                throw std::invalid_argument("telescope_collapse: segment " + seg.str() +
                                            " is not an eta0-power along the fixed points");
            comp.push_back(seg.degree());
            m += seg.degree();
        }
        if (total == -1) total = m;
        else if (total != m)
            throw std::invalid_argument("telescope_collapse: mixed total degrees");
        seen[comp] += 1;
    }
    // completeness: every composition of `total` into r parts, exactly once
    BigInt expected = binomial(static_cast<unsigned long>(total + r - 1),
                               static_cast<unsigned long>(r - 1));
    if (BigInt(static_cast<long>(family.size())) != expected)
        throw std::invalid_argument("telescope_collapse: family is incomplete");
    for (auto &[comp, count] : seen)
        if (count != 1) throw std::invalid_argument("telescope_collapse: repeated composition");

    MacroWord w(static_cast<std::size_t>(total), MacroLetter::eta0());
    return make_a(points.front(), std::move(w), points.back());
}

IISymbol u_symbol(int k) {
    MacroWord w{MacroLetter::eta()};
    for (int j = 1; j < k; ++j) w.push_back(MacroLetter::eta0());
    return IISymbol{IISymbol::Kind::M, Letter::Zero, std::move(w), Letter::One};
}

IISymbol v_symbol(int k) {
    MacroWord w{MacroLetter::eta()};
    for (int j = 1; j < k; ++j) w.push_back(MacroLetter::eta0());
    return IISymbol{IISymbol::Kind::A, Letter::Zero, std::move(w), Letter::I};
}

namespace {

// Right-hand side -sum_{r=1}^{k-1} v_{k-r} (x) u_r(q) with the right factor
// expanded into concrete words and the left factor canonicalized.
TensorExpr uv_target(int k, IISymbol::Kind kind, Letter q) {
    TensorExpr out;
    for (int r = 1; r <= k - 1; ++r) {
        ScaledSymbol vkr = canonical_factor(v_symbol(k - r));
        if (vkr.coeff.is_zero())
            throw std::logic_error("uv_target: v_{k-r} canonicalized to zero");
        MacroWord tmpl{MacroLetter::eta()};
        for (int j = 1; j < r; ++j) tmpl.push_back(MacroLetter::eta0());
        WordCombo expanded = expand_macros(tmpl);
        for (auto &[w, c] : expanded.terms()) {
            MacroWord rw;
            for (Letter a : w) rw.push_back(MacroLetter::concrete(a));
            IISymbol right{kind, Letter::Zero, std::move(rw), q};
            out.add({vkr.sym}, std::move(right), -(vkr.coeff * c));
        }
    }
    return out;
}

} // namespace

bool verify_coaction_uv(int k) {
    if (k < 1) throw std::invalid_argument("verify_coaction_uv: k must be >= 1");
    if (k > 7) throw std::invalid_argument("verify_coaction_uv: capped at k = 7");

    MacroWord tmpl{MacroLetter::eta()};
    for (int j = 1; j < k; ++j) tmpl.push_back(MacroLetter::eta0());

    for (auto [kind, q] : {std::pair{IISymbol::Kind::M, Letter::One},
                           std::pair{IISymbol::Kind::A, Letter::I}}) {
        TensorExpr raw = coaction_on_word_combo(Letter::Zero, tmpl, q, kind, CoactionVariant::Tilde);

        // group terms by (concrete right word, leading-segment degree j1-1);
        // within a group the eta0 segments range over all chain choices
        struct Group {
            GaussianRational coeff;
            bool first = true;
            IISymbol head;   // the s = 0 segment Ia(0; ...; a_1)
            std::vector<std::vector<IISymbol>> family;
            std::vector<Letter> points;
        };
        std::map<std::pair<MacroWord, int>, Group> groups;

        for (auto &[key, c] : raw.terms()) {
            if (key.left.empty()) throw std::logic_error("verify_coaction_uv: malformed term");
            const IISymbol &head = key.left.front();
            int j1 = head.degree() + 1;
            auto &g = groups[{key.right.word, j1}];
            if (g.first) {
                g.first = false;
                g.coeff = c;
                g.head = head;
                g.points.push_back(head.end);
                for (std::size_t t = 1; t < key.left.size(); ++t)
                    g.points.push_back(key.left[t].end);
            } else if (!(g.coeff == c)) {
                throw std::logic_error("verify_coaction_uv: non-constant coefficient within a chain family");
            }
            g.family.emplace_back(key.left.begin() + 1, key.left.end());
        }

        TensorExpr lhs;
        for (auto &[gk, g] : groups) {
            const auto &[rword, j1] = gk;
            IISymbol collapsed = telescope_collapse(g.family, g.points);
            IISymbol right{kind};
            right.start = Letter::Zero;
            right.word = rword;
            right.end = q;
            lhs.add({g.head, collapsed}, std::move(right), g.coeff);
        }
        lhs = simplify(lhs);

        TensorExpr rhs = simplify(uv_target(k, kind, q));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace f2mzv

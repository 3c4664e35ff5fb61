#include "f2mzv/checks.hpp"
#include "f2mzv/constants.hpp"
#include "f2mzv/depth1.hpp"
#include "f2mzv/json_io.hpp"
#include "f2mzv/quadrature.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

using namespace f2mzv;

namespace {

// "z(k1,...,kd)" or "zN(N; k1,...; eps1,...)" or "zf2(...)"
bool looks_like(const std::string &s, const std::string &head) {
    auto open = s.find('(');
    if (open == std::string::npos) return false;
    std::string h = s.substr(0, open);
    while (!h.empty() && isspace(static_cast<unsigned char>(h.back()))) h.pop_back();
    return h == head;
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') { out.push_back(cur); cur.clear(); }
        else if (!isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    out.push_back(cur);
    return out;
}

int cmd_eval(const std::string &index, long terms, double tol, bool use_oracle, bool as_json) {
    F2Index idx = F2Index::parse(index);
    EvalResult res;
    if (use_oracle) {
        res.value = quad_oracle(idx);
        res.error_estimate = 1e-8;
        res.terms_used = 0;
    } else {
        EvalOptions opt;
        opt.terms = terms;
        opt.tol = tol;
        res = eval_series(idx, opt);
    }
    if (as_json) {
        std::cout << to_json(res, idx.str()).dump() << "\n";
    } else {
        std::cout << idx.str() << " = " << std::setprecision(15) << res.value
                  << "   (error estimate " << std::setprecision(3) << res.error_estimate
                  << ", terms " << res.terms_used << ")\n";
    }
    return 0;
}

int cmd_compile(const std::string &index, bool as_json) {
    if (looks_like(index, "zf2")) {
        F2Index idx = F2Index::parse(index);
        CompiledSymbol sym = compile(idx);
        if (as_json) {
            json j = to_json(sym);
            j["index"] = idx.str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "index:     " << idx.str() << "\n"
                      << "template:  " << macro_word_str(sym.tmpl) << "\n"
                      << "prefactor: " << sym.prefactor.str() << "\n"
                      << "word:      " << sym.word.str() << "\n";
        }
        return 0;
    }
    // classical forms
    std::vector<int> k;
    std::vector<Letter> eps;
    int level = 1;
    auto open = index.find('('), close = index.rfind(')');
    if (open == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("compile: expected zf2(...), z(...) or zN(...), got '" + index + "'");
    std::string body = index.substr(open + 1, close - open - 1);
    if (looks_like(index, "z")) {
        for (auto &tok : split_list(body)) k.push_back(std::stoi(tok));
        eps.assign(k.size(), Letter::One);
    } else if (looks_like(index, "zN")) {
        auto s1 = body.find(';'), s2 = body.rfind(';');
        if (s1 == std::string::npos || s2 == s1)
            throw std::invalid_argument("compile: zN needs zN(N; k1,...; eps1,...)");
        level = std::stoi(body.substr(0, s1));
        for (auto &tok : split_list(body.substr(s1 + 1, s2 - s1 - 1))) k.push_back(std::stoi(tok));
        for (auto &tok : split_list(body.substr(s2 + 1))) eps.push_back(letter_parse(tok));
    } else {
        throw std::invalid_argument("compile: unknown index head in '" + index +
                                    "' (expected zf2, z or zN)");
    }
    WordCombo w = compile_classical(k, eps, level);
    if (as_json)
        std::cout << json{{"index", index}, {"word", to_json(w)}}.dump() << "\n";
    else
        std::cout << w.str() << "\n";
    return 0;
}

int cmd_check(const std::string &suite, int max_k, bool as_json) {
    std::vector<checks::CheckResult> results;
    if (suite == "all") results = checks::run_all();
    else if (suite == "depth1") results = checks::run_depth1(max_k);
    else throw std::invalid_argument("check: unknown suite '" + suite + "' (expected all or depth1)");

    int failures = 0;
    json arr = json::array();
    for (auto &r : results) {
        failures += r.pass ? 0 : 1;
        if (as_json)
            arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
    }
    if (as_json) std::cout << arr.dump() << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"f2mzv: exact and numeric engine for multiple zeta values on the degree-2 Fermat curve"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string index;
    long terms = 0;
    double tol = 0.0;
    bool use_oracle = false;
    auto *eval = app.add_subcommand("eval", "evaluate an index numerically");
    eval->add_option("index", index, "zf2(k1,...,kd; p1,...,pd) with p in {w1,w}")->required();
    eval->add_option("--terms", terms, "truncation order N");
    eval->add_option("--tol", tol, "grow N until the error estimate is below this");
    eval->add_flag("--oracle", use_oracle, "use the quadrature oracle instead of the series");

    std::string cindex;
    auto *comp = app.add_subcommand("compile", "compile an index to its level-4 word");
    comp->add_option("index", cindex, "zf2(...), z(k1,...) or zN(N; k...; eps...)")->required();

    std::string wa, wb;
    auto *shuf = app.add_subcommand("shuffle", "shuffle product of two words");
    shuf->add_option("a", wa, "first word, letters from {0,1,-1,i,-i} separated by spaces")->required();
    shuf->add_option("b", wb, "second word")->required();

    std::string umono, symtext;
    bool tilde = false;
    auto *coact = app.add_subcommand("coaction", "coaction of a U_4 element or a motivic symbol");
    coact->add_option("--u", umono, "U_4 element, e.g. 'f1 f2 t^2' or '(1/2) f1 + (1) t'");
    coact->add_option("--symbol", symtext, "iterated-integral symbol, e.g. 'Im(0; eta eta0; 1)'");
    coact->add_flag("--tilde", tilde, "reduced coaction Delta~ instead of Delta");

    int degree = 0, level = 4;
    bool sigma_inv = false;
    auto *basis = app.add_subcommand("basis", "graded basis of U_N");
    basis->add_option("--degree", degree, "degree k")->required();
    basis->add_option("--level", level, "level N in {1,2,4}");
    basis->add_flag("--sigma-invariant", sigma_inv, "sigma-invariant basis of U~_4 (level 4 only)");

    int max_k = 10;
    auto *dims = app.add_subcommand("dims", "dimension series");
    dims->add_option("--max", max_k, "largest weight");

    int cf_k = 1;
    auto *cform = app.add_subcommand("closed-form", "depth-one closed form");
    cform->add_option("k", cf_k, "weight k >= 1")->required();

    std::string suite = "all";
    int check_max = 8;
    auto *check = app.add_subcommand("check", "run verification suites");
    check->add_option("suite", suite, "all or depth1");
    check->add_option("--max", check_max, "depth1 suite cap");

    for (auto *sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);

        if (*eval) return cmd_eval(index, terms, tol, use_oracle, as_json);
        if (*comp) return cmd_compile(cindex, as_json);
        if (*shuf) {
            WordCombo r = shuffle(WordCombo::monomial(word_parse(wa)), WordCombo::monomial(word_parse(wb)));
            if (as_json) std::cout << to_json(r).dump() << "\n";
            else std::cout << r.str() << "\n";
            return 0;
        }
        if (*coact) {
            if (!umono.empty()) {
                UElement e = umono.find('(') != std::string::npos
                                 ? UElement::parse(umono)
                                 : UElement::monomial(FTauMonomial::parse(umono));
                UTensor t = tilde ? delta_tilde(e) : u_coaction(e);
                if (as_json) std::cout << to_json(t).dump() << "\n";
                else std::cout << t.str() << "\n";
                return 0;
            }
            if (!symtext.empty()) {
                IISymbol s = IISymbol::parse(symtext);
                bool concrete = true;
                for (auto &m : s.word) concrete = concrete && m.tag == MacroLetter::Tag::Concrete;
                CoactionVariant variant = tilde ? CoactionVariant::Tilde : CoactionVariant::Full;
                TensorExpr t = concrete ? goncharov_coaction(s, variant)
                                        : coaction_on_word_combo(s.start, s.word, s.end, s.kind, variant);
                t = simplify(t);
                if (as_json) std::cout << to_json(t).dump() << "\n";
                else std::cout << t.str() << "\n";
                return 0;
            }
            throw std::invalid_argument("coaction: pass --u or --symbol");
        }
        if (*basis) {
            if (sigma_inv) {
                json arr = json::array();
                for (auto &[m, eps] : sigma_invariant_basis(degree)) {
                    if (as_json) arr.push_back(json{{"monomial", m.str()}, {"eps", to_json(eps)}});
                    else std::cout << m.str() << "  (x)  " << eps.str() << "\n";
                }
                if (as_json) std::cout << arr.dump() << "\n";
            } else {
                json arr = json::array();
                for (auto &m : basis_enum(degree, level)) {
                    if (as_json) arr.push_back(m.str());
                    else std::cout << m.str() << "\n";
                }
                if (as_json) std::cout << arr.dump() << "\n";
            }
            return 0;
        }
        if (*dims) {
            auto inv = dim_series(max_k, DimSeriesKind::SigmaInvariant4);
            auto zag = dim_series(max_k, DimSeriesKind::ClassicalConjecture);
            if (as_json) {
                std::cout << json{{"sigma_invariant_4", inv},
                                  {"classical_conjectural", zag},
                                  {"note", "classical series 1/(1-t^2-t^3) is conjectural reference output only"}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "k    dim (U~_4)^sigma    classical d_k (conjectural, reference only)\n";
                for (int k = 0; k <= max_k; ++k)
                    std::cout << k << "    " << inv[static_cast<std::size_t>(k)] << "    "
                              << zag[static_cast<std::size_t>(k)] << "\n";
            }
            return 0;
        }
        if (*cform) {
            auto terms_list = closed_form_depth1(cf_k);
            double value = eval_explicit_depth1(cf_k);
            if (as_json) {
                json arr = json::array();
                for (auto &t : terms_list)
                    arr.push_back(json{{"coeff", t.coeff.str()}, {"l", t.index.str()}});
                std::cout << json{{"k", cf_k}, {"terms", arr}, {"value", value}}.dump() << "\n";
            } else {
                std::cout << "zeta_F2(" << cf_k << "; w) = ";
                bool first = true;
                for (auto &t : terms_list) {
                    if (!first) std::cout << " + ";
                    first = false;
                    std::cout << "(" << t.coeff.str() << ")*pi";
                    int l1 = t.index.at(1);
                    if (l1 > 0) std::cout << "*log2^" << l1;
                    for (int j = 2; j <= t.index.size(); ++j)
                        if (t.index.at(j) > 0) std::cout << "*zeta(" << j << ")^" << t.index.at(j);
                }
                std::cout << "\n          = " << std::setprecision(15) << value << "\n";
            }
            return 0;
        }
        if (*check) return cmd_check(suite, check_max, as_json);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include "f2mzv/json_io.hpp"

namespace f2mzv {

json to_json(const Rational &r) { return r.str(); }

json to_json(const GaussianRational &g) {
    return json{{"re", g.re.str()}, {"im", g.im.str()}};
}

json to_json(const WordCombo &w) {
    json arr = json::array();
    for (auto &[word, coeff] : w.terms())
        arr.push_back(json{{"coeff", to_json(coeff)}, {"word", word_str(word)}});
    return arr;
}

json to_json(const UElement &e) {
    json arr = json::array();
    for (auto &[m, coeff] : e.terms())
        arr.push_back(json{{"coeff", to_json(coeff)}, {"monomial", m.str()}});
    return arr;
}

json to_json(const UTensor &t) {
    json arr = json::array();
    for (auto &[k, coeff] : t.terms())
        arr.push_back(json{{"coeff", to_json(coeff)},
                           {"left", k.first.str()},
                           {"right", k.second.str()}});
    return arr;
}

json to_json(const TensorExpr &e) {
    json arr = json::array();
    for (auto &[k, coeff] : e.terms()) {
        json left = json::array();
        for (auto &f : k.left) left.push_back(f.str());
        arr.push_back(json{{"coeff", to_json(coeff)},
                           {"left", left},
                           {"right", k.right.str()}});
    }
    return arr;
}

json to_json(const EvalResult &r, const std::string &index) {
    return json{{"index", index},
                {"value", r.value},
                {"error_estimate", r.error_estimate},
                {"terms_used", r.terms_used}};
}

json to_json(const CompiledSymbol &sym) {
    return json{{"template", macro_word_str(sym.tmpl)},
                {"prefactor", to_json(sym.prefactor)},
                {"word", to_json(sym.word)},
                {"endpoints", json::array({"0", "1"})}};
}

} // namespace f2mzv

#pragma once

#include "f2mzv/depth1.hpp"
#include "f2mzv/index.hpp"
#include "f2mzv/series.hpp"
#include "f2mzv/symbols.hpp"
#include "f2mzv/u4.hpp"
#include "f2mzv/words.hpp"

#include <json.hpp>

namespace f2mzv {

using json = nlohmann::json;

json to_json(const Rational &r);
json to_json(const GaussianRational &g);        // {"re": "a/b", "im": "c/d"}
json to_json(const WordCombo &w);               // [{"coeff": ..., "word": "..."}]
json to_json(const UElement &e);
json to_json(const UTensor &t);
json to_json(const TensorExpr &e);
json to_json(const EvalResult &r, const std::string &index);
json to_json(const CompiledSymbol &sym);

} // namespace f2mzv

#include "f2mzv/constants.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace f2mzv {

double const_pi() { return std::numbers::pi; }

double const_log2() {
    // 2*atanh(1/3) = 2 * sum_{j>=0} (1/3)^{2j+1}/(2j+1)
    double sum = 0.0, term = 1.0 / 3.0;
    for (int j = 0; term > 1e-18; ++j) {
        sum += term / (2 * j + 1);
        term /= 9.0;
    }
    return 2.0 * sum;
}

double const_zeta(int k) {
    if (k < 2) throw std::invalid_argument("const_zeta: k must be >= 2");
    static std::map<int, double> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    long M = (k == 2) ? 2000000 : (k == 3) ? 200000 : 20000;
    double sum = 0.0, comp = 0.0;
    for (long n = M - 1; n >= 1; --n) { // ascending terms; Kahan for the big k=2 sum
        double t = std::pow(static_cast<double>(n), -k);
        double y = t - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    double Md = static_cast<double>(M);
    sum += std::pow(Md, 1 - k) / (k - 1) + 0.5 * std::pow(Md, -k);
    cache[k] = sum;
    return sum;
}

} // namespace f2mzv

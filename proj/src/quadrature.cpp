#include "f2mzv/quadrature.hpp"

#include "f2mzv/series.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace f2mzv {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
const double kron_x[8] = {0.0,
                          0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
                          0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
                          0.9914553711208126};
const double kron_w[8] = {0.2094821410847278,
                          0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
                          0.1406532597155259, 0.1047900103222502, 0.0630920926299786,
                          0.0229353220105292};
const double gauss_w[4] = {0.4179591836734694, 0.3818300505051189,
                           0.2797053914892767, 0.1294849661688697};

struct GK {
    double integral;
    double err;
    double fmax;
};

GK gk15(const std::function<double(double)> &f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double ik = kron_w[0] * fc;
    double ig = gauss_w[0] * fc;
    double fmax = std::fabs(fc);
    for (int j = 1; j < 8; ++j) {
        double fl = f(c - h * kron_x[j]);
        double fr = f(c + h * kron_x[j]);
        ik += kron_w[j] * (fl + fr);
        if (j % 2 == 0) ig += gauss_w[j / 2] * (fl + fr);
        fmax = std::max({fmax, std::fabs(fl), std::fabs(fr)});
    }
    return {ik * h, std::fabs(ik - ig) * h, fmax};
}

// Panel budget proportional to length, with a roundoff floor at the noise
// level of the sampled values so a Kronrod-Gauss difference made of pure
// rounding noise never triggers a split; near an integrable endpoint
// singularity the refinement tree degenerates to a linear chain that the
// depth cap cuts off at a negligible leftover.
void adapt(const std::function<double(double)> &f, double a, double b,
           double tol_per_len, int depth, double &acc) {
    GK r = gk15(f, a, b);
    double budget = tol_per_len * (b - a) + 4e-16 * (b - a) * r.fmax + 1e-300;
    if (r.err <= budget || depth <= 0) {
        acc += r.integral;
        return;
    }
    double c = 0.5 * (a + b);
    adapt(f, a, c, tol_per_len, depth - 1, acc);
    adapt(f, c, b, tol_per_len, depth - 1, acc);
}

} // namespace

double integrate(const std::function<double(double)> &f, double a, double b,
                 double tol, int max_depth) {
    if (a == b) return 0.0;
    double acc = 0.0;
    adapt(f, a, b, tol / std::fabs(b - a), max_depth, acc);
    return acc;
}

namespace {

constexpr double const_pi_half = 1.5707963267948966;

// Running antiderivative C(x) = int_0^x g: values are cached and a new point
// only costs the gap integral from its nearest cached neighbour, so the
// boundary-layer refinement near a singular endpoint is paid once, not per
// evaluation of the enclosing level.
class Cumulative {
  public:
    Cumulative(std::function<double(double)> g, double tol_per_len)
        : g_(std::move(g)), tol_per_len_(tol_per_len) {
        cache_[0.0] = 0.0;
    }

    double at(double x) {
        auto it = cache_.lower_bound(x);
        if (it != cache_.end() && it->first == x) return it->second;
        // nearest cached neighbour
        double p, vp;
        if (it == cache_.begin()) {
            p = it->first;
            vp = it->second;
        } else if (it == cache_.end()) {
            p = std::prev(it)->first;
            vp = std::prev(it)->second;
        } else {
            auto lo = std::prev(it);
            bool use_lo = (x - lo->first) <= (it->first - x);
            p = use_lo ? lo->first : it->first;
            vp = use_lo ? lo->second : it->second;
        }
        double gap = std::fabs(x - p);
        double v;
        if (x >= p)
            v = vp + integrate(g_, p, x, tol_per_len_ * gap);
        else
            v = vp - integrate(g_, x, p, tol_per_len_ * gap);
        cache_[x] = v;
        return v;
    }

  private:
    std::function<double(double)> g_;
    double tol_per_len_;
    std::map<double, double> cache_;
};

// F_m evaluated at points carried as (t, 1-t) so the x -> 1 boundary layer
// keeps full precision through the nesting.
using LevelFn = std::function<double(double, double)>;

double stable_asin(double t, double omt) {
    return std::atan2(t, std::sqrt(omt * (1.0 + t)));
}

// F_m(x) = iterated integral of forms[0..m) from 0 to x; forms[0] innermost.
// The innermost level has a closed antiderivative (arcsin x for w,
// -log(1-x) for w1; admissibility rules out w0 there). The w and w1 levels
// are integrated in substituted variables, t = sin(u) and t = 1 - e^{-u},
// which absorb their weights and stretch the x -> 1 boundary layer to a
// linear scale the cumulative cache refines once. The 1/t weight of a w0
// level is benign: every F_{m-1} vanishes at 0.
LevelFn build_level(const std::vector<StepForm> &forms, std::size_t m, double tol) {
    if (m == 1) {
        switch (forms[0]) {
        case StepForm::W: return [](double t, double omt) { return stable_asin(t, omt); };
        case StepForm::W1: return [](double, double omt) { return -std::log(omt); };
        default:
            throw std::logic_error("quad_oracle: w0 cannot be the innermost form");
        }
    }
    auto inner = build_level(forms, m - 1, tol * 0.2);
    StepForm f = forms[m - 1];
    switch (f) {
    case StepForm::W: {
        auto cum = std::make_shared<Cumulative>(
            [inner](double u) {
                double v = const_pi_half - u; // t = sin(u) = cos(v)
                double s = std::sin(0.5 * v);
                return inner(std::cos(v), 2.0 * s * s);
            },
            tol);
        return [cum](double t, double omt) { return cum->at(stable_asin(t, omt)); };
    }
    case StepForm::W1: {
        auto cum = std::make_shared<Cumulative>(
            [inner](double u) { return inner(-std::expm1(-u), std::exp(-u)); }, tol);
        return [cum](double, double omt) { return cum->at(-std::log(omt)); };
    }
    default: {
        auto cum = std::make_shared<Cumulative>(
            [inner](double t) { return inner(t, 1.0 - t) / t; }, tol);
        return [cum](double t, double) { return cum->at(t); };
    }
    }
}

} // namespace

double quad_oracle(const F2Index &idx) {
    if (!is_admissible(idx))
        throw std::invalid_argument("quad_oracle: divergent index " + idx.str());
    if (idx.depth() > 2 || idx.weight() > 4)
        throw std::invalid_argument("quad_oracle: restricted to depth <= 2 and weight <= 4");

    std::vector<StepForm> forms;
    for (std::size_t j = 0; j < idx.k.size(); ++j) {
        forms.push_back(idx.phi[j] == FormTag::W ? StepForm::W : StepForm::W1);
        for (int m = 1; m < idx.k[j]; ++m) forms.push_back(StepForm::W0);
    }
    return build_level(forms, forms.size(), 1e-9)(1.0, 0.0);
}

} // namespace f2mzv

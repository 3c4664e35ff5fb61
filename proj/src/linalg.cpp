#include "f2mzv/linalg.hpp"

namespace f2mzv {

namespace {

struct Echelon {
    std::vector<std::vector<BigInt>> rows;
    std::vector<std::size_t> pivot_col; // per elimination step
};

// Bareiss fraction-free elimination; rows scaled to integers first.
Echelon eliminate(const QMatrix &m) {
    std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
    for (std::size_t r = 0; r < nr; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < nc; ++c) l = lcm(l, m.at(r, c).den());
        for (std::size_t c = 0; c < nc; ++c)
            a[r][c] = m.at(r, c).num() * (l / m.at(r, c).den());
    }

    Echelon e;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t r = row + 1; r < nr; ++r) {
            for (std::size_t c = col + 1; c < nc; ++c)
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[row][col];
        e.pivot_col.push_back(col);
        ++row;
    }
    e.rows = std::move(a);
    return e;
}

} // namespace

std::size_t rank(const QMatrix &m) { return eliminate(m).pivot_col.size(); }

std::vector<std::vector<Rational>> kernel(const QMatrix &m) {
    Echelon e = eliminate(m);
    std::size_t nc = m.cols();
    std::size_t nr_used = e.pivot_col.size();

    std::vector<bool> is_pivot(nc, false);
    for (auto c : e.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_c = 0; free_c < nc; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(nc, Rational(0));
        v[free_c] = Rational(1);
        // back-substitute through the echelon rows
        for (std::size_t k = nr_used; k-- > 0;) {
            std::size_t pc = e.pivot_col[k];
            Rational acc(0);
            for (std::size_t c = pc + 1; c < nc; ++c)
                if (!v[c].is_zero()) acc += Rational(e.rows[k][c]) * v[c];
            v[pc] = -acc / Rational(e.rows[k][pc]);
        }
        // scale to a primitive integer vector, positive leading entry
        BigInt l = 1;
        for (auto &x : v) l = lcm(l, x.den());
        BigInt g = 0;
        for (auto &x : v) g = gcd(g, BigInt(x.num() * (l / x.den())));
        if (g == 0) g = 1;
        int lead = 0;
        for (auto &x : v)
            if (!x.is_zero()) { lead = x.sign(); break; }
        Rational scale = Rational(l, g) * Rational(lead < 0 ? -1 : 1);
        for (auto &x : v) x *= scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace f2mzv

#include "g2p/intquartic.hpp"

#include <algorithm>
#include <cmath>

#include "g2p/intutil.hpp"

namespace g2p {

BigInt IntQuartic::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (unsigned i = 5; i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly IntQuartic::mod_ell(u64 ell) const {
    const Fq& F = Fq::get(ell, 1);
    std::vector<FqElem> coeffs;
    coeffs.reserve(5);
    for (unsigned i = 0; i < 5; ++i) coeffs.push_back(F.from_base(mod_residue(c_[i], ell)));
    return Poly(F, std::move(coeffs));
}

namespace {

// Exact determinant of a small integer matrix by Bareiss elimination.
BigInt int_det(std::vector<std::vector<BigInt>> m) {
    size_t n = m.size();
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;  // exact by Bareiss
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

using Mat4 = std::array<std::array<BigInt, 4>, 4>;

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace

BigInt IntQuartic::discriminant() const {
    // disc = (-1)^(4*3/2) Res(P, P') / lc = Res(P, P') for a monic quartic,
    // via the 7x7 Sylvester matrix.
    std::array<BigInt, 4> d{c_[1], 2 * c_[2], 3 * c_[3], 4};  // P' coefficients c0..c3
    std::vector<std::vector<BigInt>> s(7, std::vector<BigInt>(7, 0));
    for (int row = 0; row < 3; ++row)
        for (int i = 0; i <= 4; ++i) s[row][row + (4 - i)] = c_[i];
    for (int row = 0; row < 4; ++row)
        for (int i = 0; i <= 3; ++i) s[3 + row][row + (3 - i)] = d[i];
    return int_det(std::move(s));
}

bool IntQuartic::irreducible_over_q() const {
    const BigInt& a0 = c_[0];
    if (a0 == 0) return false;
    // rational roots must be integers dividing a0
    std::vector<BigInt> divs;
    for (BigInt t = 1; t * t <= boost::multiprecision::abs(a0); ++t) {
        if (a0 % t == 0) {
            divs.push_back(t);
            divs.push_back(boost::multiprecision::abs(a0 / t));
        }
    }
    for (const BigInt& t : divs) {
        if (eval(t) == 0 || eval(-t) == 0) return false;
    }
    // monic quadratic factors X^2+aX+b times X^2+cX+d: bd = a0, a+c = c3,
    // b+d+ac = c2, ad+bc = c1
    for (const BigInt& babs : divs) {
        for (int sgn = -1; sgn <= 1; sgn += 2) {
            BigInt b = sgn * babs;
            if (b == 0 || a0 % b != 0) continue;
            BigInt dd = a0 / b;
            BigInt sum_ac = c_[3];
            BigInt prod_ac = c_[2] - b - dd;
            // a, c integer roots of t^2 - sum_ac t + prod_ac
            BigInt disc = sum_ac * sum_ac - 4 * prod_ac;
            BigInt root;
            if (!is_perfect_square(disc, root)) continue;
            for (int s2 = -1; s2 <= 1; s2 += 2) {
                BigInt twice_a = sum_ac + s2 * root;
                if (twice_a % 2 != 0) continue;
                BigInt a = twice_a / 2;
                BigInt cc = sum_ac - a;
                if (a * dd + b * cc == c_[1]) return false;
            }
        }
    }
    return true;
}

BigInt IntQuartic::companion_det_pow_minus_identity(unsigned d) const {
    Mat4 comp{};
    for (int i = 1; i < 4; ++i) comp[i][i - 1] = 1;
    for (int i = 0; i < 4; ++i) comp[i][3] = -c_[i];
    Mat4 acc{};
    for (int i = 0; i < 4; ++i) acc[i][i] = 1;
    Mat4 base = comp;
    unsigned e = d;
    while (e) {
        if (e & 1) acc = mat4_mul(acc, base);
        base = mat4_mul(base, base);
        e >>= 1;
    }
    std::vector<std::vector<BigInt>> m(4, std::vector<BigInt>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = acc[i][j] - (i == j ? 1 : 0);
    return int_det(std::move(m));
}

std::array<std::complex<double>, 4> IntQuartic::numeric_roots() const {
    using C = std::complex<double>;
    std::array<double, 5> cd{};
    for (unsigned i = 0; i < 5; ++i) cd[i] = c_[i].convert_to<double>();
    auto evalc = [&](C z) {
        C acc = 0;
        for (unsigned i = 5; i-- > 0;) acc = acc * z + cd[i];
        return acc;
    };
    std::array<C, 4> z;
    C seed(0.4, 0.9);
    z[0] = seed;
    for (int i = 1; i < 4; ++i) z[i] = z[i - 1] * seed;
    for (int iter = 0; iter < 500; ++iter) {
        double move = 0;
        for (int i = 0; i < 4; ++i) {
            C denom = 1;
            for (int j = 0; j < 4; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            C delta = evalc(z[i]) / denom;
            z[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14) break;
    }
    return z;
}

}  // namespace g2p

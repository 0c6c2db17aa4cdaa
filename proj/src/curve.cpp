#include "g2p/curve.hpp"

#include <cmath>

#include "g2p/intutil.hpp"

namespace g2p {

Poly HyperellipticCurve::h_in(const Fq& F) const {
    std::vector<FqElem> coeffs;
    coeffs.reserve(h.coeffs().size());
    for (const auto& a : h.coeffs()) coeffs.push_back(F.from_base(a.c[0]));
    return Poly(F, std::move(coeffs));
}

HyperellipticCurve build_curve(const std::vector<i64>& g_coeffs, const std::vector<i64>& h_coeffs,
                               u64 p) {
    if (p < 3 || !is_prime_u64(p)) fail_input("build_curve: p must be an odd prime");
    const Fq& F = Fq::get(p, 1);
    Poly g = Poly::from_base_coeffs_signed(F, g_coeffs);
    Poly h = Poly::from_base_coeffs_signed(F, h_coeffs);
    if (g.deg() > 3) fail_input("build_curve: deg g must be <= 3");
    if (h.deg() > 6) fail_input("build_curve: deg h must be <= 6");

    // complete the square: y^2 + g y = h  ->  Y^2 = h + g^2/4
    FqElem quarter = F.from_base(4).inv();
    Poly H = h + g * g * quarter;

    if (H.deg() < 5) fail_input("WrongGenus: completed square has degree < 5");
    if (!Poly::gcd(H, H.derivative()).is_one())
        fail_input("SingularCurve: completed square is not squarefree");

    if (H.deg() == 6) {
        // need a rational Weierstrass point: a root of H, moved to infinity by
        // x -> x0 + 1/u, y -> w/u^3, giving w^2 = sum_{i>=1} a_i u^(6-i)
        bool found = false;
        FqElem x0 = F.zero();
        for (u64 idx = 0; idx < p; ++idx) {
            FqElem cand = F.from_index(idx);
            if (H.eval(cand).is_zero()) {
                x0 = cand;
                found = true;
                break;
            }
        }
        if (!found) fail_input("NoDegree5Model: degree-6 model without rational Weierstrass point");
        Poly shifted = H.shift_x(x0);  // H(x0 + z) = sum a_i z^i, a_0 = 0
        require_internal(shifted.coeff(0).is_zero(), "build_curve: shift lost the root");
        std::vector<FqElem> tilde(6, F.zero());
        for (int i = 1; i <= 6; ++i) tilde[6 - i] = shifted.coeff(i);
        H = Poly(F, std::move(tilde));
        if (H.deg() != 5) fail_input("SingularCurve: transformed model degenerates");
    }

    // normalize to monic: x -> x/c, y -> y/c^2 turns lc c into 1
    if (!H.is_monic()) {
        FqElem c = H.lc();
        std::vector<FqElem> scaled(6, F.zero());
        FqElem cp = F.one();
        // coefficient of X^i picks up c^(4-i); build down from i = 4 using powers of c
        for (int i = 5; i >= 0; --i) {
            int e = 4 - i;
            FqElem factor = e >= 0 ? F.pow(c, (u64)e) : F.inv(F.pow(c, (u64)(-e)));
            scaled[i] = H.coeff(i) * factor;
        }
        (void)cp;
        H = Poly(F, std::move(scaled));
        require_internal(H.is_monic() && H.deg() == 5, "build_curve: monic normalization failed");
    }

    if (!Poly::gcd(H, H.derivative()).is_one())
        fail_input("SingularCurve: normalized model is not squarefree");

    HyperellipticCurve curve;
    curve.p = p;
    curve.h = H;
    curve.orig_g = g;
    curve.orig_h = h;
    return curve;
}

u64 count_points(const HyperellipticCurve& curve, unsigned d, u64 point_cap) {
    const Fq& F = Fq::get(curve.p, d);
    if (!F.size_fits_u64() || F.size_u64() > point_cap)
        fail_budget("FieldTooLarge: point counting cap exceeded");
    u64 n = F.size_u64();
    Poly h = curve.h_in(F);
    BigInt half = (F.size() - 1) / 2;
    u64 count = 1;  // the point at infinity
    for (u64 idx = 0; idx < n; ++idx) {
        FqElem z = h.eval(F.from_index(idx));
        if (z.is_zero()) {
            count += 1;
        } else if (F.pow(z, half) == F.one()) {
            count += 2;
        }
    }
    return count;
}

FrobeniusProfile frobenius_profile(const HyperellipticCurve& curve, u64 point_cap) {
    FrobeniusProfile prof;
    prof.q = curve.p;
    prof.n1 = count_points(curve, 1, point_cap);
    prof.n2 = count_points(curve, 2, point_cap);
    i64 q = (i64)curve.p;
    prof.s1 = q + 1 - (i64)prof.n1;
    i64 num = (i64)prof.n2 - q * q - 1 + prof.s1 * prof.s1;
    require_internal(num % 2 == 0, "frobenius_profile: s2 is not integral");
    prof.s2 = num / 2;

    double rq = std::sqrt((double)q);
    require_internal(std::abs((double)prof.s1) <= 4 * rq + 1e-9, "frobenius_profile: Weil bound on s1 fails");
    require_internal(std::abs((double)prof.s2) <= 6 * (double)q + 1e-9,
                     "frobenius_profile: Weil bound on s2 fails");

    prof.P = IntQuartic::weil(prof.s1, prof.s2, q);

    // all roots must have |w| = sqrt(q): P factors over R as
    // (X^2 - t1 X + q)(X^2 - t2 X + q) with t real and t^2 <= 4q
    double disc_t = (double)(prof.s1 * prof.s1) - 4.0 * ((double)prof.s2 - 2.0 * q);
    require_internal(disc_t >= -1e-6, "frobenius_profile: real quadratic split fails");
    double sd = std::sqrt(std::max(0.0, disc_t));
    for (double t : {((double)prof.s1 + sd) / 2, ((double)prof.s1 - sd) / 2})
        require_internal(t * t <= 4.0 * q + 1e-6, "frobenius_profile: root magnitude differs from sqrt(q)");

    BigInt order1 = prof.jacobian_order(1);
    require_internal(order1 == prof.P.eval(1), "frobenius_profile: |J(F_q)| != P(1)");
    require_internal(order1 >= 1, "frobenius_profile: group order must be positive");
    return prof;
}

}  // namespace g2p

#pragma once

#include <map>

#include "g2p/intquartic.hpp"
#include "g2p/poly.hpp"

namespace g2p {

// Genus-2 hyperelliptic curve over a prime field F_q (q = p odd), stored in
// the imaginary odd-characteristic model y^2 = h(x) with h monic of degree 5
// and squarefree. Inputs in the general form y^2 + g(x) y = h(x) are
// normalized by completing the square; degree-6 right-hand sides are moved to
// a degree-5 model through a rational Weierstrass point when one exists.
struct HyperellipticCurve {
    u64 p = 0;
    Poly h;       // internal model, monic, deg 5, squarefree, over Fq::get(p, 1)
    Poly orig_g;  // inputs as supplied
    Poly orig_h;

    const Fq& base_field() const { return Fq::get(p, 1); }
    // h with coefficients lifted into an extension of the base field.
    Poly h_in(const Fq& F) const;
};

HyperellipticCurve build_curve(const std::vector<i64>& g_coeffs, const std::vector<i64>& h_coeffs,
                               u64 p);

// #C(F_{q^d}) including the single point at infinity, by exhaustive x-scan
// with the quadratic-character test on h(x). Requires q^d <= point_cap.
u64 count_points(const HyperellipticCurve& curve, unsigned d, u64 point_cap = 1'000'000);

// Characteristic polynomial of Frobenius and derived Jacobian orders.
struct FrobeniusProfile {
    u64 q = 0;
    i64 s1 = 0;
    i64 s2 = 0;
    u64 n1 = 0;
    u64 n2 = 0;
    IntQuartic P;  // X^4 - s1 X^3 + s2 X^2 - s1 q X + q^2

    // |J(F_{q^d})| = det(C_P^d - I) over exact integers.
    BigInt jacobian_order(unsigned d) const { return P.companion_det_pow_minus_identity(d); }
    BigInt discriminant() const { return P.discriminant(); }
    bool p_irreducible_over_q() const { return P.irreducible_over_q(); }
};

FrobeniusProfile frobenius_profile(const HyperellipticCurve& curve, u64 point_cap = 1'000'000);

}  // namespace g2p

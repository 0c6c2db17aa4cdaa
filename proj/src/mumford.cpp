#include "g2p/mumford.hpp"

#include <algorithm>

namespace g2p {

bool MumfordDivisor::valid() const {
    if (!u.is_monic() || u.deg() > 2 || u.deg() < 0) return false;
    if (!v.is_zero() && v.deg() >= u.deg()) return false;
    const Fq& F = field();
    Poly h = curve->h_in(F);
    return ((v * v - h) % u).is_zero();
}

std::vector<u64> MumfordDivisor::key() const {
    const Fq& F = field();
    std::vector<u64> k;
    k.reserve(2 + (u.deg() + v.deg() + 2) * F.degree());
    k.push_back((u64)u.deg());
    for (int i = 0; i <= u.deg(); ++i)
        for (u64 x : u.coeff(i).c) k.push_back(x);
    k.push_back((u64)(v.deg() + 1));
    for (int i = 0; i <= v.deg(); ++i)
        for (u64 x : v.coeff(i).c) k.push_back(x);
    return k;
}

MumfordDivisor divisor_identity(const HyperellipticCurve& curve, const Fq& F) {
    return MumfordDivisor{&curve, Poly::one(F), Poly::zero(F)};
}

MumfordDivisor divisor_of_point(const HyperellipticCurve& curve, const FqElem& x0,
                                const FqElem& y0) {
    const Fq& F = *x0.F;
    Poly u(F, {-x0, F.one()});
    Poly v = Poly::constant(y0);
    MumfordDivisor d{&curve, u, v};
    require_internal(d.valid(), "divisor_of_point: point not on curve");
    return d;
}

MumfordDivisor cantor_add(const MumfordDivisor& a, const MumfordDivisor& b, CantorTrace* trace) {
    require_internal(a.curve == b.curve && &a.field() == &b.field(),
                     "cantor_add: operands from different groups");
    const Fq& F = a.field();
    Poly h = a.curve->h_in(F);

    // composition
    Poly d1, e1, e2;
    Poly::xgcd(a.u, b.u, d1, e1, e2);
    Poly d, c1, c2;
    Poly::xgcd(d1, a.v + b.v, d, c1, c2);
    // d = (c1 e1) u1 + (c1 e2) u2 + c2 (v1 + v2), monic
    Poly u = (a.u * b.u) / (d * d);
    Poly v_num = c1 * (e1 * a.u * b.v + e2 * b.u * a.v) + c2 * (a.v * b.v + h);
    Poly v = (v_num / d) % u;
    if (trace && d.deg() > 0) trace->on_compose_gcd(d);

    // reduction
    while (u.deg() > 2) {
        Poly u_next = ((h - v * v) / u).monic();
        Poly v_next = (-v) % u_next;
        if (trace) trace->on_reduce(v, u_next);
        u = std::move(u_next);
        v = std::move(v_next);
    }
    return MumfordDivisor{a.curve, u, v};
}

MumfordDivisor divisor_negate(const MumfordDivisor& a) {
    return MumfordDivisor{a.curve, a.u, -a.v};
}

MumfordDivisor scalar_mul(const BigInt& n, const MumfordDivisor& a) {
    if (n < 0) return scalar_mul(BigInt(-n), divisor_negate(a));
    MumfordDivisor acc = divisor_identity(*a.curve, a.field());
    MumfordDivisor base = a;
    BigInt m = n;
    while (m > 0) {
        if (boost::multiprecision::bit_test(m, 0)) acc = cantor_add(acc, base);
        m >>= 1;
        if (m > 0) base = cantor_add(base, base);
    }
    return acc;
}

MumfordDivisor divisor_frobenius(const MumfordDivisor& a) {
    const Fq& F = a.field();
    auto map_poly = [&](const Poly& f) {
        std::vector<FqElem> coeffs;
        coeffs.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) coeffs.push_back(F.frobenius(c, 1));
        return Poly(F, std::move(coeffs));
    };
    MumfordDivisor out{a.curve, map_poly(a.u), map_poly(a.v)};
    return out;
}

FqElem random_subfield_element(const Fq& F, unsigned subdeg, Rng& rng) {
    FqElem w = F.random(rng);
    if (subdeg == F.degree()) return w;
    return F.subfield_trace(w, subdeg);
}

namespace {

// A random affine point with coordinates in the degree-subdeg subfield.
bool random_affine_point(const HyperellipticCurve& curve, const Fq& F, unsigned subdeg, Rng& rng,
                         FqElem& x, FqElem& y) {
    Poly h = curve.h_in(F);
    BigInt sub_size = 1;
    for (unsigned i = 0; i < subdeg; ++i) sub_size *= F.p();
    BigInt half = (sub_size - 1) / 2;
    for (int tries = 0; tries < 128; ++tries) {
        FqElem cand = random_subfield_element(F, subdeg, rng);
        FqElem z = h.eval(cand);
        if (z.is_zero()) {
            x = cand;
            y = F.zero();
            return true;
        }
        // subfield quadratic character; an ambient square root of a subfield
        // square is automatically a subfield element
        if (F.pow(z, half) == F.one()) {
            x = cand;
            y = F.sqrt(z);
            if (rng.bit()) y = -y;
            return true;
        }
    }
    return false;
}

}  // namespace

MumfordDivisor random_divisor(const HyperellipticCurve& curve, const Fq& F, unsigned subdeg,
                              Rng& rng) {
    FqElem x1, y1, x2, y2;
    if (!random_affine_point(curve, F, subdeg, rng, x1, y1) ||
        !random_affine_point(curve, F, subdeg, rng, x2, y2))
        fail_internal("random_divisor: could not sample affine points");
    MumfordDivisor d1 = divisor_of_point(curve, x1, y1);
    MumfordDivisor d2 = divisor_of_point(curve, x2, y2);
    return cantor_add(d1, d2);
}

bool divisor_in_subfield(const MumfordDivisor& a, unsigned subdeg) {
    const Fq& F = a.field();
    for (const auto& c : a.u.coeffs())
        if (!F.in_subfield(c, subdeg)) return false;
    for (const auto& c : a.v.coeffs())
        if (!F.in_subfield(c, subdeg)) return false;
    return true;
}

std::vector<MumfordDivisor> enumerate_divisor_classes(const HyperellipticCurve& curve,
                                                      const Fq& F) {
    if (!F.size_fits_u64() || F.size_u64() > 64)
        fail_budget("enumerate_divisor_classes: field too large");
    u64 n = F.size_u64();
    Poly h = curve.h_in(F);
    std::vector<MumfordDivisor> out;
    out.push_back(divisor_identity(curve, F));
    // deg u = 1: u = x - x0, v = y0 with y0^2 = h(x0)
    for (u64 i = 0; i < n; ++i) {
        FqElem x0 = F.from_index(i);
        FqElem z = h.eval(x0);
        for (u64 j = 0; j < n; ++j) {
            FqElem y0 = F.from_index(j);
            if (y0 * y0 == z) out.push_back(divisor_of_point(curve, x0, y0));
        }
    }
    // deg u = 2: u = x^2 + u1 x + u0, v = v1 x + v0, u | v^2 - h
    for (u64 u1 = 0; u1 < n; ++u1)
        for (u64 u0 = 0; u0 < n; ++u0) {
            Poly u(F, {F.from_index(u0), F.from_index(u1), F.one()});
            for (u64 v1 = 0; v1 < n; ++v1)
                for (u64 v0 = 0; v0 < n; ++v0) {
                    Poly v(F, {F.from_index(v0), F.from_index(v1)});
                    if (((v * v - h) % u).is_zero()) out.push_back(MumfordDivisor{&curve, u, v});
                }
        }
    return out;
}

}  // namespace g2p

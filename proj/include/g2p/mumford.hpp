#pragma once

#include <vector>

#include "g2p/curve.hpp"
#include "g2p/rng.hpp"

namespace g2p {

// Reduced divisor class in Mumford representation: u monic with deg u <= 2,
// deg v < deg u, and u | v^2 - h over the divisor's field of definition.
// The identity is (1, 0). Equality of classes is equality of reduced pairs.
struct MumfordDivisor {
    const HyperellipticCurve* curve = nullptr;
    Poly u, v;

    const Fq& field() const { return u.field(); }
    bool is_identity() const { return u.deg() == 0; }
    bool operator==(const MumfordDivisor& o) const {
        return curve == o.curve && u == o.u && v == o.v;
    }
    bool operator!=(const MumfordDivisor& o) const { return !(*this == o); }

    // Mumford condition; cheap enough to assert in tests.
    bool valid() const;
    // Canonical byte key for hash maps over divisors.
    std::vector<u64> key() const;
};

MumfordDivisor divisor_identity(const HyperellipticCurve& curve, const Fq& F);
// Divisor of a single affine point (x - x0, y0).
MumfordDivisor divisor_of_point(const HyperellipticCurve& curve, const FqElem& x0,
                                const FqElem& y0);

// Multiplicative bookkeeping hooks for one Cantor addition. The group law
// factors as: class(D1) + class(D2) = class(D3) + div(d(x)) + sum over
// reduction rounds of div((y - v)/u'), so a Miller loop can evaluate the
// intermediate functions at fixed divisors while the addition runs.
struct CantorTrace {
    virtual ~CantorTrace() = default;
    virtual void on_compose_gcd(const Poly& d) = 0;
    virtual void on_reduce(const Poly& v_before, const Poly& u_after) = 0;
};

MumfordDivisor cantor_add(const MumfordDivisor& a, const MumfordDivisor& b,
                          CantorTrace* trace = nullptr);
MumfordDivisor divisor_negate(const MumfordDivisor& a);
MumfordDivisor scalar_mul(const BigInt& n, const MumfordDivisor& a);

// Coefficient-wise q-power Frobenius; reduction is Frobenius-equivariant, so
// the image of a reduced divisor is reduced.
MumfordDivisor divisor_frobenius(const MumfordDivisor& a);

// Random point / divisor over the degree-subdeg subfield of F (subdeg
// divides F.degree()); coefficients are represented inside F. The
// distribution is generating rather than uniform: the class is the reduced
// sum of two random affine points minus twice infinity.
FqElem random_subfield_element(const Fq& F, unsigned subdeg, Rng& rng);
MumfordDivisor random_divisor(const HyperellipticCurve& curve, const Fq& F, unsigned subdeg,
                              Rng& rng);

bool divisor_in_subfield(const MumfordDivisor& a, unsigned subdeg);

// Every reduced pair (u, v) over F with u | v^2 - h; feasible only for tiny
// fields (enumeration cost ~ |F|^3).
std::vector<MumfordDivisor> enumerate_divisor_classes(const HyperellipticCurve& curve, const Fq& F);

}  // namespace g2p

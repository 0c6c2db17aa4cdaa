#include "g2p/poly.hpp"

#include <algorithm>

namespace g2p {

Poly Poly::constant(FqElem a) {
    Poly r(*a.F);
    if (!a.is_zero()) r.c_.push_back(std::move(a));
    return r;
}

Poly Poly::x(const Fq& F) {
    Poly r(F);
    r.c_ = {F.zero(), F.one()};
    return r;
}

Poly Poly::from_base_coeffs(const Fq& F, const std::vector<u64>& coeffs) {
    Poly r(F);
    r.c_.reserve(coeffs.size());
    for (u64 a : coeffs) r.c_.push_back(F.from_base(a));
    r.trim();
    return r;
}

Poly Poly::from_base_coeffs_signed(const Fq& F, const std::vector<i64>& coeffs) {
    Poly r(F);
    r.c_.reserve(coeffs.size());
    u64 p = F.p();
    for (i64 a : coeffs) {
        i64 m = a % (i64)p;
        if (m < 0) m += (i64)p;
        r.c_.push_back(F.from_base((u64)m));
    }
    r.trim();
    return r;
}

const FqElem& Poly::lc() const {
    if (c_.empty()) fail_internal("Poly::lc of zero polynomial");
    return c_.back();
}

FqElem Poly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return F_->zero();
    return c_[i];
}

FqElem Poly::eval(const FqElem& x) const {
    FqElem acc = F_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    Poly r(*F_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * F_->from_base(i % F_->p()));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) fail_internal("Poly::monic of zero polynomial");
    return *this * lc().inv();
}

Poly Poly::shift_x(const FqElem& a) const {
    // Horner: p(x+a) built from the top coefficient down.
    Poly r(*F_);
    Poly xa = Poly::x(*F_) + Poly::constant(a);
    for (size_t i = c_.size(); i-- > 0;) r = r * xa + Poly::constant(c_[i]);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*F_);
    size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff((int)i) + o.coeff((int)i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*F_);
    size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff((int)i) - o.coeff((int)i));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*F_);
    Poly r(*F_);
    r.c_.assign(c_.size() + o.c_.size() - 1, F_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(*F_);
    r.c_.reserve(c_.size());
    for (auto& a : c_) r.c_.push_back(-a);
    return r;
}

Poly Poly::operator*(const FqElem& s) const {
    Poly r(*F_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (auto& a : c_) r.c_.push_back(a * s);
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& g) const {
    if (g.is_zero()) fail_internal("Poly: division by zero");
    Poly q(*F_), r = *this;
    if (r.deg() >= g.deg()) q.c_.assign(r.deg() - g.deg() + 1, F_->zero());
    FqElem lcinv = g.lc().inv();
    while (r.deg() >= g.deg()) {
        FqElem f = r.lc() * lcinv;
        int shift = r.deg() - g.deg();
        q.c_[shift] = f;
        for (int i = 0; i <= g.deg(); ++i) r.c_[i + shift] = r.c_[i + shift] - f * g.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::operator/(const Poly& g) const {
    auto [q, r] = divrem(g);
    if (!r.is_zero()) fail_internal("Poly: inexact division");
    return q;
}

Poly Poly::operator%(const Poly& g) const { return divrem(g).second; }

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.monic();
    return a;
}

void Poly::xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
    const Fq& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        FqElem lcinv = r0.lc().inv();
        r0 = r0 * lcinv;
        s0 = s0 * lcinv;
        t0 = t0 * lcinv;
    }
    g = std::move(r0);
    s = std::move(s0);
    t = std::move(t0);
}

RootsResult poly_roots(const Poly& f, u64 scan_cap) {
    if (f.is_zero()) fail_input("poly_roots: zero polynomial");
    const Fq& F = f.field();
    if (!F.size_fits_u64() || F.size_u64() > scan_cap)
        fail_budget("poly_roots: field too large for exhaustive scan");
    RootsResult out;
    Poly rem = f.monic();
    u64 n = F.size_u64();
    for (u64 idx = 0; idx < n; ++idx) {
        FqElem a = F.from_index(idx);
        unsigned mult = 0;
        while (!rem.is_zero() && rem.deg() >= 1 && rem.eval(a).is_zero()) {
            Poly lin(F, {-a, F.one()});
            rem = rem / lin;
            ++mult;
        }
        if (mult > 0) out.roots.push_back({idx, mult});
    }
    out.cofactor = rem;
    unsigned total = 0;
    for (auto& [r, m] : out.roots) {
        (void)r;
        total += m;
    }
    out.splits_completely = (total == (unsigned)f.deg());
    return out;
}

bool is_irreducible_low_degree(const Poly& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    if (f.deg() > 2) fail_internal("is_irreducible_low_degree: degree above 2");
    const Fq& F = f.field();
    u64 n = F.size_u64();
    for (u64 idx = 0; idx < n; ++idx) {
        if (f.eval(F.from_index(idx)).is_zero()) return false;
    }
    return true;
}

}  // namespace g2p

#pragma once

#include <utility>
#include <vector>

#include "g2p/fq.hpp"

namespace g2p {

// Dense univariate polynomial over a fixed Fq, normalized (no leading zeros).
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Fq& F) : F_(&F) {}
    Poly(const Fq& F, std::vector<FqElem> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Fq& F) { return Poly(F); }
    static Poly one(const Fq& F) { return constant(F.one()); }
    static Poly constant(FqElem a);
    static Poly x(const Fq& F);
    // Coefficients given as residues of the prime field, lifted into F.
    static Poly from_base_coeffs(const Fq& F, const std::vector<u64>& coeffs);
    static Poly from_base_coeffs_signed(const Fq& F, const std::vector<i64>& coeffs);

    const Fq& field() const { return *F_; }
    int deg() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return deg() == 0 && c_[0] == F_->one(); }
    bool is_monic() const { return !c_.empty() && c_.back() == F_->one(); }
    const FqElem& lc() const;
    FqElem coeff(int i) const;  // zero beyond the degree
    const std::vector<FqElem>& coeffs() const { return c_; }

    FqElem eval(const FqElem& x) const;
    Poly derivative() const;
    Poly monic() const;
    Poly shift_x(const FqElem& a) const;  // p(x + a)

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const FqElem& s) const;
    bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Division with remainder: *this = q*g + r, deg r < deg g.
    std::pair<Poly, Poly> divrem(const Poly& g) const;
    Poly operator/(const Poly& g) const;  // errors unless division is exact
    Poly operator%(const Poly& g) const;

    static Poly gcd(Poly a, Poly b);  // monic
    // g = gcd(a,b) monic, with g = s*a + t*b.
    static void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);

  private:
    const Fq* F_ = nullptr;
    std::vector<FqElem> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Roots of f in F with multiplicities, by exhaustive scan and repeated
// division; the field must have size within the scan cap.
struct RootsResult {
    std::vector<std::pair<u64, unsigned>> roots;  // (element index in F, multiplicity)
    Poly cofactor;                                // root-free part, monic
    bool splits_completely = false;
};
RootsResult poly_roots(const Poly& f, u64 scan_cap = 997);

// Irreducibility over the coefficient field for deg f <= 2 (root test) plus
// deg 1 trivially true; errors for higher degree.
bool is_irreducible_low_degree(const Poly& f);

}  // namespace g2p

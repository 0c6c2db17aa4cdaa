#pragma once

#include <optional>
#include <vector>

#include "g2p/poly.hpp"

namespace g2p {

// n x n matrix over F_ell (ell a small prime), entries as canonical residues.
class MatFl {
  public:
    MatFl() = default;
    MatFl(u64 ell, unsigned n) : ell_(ell), n_(n), a_(n * n, 0) {}
    static MatFl identity(u64 ell, unsigned n);
    static MatFl from_rows(u64 ell, const std::vector<std::vector<u64>>& rows);
    // Companion matrix of a monic polynomial (coefficients c0..cn, cn = 1).
    static MatFl companion(u64 ell, const std::vector<u64>& monic_coeffs);
    static MatFl block_diag(const MatFl& a, const MatFl& b);
    static MatFl random_invertible(u64 ell, unsigned n, Rng& rng);

    u64 ell() const { return ell_; }
    unsigned n() const { return n_; }
    u64 at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
    u64& at(unsigned i, unsigned j) { return a_[i * n_ + j]; }
    const std::vector<u64>& raw() const { return a_; }

    bool operator==(const MatFl& o) const { return ell_ == o.ell_ && n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const MatFl& o) const { return !(*this == o); }
    bool is_identity() const;

    MatFl operator+(const MatFl& o) const;
    MatFl operator-(const MatFl& o) const;
    MatFl operator*(const MatFl& o) const;
    MatFl scale(u64 s) const;
    MatFl transpose() const;
    MatFl pow(const BigInt& e) const;
    std::vector<u64> apply(const std::vector<u64>& v) const;  // M v

    u64 det() const;
    unsigned rank() const;
    std::optional<MatFl> inverse() const;

    // Basis of the null space {v : Mv = 0}; each vector normalized so its
    // first nonzero coordinate is 1. Rank-nullity holds by construction.
    std::vector<std::vector<u64>> kernel() const;

    // Characteristic polynomial det(XI - M), monic of degree n, via
    // fraction-free (Bareiss) elimination over F_ell[X].
    Poly char_poly() const;

    // Least e >= 1 with M^e = I, or nullopt when M is singular / the cap is hit.
    std::optional<unsigned> order_in_gl(unsigned cap = 2'000'000) const;

  private:
    u64 ell_ = 0;
    unsigned n_ = 0;
    std::vector<u64> a_;
};

struct DiagonalizationResult {
    bool diagonalizable = false;
    // When diagonalizable: eigenvalues (with multiplicity) and an invertible S
    // with S^-1 M S = diag(eigenvalues), eigenvectors as columns of S in the
    // same order, each normalized to first nonzero coordinate 1.
    std::vector<u64> eigenvalues;
    MatFl transform;
};

// Diagonalizability over F_ell: the characteristic polynomial must split and
// every eigenspace must reach its algebraic multiplicity.
DiagonalizationResult is_diagonalizable(const MatFl& M);

}  // namespace g2p

#include "g2p/matfl.hpp"

#include <algorithm>

#include "g2p/intutil.hpp"

namespace g2p {

MatFl MatFl::identity(u64 ell, unsigned n) {
    MatFl m(ell, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatFl MatFl::from_rows(u64 ell, const std::vector<std::vector<u64>>& rows) {
    MatFl m(ell, (unsigned)rows.size());
    for (unsigned i = 0; i < m.n_; ++i) {
        if (rows[i].size() != m.n_) fail_internal("MatFl::from_rows: ragged rows");
        for (unsigned j = 0; j < m.n_; ++j) m.at(i, j) = rows[i][j] % ell;
    }
    return m;
}

MatFl MatFl::companion(u64 ell, const std::vector<u64>& monic_coeffs) {
    unsigned n = (unsigned)monic_coeffs.size() - 1;
    if (monic_coeffs[n] % ell != 1) fail_internal("MatFl::companion: polynomial must be monic");
    MatFl m(ell, n);
    for (unsigned i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (unsigned i = 0; i < n; ++i) m.at(i, n - 1) = submod(0, monic_coeffs[i] % ell, ell);
    return m;
}

MatFl MatFl::block_diag(const MatFl& a, const MatFl& b) {
    MatFl m(a.ell_, a.n_ + b.n_);
    for (unsigned i = 0; i < a.n_; ++i)
        for (unsigned j = 0; j < a.n_; ++j) m.at(i, j) = a.at(i, j);
    for (unsigned i = 0; i < b.n_; ++i)
        for (unsigned j = 0; j < b.n_; ++j) m.at(a.n_ + i, a.n_ + j) = b.at(i, j);
    return m;
}

MatFl MatFl::random_invertible(u64 ell, unsigned n, Rng& rng) {
    for (;;) {
        MatFl m(ell, n);
        for (auto& x : m.a_) x = rng.below(ell);
        if (m.det() != 0) return m;
    }
}

bool MatFl::is_identity() const { return *this == identity(ell_, n_); }

MatFl MatFl::operator+(const MatFl& o) const {
    MatFl r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = addmod(a_[i], o.a_[i], ell_);
    return r;
}

MatFl MatFl::operator-(const MatFl& o) const {
    MatFl r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = submod(a_[i], o.a_[i], ell_);
    return r;
}

MatFl MatFl::operator*(const MatFl& o) const {
    MatFl r(ell_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned k = 0; k < n_; ++k) {
            u64 v = at(i, k);
            if (v == 0) continue;
            for (unsigned j = 0; j < n_; ++j)
                r.at(i, j) = addmod(r.at(i, j), mulmod(v, o.at(k, j), ell_), ell_);
        }
    return r;
}

MatFl MatFl::scale(u64 s) const {
    MatFl r = *this;
    s %= ell_;
    for (auto& x : r.a_) x = mulmod(x, s, ell_);
    return r;
}

MatFl MatFl::transpose() const {
    MatFl r(ell_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

MatFl MatFl::pow(const BigInt& e) const {
    if (e < 0) {
        auto inv = inverse();
        if (!inv) fail_internal("MatFl::pow: negative power of singular matrix");
        return inv->pow(BigInt(-e));
    }
    MatFl r = identity(ell_, n_), b = *this;
    BigInt m = e;
    while (m > 0) {
        if (boost::multiprecision::bit_test(m, 0)) r = r * b;
        b = b * b;
        m >>= 1;
    }
    return r;
}

std::vector<u64> MatFl::apply(const std::vector<u64>& v) const {
    std::vector<u64> r(n_, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r[i] = addmod(r[i], mulmod(at(i, j), v[j] % ell_, ell_), ell_);
    return r;
}

namespace {

// Gaussian elimination to row echelon form; returns (echelon matrix, pivot
// columns, det of the eliminated square part).
struct Echelon {
    std::vector<std::vector<u64>> rows;
    std::vector<unsigned> pivot_cols;
    u64 det;
};

Echelon echelon_form(const MatFl& M) {
    u64 l = M.ell();
    unsigned n = M.n();
    std::vector<std::vector<u64>> rows(n, std::vector<u64>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) rows[i][j] = M.at(i, j);
    Echelon e;
    e.det = 1;
    unsigned r = 0;
    for (unsigned col = 0; col < n && r < n; ++col) {
        unsigned piv = r;
        while (piv < n && rows[piv][col] == 0) ++piv;
        if (piv == n) {
            e.det = 0;
            continue;
        }
        if (piv != r) {
            std::swap(rows[piv], rows[r]);
            e.det = submod(0, e.det, l);
        }
        e.det = mulmod(e.det, rows[r][col], l);
        u64 inv = powmod(rows[r][col], l - 2, l);
        for (unsigned j = col; j < n; ++j) rows[r][j] = mulmod(rows[r][j], inv, l);
        for (unsigned i = 0; i < n; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            u64 f = rows[i][col];
            for (unsigned j = col; j < n; ++j)
                rows[i][j] = submod(rows[i][j], mulmod(f, rows[r][j], l), l);
        }
        e.pivot_cols.push_back(col);
        ++r;
    }
    if (r < n) e.det = 0;
    e.rows = std::move(rows);
    return e;
}

}  // namespace

u64 MatFl::det() const { return echelon_form(*this).det; }

unsigned MatFl::rank() const { return (unsigned)echelon_form(*this).pivot_cols.size(); }

std::optional<MatFl> MatFl::inverse() const {
    // Gauss-Jordan on [M | I].
    unsigned n = n_;
    std::vector<std::vector<u64>> rows(n, std::vector<u64>(2 * n, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) rows[i][j] = at(i, j);
        rows[i][n + i] = 1;
    }
    unsigned r = 0;
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = r;
        while (piv < n && rows[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(rows[piv], rows[r]);
        u64 inv = powmod(rows[r][col], ell_ - 2, ell_);
        for (unsigned j = 0; j < 2 * n; ++j) rows[r][j] = mulmod(rows[r][j], inv, ell_);
        for (unsigned i = 0; i < n; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            u64 f = rows[i][col];
            for (unsigned j = 0; j < 2 * n; ++j)
                rows[i][j] = submod(rows[i][j], mulmod(f, rows[r][j], ell_), ell_);
        }
        ++r;
    }
    MatFl out(ell_, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) out.at(i, j) = rows[i][n + j];
    return out;
}

std::vector<std::vector<u64>> MatFl::kernel() const {
    Echelon e = echelon_form(*this);
    std::vector<bool> is_pivot(n_, false);
    for (unsigned c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (unsigned free_col = 0; free_col < n_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<u64> v(n_, 0);
        v[free_col] = 1;
        // back-substitute pivot coordinates
        for (unsigned r = 0; r < e.pivot_cols.size(); ++r) {
            unsigned pc = e.pivot_cols[r];
            v[pc] = submod(0, e.rows[r][free_col], ell_);
        }
        // normalize first nonzero coordinate to 1
        for (unsigned i = 0; i < n_; ++i) {
            if (v[i] != 0) {
                u64 inv = powmod(v[i], ell_ - 2, ell_);
                for (auto& x : v) x = mulmod(x, inv, ell_);
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Poly MatFl::char_poly() const {
    const Fq& F = Fq::get(ell_, 1);
    // entries of XI - M as degree <= 1 polynomials
    std::vector<std::vector<Poly>> m(n_, std::vector<Poly>(n_));
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) {
            Poly e = Poly::constant(-F.from_base(at(i, j)));
            if (i == j) e = e + Poly::x(F);
            m[i][j] = e;
        }
    // Bareiss fraction-free elimination. Leading principal minors of XI - M
    // are monic nonzero polynomials, so no pivoting is ever needed.
    Poly prev = Poly::one(F);
    for (unsigned k = 0; k + 1 < n_; ++k) {
        for (unsigned i = k + 1; i < n_; ++i)
            for (unsigned j = k + 1; j < n_; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;
            }
        prev = m[k][k];
    }
    return m[n_ - 1][n_ - 1];
}

std::optional<unsigned> MatFl::order_in_gl(unsigned cap) const {
    if (det() == 0) return std::nullopt;
    MatFl acc = *this;
    MatFl id = identity(ell_, n_);
    for (unsigned e = 1; e <= cap; ++e) {
        if (acc == id) return e;
        acc = acc * *this;
    }
    return std::nullopt;
}

DiagonalizationResult is_diagonalizable(const MatFl& M) {
    DiagonalizationResult out;
    u64 l = M.ell();
    unsigned n = M.n();
    Poly cp = M.char_poly();
    RootsResult roots = poly_roots(cp);
    if (!roots.splits_completely) return out;
    std::vector<std::vector<u64>> columns;
    std::vector<u64> eigs;
    for (auto& [idx, mult] : roots.roots) {
        u64 lambda = idx;  // index in F_ell is the residue itself
        MatFl shifted = M - MatFl::identity(l, n).scale(lambda);
        auto ker = shifted.kernel();
        if (ker.size() != mult) return out;  // deficient eigenspace
        for (auto& v : ker) {
            columns.push_back(v);
            eigs.push_back(lambda);
        }
    }
    MatFl S(l, n);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i) S.at(i, j) = columns[j][i];
    auto Sinv = S.inverse();
    require_internal(Sinv.has_value(), "is_diagonalizable: eigenvector matrix is singular");
    MatFl D = *Sinv * M * S;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            require_internal(D.at(i, j) == (i == j ? eigs[i] % l : 0),
                             "is_diagonalizable: conjugation did not diagonalize");
    out.diagonalizable = true;
    out.eigenvalues = std::move(eigs);
    out.transform = std::move(S);
    return out;
}

}  // namespace g2p

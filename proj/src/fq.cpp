#include "g2p/fq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "g2p/intutil.hpp"

namespace g2p {

namespace {

// Dense univariate arithmetic over F_p on raw coefficient vectors (c0..),
// used for modulus construction and element inversion.

void ptrim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const std::vector<u64>& a) { return (int)a.size() - 1; }

std::vector<u64> pmul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    ptrim(r);
    return r;
}

std::vector<u64> psub(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
    ptrim(a);
    return a;
}

std::vector<u64> pscale(std::vector<u64> a, u64 s, u64 p) {
    for (auto& x : a) x = mulmod(x, s, p);
    ptrim(a);
    return a;
}

// a mod b, b nonzero.
std::vector<u64> pmod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    u64 lcinv = invmod(b.back(), p);
    while (pdeg(a) >= pdeg(b)) {
        u64 f = mulmod(a.back(), lcinv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = submod(a[i + shift], mulmod(f, b[i], p), p);
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<u64> pgcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    while (!b.empty()) {
        auto r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = pscale(a, invmod(a.back(), p), p);
    return a;
}

// g = gcd(a, b) monic together with s: s*a = g mod b  (t not needed here).
void pxgcd_s(std::vector<u64> a, std::vector<u64> b, u64 p, std::vector<u64>& g,
             std::vector<u64>& s) {
    std::vector<u64> r0 = std::move(a), r1 = std::move(b);
    std::vector<u64> s0 = {1}, s1 = {};
    while (!r1.empty()) {
        // division with remainder r0 = q*r1 + r
        std::vector<u64> q;
        {
            std::vector<u64> rem = r0;
            u64 lcinv = invmod(r1.back(), p);
            if (pdeg(rem) >= pdeg(r1)) q.assign(rem.size() - r1.size() + 1, 0);
            while (pdeg(rem) >= pdeg(r1)) {
                u64 f = mulmod(rem.back(), lcinv, p);
                size_t shift = rem.size() - r1.size();
                q[shift] = f;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[i + shift] = submod(rem[i + shift], mulmod(f, r1[i], p), p);
                ptrim(rem);
                if (rem.empty()) break;
            }
            ptrim(q);
            r0 = std::move(rem);
        }
        std::swap(r0, r1);
        auto s2 = psub(s0, pmul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.empty()) {
        u64 lcinv = invmod(r0.back(), p);
        r0 = pscale(r0, lcinv, p);
        s0 = pscale(s0, lcinv, p);
    }
    g = std::move(r0);
    s = std::move(s0);
}

// X^(p^e) mod f by e-fold p-th powering of X.
std::vector<u64> x_pth_power_iter(const std::vector<u64>& f, u64 p, unsigned e) {
    std::vector<u64> x = {0, 1};
    x = pmod(x, f, p);
    for (unsigned i = 0; i < e; ++i) {
        // x <- x^p mod f, square-and-multiply on exponent p
        std::vector<u64> r = {1}, b = x;
        u64 exp = p;
        while (exp) {
            if (exp & 1) r = pmod(pmul(r, b, p), f, p);
            b = pmod(pmul(b, b, p), f, p);
            exp >>= 1;
        }
        x = std::move(r);
    }
    return x;
}

bool is_irreducible_raw(const std::vector<u64>& f, u64 p, unsigned d) {
    if (d == 1) return true;
    // Rabin: X^(p^d) = X mod f, and gcd(X^(p^(d/r)) - X, f) = 1 for primes r | d.
    std::vector<u64> xq = x_pth_power_iter(f, p, d);
    std::vector<u64> x = {0, 1};
    if (psub(xq, x, p) != std::vector<u64>{}) return false;
    auto fac = factor_u64(d);
    for (auto& [r, mult] : fac) {
        (void)mult;
        auto xe = x_pth_power_iter(f, p, d / (unsigned)r);
        auto g = pgcd(psub(xe, x, p), f, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

}  // namespace

std::vector<u64> find_irreducible(u64 p, unsigned d) {
    if (d == 0) fail_input("find_irreducible: degree must be >= 1");
    // Enumerate lower coefficients as base-p digits of n, in increasing n.
    for (u64 n = 0;; ++n) {
        std::vector<u64> f(d + 1, 0);
        u64 m = n;
        for (unsigned i = 0; i < d; ++i) {
            f[i] = m % p;
            m /= p;
        }
        if (m != 0) fail_internal("find_irreducible: search space exhausted");
        f[d] = 1;
        if (is_irreducible_raw(f, p, d)) return f;
    }
}

Fq::Fq(u64 p, unsigned d) : p_(p), d_(d) {
    if (p < 3 || !is_prime_u64(p)) fail_input("Fq: characteristic must be an odd prime");
    if (d < 1) fail_input("Fq: degree must be >= 1");
    modulus_ = find_irreducible(p, d);
    // reduction rows: X^(d+i) mod modulus
    if (d >= 2) {
        std::vector<u64> cur(modulus_.begin(), modulus_.end() - 1);  // -(c0..c_{d-1}) = X^d mod f
        for (auto& x : cur) x = x == 0 ? 0 : p - x;
        red_.push_back(cur);
        for (unsigned i = 1; i + 1 < d; ++i) {
            // multiply by X mod f
            std::vector<u64> nxt(d, 0);
            u64 top = cur[d - 1];
            for (unsigned j = d - 1; j >= 1; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top != 0) {
                for (unsigned j = 0; j < d; ++j) {
                    u64 sub = mulmod(top, modulus_[j], p);
                    nxt[j] = submod(nxt[j], sub, p);
                }
            }
            red_.push_back(nxt);
            cur = std::move(nxt);
        }
    }
    size_ = 1;
    for (unsigned i = 0; i < d; ++i) size_ *= p;
    size_fits_ = size_ <= BigInt(~u64(0));
}

const Fq& Fq::get(u64 p, unsigned d) {
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, std::unique_ptr<Fq>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, d);
    auto it = registry.find(key);
    if (it == registry.end()) it = registry.emplace(key, std::unique_ptr<Fq>(new Fq(p, d))).first;
    return *it->second;
}

u64 Fq::size_u64() const {
    if (!size_fits_) fail_budget("field size exceeds 64 bits");
    return size_.convert_to<u64>();
}

FqElem Fq::zero() const { return FqElem{this, std::vector<u64>(d_, 0)}; }

FqElem Fq::one() const {
    auto e = zero();
    e.c[0] = 1;
    return e;
}

FqElem Fq::from_base(u64 a) const {
    auto e = zero();
    e.c[0] = a % p_;
    return e;
}

FqElem Fq::from_coeffs(std::vector<u64> c) const {
    c.resize(d_, 0);
    for (auto& x : c) x %= p_;
    return FqElem{this, std::move(c)};
}

FqElem Fq::from_index(u64 n) const {
    auto e = zero();
    for (unsigned i = 0; i < d_ && n; ++i) {
        e.c[i] = n % p_;
        n /= p_;
    }
    return e;
}

u64 Fq::index_of(const FqElem& x) const {
    u64 n = 0;
    for (unsigned i = d_; i-- > 0;) n = n * p_ + x.c[i];
    return n;
}

FqElem Fq::random(Rng& rng) const {
    auto e = zero();
    for (unsigned i = 0; i < d_; ++i) e.c[i] = rng.below(p_);
    return e;
}

FqElem Fq::add(const FqElem& a, const FqElem& b) const {
    auto r = a;
    for (unsigned i = 0; i < d_; ++i) r.c[i] = addmod(r.c[i], b.c[i], p_);
    return r;
}

FqElem Fq::sub(const FqElem& a, const FqElem& b) const {
    auto r = a;
    for (unsigned i = 0; i < d_; ++i) r.c[i] = submod(r.c[i], b.c[i], p_);
    return r;
}

FqElem Fq::neg(const FqElem& a) const {
    auto r = a;
    for (unsigned i = 0; i < d_; ++i) r.c[i] = r.c[i] == 0 ? 0 : p_ - r.c[i];
    return r;
}

FqElem Fq::mul(const FqElem& a, const FqElem& b) const {
    if (d_ == 1) return FqElem{this, {mulmod(a.c[0], b.c[0], p_)}};
    std::vector<u64> conv(2 * d_ - 1, 0);
    for (unsigned i = 0; i < d_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < d_; ++j)
            conv[i + j] = addmod(conv[i + j], mulmod(a.c[i], b.c[j], p_), p_);
    }
    std::vector<u64> r(conv.begin(), conv.begin() + d_);
    for (unsigned i = d_; i < 2 * d_ - 1; ++i) {
        u64 t = conv[i];
        if (t == 0) continue;
        const auto& row = red_[i - d_];
        for (unsigned j = 0; j < d_; ++j) r[j] = addmod(r[j], mulmod(t, row[j], p_), p_);
    }
    return FqElem{this, std::move(r)};
}

FqElem Fq::inv(const FqElem& a) const {
    if (a.is_zero()) fail_internal("Fq: inverse of zero");
    std::vector<u64> ac = a.c;
    ptrim(ac);
    std::vector<u64> g, s;
    pxgcd_s(ac, modulus_, p_, g, s);
    if (pdeg(g) != 0) fail_internal("Fq: element not invertible (modulus not irreducible?)");
    // g = 1 after monic normalization, so s*a = 1 mod modulus
    s.resize(d_, 0);
    return FqElem{this, std::move(s)};
}

FqElem Fq::pow(const FqElem& a, const BigInt& e) const {
    if (e < 0) return pow(inv(a), BigInt(-e));
    FqElem r = one(), b = a;
    BigInt m = e;
    while (m > 0) {
        if (boost::multiprecision::bit_test(m, 0)) r = mul(r, b);
        b = mul(b, b);
        m >>= 1;
    }
    return r;
}

FqElem Fq::pow(const FqElem& a, u64 e) const {
    FqElem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FqElem Fq::frobenius(const FqElem& x, unsigned e) const {
    FqElem r = x;
    for (unsigned i = 0; i < e; ++i) r = pow(r, p_);
    return r;
}

FqElem Fq::subfield_trace(const FqElem& x, unsigned subdeg) const {
    if (subdeg == 0 || d_ % subdeg != 0) fail_internal("subfield_trace: subdeg must divide degree");
    FqElem acc = zero();
    FqElem cur = x;
    unsigned steps = d_ / subdeg;
    for (unsigned j = 0; j < steps; ++j) {
        acc = add(acc, cur);
        if (j + 1 < steps) cur = frobenius(cur, subdeg);
    }
    return acc;
}

bool Fq::in_subfield(const FqElem& x, unsigned subdeg) const {
    if (subdeg == 0 || d_ % subdeg != 0) return false;
    return frobenius(x, subdeg) == x;
}

bool Fq::is_square(const FqElem& x) const {
    if (x.is_zero()) return true;
    BigInt e = (size_ - 1) / 2;
    return pow(x, e) == one();
}

FqElem Fq::sqrt(const FqElem& x) const {
    if (x.is_zero()) return x;
    if (!is_square(x)) fail_internal("Fq::sqrt of a non-square");
    BigInt m = size_ - 1;
    unsigned s = 0;
    BigInt t = m;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    if (s == 1) return pow(x, BigInt((size_ + 1) / 4));
    // Tonelli-Shanks; non-residue found by deterministic index scan.
    FqElem nr = zero();
    for (u64 n = 1;; ++n) {
        nr = from_index(n);
        if (nr.is_zero()) continue;
        if (!is_square(nr)) break;
    }
    FqElem z = pow(nr, t);
    FqElem r = pow(x, BigInt((t + 1) / 2));
    FqElem b = pow(x, t);
    unsigned md = s;
    while (!(b == one())) {
        unsigned i = 0;
        FqElem bb = b;
        while (!(bb == one())) {
            bb = mul(bb, bb);
            ++i;
            if (i == md) fail_internal("sqrt: Tonelli-Shanks diverged");
        }
        FqElem zz = z;
        for (unsigned j = 0; j + i + 1 < md; ++j) zz = mul(zz, zz);
        r = mul(r, zz);
        z = mul(zz, zz);
        b = mul(b, z);
        md = i;
    }
    return r;
}

void Fq::ensure_generator() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!gen_coeffs_.empty()) return;
    if (!size_fits_) fail_budget("generator search needs field size within 64 bits");
    u64 m = size_u64() - 1;
    auto fac = factor_u64(m);
    for (u64 n = 1;; ++n) {
        FqElem g = from_index(n);
        if (g.is_zero()) continue;
        bool ok = true;
        for (auto& [r, mult] : fac) {
            (void)mult;
            if (pow(g, BigInt(m / r)) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_coeffs_ = g.c;
            return;
        }
    }
}

FqElem Fq::generator() const {
    ensure_generator();
    return FqElem{this, gen_coeffs_};
}

FqElem Fq::primitive_root_of_unity(u64 ell) const {
    if ((size_ - 1) % ell != 0) fail_internal("primitive_root_of_unity: ell does not divide group order");
    FqElem g = generator();
    FqElem zeta = pow(g, BigInt((size_ - 1) / ell));
    if (zeta == one()) fail_internal("primitive_root_of_unity: degenerate root");
    return zeta;
}

u64 Fq::dlog_in_mu(const FqElem& z, const FqElem& zeta, u64 ell) {
    const Fq* F = zeta.F;
    FqElem cur = F->one();
    for (u64 e = 0; e < ell; ++e) {
        if (cur == z) return e;
        cur = F->mul(cur, zeta);
    }
    fail_internal("dlog_in_mu: value not in the cyclic group generated by zeta");
}

bool FqElem::is_zero() const {
    for (u64 x : c)
        if (x != 0) return false;
    return true;
}

FqElem FqElem::operator+(const FqElem& o) const { return F->add(*this, o); }
FqElem FqElem::operator-(const FqElem& o) const { return F->sub(*this, o); }
FqElem FqElem::operator*(const FqElem& o) const { return F->mul(*this, o); }
FqElem FqElem::operator/(const FqElem& o) const { return F->mul(*this, F->inv(o)); }
FqElem FqElem::operator-() const { return F->neg(*this); }
FqElem FqElem::inv() const { return F->inv(*this); }
FqElem FqElem::pow(const BigInt& e) const { return F->pow(*this, e); }
FqElem FqElem::pow(u64 e) const { return F->pow(*this, e); }

}  // namespace g2p

#include "g2p/intutil.hpp"

#include <numeric>

namespace g2p {

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 powmod(u64 base, const BigInt& exp, u64 m) {
    if (m == 1) return 0;
    if (exp < 0) fail_internal("powmod: negative exponent");
    u64 r = 1;
    base %= m;
    BigInt e = exp;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = (i64)m, nr = (i64)(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (r != 1) fail_input("invmod: argument not invertible");
    return t < 0 ? (u64)(t + (i64)m) : (u64)t;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return addmod(mulmod(x, x, n), c, n); };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n]++;
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<u64, unsigned> factor_u64(u64 n) {
    std::map<u64, unsigned> out;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

unsigned mult_order(u64 a, u64 m) {
    a %= m;
    if (std::gcd(a, m) != 1) fail_input("mult_order: arguments not coprime");
    u64 x = a % m;
    unsigned k = 1;
    while (x != 1 % m) {
        x = mulmod(x, a, m);
        ++k;
        if (k > m) fail_internal("mult_order: no order found");
    }
    return k;
}

int legendre_symbol(const BigInt& d, u64 ell) {
    if (ell < 3 || (ell & 1) == 0 || !is_prime_u64(ell)) fail_input("legendre: modulus must be an odd prime");
    u64 r = mod_residue(d, ell);
    if (r == 0) return 0;
    u64 e = powmod(r, (ell - 1) / 2, ell);
    if (e == 1) return 1;
    if (e == ell - 1) return -1;
    fail_internal("legendre: Euler criterion returned a non-unit");
}

unsigned valuation(const BigInt& n, u64 l) {
    if (n == 0) fail_internal("valuation of zero");
    BigInt m = boost::multiprecision::abs(n);
    unsigned v = 0;
    while (m % l == 0) {
        m /= l;
        ++v;
    }
    return v;
}

bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

bool is_perfect_square(const BigInt& n) {
    BigInt r;
    return is_perfect_square(n, r);
}

u64 mod_residue(const BigInt& n, u64 l) {
    BigInt r = n % l;
    if (r < 0) r += l;
    return r.convert_to<u64>();
}

}  // namespace g2p

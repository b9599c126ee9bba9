#include "mspec/ints.hpp"

#include <algorithm>
#include <map>

namespace mspec {

Int floor_mul_sqrt(const Int& m, const Int& d) {
    if (m == 0 || d == 0) return 0;
    Int t = m * m * d;
    Int r = isqrt(t);
    if (m > 0) return r;
    // floor(-x) = -ceil(x); m*m*d is a perfect square only if d is (d is
    // squarefree here, so only d == 1).
    if (r * r == t) return -r;
    return -r - 1;
}

namespace {

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

Int pollard_brent(const Int& n) {
    // Brent's cycle variant; n is odd, composite, not a prime power of 2.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4d);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 1;
        Int c = rng.get_z_range(n - 3) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        factor_rec(r, out);
        factor_rec(r, out);
        return;
    }
    Int f = pollard_brent(n);
    factor_rec(f, out);
    factor_rec(n / f, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 0) n = -n;
    std::map<Int, unsigned> acc;
    if (n <= 1) return {};
    for (Int p : {Int(2), Int(3), Int(5)}) {
        while (n % p == 0) {
            acc[p]++;
            n /= p;
        }
    }
    // wheel over 7, 11, 13, ... up to 2^16
    static const int steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    Int p = 7;
    int si = 0;
    while (p <= 65536 && p * p <= n) {
        while (n % p == 0) {
            acc[p]++;
            n /= p;
        }
        p += steps[si];
        si = (si + 1) & 7;
    }
    if (n > 1) {
        if (p * p > n)
            acc[n]++;
        else
            factor_rec(n, acc);
    }
    return {acc.begin(), acc.end()};
}

std::pair<Int, Int> squarefree_split(const Int& n) {
    if (n < 0) throw std::domain_error("squarefree_split: negative argument");
    if (n <= 1) return {1, n};
    Int f = 1, s = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e / 2 > 0) f *= pow_int(p, e / 2);
        if (e % 2) s *= p;
    }
    return {f, s};
}

Int common_square_divisor(const Int& n, const Int& d) {
    Int g = gcd(n, d);
    if (g == 1) return 1;
    Int k = 1;
    for (auto& [p, eg] : factorize(g)) {
        (void)eg;
        unsigned en = 0, ed = 0;
        Int t = n;
        while (t % p == 0) {
            ++en;
            t /= p;
        }
        t = d;
        while (t % p == 0) {
            ++ed;
            t /= p;
        }
        unsigned e = std::min(en / 2, ed);
        if (e) k *= pow_int(p, e);
    }
    return k;
}

std::string decimal_of_quadratic(const Int& num_int, const Int& num_rad_coeff, const Int& d,
                                 const Int& den, unsigned digits) {
    if (den == 0) throw std::domain_error("decimal_of_quadratic: zero denominator");
    if (digits > 10000) throw std::domain_error("decimal_of_quadratic: too many digits");
    // value = (num_int + num_rad_coeff*sqrt(d)) / den; truncate |value| to
    // `digits` places, then re-attach the sign.
    Int p = num_int, q = num_rad_coeff, r = den;
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int scale = pow10(digits);
    Int num = p * scale + floor_mul_sqrt(q * scale, d);
    bool neg = num < 0;
    // truncation toward zero: use ceil for negative numerators
    Int t;
    if (neg)
        mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), r.get_mpz_t());
    else
        t = fdiv(num, r);
    Int a = abs(t);
    Int ip = a / scale, fp = a % scale;
    std::string out = neg && (ip != 0 || fp != 0) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace mspec

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mspec {

// Arbitrary-precision integers and rationals. Continuants and tree middles
// grow exponentially, so everything downstream is built on these.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an enumeration would exceed a configured depth/node budget.
// The CLI maps it to its own exit code.
class resource_limit_error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

inline int sign(const Int& a) { return sgn(a); }

// Floor division/modulo (GMP's operator/ truncates toward zero).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor(sqrt(a)), a >= 0
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

// floor(m * sqrt(d)) for squarefree d >= 0; exact for either sign of m.
Int floor_mul_sqrt(const Int& m, const Int& d);

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow10(unsigned long e) { return pow_int(10, e); }

// Prime factorisation (trial division + Pollard-Brent rho). Exponents are
// small in all uses here; factors are returned sorted.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

// n = f*f*s with s squarefree; returns {f, s}. n >= 0.
std::pair<Int, Int> squarefree_split(const Int& n);

// Largest k with k | d and k*k | n (used to put sqrt(N)/d in lowest terms).
Int common_square_divisor(const Int& n, const Int& d);

inline std::string dec(const Int& v) { return v.get_str(); }
inline std::string dec(const Rat& v) { return v.get_str(); }

// Decimal rendering of (num_int + num_rad_coeff*sqrt(d)) / den, truncated
// toward zero at `digits` places after the point.
std::string decimal_of_quadratic(const Int& num_int, const Int& num_rad_coeff, const Int& d,
                                 const Int& den, unsigned digits);

}  // namespace mspec

#pragma once

#include <compare>
#include <string>

#include "mspec/ints.hpp"
#include "mspec/seq.hpp"

namespace mspec {

// Exact real quadratic irrational (p + q*sqrt(d))/r.
//
// Normal form: r >= 1, d squarefree, gcd(p, q, r) = 1; rational values are
// folded to q = 0, d = 0. Equal values therefore have equal representations.
// Mixed-radicand addition/multiplication is rejected (comparison is not).
class Surd {
 public:
    Surd() : p_(0), q_(0), d_(0), r_(1) {}
    Surd(const Int& value) : p_(value), q_(0), d_(0), r_(1) {}
    Surd(long value) : p_(value), q_(0), d_(0), r_(1) {}
    // (p + q*sqrt(d))/r with d >= 0 arbitrary (square factors are extracted)
    Surd(Int p, Int q, Int d, Int r);

    static Surd rational(const Int& num, const Int& den) { return Surd(num, 0, 0, den); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    Surd conjugate() const { return Surd(p_, -q_, d_, r_); }

    Surd operator-() const { return Surd(-p_, -q_, d_, r_); }
    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const { return *this + (-o); }
    Surd operator*(const Surd& o) const;
    Surd operator/(const Surd& o) const { return *this * o.reciprocal(); }
    Surd reciprocal() const;

    // exact sign of the value
    int sign() const;
    // exact comparison; works across different radicands
    std::strong_ordering compare(const Surd& o) const;
    bool operator==(const Surd& o) const { return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_; }
    bool operator<(const Surd& o) const { return compare(o) == std::strong_ordering::less; }
    bool operator>(const Surd& o) const { return compare(o) == std::strong_ordering::greater; }
    bool operator<=(const Surd& o) const { return compare(o) != std::strong_ordering::greater; }
    bool operator>=(const Surd& o) const { return compare(o) != std::strong_ordering::less; }

    Int floor() const;

    // truncated toward zero at `digits` places
    std::string to_decimal(unsigned digits) const;
    // canonical rendering "(p + q*sqrt(d))/r"
    std::string to_string() const;

 private:
    Int p_, q_, d_, r_;
    void normalize();
};

// Value of the purely periodic continued fraction [<period>]: the root > 1 of
// K_2^n x^2 + (K_2^{n-1} - K_1^n) x - K_1^{n-1} = 0.
Surd periodic_cf_value(const Seq& period);

// -[0; <reverse(period)>] = -1/periodic_cf_value(reverse(period)), in (-1,0).
Surd neg_periodic_tail(const Seq& period);

// First `count` regular continued fraction elements of x (floor/reciprocal
// iteration, exact).
Seq cf_expansion(Surd x, std::size_t count);

}  // namespace mspec

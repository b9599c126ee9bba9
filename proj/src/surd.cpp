#include "mspec/surd.hpp"

namespace mspec {

Surd::Surd(Int p, Int q, Int d, Int r) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (r_ == 0) throw std::domain_error("Surd: zero denominator");
    if (d_ < 0) throw std::domain_error("Surd: negative radicand");
    normalize();
}

void Surd::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    if (q_ == 0) {
        d_ = 0;
    } else if (d_ == 0) {
        q_ = 0;
    } else {
        auto [f, s] = squarefree_split(d_);
        if (f != 1) {
            q_ *= f;
            d_ = s;
        }
        if (d_ == 1) {  // radicand collapsed to a rational
            p_ += q_;
            q_ = 0;
            d_ = 0;
        }
    }
    Int g = gcd(gcd(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Surd Surd::operator+(const Surd& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw std::domain_error("Surd: mixed radicands in addition");
    Int d = is_rational() ? o.d_ : d_;
    return Surd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, d, r_ * o.r_);
}

Surd Surd::operator*(const Surd& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw std::domain_error("Surd: mixed radicands in multiplication");
    Int d = is_rational() ? o.d_ : d_;
    return Surd(p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, d, r_ * o.r_);
}

Surd Surd::reciprocal() const {
    if (is_zero()) throw std::domain_error("Surd: division by zero");
    // r/(p + q*sqrt(d)) = r*(p - q*sqrt(d)) / (p^2 - q^2 d)
    Int norm = p_ * p_ - q_ * q_ * d_;
    return Surd(r_ * p_, -r_ * q_, d_, norm);
}

namespace {

// exact sign of u + v*sqrt(m), m squarefree >= 0
int sign_linear(const Int& u, const Int& v, const Int& m) {
    if (v == 0 || m == 0) return sgn(u);
    if (u == 0) return sgn(v);
    int su = sgn(u), sv = sgn(v);
    if (su == sv) return su;
    // opposite signs: compare u^2 against v^2 m
    int c = cmp(u * u, v * v * m);
    if (c == 0) return 0;  // impossible for m squarefree > 1, possible for m == 1
    return c > 0 ? su : sv;
}

}  // namespace

int Surd::sign() const { return sign_linear(p_, q_, d_); }

std::strong_ordering Surd::compare(const Surd& o) const {
    auto from_int = [](int s) {
        return s < 0 ? std::strong_ordering::less
                     : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    };
    if (is_rational() || o.is_rational() || d_ == o.d_) {
        // same field: subtract and take the sign
        Int d = is_rational() ? o.d_ : d_;
        Int u = p_ * o.r_ - o.p_ * r_;
        Int v = q_ * o.r_ - o.q_ * r_;
        return from_int(sign_linear(u, v, d));
    }
    // sign of A + B*sqrt(d1) + C*sqrt(d2), distinct squarefree d1, d2 >= 2:
    Int A = p_ * o.r_ - o.p_ * r_;
    Int B = q_ * o.r_;
    Int C = -o.q_ * r_;
    // compare A + B*sqrt(d1) against -C*sqrt(d2)
    int lhs = sign_linear(A, B, d_);
    int rhs = -sgn(C);
    if (lhs != rhs) return from_int(lhs < rhs ? -1 : (lhs > rhs ? 1 : 0));
    if (lhs == 0) return std::strong_ordering::equal;
    // both sides share sign s; compare squares: A^2 + B^2 d1 + 2AB sqrt(d1)  vs  C^2 d2
    Int u = A * A + B * B * d_ - C * C * o.d_;
    Int v = 2 * A * B;
    int c = sign_linear(u, v, d_);
    return from_int(lhs > 0 ? c : -c);
}

Int Surd::floor() const {
    Int num = p_ + floor_mul_sqrt(q_, d_);
    return fdiv(num, r_);
}

std::string Surd::to_decimal(unsigned digits) const {
    return decimal_of_quadratic(p_, q_, d_, r_, digits);
}

std::string Surd::to_string() const {
    std::string s = "(" + p_.get_str();
    if (q_ >= 0) s += " + " + q_.get_str();
    else s += " - " + Int(-q_).get_str();
    s += "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
    return s;
}

Surd periodic_cf_value(const Seq& period) {
    if (period.empty()) throw std::domain_error("periodic_cf_value: empty period");
    require_positive(period, "periodic_cf_value");
    std::size_t n = period.size();
    Int k1n = partial_continuant(period, 1, n);
    Int k1n1 = partial_continuant(period, 1, n - 1);
    Int k2n = partial_continuant(period, 2, n);
    Int k2n1 = partial_continuant(period, 2, n - 1);
    // A x^2 + B x + C with A = K_2^n, B = K_2^{n-1} - K_1^n, C = -K_1^{n-1}
    Int a = k2n, b = k2n1 - k1n, c = -k1n1;
    Int disc = b * b - 4 * a * c;
    Surd x(-b, 1, disc, 2 * a);  // larger root (a > 0)
    return x;
}

Surd neg_periodic_tail(const Seq& period) {
    return -periodic_cf_value(reversed(period)).reciprocal();
}

Seq cf_expansion(Surd x, std::size_t count) {
    std::vector<Int> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Int a = x.floor();
        out.push_back(a);
        Surd frac = x - Surd(a);
        if (frac.is_zero()) break;
        x = frac.reciprocal();
    }
    return Seq{std::move(out)};
}

}  // namespace mspec

#pragma once

#include <string>

#include "mspec/ints.hpp"
#include "mspec/seq.hpp"
#include "mspec/surd.hpp"

namespace mspec {

// Integer 2x2 matrix displayed ((a, c), (b, d)): upper row a c, lower row
// b d. For the reduced matrix of a sequence the entries are
// a = K_2^{n-1}, c = K_2^n, b = K_1^{n-1}, d = K_1^n, so the lower-left
// entry is the breve continuant. All map formulas below read entries by
// these names.
struct Mat2 {
    Int a, c, b, d;

    bool operator==(const Mat2&) const = default;

    Int det() const { return a * d - c * b; }
    Int trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + c * o.b, a * o.c + c * o.d, b * o.a + d * o.b, b * o.c + d * o.d};
    }

    // column vector (x, y) -> (a x + c y, b x + d y)
    std::pair<Int, Int> apply(const Int& x, const Int& y) const {
        return {a * x + c * y, b * x + d * y};
    }

    Mat2 transpose() const { return {a, b, c, d}; }

    static Mat2 identity() { return {1, 0, 0, 1}; }
    // M_a = ((0,1),(1,a)), the elementary factor of a reduced matrix
    static Mat2 elementary(const Int& x) { return {0, 1, 1, x}; }
};

// Integer binary quadratic form A x^2 + B xy + C y^2.
struct QuadForm {
    Int A, B, C;

    bool operator==(const QuadForm&) const = default;

    Int operator()(const Int& x, const Int& y) const { return A * x * x + B * x * y + C * y * y; }

    Int discriminant() const { return B * B - 4 * A * C; }

    // form after the substitution (x, y) -> (u11 x + u12 y, u21 x + u22 y)
    QuadForm transformed(const Int& u11, const Int& u12, const Int& u21, const Int& u22) const;

    std::string to_string() const;
};

// Markov spectrum value sqrt(N)/d, kept in lowest terms: no k > 1 with
// k | d and k^2 | N remains after construction. Equality and order always
// go through cross-multiplication, never factorization.
struct RadicalRatio {
    Int N, d;

    RadicalRatio(Int n, Int den);

    bool operator==(const RadicalRatio& o) const { return N * o.d * o.d == o.N * d * d; }
    bool operator<(const RadicalRatio& o) const { return N * o.d * o.d < o.N * d * d; }

    std::string to_decimal(unsigned digits) const {
        return decimal_of_quadratic(0, 1, N, d, digits);
    }
    std::string to_string() const { return "sqrt(" + N.get_str() + ")/" + d.get_str(); }
};

// Map A: even sequence -> reduced matrix of partial continuants (det +1).
Mat2 map_A(const Seq& s);

// Map B: reduced matrix with d > b > a >= 1, det +1 -> the even sequence;
// odd continued fraction of b/a extended by floor((d-1)/b).
Seq map_B(const Mat2& m);

// Map C: even sequence -> associated form
// K_1^{n-1} x^2 + (K_1^n - K_2^{n-1}) xy - K_2^n y^2.
QuadForm map_C(const Seq& s);

// Map E: matrix -> b x^2 + (d - a) xy - c y^2.
QuadForm map_E(const Mat2& m);

// Map F: form -> matrix (a, -C; A, a+B) with a = (-B + sqrt(B^2-4AC+4))/2.
// Throws unless B^2-4AC+4 is a perfect square of the right parity.
Mat2 map_F(const QuadForm& f);

// Map D = B . F
Seq form_to_seq(const QuadForm& f);

inline Int discriminant(const QuadForm& f) { return f.discriminant(); }

// Map W: even sequence -> sqrt((K_1^n + K_2^{n-1})^2 - 4) / K_1^{n-1}.
RadicalRatio map_W(const Seq& s);

// Map X: form -> sqrt(disc)/f(1,0), requires f(1,0) > 0 and disc > 0.
RadicalRatio map_X(const QuadForm& f);

// Map Z: matrix -> sqrt((a+d)^2 - 4)/b, requires b > 0 and (a+d)^2 > 4.
RadicalRatio map_Z(const Mat2& m);

// Eigenline slopes of the reduced matrix of s: y = high*x and y = low*x with
// high = [<s>] > 1 and low = -[0; <reverse(s)>] in (-1, 0).
std::pair<Surd, Surd> eigen_slopes(const Seq& s);

}  // namespace mspec

#include "mspec/matform.hpp"

namespace mspec {

QuadForm QuadForm::transformed(const Int& u11, const Int& u12, const Int& u21,
                               const Int& u22) const {
    QuadForm g;
    g.A = (*this)(u11, u21);
    g.C = (*this)(u12, u22);
    g.B = 2 * A * u11 * u12 + B * (u11 * u22 + u12 * u21) + 2 * C * u21 * u22;
    return g;
}

std::string QuadForm::to_string() const {
    auto term = [](const Int& c, const char* mono, bool lead) {
        if (c == 0) return std::string();
        std::string s;
        if (c > 0 && !lead) s += "+";
        if (c == -1)
            s += "-";
        else if (c != 1)
            s += c.get_str();
        s += mono;
        return s;
    };
    std::string s = term(A, "x^2", true) + term(B, "xy", A == 0) + term(C, "y^2", A == 0 && B == 0);
    return s.empty() ? "0" : s;
}

RadicalRatio::RadicalRatio(Int n, Int den) : N(std::move(n)), d(std::move(den)) {
    if (N < 1 || d < 1) throw std::domain_error("RadicalRatio: N and d must be positive");
    Int k = common_square_divisor(N, d);
    if (k > 1) {
        N /= k * k;
        d /= k;
    }
}

namespace {

void require_even(const Seq& s, const char* where) {
    if (s.empty() || s.size() % 2)
        throw std::domain_error(std::string(where) + ": sequence length must be even >= 2");
    require_positive(s, where);
}

}  // namespace

Mat2 map_A(const Seq& s) {
    require_even(s, "map_A");
    std::size_t n = s.size();
    return {partial_continuant(s, 2, n - 1), partial_continuant(s, 2, n),
            partial_continuant(s, 1, n - 1), partial_continuant(s, 1, n)};
}

Seq map_B(const Mat2& m) {
    if (m.det() != 1) throw std::domain_error("map_B: determinant must be +1");
    if (m.a < 1) throw std::domain_error("map_B: a must be >= 1 (b/a needs an expansion)");
    if (!(m.d > m.b && m.b >= m.a)) throw std::domain_error("map_B: requires d > b >= a");
    Seq cf = rational_to_cf(m.b, m.a, CfParity::odd);
    std::vector<Int> out = cf.e;
    out.push_back(fdiv(m.d - 1, m.b));
    return Seq{std::move(out)};
}

QuadForm map_C(const Seq& s) {
    require_even(s, "map_C");
    std::size_t n = s.size();
    return {partial_continuant(s, 1, n - 1),
            partial_continuant(s, 1, n) - partial_continuant(s, 2, n - 1),
            -partial_continuant(s, 2, n)};
}

QuadForm map_E(const Mat2& m) { return {m.b, m.d - m.a, -m.c}; }

Mat2 map_F(const QuadForm& f) {
    Int disc4 = f.B * f.B - 4 * f.A * f.C + 4;
    if (!is_perfect_square(disc4))
        throw std::domain_error("map_F: B^2-4AC+4 is not a perfect square");
    Int root = isqrt(disc4);
    Int twice_a = -f.B + root;
    if (fmod(twice_a, 2) != 0) throw std::domain_error("map_F: parity failure");
    Int a = twice_a / 2;
    return {a, -f.C, f.A, a + f.B};
}

Seq form_to_seq(const QuadForm& f) { return map_B(map_F(f)); }

RadicalRatio map_W(const Seq& s) {
    require_even(s, "map_W");
    std::size_t n = s.size();
    Int t = partial_continuant(s, 1, n) + partial_continuant(s, 2, n - 1);
    return RadicalRatio(t * t - 4, partial_continuant(s, 1, n - 1));
}

RadicalRatio map_X(const QuadForm& f) {
    if (f.A < 1) throw std::domain_error("map_X: f(1,0) must be positive");
    Int disc = f.discriminant();
    if (disc < 1) throw std::domain_error("map_X: discriminant must be positive");
    return RadicalRatio(disc, f.A);
}

RadicalRatio map_Z(const Mat2& m) {
    if (m.b < 1) throw std::domain_error("map_Z: b must be positive");
    Int t = m.a + m.d;
    if (t * t <= 4) throw std::domain_error("map_Z: (a+d)^2 must exceed 4");
    return RadicalRatio(t * t - 4, m.b);
}

std::pair<Surd, Surd> eigen_slopes(const Seq& s) {
    require_even(s, "eigen_slopes");
    return {periodic_cf_value(s), neg_periodic_tail(s)};
}

}  // namespace mspec

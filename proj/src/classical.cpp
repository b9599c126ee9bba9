#include "mspec/classical.hpp"

#include <algorithm>

namespace mspec {

MarkovTriple::MarkovTriple(Int x, Int y, Int z) {
    if (x < 1 || y < 1 || z < 1) throw std::domain_error("MarkovTriple: entries must be positive");
    if (!markov_equation_check(x, y, z))
        throw std::domain_error("MarkovTriple: not a solution of x^2+y^2+z^2 = 3xyz");
    std::array<Int, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    a = v[0];
    b = v[1];
    M = v[2];
}

namespace {

// least positive u with u*a == +-b (mod M), M >= 2
Int least_residue(const Int& a, const Int& b, const Int& M) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t()) == 0)
        throw std::domain_error("compute_uv: a not invertible mod M");
    Int u1 = fmod(inv * b, M);
    if (u1 == 0) u1 = M;
    Int u2 = M - fmod(inv * b, M);
    if (u2 == 0) u2 = M;
    return std::min(u1, u2);
}

}  // namespace

MarkovFormData compute_uv(const MarkovTriple& t) {
    if (t.M < 2) throw std::domain_error("compute_uv: M must be >= 2");
    Int u = least_residue(t.a, t.b, t.M);
    Int uu1 = u * u + 1;
    if (fmod(uu1, t.M) != 0) throw std::domain_error("compute_uv: u^2+1 not divisible by M");
    return {t, u, uu1 / t.M};
}

std::array<Int, 3> map_P(const TripleNode<Seq>& t) {
    return {breve(t.left), breve(t.middle), breve(t.right)};
}

Seq map_Q(const MarkovTriple& t) {
    MarkovFormData d = compute_uv(t);
    Seq cf = rational_to_cf(t.M, d.u, CfParity::odd);
    Seq out = reversed(cf);
    out.e.emplace_back(2);
    return out;
}

QuadForm map_S(const MarkovTriple& t) {
    MarkovFormData d = compute_uv(t);
    return {t.M, t.M + 2 * d.u, d.u + d.v - 2 * t.M};
}

QuadForm markov_theorem_form(const Int& m, const Int& m1, const Int& m2) {
    if (!(m >= m1 && m1 >= m2 && m2 >= 1))
        throw std::domain_error("markov_theorem_form: needs m >= m1 >= m2 >= 1");
    if (!markov_equation_check(m, m1, m2))
        throw std::domain_error("markov_theorem_form: not a Markov triple");
    Int u = (m == 1) ? Int(1) : least_residue(m2, m1, m);
    Int v = (u * u + 1) / m;
    return {m, 3 * m - 2 * u, v - 3 * u};
}

RadicalRatio map_Y(const MarkovTriple& t) { return RadicalRatio(9 * t.M * t.M - 4, t.M); }

std::array<Int, 3> map_R(const std::array<QuadForm, 3>& forms) {
    return {forms[0](1, 0), forms[1](1, 0), forms[2](1, 0)};
}

std::array<Int, 3> map_T(const std::array<Mat2, 3>& mats) {
    return {mats[0].b, mats[1].b, mats[2].b};
}

std::vector<TripleNode<Int>> classical_stem() {
    return {{1, 1, 1, FareyCode::root()}, {1, 2, 1, FareyCode::root()}};
}

std::vector<TripleNode<Int>> classical_tree(long depth) {
    return enumerate_triples(classical_root(), classical_sigma(), depth);
}

}  // namespace mspec

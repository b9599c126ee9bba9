#pragma once

#include <array>
#include <vector>

#include "mspec/ints.hpp"
#include "mspec/matform.hpp"
#include "mspec/seq.hpp"
#include "mspec/triplegraph.hpp"

namespace mspec {

inline bool markov_equation_check(const Int& a, const Int& b, const Int& c) {
    return a * a + b * b + c * c == 3 * a * b * c;
}

// Markov triple stored ordered a <= b <= M (tree edges keep their own
// positional semantics). Construction checks the equation.
struct MarkovTriple {
    Int a, M, b;

    MarkovTriple(Int x, Int y, Int z);
};

struct MarkovFormData {
    MarkovTriple triple;
    Int u;  // least positive residue with u*a == +-b (mod M)
    Int v;  // (u^2 + 1)/M
};

// Throws for M = 1 (no residue) and for non-Markov data (v not integral).
MarkovFormData compute_uv(const MarkovTriple& t);

// breve of each component
std::array<Int, 3> map_P(const TripleNode<Seq>& t);

// LLS period of the triple's arrangement: odd continued fraction of M/u,
// reversed, with 2 appended; breve(result) = M.
Seq map_Q(const MarkovTriple& t);

// M x^2 + (M + 2u) xy + (u + v - 2M) y^2, discriminant 9M^2 - 4
QuadForm map_S(const MarkovTriple& t);

// Markov's form m x^2 + (3m - 2u) xy + (v - 3u) y^2 for the ordered triple
// (m >= m1 >= m2), with m2 u == +-m1 (mod m).
QuadForm markov_theorem_form(const Int& m, const Int& m1, const Int& m2);

// sqrt(9M^2 - 4)/M
RadicalRatio map_Y(const MarkovTriple& t);

std::array<Int, 3> map_R(const std::array<QuadForm, 3>& forms);
std::array<Int, 3> map_T(const std::array<Mat2, 3>& mats);

// The two triples preceding the free part: (1,1,1) and (1,2,1).
std::vector<TripleNode<Int>> classical_stem();

// Free classical tree from (1,5,2) to the given depth (BFS).
std::vector<TripleNode<Int>> classical_tree(long depth);

}  // namespace mspec

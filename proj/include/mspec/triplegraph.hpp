#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mspec/ints.hpp"
#include "mspec/matform.hpp"
#include "mspec/seq.hpp"

namespace mspec {

// L/R word from the root, stored as run lengths (a_1, a_2, ..., a_2n) read
// as R^{a_2n} o L^{a_2n-1} o ... o R^{a_2} o L^{a_1}. Interior runs are >= 1;
// the first and last may be 0. The root is (0, 0).
struct FareyCode {
    std::vector<long> runs;

    static FareyCode root() { return {{0, 0}}; }
    FareyCode child(bool right) const;

    long level() const;
    // [0; a_1+1 : a_2 : ... : a_2n + 1], in (0, 1); 1/2 for the root
    Rat coordinate() const;

    bool operator==(const FareyCode&) const = default;
};

template <class T>
struct TripleNode {
    T left, middle, right;
    FareyCode code;
};

// L_sigma(a,b,c) = (a, sigma(a,b,c), b);  R_sigma(a,b,c) = (b, sigma(b,c,a), c)
template <class T, class Sigma>
TripleNode<T> step(const TripleNode<T>& n, bool right, Sigma&& sigma) {
    if (!right)
        return {n.left, sigma(n.left, n.middle, n.right), n.middle, n.code.child(false)};
    return {n.middle, sigma(n.middle, n.right, n.left), n.right, n.code.child(true)};
}

// Breadth-first, left before right: 2^(depth+1) - 1 nodes.
template <class T, class Sigma>
std::vector<TripleNode<T>> enumerate_triples(const TripleNode<T>& root, Sigma&& sigma,
                                             long depth) {
    if (depth < 0) throw std::domain_error("enumerate_triples: negative depth");
    if (depth > 25) throw resource_limit_error("enumerate_triples: depth exceeds limit");
    std::vector<TripleNode<T>> out;
    out.reserve((std::size_t(1) << (depth + 1)) - 1);
    out.push_back(root);
    std::size_t level_begin = 0;
    for (long d = 0; d < depth; ++d) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            out.push_back(step(out[i], false, sigma));
            out.push_back(step(out[i], true, sigma));
        }
        level_begin = level_end;
    }
    return out;
}

// --- instantiations ---------------------------------------------------

inline Rat mediant(const Rat& a, const Rat& b) {
    Rat r(a.get_num() + b.get_num(), a.get_den() + b.get_den());
    r.canonicalize();
    return r;
}

inline TripleNode<Rat> farey_root() { return {Rat(0), Rat(1, 2), Rat(1), FareyCode::root()}; }
inline auto farey_sigma() {
    return [](const Rat& a, const Rat& b, const Rat&) { return mediant(a, b); };
}

// classical Markov numbers: sigma(a,b,c) = 3ab - c reproduces the children
// (a, 3ab-c, b) and (b, 3bc-a, c)
inline TripleNode<Int> classical_root() { return {1, 5, 2, FareyCode::root()}; }
inline auto classical_sigma() {
    return [](const Int& a, const Int& b, const Int& c) -> Int { return 3 * a * b - c; };
}

inline TripleNode<Seq> seq_root(const Seq& mu, const Seq& nu) {
    return {mu, concat(mu, nu), nu, FareyCode::root()};
}
inline auto seq_sigma() {
    return [](const Seq& a, const Seq& b, const Seq&) { return concat(a, b); };
}

inline TripleNode<Mat2> matrix_root(const Mat2& m, const Mat2& n) {
    return {m, m * n, n, FareyCode::root()};
}
inline auto matrix_sigma() {
    return [](const Mat2& a, const Mat2& b, const Mat2&) { return a * b; };
}

// Middle = Farey coordinate on the Farey graph, checked to the given depth.
bool farey_middle_identity_check(long depth);

// --- generalised Markov tree ------------------------------------------

struct GenMarkovEntry {
    Seq seq;
    Int num;  // breve(seq)
};

using GenMarkovNode = TripleNode<GenMarkovEntry>;

GenMarkovNode gen_markov_root(const Seq& mu, const Seq& nu);

// Child via the recursion: L-middle = t(left)*b - c, R-middle = t(right)*b - a.
// The result is checked against the direct breve of the concatenated middle;
// a mismatch is a hard internal error.
GenMarkovNode gen_markov_child(const GenMarkovNode& node, bool right);

std::vector<GenMarkovNode> enumerate_gen_markov(const Seq& mu, const Seq& nu, long depth);

// --- structural checks -------------------------------------------------

struct GraphReport {
    long depth = 0;
    bool evenly_prime = false;
    bool order_forward = false;   // <mu> before <nu>
    bool order_reversed = false;  // <rev mu> before <rev nu>
    bool extremal_mu = false;
    bool extremal_nu = false;
    bool evenly_palindromic = false;  // every sequence in every triple to depth

    bool almost_markov() const {
        return evenly_prime && order_forward && order_reversed && extremal_mu && extremal_nu;
    }
    bool markov() const { return almost_markov() && evenly_palindromic; }
};

GraphReport verify_markov_llsgraph(const Seq& mu, const Seq& nu, long depth);

struct MonotonicityResult {
    bool precondition_ok;
    bool monotone;
};

// Farey-coordinate order implies skew-lex order of middle periodisations.
MonotonicityResult monotonicity_check(const Seq& mu, const Seq& nu, long depth);

// All triples to the given depth pairwise distinct.
bool free_generated_to_depth(const Seq& mu, const Seq& nu, long depth);

// Skew-lex binary-search descent for the unique node whose middle equals
// target (exact sequence equality); nullopt after max_depth.
std::optional<TripleNode<Seq>> reconstruct_from_middle(const Seq& target, const Seq& mu,
                                                       const Seq& nu, long max_depth);

// --- uniqueness-collision search ----------------------------------------

// Smallest middle value at the given level: the all-L chain value
// breve(mu^(depth+1) + nu). Used as the completeness cap of the scan.
Int collision_value_cap(const Seq& mu, const Seq& nu, long depth);

struct CollisionGroup {
    Int value;
    std::vector<FareyCode> codes;  // in coordinate order
};

// Finds every group of distinct nodes sharing one middle value, complete for
// values up to collision_value_cap(mu, nu, depth) (a full level-by-level scan
// of all 2^(depth+1)-1 nodes is not representable at this depth; values
// strictly grow along descending paths, so the value cap bounds the walk).
// Nodes are walked with matrix pairs only; the middle recursion is checked
// against the matrix product at every node.
std::vector<CollisionGroup> collision_search(const Seq& mu, const Seq& nu, long depth,
                                             bool key_outer = false);

// Middle sequence of the node addressed by the code (replays concatenations).
Seq middle_sequence_of_code(const Seq& mu, const Seq& nu, const FareyCode& code);

}  // namespace mspec

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mspec/ints.hpp"
#include "mspec/matform.hpp"
#include "mspec/seq.hpp"
#include "mspec/surd.hpp"

namespace mspec {

using Point = std::pair<Int, Int>;

// The cone {(x,y) : low*x < y < high*x, x > 0} of a reduced arrangement;
// it is the one containing (1,0). Bounds: high > 1, -1 < low < 0, exact.
struct Cone {
    Surd high, low;
    Cone(Surd hi, Surd lo);
};

// slopes of the eigenlines of the reduced matrix of s
Cone cone_of_sequence(const Seq& s);

// Apex-facing boundary chain of the convex hull of the lattice points
// strictly between the slope lines with 1 <= x <= x_bound, ordered along the
// sail (ascending slope). Truncation at x_bound distorts only the far end:
// vertices with x <= x_bound / (floor(max |slope|) + 2) are final.
struct SailPolyline {
    std::vector<Point> vertices;
};

// generic chain between two exact slopes, low < high (not restricted to
// reduced arrangements; used for the adjacent cone via coordinate swap)
SailPolyline sail_chain(const Surd& low, const Surd& high, const Int& x_bound);

SailPolyline sail_of_cone(const Cone& c, const Int& x_bound);

// drop vertices beyond the guaranteed-correct prefix for the given scan bound
SailPolyline trim_guaranteed(const SailPolyline& p, const Surd& low, const Surd& high,
                             const Int& x_bound);

Int integer_length(const Point& a, const Point& b);
Int integer_sine(const Point& a, const Point& b, const Point& c);

// Alternating integer lengths and sines read along the polyline:
// il(V0 V1), lsin(V1), il(V1 V2), ..., il(V_{m-1} V_m). marked_index points
// at the il element of the segment leaving (1,0) upward.
struct LLSData {
    Seq sequence;
    std::size_t marked_index;
};

LLSData lls_from_sail(const SailPolyline& p);

// Minimum of |f| over 0 < max(|x|,|y|) <= box. The witness is deterministic:
// the minimizing class {v, -v} is folded to x > 0 (or x = 0, y > 0) and the
// representative with the smallest (|y|, |x|, y, x) wins.
struct BruteMin {
    Int value;
    Point witness;
};

BruteMin markov_minimum_bruteforce(const QuadForm& f, const Int& box);

// Extremality of an even sequence: the associated form attains the minimum
// of |f| over Z^2 \ {0} at (1,0), i.e. the sail minima of the (1,0)-cone and
// of the adjacent cone are both >= breve(s) (the former always attains it).
// The adjacent cone is skipped when s is evenly palindromic (its sail is
// integer congruent to the (1,0)-cone's); otherwise it is scanned explicitly
// in swapped coordinates.
struct ExtremalityResult {
    bool extremal;
    Int minimum;                   // min |f| over the scanned sails
    std::vector<Point> minimizers; // vertices attaining it (original coords)
};

ExtremalityResult is_extremal(const Seq& s);

// one full period of sail vertices of the (1,0)-cone, starting at (1,0)
std::vector<Point> sail_period_vertices(const Seq& s);

}  // namespace mspec

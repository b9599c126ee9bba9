#include "mspec/sail.hpp"

#include <algorithm>
#include <cmath>

namespace mspec {

namespace {

constexpr long kScanCap = 200'000'000L;  // column budget per scan
constexpr long kSpecBoundCap = 20'000'000L;

using u128 = unsigned __int128;
using i128 = __int128;

u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    u128 r = (u128)sqrtl((long double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// exact slope (P + Q*sqrt(D))/R with D squarefree, R >= 1
struct SlopeZ {
    Int P, Q, D, R;
    static SlopeZ of(const Surd& s) { return {s.p(), s.q(), s.d(), s.r()}; }
    Int floor_times(const Int& x) const { return fdiv(P * x + floor_mul_sqrt(Q * x, D), R); }
    bool exact_at(const Int& x) const { return Q == 0 && fmod(P * x, R) == 0; }
};

struct Slope64 {
    long P, Q, D, R;
    long floor_times(long x) const {
        i128 m = (i128)Q * x;
        i128 rad = 0;
        if (m != 0 && D != 0) {
            u128 t = (u128)(m < 0 ? -m : m);
            t = t * t * (u128)D;
            u128 s = isqrt_u128(t);
            rad = m > 0 ? (i128)s : -(i128)s - (i128)(s * s != t ? 1 : 0);
        }
        i128 num = (i128)P * x + rad;
        i128 q = num / R;
        if (num % R != 0 && num < 0) --q;
        return (long)q;
    }
    bool exact_at(long x) const {
        if (Q != 0) return false;
        return ((i128)P * x) % R == 0;
    }
};

std::size_t bits(const Int& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

bool slope_fits64(const Surd& s, std::size_t bound_bits) {
    return bits(s.p()) + bound_bits <= 60 && bits(s.r()) <= 60 &&
           2 * (bits(s.q()) + bound_bits) + bits(s.d()) <= 116;
}

// floor(max(|low|, |high|)) + 2; denominator of the guaranteed-prefix margin
Int slope_margin(const Surd& low, const Surd& high) {
    Surd alo = low.sign() < 0 ? -low : low;
    Surd ahi = high.sign() < 0 ? -high : high;
    Int m = std::max(alo.floor(), ahi.floor());
    return m + 2;
}

int cross3(const std::pair<long, long>& a, const std::pair<long, long>& b,
           const std::pair<long, long>& c, int) {
    i128 v = (i128)(b.first - a.first) * (c.second - b.second) -
             (i128)(b.second - a.second) * (c.first - b.first);
    return v < 0 ? -1 : v > 0 ? 1 : 0;
}

int cross3(const Point& a, const Point& b, const Point& c, long) {
    Int v = (b.first - a.first) * (c.second - b.second) -
            (b.second - a.second) * (c.first - b.first);
    return sgn(v);
}

// Streams column extremes in ascending x and keeps only hull vertices.
// Lower chain: lower convex hull of the low-side candidates (pop on
// cross <= 0). Upper chain: upper hull of the high-side candidates (pop on
// cross >= 0). Concatenating reversed(lower) + upper walks the sail by
// ascending slope.
template <class P, class LO, class HI, class X>
void scan_chains(const LO& lo, const HI& hi, X bound, std::vector<P>& lower,
                 std::vector<P>& upper) {
    for (X x = 1; x <= bound; ++x) {
        auto yh = hi.floor_times(x);
        if (hi.exact_at(x)) yh -= 1;
        auto yl = lo.floor_times(x) + 1;
        if (yl > yh) continue;
        P pl{x, yl};
        while (lower.size() >= 2 &&
               cross3(lower[lower.size() - 2], lower.back(), pl, 0) <= 0)
            lower.pop_back();
        lower.push_back(pl);
        P pu{x, yh};
        while (upper.size() >= 2 &&
               cross3(upper[upper.size() - 2], upper.back(), pu, 0) >= 0)
            upper.pop_back();
        upper.push_back(pu);
    }
}

}  // namespace

Cone::Cone(Surd hi, Surd lo) : high(std::move(hi)), low(std::move(lo)) {
    if (!(high > Surd(1))) throw std::domain_error("Cone: high slope must exceed 1");
    if (!(low > Surd(-1) && low.sign() < 0))
        throw std::domain_error("Cone: low slope must lie in (-1, 0)");
}

Cone cone_of_sequence(const Seq& s) {
    auto [hi, lo] = eigen_slopes(s);
    return Cone(hi, lo);
}

SailPolyline sail_chain(const Surd& low, const Surd& high, const Int& x_bound) {
    if (x_bound < 1) throw std::domain_error("sail_chain: x_bound must be >= 1");
    if (!(low < high)) throw std::domain_error("sail_chain: slopes out of order");
    if (x_bound > kScanCap) throw resource_limit_error("sail_chain: bound exceeds scan budget");

    std::size_t bb = bits(x_bound);
    SailPolyline out;
    if (slope_fits64(low, bb) && slope_fits64(high, bb) &&
        bits(slope_margin(low, high) * x_bound) <= 60) {
        Slope64 lo{low.p().get_si(), low.q().get_si(), low.d().get_si(), low.r().get_si()};
        Slope64 hi{high.p().get_si(), high.q().get_si(), high.d().get_si(), high.r().get_si()};
        std::vector<std::pair<long, long>> lower, upper;
        scan_chains(lo, hi, x_bound.get_si(), lower, upper);
        out.vertices.reserve(lower.size() + upper.size());
        for (auto it = lower.rbegin(); it != lower.rend(); ++it)
            out.vertices.emplace_back(it->first, it->second);
        for (auto& p : upper) {
            if (!out.vertices.empty() && out.vertices.back() == Point(p.first, p.second)) continue;
            out.vertices.emplace_back(p.first, p.second);
        }
    } else {
        SlopeZ lo = SlopeZ::of(low), hi = SlopeZ::of(high);
        std::vector<Point> lower, upper;
        scan_chains(lo, hi, x_bound, lower, upper);
        out.vertices.assign(lower.rbegin(), lower.rend());
        for (auto& p : upper) {
            if (!out.vertices.empty() && out.vertices.back() == p) continue;
            out.vertices.push_back(p);
        }
    }
    return out;
}

SailPolyline sail_of_cone(const Cone& c, const Int& x_bound) {
    return sail_chain(c.low, c.high, x_bound);
}

SailPolyline trim_guaranteed(const SailPolyline& p, const Surd& low, const Surd& high,
                             const Int& x_bound) {
    Int limit = fdiv(x_bound, slope_margin(low, high));
    SailPolyline out;
    for (auto& v : p.vertices)
        if (v.first <= limit) out.vertices.push_back(v);
    return out;
}

Int integer_length(const Point& a, const Point& b) {
    return gcd(Int(b.first - a.first), Int(b.second - a.second));
}

Int integer_sine(const Point& a, const Point& b, const Point& c) {
    Int det = (b.first - a.first) * (c.second - b.second) -
              (b.second - a.second) * (c.first - b.first);
    return abs(det) / (integer_length(a, b) * integer_length(b, c));
}

LLSData lls_from_sail(const SailPolyline& p) {
    const auto& v = p.vertices;
    if (v.size() < 2) throw std::domain_error("lls_from_sail: need at least 2 vertices");
    std::vector<Int> seq;
    seq.reserve(2 * v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (i) seq.push_back(integer_sine(v[i - 1], v[i], v[i + 1]));
        seq.push_back(integer_length(v[i], v[i + 1]));
    }
    std::size_t marked = 0;
    bool found = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].first == 1 && v[i].second == 0) {
            marked = 2 * i;
            found = true;
            break;
        }
    }
    if (!found) throw std::domain_error("lls_from_sail: (1,0) is not an interior vertex");
    return {Seq{std::move(seq)}, marked};
}

BruteMin markov_minimum_bruteforce(const QuadForm& f, const Int& box) {
    if (box < 1) throw std::domain_error("markov_minimum_bruteforce: box must be >= 1");
    if (f.discriminant() <= 0)
        throw std::domain_error("markov_minimum_bruteforce: needs positive discriminant");
    if (box > 100000) throw resource_limit_error("markov_minimum_bruteforce: box too large");

    // fold v ~ -v to x > 0 (or x = 0, y > 0); smallest (|y|, |x|, y, x) wins ties
    auto key_less = [](const Point& a, const Point& b) {
        Int ay = abs(a.second), by = abs(b.second);
        if (ay != by) return ay < by;
        Int ax = abs(a.first), bx = abs(b.first);
        if (ax != bx) return ax < bx;
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    };

    bool fast = bits(f.A) <= 50 && bits(f.B) <= 50 && bits(f.C) <= 50 && box <= (1 << 20);
    if (fast) {
        long bx = box.get_si();
        long A = f.A.get_si(), B = f.B.get_si(), C = f.C.get_si();
        i128 best_val = 0;
        long px = 0, py = 0;
        bool have = false;
        for (long x = 0; x <= bx; ++x) {
            long y0 = (x == 0) ? 1 : -bx;
            for (long y = y0; y <= bx; ++y) {
                if (x == 0 && y == 0) continue;
                i128 val = (i128)A * x * x + (i128)B * x * y + (i128)C * y * y;
                if (val < 0) val = -val;
                if (have && val > best_val) continue;
                bool better = !have || val < best_val;
                if (!better) {
                    Point cand{x, y}, cur{px, py};
                    better = key_less(cand, cur);
                }
                if (better) {
                    best_val = val;
                    px = x;
                    py = y;
                    have = true;
                }
            }
        }
        Int v = Int((long)(best_val >> 62)) * (Int(1) << 62) +
                Int((long)(best_val & (((i128)1 << 62) - 1)));
        return {v, {Int(px), Int(py)}};
    }

    Int best_val;
    Point best;
    bool have = false;
    for (Int x = 0; x <= box; ++x) {
        Int y0 = (x == 0) ? Int(1) : Int(-box);
        for (Int y = y0; y <= box; ++y) {
            if (x == 0 && y == 0) continue;
            Int val = abs(f(x, y));
            Point pt{x, y};
            if (!have || val < best_val || (val == best_val && key_less(pt, best))) {
                best_val = val;
                best = pt;
                have = true;
            }
        }
    }
    return {best_val, best};
}

std::vector<Point> sail_period_vertices(const Seq& s) {
    Cone c = cone_of_sequence(s);
    Mat2 m = map_A(s);
    Int margin = slope_margin(c.low, c.high);
    Int bound = (m.a + 1) * margin + margin;
    if (bound > kScanCap) throw resource_limit_error("sail_period_vertices: bound too large");
    SailPolyline chain = trim_guaranteed(sail_chain(c.low, c.high, bound), c.low, c.high, bound);
    std::vector<Point> out;
    bool collecting = false;
    for (auto& v : chain.vertices) {
        if (v == Point(1, 0)) collecting = true;
        if (collecting) {
            if (v.first > m.a) break;
            out.push_back(v);
        }
    }
    if (out.empty() || out.front() != Point(1, 0))
        throw std::logic_error("sail_period_vertices: (1,0) not found on the sail");
    return out;
}

namespace {

struct ConeScanMin {
    Int minimum;
    std::vector<Point> minimizers;  // in scan coordinates
};

// min |f_eval| over the guaranteed sail vertices of the chain between the
// given slopes, scanning 1 <= x <= bound
template <class F>
ConeScanMin scan_min(const Surd& low, const Surd& high, const Int& bound, F&& f_eval) {
    SailPolyline chain =
        trim_guaranteed(sail_chain(low, high, bound), low, high, bound);
    if (chain.vertices.empty()) throw std::logic_error("scan_min: empty guaranteed sail");
    ConeScanMin r;
    for (auto& v : chain.vertices) {
        Int val = abs(f_eval(v));
        if (r.minimizers.empty() || val < r.minimum) {
            r.minimum = val;
            r.minimizers = {v};
        } else if (val == r.minimum) {
            r.minimizers.push_back(v);
        }
    }
    return r;
}

}  // namespace

ExtremalityResult is_extremal(const Seq& s) {
    QuadForm f = map_C(s);
    Int target = f.A;  // f(1,0) = breve(s)
    Cone cone = cone_of_sequence(s);
    Mat2 m = map_A(s);

    // (1,0)-cone: one period of vertices reaches x = K_2^{n-1} = m.a; the
    // scan bound honors the map_A(s+s) prescription while it stays tractable.
    Int margin = slope_margin(cone.low, cone.high);
    Int bound = (m.a + 1) * margin + margin;
    Mat2 mss = map_A(concat(s, s));
    if (mss.d > bound && mss.d <= kSpecBoundCap) bound = mss.d;
    ConeScanMin east = scan_min(cone.low, cone.high, bound,
                                [&](const Point& v) { return f(v.first, v.second); });
    if (east.minimum < target) return {false, east.minimum, std::move(east.minimizers)};

    ExtremalityResult res{true, target, std::move(east.minimizers)};

    // Adjacent cone, scanned in swapped coordinates; its slopes are the
    // reciprocals. Skipped when the sail is integer congruent to the east
    // one (evenly palindromic period).
    if (!is_evenly_palindromic(s)) {
        Surd lo2 = cone.low.reciprocal();   // below -1
        Surd hi2 = cone.high.reciprocal();  // in (0,1)
        Int margin2 = slope_margin(lo2, hi2);
        Int bound2 = (m.d + 1) * margin2 + margin2;
        ConeScanMin north = scan_min(lo2, hi2, bound2,
                                     [&](const Point& v) { return f(v.second, v.first); });
        if (north.minimum < target) {
            std::vector<Point> mapped;
            mapped.reserve(north.minimizers.size());
            for (auto& v : north.minimizers) mapped.emplace_back(v.second, v.first);
            return {false, north.minimum, std::move(mapped)};
        }
        if (north.minimum == target)
            for (auto& v : north.minimizers) res.minimizers.emplace_back(v.second, v.first);
    }
    std::sort(res.minimizers.begin(), res.minimizers.end());
    res.minimizers.erase(std::unique(res.minimizers.begin(), res.minimizers.end()),
                         res.minimizers.end());
    return res;
}

}  // namespace mspec

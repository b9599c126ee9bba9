#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mspec/ints.hpp"

namespace mspec {

// Finite sequence of integers. Continuant machinery works for arbitrary
// entries; operations that require positive elements (orders, periodic
// values, ...) check it themselves. Continued-fraction expansions may carry
// an arbitrary leading element, everything after it is >= 1.
//
// All values in this module are immutable after construction and all
// operations are pure, so they can be shared freely between threads.
struct Seq {
    std::vector<Int> e;

    Seq() = default;
    explicit Seq(std::vector<Int> v) : e(std::move(v)) {}
    Seq(std::initializer_list<long> xs) {
        e.reserve(xs.size());
        for (long x : xs) e.emplace_back(x);
    }

    std::size_t size() const { return e.size(); }
    bool empty() const { return e.empty(); }
    const Int& operator[](std::size_t i) const { return e[i]; }
    bool operator==(const Seq&) const = default;
};

bool all_positive(const Seq& s);
void require_positive(const Seq& s, const char* where);

Seq concat(const Seq& a, const Seq& b);
Seq reversed(const Seq& s);
Seq repeat(const Seq& s, std::size_t k);
Seq rotated(const Seq& s, std::size_t k);  // starts at s[k]

// Continuant K(a_1..a_n); K() = 1.
Int continuant(const Seq& s);

// Partial continuant K_i^j = K(a_i..a_j), 1-based, 1 <= i <= j+1 <= n+1.
// j == i-2 is also accepted and yields 0, closing the two-term recurrence.
Int partial_continuant(const Seq& s, std::size_t i, std::size_t j);

// K with the last element dropped; the generalised Markov number of s.
Int breve(const Seq& s);

// t(s) = K_1^n + K_2^{n-1} = trace of the associated matrix;
// equals breve(s+s)/breve(s) exactly.
Int trace_coefficient(const Seq& s);

// Eventually periodic infinite sequence (a_1..a_k, <b_1..b_l>).
struct EventuallyPeriodicSeq {
    Seq preperiod;
    Seq period;  // nonempty

    EventuallyPeriodicSeq(Seq pre, Seq per);
    // 1-based stream element
    const Int& at(std::size_t pos) const;
};

inline EventuallyPeriodicSeq periodisation(const Seq& s) { return {Seq{}, s}; }

// Skew-lexicographic comparison of the two infinite streams: at the first
// differing position k, a > b iff (k odd and a_k > b_k) or (k even and
// a_k < b_k). Equality is decided after max(preperiods) + |p_a| + |p_b|
// positions (Fine-Wilf style coincidence bound for periodic words).
std::strong_ordering skew_lex_compare(const EventuallyPeriodicSeq& a,
                                      const EventuallyPeriodicSeq& b);

// True iff even-length s is not a k-fold (k >= 2) repetition of an
// even-length block. Throws on odd length.
bool is_evenly_prime(const Seq& s);

// True iff the cyclic word a_1..a_2n admits a reflection symmetry
// a_{k+m} = a_{k-m-1} (indices mod 2n) for some k. Throws on odd length.
bool is_evenly_palindromic(const Seq& s);

bool is_cyclically_equivalent(const Seq& a, const Seq& b);

enum class CfParity { canonical, odd, even };

// Regular continued fraction of p/q (q >= 1). Canonical: floor-based
// expansion, arbitrary integer first element, last element != 1 unless the
// expansion is a single element. odd/even: requested length parity, all
// elements positive; throws std::domain_error when no such expansion exists.
Seq rational_to_cf(const Int& p, const Int& q, CfParity parity = CfParity::canonical);

// Exact value of [a_1; a_2 : ... : a_n], reduced. Elements after the first
// must be positive.
Rat cf_to_rational(const Seq& s);

// Sequence literal: term(,term)* where term := INT | '(' INT(,INT)* ')' '^' INT.
// Example: "4,4,(11)^8". Elements are >= 1.
Seq parse_seq_literal(const std::string& text);
std::string format_seq(const Seq& s);

}  // namespace mspec

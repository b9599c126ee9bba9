#include "mspec/seq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mspec {

bool all_positive(const Seq& s) {
    return std::all_of(s.e.begin(), s.e.end(), [](const Int& x) { return x >= 1; });
}

void require_positive(const Seq& s, const char* where) {
    if (!all_positive(s)) throw std::domain_error(std::string(where) + ": elements must be >= 1");
}

Seq concat(const Seq& a, const Seq& b) {
    std::vector<Int> v;
    v.reserve(a.size() + b.size());
    v.insert(v.end(), a.e.begin(), a.e.end());
    v.insert(v.end(), b.e.begin(), b.e.end());
    return Seq{std::move(v)};
}

Seq reversed(const Seq& s) { return Seq{{s.e.rbegin(), s.e.rend()}}; }

Seq repeat(const Seq& s, std::size_t k) {
    std::vector<Int> v;
    v.reserve(s.size() * k);
    for (std::size_t i = 0; i < k; ++i) v.insert(v.end(), s.e.begin(), s.e.end());
    return Seq{std::move(v)};
}

Seq rotated(const Seq& s, std::size_t k) {
    if (s.empty()) return s;
    k %= s.size();
    std::vector<Int> v(s.e.begin() + k, s.e.end());
    v.insert(v.end(), s.e.begin(), s.e.begin() + k);
    return Seq{std::move(v)};
}

namespace {

// K(first..last), half-open range of vector indices
Int continuant_range(const std::vector<Int>& e, std::size_t first, std::size_t last) {
    Int km2 = 0, km1 = 1;  // K_{-1}, K_0
    for (std::size_t j = first; j < last; ++j) {
        Int k = e[j] * km1 + km2;
        km2 = km1;
        km1 = std::move(k);
    }
    return km1;
}

}  // namespace

Int continuant(const Seq& s) { return continuant_range(s.e, 0, s.size()); }

Int partial_continuant(const Seq& s, std::size_t i, std::size_t j) {
    std::size_t n = s.size();
    if (i < 1) throw std::out_of_range("partial_continuant: i out of range");
    if (j + 2 == i && i <= n + 2) return 0;  // recurrence extension below the empty continuant
    if (j + 1 == i && i <= n + 1) return 1;
    if (i > n || j < i || j > n) throw std::out_of_range("partial_continuant: index range");
    return continuant_range(s.e, i - 1, j);
}

Int breve(const Seq& s) {
    if (s.empty()) throw std::domain_error("breve: empty sequence");
    return continuant_range(s.e, 0, s.size() - 1);
}

Int trace_coefficient(const Seq& s) {
    std::size_t n = s.size();
    if (n == 0) throw std::domain_error("trace_coefficient: empty sequence");
    return partial_continuant(s, 1, n) + partial_continuant(s, 2, n - 1);
}

EventuallyPeriodicSeq::EventuallyPeriodicSeq(Seq pre, Seq per)
    : preperiod(std::move(pre)), period(std::move(per)) {
    if (period.empty()) throw std::domain_error("EventuallyPeriodicSeq: empty period");
    require_positive(preperiod, "EventuallyPeriodicSeq");
    require_positive(period, "EventuallyPeriodicSeq");
}

const Int& EventuallyPeriodicSeq::at(std::size_t pos) const {
    std::size_t k = preperiod.size();
    if (pos <= k) return preperiod[pos - 1];
    return period[(pos - k - 1) % period.size()];
}

std::strong_ordering skew_lex_compare(const EventuallyPeriodicSeq& a,
                                      const EventuallyPeriodicSeq& b) {
    std::size_t bound = std::max(a.preperiod.size(), b.preperiod.size()) + a.period.size() +
                        b.period.size();
    for (std::size_t pos = 1; pos <= bound; ++pos) {
        const Int& x = a.at(pos);
        const Int& y = b.at(pos);
        if (x == y) continue;
        bool odd = pos % 2 == 1;
        bool greater = odd ? x > y : x < y;
        return greater ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

bool is_evenly_prime(const Seq& s) {
    std::size_t n = s.size();
    if (n == 0 || n % 2) throw std::domain_error("is_evenly_prime: length must be even >= 2");
    for (std::size_t l = 2; l < n; l += 2) {
        if (n % l) continue;
        bool rep = true;
        for (std::size_t i = l; i < n && rep; ++i) rep = s[i] == s[i % l];
        if (rep) return false;
    }
    return true;
}

bool is_evenly_palindromic(const Seq& s) {
    std::size_t n = s.size();
    if (n == 0 || n % 2) throw std::domain_error("is_evenly_palindromic: length must be even >= 2");
    auto at = [&](long i) -> const Int& { return s[((i % (long)n) + n) % (long)n]; };
    for (long k = 0; k < (long)n; ++k) {
        bool ok = true;
        for (long m = 0; m < (long)n && ok; ++m) ok = at(k + m) == at(k - m - 1);
        if (ok) return true;
    }
    return false;
}

bool is_cyclically_equivalent(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    Seq aa = concat(a, a);
    auto it = std::search(aa.e.begin(), aa.e.end(), b.e.begin(), b.e.end());
    return it != aa.e.end();
}

Seq rational_to_cf(const Int& p, const Int& q, CfParity parity) {
    if (q < 1) throw std::domain_error("rational_to_cf: q must be >= 1");
    Int num = p, den = q;
    Int g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (parity != CfParity::canonical && num <= 0)
        throw std::domain_error("rational_to_cf: parity expansion needs p/q > 0");

    std::vector<Int> cf;
    while (den != 0) {
        Int a = fdiv(num, den);
        cf.push_back(a);
        Int r = num - a * den;
        num = den;
        den = r;
    }
    // floor expansion ends with last element >= 2 whenever length > 1

    if (parity == CfParity::canonical) return Seq{std::move(cf)};

    if (cf.front() < 1)
        throw std::domain_error("rational_to_cf: no positive-element expansion exists");
    bool want_odd = parity == CfParity::odd;
    if ((cf.size() % 2 == 1) != want_odd) {
        Int& last = cf.back();
        if (last >= 2) {
            last -= 1;
            cf.emplace_back(1);
        } else {
            // only [1] reaches here; there is no positive even expansion of 1
            throw std::domain_error("rational_to_cf: no expansion of requested parity");
        }
    }
    return Seq{std::move(cf)};
}

Rat cf_to_rational(const Seq& s) {
    if (s.empty()) throw std::domain_error("cf_to_rational: empty sequence");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < 1) throw std::domain_error("cf_to_rational: elements after the first must be >= 1");
    Int num = continuant(s);
    Int den = partial_continuant(s, 2, s.size());
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

void skip_ws(const std::string& t, std::size_t& i) {
    while (i < t.size() && std::isspace((unsigned char)t[i])) ++i;
}

Int parse_int(const std::string& t, std::size_t& i) {
    skip_ws(t, i);
    std::size_t start = i;
    while (i < t.size() && std::isdigit((unsigned char)t[i])) ++i;
    if (start == i) throw std::invalid_argument("sequence literal: expected integer");
    Int v(t.substr(start, i - start));
    if (v < 1) throw std::invalid_argument("sequence literal: elements must be >= 1");
    return v;
}

}  // namespace

Seq parse_seq_literal(const std::string& text) {
    std::vector<Int> out;
    std::size_t i = 0;
    while (true) {
        skip_ws(text, i);
        if (i < text.size() && text[i] == '(') {
            ++i;
            std::vector<Int> group;
            group.push_back(parse_int(text, i));
            skip_ws(text, i);
            while (i < text.size() && text[i] == ',') {
                ++i;
                group.push_back(parse_int(text, i));
                skip_ws(text, i);
            }
            if (i >= text.size() || text[i] != ')')
                throw std::invalid_argument("sequence literal: expected ')'");
            ++i;
            skip_ws(text, i);
            if (i >= text.size() || text[i] != '^')
                throw std::invalid_argument("sequence literal: expected '^' after group");
            ++i;
            Int reps = parse_int(text, i);
            if (reps > 100000) throw std::invalid_argument("sequence literal: repetition too large");
            for (Int k = 0; k < reps; ++k) out.insert(out.end(), group.begin(), group.end());
        } else {
            out.push_back(parse_int(text, i));
        }
        skip_ws(text, i);
        if (i == text.size()) break;
        if (text[i] != ',') throw std::invalid_argument("sequence literal: expected ','");
        ++i;
    }
    return Seq{std::move(out)};
}

std::string format_seq(const Seq& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os.str();
}

}  // namespace mspec

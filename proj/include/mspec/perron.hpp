#pragma once

#include <cstddef>
#include <vector>

#include "mspec/matform.hpp"
#include "mspec/seq.hpp"
#include "mspec/surd.hpp"

namespace mspec {

// Marked purely periodic LLS sequence: period plus the index of the marked
// element.
struct MarkedPeriodicLLS {
    Seq period;
    std::size_t mark = 0;

    MarkedPeriodicLLS(Seq per, std::size_t m = 0);
};

// E_i = a_i + [0; a_{i+1}, a_{i+2}, ...] + [0; a_{i-1}, a_{i-2}, ...], exact.
// Both tails are periodic, so every E_i lives in one real quadratic field.
Surd perron_term(const MarkedPeriodicLLS& m, std::size_t i);

std::vector<Surd> perron_terms(const MarkedPeriodicLLS& m);

// The supremum of the E_i over one period with its (0-based) index; smallest
// index wins ties. The spectrum value of the arrangement is this maximum,
// and min |f| = sqrt(disc) / max_i E_i.
struct PerronExtremum {
    Surd value;
    std::size_t argmax;
};

PerronExtremum perron_extremum(const MarkedPeriodicLLS& m);

// exact equality test between sqrt(N)/d and a surd value
bool radical_equals_surd(const RadicalRatio& r, const Surd& s);

enum class PerronSpectrumStatus { matches, differs, not_extremal };

// Whether perron_extremum(<s>) equals map_W(s) as exact reals. Requires s
// even; reports non-extremal input distinctly instead of comparing.
PerronSpectrumStatus perron_matches_spectrum(const Seq& s);

}  // namespace mspec

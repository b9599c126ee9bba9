#include "mspec/perron.hpp"

#include "mspec/sail.hpp"

namespace mspec {

MarkedPeriodicLLS::MarkedPeriodicLLS(Seq per, std::size_t m) : period(std::move(per)), mark(m) {
    if (period.empty()) throw std::domain_error("MarkedPeriodicLLS: empty period");
    require_positive(period, "MarkedPeriodicLLS");
    if (mark >= period.size()) throw std::domain_error("MarkedPeriodicLLS: mark out of range");
}

Surd perron_term(const MarkedPeriodicLLS& m, std::size_t i) {
    const Seq& s = m.period;
    std::size_t n = s.size();
    if (i >= n) throw std::domain_error("perron_term: index out of range");
    // forward tail reads a_{i+1}, a_{i+2}, ...; backward reads a_{i-1}, a_{i-2}, ...
    Seq fwd = rotated(s, (i + 1) % n);
    Seq bwd = reversed(rotated(s, i));
    Surd t_fwd = periodic_cf_value(fwd).reciprocal();
    Surd t_bwd = periodic_cf_value(bwd).reciprocal();
    return Surd(s[i]) + t_fwd + t_bwd;
}

std::vector<Surd> perron_terms(const MarkedPeriodicLLS& m) {
    std::vector<Surd> out;
    out.reserve(m.period.size());
    for (std::size_t i = 0; i < m.period.size(); ++i)
        out.push_back(perron_term(m, (m.mark + i) % m.period.size()));
    return out;
}

PerronExtremum perron_extremum(const MarkedPeriodicLLS& m) {
    std::size_t n = m.period.size();
    PerronExtremum best{perron_term(m, m.mark), m.mark};
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t i = (m.mark + k) % n;
        Surd e = perron_term(m, i);
        if (e > best.value) best = {e, i};
    }
    return best;
}

bool radical_equals_surd(const RadicalRatio& r, const Surd& s) {
    if (s.sign() <= 0) return false;
    // sqrt(N)/d == (p + q sqrt(D))/r  <=>  p == 0 path or squared comparison
    // with matching signs; compare exactly: (r_s * sqrt(N))  vs  d*(p + q sqrt(D))
    // square both sides: r_s^2 N  vs  d^2 (p^2 + q^2 D + 2 p q sqrt(D))
    Int lhs = s.r() * s.r() * r.N;
    Int rational_part = r.d * r.d * (s.p() * s.p() + s.q() * s.q() * s.d());
    Int radical_coeff = r.d * r.d * 2 * s.p() * s.q();
    // lhs - rational_part == radical_coeff * sqrt(D)?
    Int diff = lhs - rational_part;
    if (radical_coeff == 0) return diff == 0;
    if (sgn(diff) != sgn(radical_coeff)) return false;
    return diff * diff == radical_coeff * radical_coeff * s.d();
}

PerronSpectrumStatus perron_matches_spectrum(const Seq& s) {
    if (!is_extremal(s).extremal) return PerronSpectrumStatus::not_extremal;
    PerronExtremum e = perron_extremum(MarkedPeriodicLLS(s));
    return radical_equals_surd(map_W(s), e.value) ? PerronSpectrumStatus::matches
                                                  : PerronSpectrumStatus::differs;
}

}  // namespace mspec

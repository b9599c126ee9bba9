#include <doctest.h>

#include <random>

#include "mspec/perron.hpp"
#include "mspec/sail.hpp"

using namespace mspec;

TEST_CASE("perron extremum on one-element periods") {
    PerronExtremum e1 = perron_extremum(MarkedPeriodicLLS(Seq{1}));
    CHECK(e1.value == Surd(0, 1, 5, 1));  // sqrt(5)
    PerronExtremum e2 = perron_extremum(MarkedPeriodicLLS(Seq{2}));
    CHECK(e2.value == Surd(0, 2, 2, 1));  // sqrt(8)
}

TEST_CASE("perron extremum of (2,2,3,3)") {
    Seq s{2, 2, 3, 3};
    PerronExtremum e = perron_extremum(MarkedPeriodicLLS(s));
    CHECK(radical_equals_surd(RadicalRatio(3965, 17), e.value));
    CHECK(s[e.argmax] == 3);
    CHECK(radical_equals_surd(map_W(s), e.value));
}

TEST_CASE("every perron term is a pure radical over one field") {
    Seq s{2, 2, 3, 3};
    MarkedPeriodicLLS m(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Surd e = perron_term(m, i);
        CHECK(e.p() == 0);  // sqrt(disc)/integer
        CHECK(e.sign() > 0);
    }
}

TEST_CASE("marking invariance") {
    Seq s{1, 2, 1, 1, 3, 4};
    Surd best = perron_extremum(MarkedPeriodicLLS(s, 0)).value;
    for (std::size_t mark = 1; mark < s.size(); ++mark)
        CHECK(perron_extremum(MarkedPeriodicLLS(s, mark)).value == best);
}

TEST_CASE("perron matches the spectrum maps") {
    CHECK(perron_matches_spectrum(Seq{1, 1}) == PerronSpectrumStatus::matches);
    CHECK(perron_matches_spectrum(Seq{2, 2, 3, 3}) == PerronSpectrumStatus::matches);
    CHECK(perron_matches_spectrum(Seq{2, 2, 2, 2, 3, 3}) == PerronSpectrumStatus::matches);
    CHECK(radical_equals_surd(RadicalRatio(14965, 33),
                              perron_extremum(MarkedPeriodicLLS(Seq{2, 2, 2, 2, 3, 3})).value));
    CHECK(perron_matches_spectrum(Seq{1, 1, 2, 2, 2, 2, 1, 1, 2, 2}) ==
          PerronSpectrumStatus::not_extremal);
}

TEST_CASE("perron value against the brute-force minimum") {
    for (const Seq& s : {Seq{1, 1}, Seq{2, 2}, Seq{2, 2, 3, 3}, Seq{1, 1, 2, 2}}) {
        QuadForm f = map_C(s);
        Surd e = perron_extremum(MarkedPeriodicLLS(s)).value;
        // sqrt(disc)/E must equal the minimum of |f| exactly
        auto [sq, sf] = squarefree_split(f.discriminant());
        Surd sqrt_disc(0, sq, sf, 1);
        Surd quotient = sqrt_disc / e;
        CHECK(quotient.is_rational());
        CHECK(quotient.r() == 1);
        BruteMin m = markov_minimum_bruteforce(f, 80);
        CHECK(quotient.p() == m.value);
    }
}

TEST_CASE("radical vs surd equality") {
    CHECK(radical_equals_surd(RadicalRatio(5, 1), Surd(0, 1, 5, 1)));
    CHECK(radical_equals_surd(RadicalRatio(8, 1), Surd(0, 2, 2, 1)));
    CHECK_FALSE(radical_equals_surd(RadicalRatio(5, 1), Surd(0, 1, 5, 2)));
    CHECK_FALSE(radical_equals_surd(RadicalRatio(5, 1), Surd(1, 1, 2, 1)));
    CHECK(radical_equals_surd(RadicalRatio(9, 2), Surd(3, 0, 0, 2)));
}

TEST_CASE("each perron term satisfies an explicit integer quadratic") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<std::size_t> ld(1, 5);
        std::uniform_int_distribution<long> ed(1, 5);
        std::vector<Int> v;
        std::size_t n = ld(rng);
        for (std::size_t i = 0; i < n; ++i) v.emplace_back(ed(rng));
        Seq s{std::move(v)};
        MarkedPeriodicLLS m(s);
        for (std::size_t i = 0; i < n; ++i) {
            Surd e = perron_term(m, i);
            // (r*x - p)^2 = q^2 d  =>  r^2 x^2 - 2pr x + (p^2 - q^2 d) = 0
            Surd zero = Surd(e.r() * e.r()) * e * e - Surd(2 * e.p() * e.r()) * e +
                        Surd(e.p() * e.p() - e.q() * e.q() * e.d());
            CHECK(zero.is_zero());
        }
    }
}

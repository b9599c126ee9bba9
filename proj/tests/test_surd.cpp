#include <doctest.h>

#include <random>

#include "mspec/seq.hpp"
#include "mspec/surd.hpp"

using namespace mspec;

namespace {

Seq random_period(std::mt19937_64& rng, std::size_t maxlen, long maxentry) {
    std::uniform_int_distribution<std::size_t> ld(1, maxlen);
    std::uniform_int_distribution<long> ed(1, maxentry);
    std::vector<Int> v;
    std::size_t n = ld(rng);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(ed(rng));
    return Seq{std::move(v)};
}

}  // namespace

TEST_CASE("periodic continued fraction values") {
    Surd golden = periodic_cf_value(Seq{1});
    CHECK(golden.p() == 1);
    CHECK(golden.q() == 1);
    CHECK(golden.d() == 5);
    CHECK(golden.r() == 2);

    Surd s2 = periodic_cf_value(Seq{2});
    CHECK(s2 == Surd(1, 1, 2, 1));  // 1 + sqrt(2)

    Surd v = periodic_cf_value(Seq{1, 1, 2, 2});
    CHECK(v == Surd(9, 1, 221, 14));
}

TEST_CASE("negative periodic tails") {
    CHECK(neg_periodic_tail(Seq{1}) == Surd(1, -1, 5, 2));
    CHECK(neg_periodic_tail(Seq{2}) == Surd(1, -1, 2, 1));
    Surd t = neg_periodic_tail(Seq{1, 1, 2, 2});
    CHECK(t == -periodic_cf_value(Seq{2, 2, 1, 1}).reciprocal());
    CHECK(t.sign() < 0);
    CHECK(t > Surd(-1));
}

TEST_CASE("exact comparison, also across radicands") {
    Surd golden = periodic_cf_value(Seq{1});
    Surd s2 = periodic_cf_value(Seq{2});
    CHECK(golden < s2);
    CHECK(golden.compare(golden) == std::strong_ordering::equal);
    CHECK(Surd(9, 1, 221, 14) > Surd(19, 1, 1517, 34));
    CHECK(Surd(0, 1, 2, 1) < Surd(0, 1, 3, 1));
    CHECK(Surd(0, -1, 2, 1) > Surd(0, -1, 3, 1));
    CHECK(Surd(5, 0, 0, 3) < Surd(0, 1, 3, 1));  // 5/3 < sqrt(3)
    CHECK(Surd(1, 1, 2, 1) == Surd(2, 1, 8, 2)); // (2 + sqrt(8))/2 normalizes
}

TEST_CASE("floor") {
    CHECK(periodic_cf_value(Seq{1}).floor() == 1);
    CHECK(periodic_cf_value(Seq{2}).floor() == 2);
    CHECK(neg_periodic_tail(Seq{1}).floor() == -1);
    CHECK(Surd(-7, 0, 0, 2).floor() == -4);
    CHECK(Surd(7, 0, 0, 2).floor() == 3);
}

TEST_CASE("arithmetic") {
    Surd golden = periodic_cf_value(Seq{1});
    CHECK(golden + golden.conjugate() == Surd(1));
    CHECK(golden * golden.conjugate() == Surd(-1));
    CHECK(golden.reciprocal() == Surd(-1, 1, 5, 2));
    CHECK(golden - golden == Surd(0));
    CHECK((golden / golden) == Surd(1));
    CHECK_THROWS_AS(Surd(0, 1, 2, 1) + Surd(0, 1, 3, 1), std::domain_error);
    CHECK_THROWS_AS(Surd(0).reciprocal(), std::domain_error);
    // rational with irrational mixes fine
    CHECK(Surd(2) * Surd(0, 1, 3, 1) == Surd(0, 2, 3, 1));
}

TEST_CASE("decimals") {
    CHECK(periodic_cf_value(Seq{1}).to_decimal(5) == "1.61803");
    CHECK(Surd(0, 1, 221, 5).to_decimal(6) == "2.973213");
    CHECK(Surd(3).to_decimal(2) == "3.00");
    CHECK(neg_periodic_tail(Seq{1}).to_decimal(4) == "-0.6180");
    CHECK(Surd(0).to_decimal(3) == "0.000");
}

TEST_CASE("defining quadratic is satisfied exactly") {
    std::mt19937_64 rng(2213);
    for (int t = 0; t < 200; ++t) {
        Seq s = random_period(rng, 6, 6);
        std::size_t n = s.size();
        Surd x = periodic_cf_value(s);
        Int a = partial_continuant(s, 2, n);
        Int b = partial_continuant(s, 2, n - 1) - partial_continuant(s, 1, n);
        Int c = -partial_continuant(s, 1, n - 1);
        Surd zero = Surd(a) * x * x + Surd(b) * x + Surd(c);
        CHECK(zero.is_zero());
        CHECK(x > Surd(1));
        Surd tail = neg_periodic_tail(s);
        CHECK(tail > Surd(-1));
        CHECK(tail.sign() < 0);
    }
}

TEST_CASE("re-expansion reproduces the period") {
    std::mt19937_64 rng(2214);
    for (int t = 0; t < 120; ++t) {
        Seq s = random_period(rng, 8, 5);
        Surd x = periodic_cf_value(s);
        Seq exp = cf_expansion(x, 3 * s.size());
        REQUIRE(exp.size() == 3 * s.size());
        for (std::size_t i = 0; i < exp.size(); ++i) CHECK(exp[i] == s[i % s.size()]);
    }
}

TEST_CASE("comparison consistent with decimals") {
    std::mt19937_64 rng(2215);
    for (int t = 0; t < 150; ++t) {
        Seq a = random_period(rng, 5, 5);
        Seq b = random_period(rng, 5, 5);
        Surd x = periodic_cf_value(a), y = periodic_cf_value(b);
        auto c = x.compare(y);
        std::string dx = x.to_decimal(50), dy = y.to_decimal(50);
        if (c == std::strong_ordering::less) CHECK(dx <= dy);
        if (c == std::strong_ordering::greater) CHECK(dx >= dy);
        if (c == std::strong_ordering::equal) CHECK(dx == dy);
    }
}

TEST_CASE("decimal digit budget") {
    CHECK_THROWS_AS(Surd(1).to_decimal(10001), std::domain_error);
    CHECK(Surd(1).to_decimal(0) == "1");
}

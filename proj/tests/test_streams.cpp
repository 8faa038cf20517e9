#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "test_util.hpp"

using namespace cantor;
using namespace cantor::testutil;

TEST_CASE("canonical terminating expansion of 1/2") {
    rational_stream s(mpq_class(1, 2));
    CHECK(s.digit_at(1) == 1);
    for (uint64_t k = 2; k <= 12; ++k)
        CHECK(s.digit_at(k) == 0);
    CHECK(s.digit_prefix(4) == "1000");
}

TEST_CASE("digits of sqrt(2) - 1 under the identity map") {
    auto roots = isolate_roots(int_poly::from_longs({-1, 2, 1}), dyadic(0), dyadic(1));
    REQUIRE(roots.size() == 1);
    algebraic_stream s(roots[0]);
    CHECK(s.digit_prefix(5) == "01101");
}

TEST_CASE("liouville digits: ones exactly at factorials") {
    auto l = liouville_stream::shared();
    for (uint64_t n = 1; n <= 24; ++n) {
        int expect = (n == 1 || n == 2 || n == 6 || n == 24) ? 1 : 0;
        CHECK(l->digit_at(n) == expect);
    }
    CHECK(l->digit_at(120) == 1);
    CHECK(l->digit_at(119) == 0);
}

TEST_CASE("to_interval: spec examples") {
    rational_stream half(mpq_class(1, 2));
    dyadic_interval i3 = half.to_interval(3);
    CHECK(i3.lo == dyadic(mpz_class(4), 3));
    CHECK(i3.hi == dyadic(mpz_class(5), 3));

    dyadic_interval l2 = liouville_stream::shared()->to_interval(2);
    CHECK(l2.lo == dyadic(mpz_class(3), 2));
    CHECK(l2.hi == dyadic(mpz_class(1), 0));

    rational_stream zero(mpq_class(0));
    dyadic_interval z5 = zero.to_interval(5);
    CHECK(z5.lo == dyadic(0));
    CHECK(z5.hi == dyadic(mpz_class(1), 5));
}

TEST_CASE("to_interval nests and contains the represented value") {
    auto roots = isolate_roots(int_poly::from_longs({-1, 2, 1}), dyadic(0), dyadic(1));
    algebraic_stream s(roots[0]);
    dyadic_interval prev = s.to_interval(1);
    for (uint64_t p = 2; p <= 40; ++p) {
        dyadic_interval cur = s.to_interval(p);
        CHECK(prev.lo <= cur.lo);
        CHECK(cur.hi <= prev.hi);
        prev = cur;
    }
    algebraic_real tight = refine(roots[0], -44);
    CHECK(prev.lo <= tight.hi());
    CHECK(tight.lo() <= prev.hi);
}

TEST_CASE("reals_differ: spec examples") {
    rational_stream quarter(mpq_class(1, 4));
    rational_stream half(mpq_class(1, 2));
    difference_result r = reals_differ(quarter, half, 16);
    CHECK(r.proved);
    CHECK(r.position <= 3);

    // 0.0111... is the lower twin of 1/2: digit strings differ, reals are equal
    fn_stream twin([](uint64_t n) { return n == 1 ? 0 : 1; }, "twin-of-half");
    CHECK_FALSE(reals_differ(half, twin, 64).proved);
    CHECK_FALSE(reals_differ(half, twin, 512).proved);

    auto roots = isolate_roots(int_poly::from_longs({-1, 2, 1}), dyadic(0), dyadic(1));
    algebraic_stream s(roots[0]);
    difference_result r2 = reals_differ(s, *liouville_stream::shared(), 16);
    CHECK(r2.proved);
    CHECK(r2.position <= 2);
}

TEST_CASE("reals_differ is sound against exact comparison") {
    algebraic_enumeration en(mpq_class(0), mpq_class(1));
    std::vector<algebraic_real> vals;
    std::vector<std::shared_ptr<algebraic_stream>> streams;
    for (uint64_t i = 0; i < 24; ++i) {
        vals.push_back(en.at(i));
        streams.push_back(std::make_shared<algebraic_stream>(en.at(i)));
    }
    for (size_t i = 0; i < streams.size(); ++i) {
        for (size_t j = i + 1; j < streams.size(); ++j) {
            difference_result r = reals_differ(*streams[i], *streams[j], 256);
            if (r.proved)
                CHECK(compare(vals[i], vals[j]) != ordering::equal);
        }
        // a stream never separates from itself
        CHECK_FALSE(reals_differ(*streams[i], *streams[i], 64).proved);
    }
}

TEST_CASE("dyadic sources never produce an all-ones suffix") {
    for (long num = 0; num < 16; ++num) {
        rational_stream s(mpq_class(num, 16));
        // beyond the terminating expansion everything is zero
        for (uint64_t n = 5; n <= 20; ++n)
            CHECK(s.digit_at(n) == 0);
    }
}

TEST_CASE("exact dyadic root discovered during extraction") {
    // 1/2 as the root of a degree-1 carrier with a wide isolator
    algebraic_stream s(rational_point(mpq_class(1, 2)));
    CHECK(s.digit_prefix(10) == "1000000000");
    // 3/8 = 0.011
    algebraic_stream t(rational_point(mpq_class(3, 8)));
    CHECK(t.digit_prefix(6) == "011000");
    // non-dyadic rational: 1/3 = 0.010101...
    algebraic_stream u(rational_point(mpq_class(1, 3)));
    CHECK(u.digit_prefix(8) == "01010101");
}

TEST_CASE("affine liouville stream: spec fill examples") {
    // segment (0,1): the liouville value itself
    affine_liouville_stream f(rational_point(mpq_class(0)), rational_point(mpq_class(1)));
    CHECK(f.digit_prefix(30) == liouville_stream::shared()->digit_prefix(30));

    // segment (0, 1/2): value ell/2, digits shift right one position
    affine_liouville_stream g(rational_point(mpq_class(0)), rational_point(mpq_class(1, 2)));
    CHECK(g.digit_prefix(31) == "0" + liouville_stream::shared()->digit_prefix(30));
}

TEST_CASE("affine digits stay consistent across precisions (random endpoints)") {
    std::mt19937 rng(987);
    for (int round = 0; round < 12; ++round) {
        // random rationals 0 < a < b < 1
        uint64_t den = 64 + rng() % 4096;
        uint64_t na = 1 + rng() % (den - 2);
        uint64_t nb = na + 1 + rng() % (den - na - 1);
        mpq_class a((long)na, (long)den), b((long)nb, (long)den);
        a.canonicalize();
        b.canonicalize();
        affine_liouville_stream f(rational_point(a), rational_point(b));
        dyadic_interval coarse = f.to_interval(24);
        dyadic_interval fine = f.to_interval(160);
        CHECK(coarse.lo <= fine.lo);
        CHECK(fine.hi <= coarse.hi);
        // the value is strictly inside (a, b)
        CHECK(dyadic_floor(a, 200) <= fine.lo);
        CHECK(fine.hi <= dyadic_ceil(b, 200));
    }
}

TEST_CASE("seed_prefix adopts and extends consistently") {
    auto roots = isolate_roots(int_poly::from_longs({-1, 2, 1}), dyadic(0), dyadic(1));
    algebraic_stream fresh(roots[0]);
    std::string p32 = fresh.digit_prefix(32);

    algebraic_stream seeded(roots[0]);
    seeded.seed_prefix(p32);
    CHECK(seeded.digit_prefix(48) == fresh.digit_prefix(48));

    algebraic_stream conflicting(roots[0]);
    conflicting.digit_at(1);
    std::string bad = p32;
    bad[0] = bad[0] == '0' ? '1' : '0';
    CHECK_THROWS(conflicting.seed_prefix(bad));
}

TEST_CASE("concurrent digit queries agree") {
    auto roots = isolate_roots(int_poly::from_longs({-2, 0, 3}), dyadic(0), dyadic(1));
    REQUIRE(roots.size() == 1);
    auto s = std::make_shared<algebraic_stream>(roots[0]);
    std::string a, b;
    std::thread t1([&] { a = s->digit_prefix(200); });
    std::thread t2([&] { b = s->digit_prefix(200); });
    t1.join();
    t2.join();
    CHECK(a == b);
    algebraic_stream ref(roots[0]);
    CHECK(a == ref.digit_prefix(200));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "context.hpp"
#include "diagonal.hpp"
#include "error.hpp"
#include "test_util.hpp"

using namespace cantor;
using namespace cantor::testutil;

TEST_CASE("diagonal over all-zero constants is all ones") {
    stream_ptr d = diagonalize(const_seq(zeros()), 0);
    CHECK(d->digit_prefix(16) == std::string(16, '1'));
}

TEST_CASE("diagonal over all-one constants at offset 3 is all zeros") {
    stream_ptr d = diagonalize(const_seq(ones()), 3);
    CHECK(d->digit_prefix(16) == std::string(16, '0'));
}

TEST_CASE("diagonal over the canonical enumeration flips a_nu_nu") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    stream_ptr d = diagonalize(s0, 0);
    for (uint64_t nu = 1; nu <= 5; ++nu)
        CHECK(d->digit_at(nu) == 1 - s0->at(nu)->digit_at(nu));
}

TEST_CASE("digit-difference invariant across offsets") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    for (uint64_t offset : {0ull, 1ull, 3ull, 17ull}) {
        stream_ptr d = diagonalize(s0, offset);
        for (uint64_t nu = 1; nu <= 60; ++nu)
            CHECK(d->digit_at(nu) != s0->at(nu)->digit_at(nu + offset));
    }
}

TEST_CASE("prepend_and_shift is persistent") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    std::string before1 = s0->at(1)->digit_prefix(24);
    std::string before2 = s0->at(2)->digit_prefix(24);

    stream_ptr head = liouville_stream::shared();
    sequence_ptr shifted = prepend_and_shift(s0, head);
    CHECK(shifted->at(1)->digit_prefix(24) == head->digit_prefix(24));
    CHECK(shifted->at(2)->digit_prefix(24) == before1);
    CHECK(shifted->at(3)->digit_prefix(24) == before2);
    // original unchanged, bit-identical
    CHECK(s0->at(1)->digit_prefix(24) == before1);
    CHECK(s0->at(2)->digit_prefix(24) == before2);
}

TEST_CASE("recursive T sequence over all-zero constants") {
    // T1 = 111..., T2 flips T1 at position 1 then the zeros: 0111...
    auto ts = recursive_t_sequence(const_seq(zeros()), 2, 64);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0]->digit_prefix(8) == "11111111");
    CHECK(ts[1]->digit_prefix(8) == "01111111");
}

TEST_CASE("recursive T sequence: iterate twice, difference positions") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    auto ts = recursive_t_sequence(s0, 2, 128);
    // T2 differs from T1 at position 1 and from old element nu at position nu+1
    CHECK(ts[1]->digit_at(1) == 1 - ts[0]->digit_at(1));
    for (uint64_t nu = 1; nu <= 40; ++nu)
        CHECK(ts[1]->digit_at(nu + 1) == 1 - s0->at(nu)->digit_at(nu + 1));
}

TEST_CASE("recursive T sequence: count 3 over the enumeration, budget 64") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    auto ts = recursive_t_sequence(geo.sigma(0), 3, 64);
    CHECK(ts.size() == 3);
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            CHECK(reals_differ(*ts[i], *ts[j], 64).proved);
}

TEST_CASE("recursive T sequence reports an unresolvable budget") {
    // source[1] = 0.0111... (lower twin of 1/2), the rest all ones. The diagonal
    // flips this to T1 = 0.1000..., the other expansion of the same real, so the
    // difference proof against source[1] can never land.
    auto lower_twin =
        std::make_shared<fn_stream>([](uint64_t n) { return n == 1 ? 0 : 1; }, "low-twin");
    auto seq = std::make_shared<list_sequence>(std::vector<stream_ptr>{lower_twin}, ones());
    CHECK_THROWS_AS((void)recursive_t_sequence(seq, 1, 128), difference_unresolved);
}

TEST_CASE("distinct offsets give distinct outputs over the canonical source") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    std::vector<stream_ptr> ds;
    for (uint64_t k = 0; k <= 50; ++k)
        ds.push_back(diagonalize(s0, k));
    for (size_t i = 0; i < ds.size(); ++i) {
        for (size_t j = i + 1; j < ds.size(); ++j) {
            difference_result r = reals_differ(*ds[i], *ds[j], 512);
            CHECK(r.proved);
        }
    }
}

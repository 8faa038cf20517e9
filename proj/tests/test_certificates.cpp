#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "certificates.hpp"
#include "context.hpp"
#include "test_util.hpp"

using namespace cantor;
using namespace cantor::testutil;

TEST_CASE("certify_diagonal over all-zero constants") {
    sequence_ptr src = const_seq(zeros());
    stream_ptr out = diagonalize(src, 0);
    nlohmann::json cert = certify_diagonal(src, out, 0, 10, 64);
    REQUIRE(cert.at("witnesses").size() == 10);
    for (size_t i = 0; i < 10; ++i) {
        const auto& w = cert.at("witnesses")[i];
        CHECK(w.at("position").get<uint64_t>() == i + 1);
        CHECK(w.at("output_bit").get<int>() == 1);
        CHECK(w.at("source_bit").get<int>() == 0);
    }
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("certify_diagonal over the canonical enumeration: all proved") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    stream_ptr out = diagonalize(s0, 0);
    nlohmann::json cert = certify_diagonal(s0, out, 0, 40, 512);
    for (const auto& o : cert.at("real_outcomes"))
        CHECK(o.at("status") == "proved");
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("certify_diagonal records an unresolved twin honestly") {
    // source[1] = 0.0111... (twin of 1/2); all later rows all-ones. The diagonal
    // output is 0.1000..., the other expansion of the same real.
    auto lower_twin =
        std::make_shared<fn_stream>([](uint64_t n) { return n == 1 ? 0 : 1; }, "low-twin");
    auto seq = std::make_shared<list_sequence>(std::vector<stream_ptr>{lower_twin}, ones());
    stream_ptr out = diagonalize(seq, 0);
    CHECK(out->digit_prefix(6) == "100000");
    nlohmann::json cert = certify_diagonal(seq, out, 0, 5, 128);
    CHECK(cert.at("real_outcomes")[0].at("status") == "unresolved");
    CHECK(cert.at("real_outcomes")[1].at("status") == "proved");
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("certify_nonalgebraic fails on 1/2 citing 2x-1") {
    rational_stream half(mpq_class(1, 2));
    nlohmann::json cert = certify_nonalgebraic(half, 3, 1, 16);
    REQUIRE(cert.at("outcome").at("status") == "failure");
    auto poly = cert.at("outcome").at("witness_poly");
    CHECK(poly == nlohmann::json::array({"-1", "2"}));
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("certify_nonalgebraic succeeds on liouville at H=4, d=3, p=64") {
    nlohmann::json cert = certify_nonalgebraic(*liouville_stream::shared(), 4, 3, 64);
    CHECK(cert.at("outcome").at("status") == "success");
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("certify_nonalgebraic fails on sqrt(2)-1 citing its carrier") {
    auto roots = isolate_roots(int_poly::from_longs({-1, 2, 1}), dyadic(0), dyadic(1));
    algebraic_stream s(roots[0]);
    nlohmann::json cert = certify_nonalgebraic(s, 4, 2, 64);
    REQUIRE(cert.at("outcome").at("status") == "failure");
    CHECK(cert.at("outcome").at("witness_poly") == nlohmann::json::array({"-1", "2", "1"}));
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("nonalgebraic success is monotone in weaker parameters") {
    nlohmann::json strong = certify_nonalgebraic(*liouville_stream::shared(), 4, 3, 64);
    REQUIRE(strong.at("outcome").at("status") == "success");
    for (auto [h, d, p] : {std::tuple<int, int, int>{3, 3, 64}, {4, 2, 64}, {4, 3, 96}}) {
        nlohmann::json weak = certify_nonalgebraic(*liouville_stream::shared(), h, d, p);
        CHECK(weak.at("outcome").at("status") == "success");
    }
}

TEST_CASE("scan_collisions: enumeration prefix is pairwise distinct") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    nlohmann::json cert = scan_collisions(*geo.sigma(0), 20, 512);
    CHECK(cert.at("proved_count").get<uint64_t>() == 190);
    CHECK(cert.at("unresolved").empty());
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("scan_collisions reports a planted duplicate as unresolved") {
    auto seq = std::make_shared<list_sequence>(
        std::vector<stream_ptr>{liouville_stream::shared(), liouville_stream::shared()},
        zeros());
    nlohmann::json cert = scan_collisions(*seq, 3, 256);
    CHECK(cert.at("unresolved").size() == 1);
    CHECK(cert.at("unresolved")[0] == nlohmann::json::array({1, 2}));
    CHECK(check_certificate(cert).valid);
}

TEST_CASE("tampered certificates fail re-validation") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    nlohmann::json cert = certify_diagonal(s0, diagonalize(s0, 0), 0, 8, 128);
    REQUIRE(check_certificate(cert).valid);

    nlohmann::json flipped = cert;
    flipped["witnesses"][3]["output_bit"] = 1 - flipped["witnesses"][3]["output_bit"].get<int>();
    CHECK_FALSE(check_certificate(flipped).valid);

    nlohmann::json shifted = cert;
    shifted["witnesses"][2]["position"] = shifted["witnesses"][2]["position"].get<uint64_t>() + 1;
    CHECK_FALSE(check_certificate(shifted).valid);

    nlohmann::json bad_digest = cert;
    std::string dg = bad_digest["digest"].get<std::string>();
    dg[0] = dg[0] == 'a' ? 'b' : 'a';
    bad_digest["digest"] = dg;
    CHECK_FALSE(check_certificate(bad_digest).valid);

    // a semantically broken body resealed with a fresh digest still fails
    nlohmann::json resealed = cert;
    resealed.erase("digest");
    resealed["witnesses"][0]["source_bit"] = resealed["witnesses"][0]["output_bit"];
    resealed = seal_certificate(resealed);
    CHECK_FALSE(check_certificate(resealed).valid);
}

TEST_CASE("nonalgebraic interval must match the digits") {
    rational_stream half(mpq_class(1, 2));
    nlohmann::json cert = certify_nonalgebraic(half, 3, 1, 16);
    nlohmann::json mutated = cert;
    mutated.erase("digest");
    std::string d = mutated["digits"].get<std::string>();
    d[5] = d[5] == '0' ? '1' : '0';
    mutated["digits"] = d;
    mutated = seal_certificate(mutated);
    CHECK_FALSE(check_certificate(mutated).valid);
}

TEST_CASE("adversarial parameters are rejected, not executed") {
    // attacker-sealed bodies carry valid digests but absurd bounds; the checker
    // must refuse them instead of looping or allocating
    nlohmann::json huge = seal_certificate({{"schema", 1},
                                            {"kind", "collision-scan"},
                                            {"count", uint64_t(1) << 40},
                                            {"budget", 128},
                                            {"source", {{"type", "opaque"}}},
                                            {"pairs", nlohmann::json::array()},
                                            {"proved_count", 0},
                                            {"unresolved", nlohmann::json::array()}});
    CHECK_FALSE(check_certificate(huge).valid);

    nlohmann::json deep = seal_certificate({{"schema", 1},
                                            {"kind", "nonalgebraic-up-to"},
                                            {"height", uint64_t(1) << 50},
                                            {"degree", 4},
                                            {"precision", 16},
                                            {"subject", {{"type", "opaque"}}},
                                            {"digits", "1010101010101010"},
                                            {"interval", nlohmann::json::object()},
                                            {"outcome", {{"status", "success"}}}});
    CHECK_FALSE(check_certificate(deep).valid);
}

TEST_CASE("unknown kinds and malformed documents are rejected") {
    CHECK_FALSE(check_certificate(nlohmann::json{{"schema", 1}}).valid);
    nlohmann::json unknown = seal_certificate({{"schema", 1}, {"kind", "widget"}});
    CHECK_FALSE(check_certificate(unknown).valid);
    CHECK_FALSE(check_certificate(nlohmann::json::array({1, 2})).valid);
}

TEST_CASE("checker survives structural garbage without crashing") {
    run_geometry geo(mpq_class(0), mpq_class(1));
    sequence_ptr s0 = geo.sigma(0);
    nlohmann::json cert = certify_diagonal(s0, diagonalize(s0, 0), 0, 5, 64);
    std::string dump = cert.dump();
    std::mt19937 rng(7);
    for (int round = 0; round < 200; ++round) {
        std::string s = dump;
        size_t cut = 1 + rng() % (s.size() - 1);
        if (round % 3 == 0) {
            s = s.substr(0, cut); // truncation
        } else if (round % 3 == 1) {
            s[cut] = (char)('!' + rng() % 90); // byte corruption
        } else {
            s.insert(cut, "{["); // structural noise
        }
        if (s == dump)
            continue;
        nlohmann::json doc = nlohmann::json::parse(s, nullptr, false);
        if (doc.is_discarded())
            continue; // unparseable inputs are rejected before checking
        if (doc == cert)
            continue; // corruption can cancel out, e.g. inside an ignored literal
        CHECK_FALSE(check_certificate(doc).valid);
    }
    // wholesale type swaps
    nlohmann::json swapped = cert;
    swapped["witnesses"] = "not-an-array";
    CHECK_FALSE(check_certificate(swapped).valid);
    swapped = cert;
    swapped["count"] = nlohmann::json::array();
    CHECK_FALSE(check_certificate(swapped).valid);
    swapped = cert;
    swapped["digest"] = 17;
    CHECK_FALSE(check_certificate(swapped).valid);
}

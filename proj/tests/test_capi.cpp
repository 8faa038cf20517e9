#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include <cantor/cantor.h>

using nlohmann::json;

static std::string take(char* s) {
    std::string out = s ? s : "";
    cantor_string_free(s);
    return out;
}

TEST_CASE("context creation and window validation") {
    cantor_ctx* ctx = nullptr;
    CHECK(cantor_ctx_new("0", "1", &ctx) == CANTOR_OK);
    cantor_ctx_free(ctx);

    ctx = nullptr;
    CHECK(cantor_ctx_new("1", "1", &ctx) == CANTOR_EINVAL);
    CHECK(std::string(cantor_last_error()).find("window") != std::string::npos);
    CHECK(cantor_ctx_new("x", "1", &ctx) == CANTOR_EPARSE);
    CHECK(cantor_ctx_new("1/0", "2", &ctx) == CANTOR_EPARSE);
    CHECK(cantor_ctx_new("a.5", "2", &ctx) == CANTOR_EPARSE);
    CHECK(cantor_ctx_new("0.", "2", &ctx) == CANTOR_EPARSE);
    CHECK(cantor_ctx_new("-4", "4", &ctx) == CANTOR_OK);
    cantor_ctx_free(ctx);
    // decimal and fractional forms parse exactly
    CHECK(cantor_ctx_new("-0.5", "3/7", &ctx) == CANTOR_OK);
    cantor_ctx_free(ctx);
}

TEST_CASE("enumeration records over (-4,4)") {
    cantor_ctx* ctx = nullptr;
    REQUIRE(cantor_ctx_new("-4", "4", &ctx) == CANTOR_OK);
    char* rec = nullptr;
    REQUIRE(cantor_enumerate_json(ctx, 0, 16, &rec) == CANTOR_OK);
    json r = json::parse(take(rec));
    CHECK(r.at("index") == 0);
    CHECK(r.at("value").at("poly") == json::array({"0", "1"})); // the zero of x
    // 0 maps to (0+4)/8 = 1/2
    CHECK(r.at("digits").get<std::string>().substr(0, 4) == "1000");
    cantor_ctx_free(ctx);
}

TEST_CASE("streams: oracle, rational mapping, prefix, digits") {
    cantor_ctx* ctx = nullptr;
    REQUIRE(cantor_ctx_new("0", "1", &ctx) == CANTOR_OK);

    cantor_stream* ell = nullptr;
    REQUIRE(cantor_stream_oracle("liouville", &ell) == CANTOR_OK);
    char* d = nullptr;
    REQUIRE(cantor_stream_digits(ell, 6, &d) == CANTOR_OK);
    CHECK(take(d) == "110001");
    int32_t bit = -1;
    CHECK(cantor_stream_digit(ell, 24, &bit) == CANTOR_OK);
    CHECK(bit == 1);

    cantor_stream* bad = nullptr;
    CHECK(cantor_stream_oracle("champernowne", &bad) == CANTOR_EINVAL);

    cantor_stream* r = nullptr;
    REQUIRE(cantor_stream_rational(ctx, "1/2", &r) == CANTOR_OK);
    REQUIRE(cantor_stream_digits(r, 4, &d) == CANTOR_OK);
    CHECK(take(d) == "1000");

    cantor_stream* outside = nullptr;
    CHECK(cantor_stream_rational(ctx, "3", &outside) == CANTOR_EINVAL);

    cantor_stream* p = nullptr;
    REQUIRE(cantor_stream_prefix("0110", &p) == CANTOR_OK);
    REQUIRE(cantor_stream_digits(p, 8, &d) == CANTOR_OK);
    CHECK(take(d) == "01100000");

    uint64_t pos = 0;
    REQUIRE(cantor_reals_differ(ell, r, 64, &pos) == CANTOR_OK);
    CHECK(pos >= 1);

    cantor_stream_free(ell);
    cantor_stream_free(r);
    cantor_stream_free(p);
    cantor_ctx_free(ctx);
}

TEST_CASE("sigma tower over the C surface") {
    cantor_ctx* ctx = nullptr;
    REQUIRE(cantor_ctx_new("0", "1", &ctx) == CANTOR_OK);
    cantor_sigma* sig = nullptr;
    REQUIRE(cantor_sigma_build(ctx, 1, &sig) == CANTOR_OK);

    char* rec = nullptr;
    REQUIRE(cantor_sigma_record_json(sig, 2, 32, &rec) == CANTOR_OK);
    json r = json::parse(take(rec));
    CHECK(r.at("provenance").at("layer") == 1);
    CHECK(r.at("provenance").at("kind") == "diagonal");
    CHECK(r.at("provenance").at("offset") == 0);

    cantor_stream* d0 = nullptr;
    REQUIRE(cantor_sigma_diagonalize(sig, 0, &d0) == CANTOR_OK);
    char* digits = nullptr;
    REQUIRE(cantor_stream_digits(d0, 16, &digits) == CANTOR_OK);
    CHECK(take(digits).size() == 16);
    cantor_stream_free(d0);

    uint64_t idx = 0;
    REQUIRE(cantor_index_of(1, 1, 3, &idx) == CANTOR_OK);
    CHECK(idx == 5);
    CHECK(cantor_index_of(2, 1, 1, &idx) == CANTOR_EINVAL);

    cantor_sigma_free(sig);
    cantor_ctx_free(ctx);
}

TEST_CASE("certificates through the C surface") {
    cantor_ctx* ctx = nullptr;
    REQUIRE(cantor_ctx_new("0", "1", &ctx) == CANTOR_OK);
    cantor_sigma* sig = nullptr;
    REQUIRE(cantor_sigma_build(ctx, 0, &sig) == CANTOR_OK);

    char* cert = nullptr;
    REQUIRE(cantor_certify_diagonal(sig, 0, 8, 128, &cert) == CANTOR_OK);
    std::string cs = take(cert);
    int32_t valid = 0;
    char* reason = nullptr;
    REQUIRE(cantor_certificate_check(cs.c_str(), &valid, &reason) == CANTOR_OK);
    CHECK(valid == 1);
    take(reason);

    json tampered = json::parse(cs);
    tampered["offset"] = 1;
    REQUIRE(cantor_certificate_check(tampered.dump().c_str(), &valid, &reason) == CANTOR_OK);
    CHECK(valid == 0);
    CHECK(take(reason).find("digest") != std::string::npos);

    CHECK(cantor_certificate_check("{not json", &valid, &reason) == CANTOR_EPARSE);

    cantor_stream* ell = nullptr;
    REQUIRE(cantor_stream_oracle("liouville", &ell) == CANTOR_OK);
    char* na = nullptr;
    REQUIRE(cantor_certify_nonalgebraic(ell, 4, 2, 32, &na) == CANTOR_OK);
    json nac = json::parse(take(na));
    CHECK(nac.at("outcome").at("status") == "success");
    cantor_stream_free(ell);

    char* scan = nullptr;
    REQUIRE(cantor_scan_collisions(sig, 6, 128, &scan) == CANTOR_OK);
    json sc = json::parse(take(scan));
    CHECK(sc.at("proved_count") == 15);

    cantor_sigma_free(sig);
    cantor_ctx_free(ctx);
}

TEST_CASE("placement, segments and hunt through the C surface") {
    cantor_ctx* ctx = nullptr;
    REQUIRE(cantor_ctx_new("0", "1", &ctx) == CANTOR_OK);

    cantor_placement* pl = nullptr;
    REQUIRE(cantor_placement_new(ctx, "allpairs", "liouville-affine", &pl) == CANTOR_OK);
    REQUIRE(cantor_placement_run(pl, 6) == CANTOR_OK);
    char* segs = nullptr;
    REQUIRE(cantor_placement_segments_json(pl, 16, &segs) == CANTOR_OK);
    json arr = json::parse(take(segs));
    CHECK(arr.size() == 15);
    cantor_placement_free(pl);

    CHECK(cantor_placement_new(ctx, "sideways", "liouville-affine", &pl) == CANTOR_EINVAL);

    char* hunt = nullptr;
    REQUIRE(cantor_hunt_json(ctx, "adjacent", "liouville-affine", "liouville", 12, 128, 48,
                             &hunt) == CANTOR_OK);
    json h = json::parse(take(hunt));
    CHECK(h.at("report").at("chain").size() >= 1);
    REQUIRE(cantor_certificate_check(h.at("certificate").dump().c_str(), nullptr, nullptr) ==
            CANTOR_EINVAL); // null out-param rejected
    int32_t valid = 0;
    REQUIRE(cantor_certificate_check(h.at("certificate").dump().c_str(), &valid, nullptr) ==
            CANTOR_OK);
    CHECK(valid == 1);

    CHECK(cantor_hunt_json(ctx, "adjacent", "liouville-affine", "3", 4, 64, 32, &hunt) ==
          CANTOR_EINVAL);
    cantor_ctx_free(ctx);
}

TEST_CASE("checkpoint roundtrip") {
    std::string path = "/tmp/cantor_capi_ckpt.json";
    std::remove(path.c_str());

    cantor_ctx* ctx = nullptr;
    REQUIRE(cantor_ctx_new("0", "1", &ctx) == CANTOR_OK);
    char* rec = nullptr;
    REQUIRE(cantor_enumerate_json(ctx, 5, 64, &rec) == CANTOR_OK);
    std::string fresh = take(rec);
    REQUIRE(cantor_checkpoint_save(ctx, path.c_str(), 0) == CANTOR_OK);
    cantor_ctx_free(ctx);

    REQUIRE(cantor_ctx_new("0", "1", &ctx) == CANTOR_OK);
    REQUIRE(cantor_checkpoint_load(ctx, path.c_str()) == CANTOR_OK);
    REQUIRE(cantor_enumerate_json(ctx, 5, 64, &rec) == CANTOR_OK);
    CHECK(take(rec) == fresh);
    cantor_ctx_free(ctx);

    REQUIRE(cantor_ctx_new("0", "2", &ctx) == CANTOR_OK);
    CHECK(cantor_checkpoint_load(ctx, path.c_str()) == CANTOR_EINVAL);
    CHECK(cantor_checkpoint_load(ctx, "/nonexistent/ckpt.json") == CANTOR_EIO);
    cantor_ctx_free(ctx);
    std::remove(path.c_str());
}

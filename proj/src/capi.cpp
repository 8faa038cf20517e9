#include "cantor/cantor.h"

#include <cstring>
#include <fstream>

#include "certificates.hpp"
#include "error.hpp"
#include "checkpoint.hpp"
#include "segments.hpp"

using namespace cantor;
using cantor::error; // glibc declares ::error(), keep the class visible

struct cantor_ctx {
    std::shared_ptr<run_geometry> geo;
};

struct cantor_stream {
    stream_ptr s;
};

struct cantor_sigma {
    std::shared_ptr<run_geometry> geo;
    sequence_ptr seq;
    uint32_t depth;
};

struct cantor_placement {
    std::shared_ptr<run_geometry> geo;
    placement_mode mode;
    std::string policy;
    std::unique_ptr<placement_state> state;
};

namespace {

thread_local std::string g_last_error;

cantor_status status_of(const error& e) {
    switch (e.code()) {
    case errc::invalid_argument: return CANTOR_EINVAL;
    case errc::parse_error: return CANTOR_EPARSE;
    case errc::unresolved: return CANTOR_EUNRESOLVED;
    case errc::io_error: return CANTOR_EIO;
    case errc::internal: return CANTOR_EINTERNAL;
    }
    return CANTOR_EINTERNAL;
}

template <typename Fn> cantor_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return CANTOR_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CANTOR_EINTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return CANTOR_EINTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = (char*)::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mpq_class parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty())
        throw error(errc::parse_error, "empty number");
    // decimal fractions are exact rationals: a.b -> ab / 10^len(b)
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.empty() || fp.find_first_not_of("0123456789") != std::string::npos)
            throw error(errc::parse_error, "malformed decimal: " + text);
        std::string digits = ip;
        if (!digits.empty() && digits[0] == '-')
            digits.erase(0, 1);
        if (digits.find_first_not_of("0123456789") != std::string::npos)
            throw error(errc::parse_error, "malformed decimal: " + text);
        mpq_class num(digits.empty() ? std::string("0") : digits);
        mpz_class scale = 1;
        for (size_t i = 0; i < fp.size(); ++i)
            scale *= 10;
        mpq_class frac(mpz_class(fp), scale);
        frac.canonicalize();
        bool neg = !ip.empty() && ip[0] == '-';
        mpq_class out = neg ? mpq_class(-(num + frac)) : mpq_class(num + frac);
        out.canonicalize();
        return out;
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw error(errc::parse_error, "malformed rational: " + text);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw error(errc::parse_error, "zero denominator: " + text);
    q.canonicalize();
    return q;
}

stream_ptr target_from_spec(run_geometry& geo, const std::string& spec) {
    if (spec == "liouville")
        return geo.unit_target_liouville();
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in)
            throw error(errc::io_error, "cannot open digit prefix file: " + spec.substr(1));
        std::string digits, line;
        while (std::getline(in, line)) {
            for (char ch : line) {
                if (ch == '0' || ch == '1')
                    digits.push_back(ch);
                else if (!std::isspace((unsigned char)ch))
                    throw error(errc::parse_error, "digit prefix file must contain only 0/1");
            }
        }
        if (digits.empty())
            throw error(errc::parse_error, "digit prefix file holds no digits");
        // the prefix pins a dyadic value; digits beyond it are the terminating zeros
        mpz_class k = 0;
        for (char ch : digits)
            k = 2 * k + (ch == '1');
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), digits.size());
        mpq_class v(k, den);
        v.canonicalize();
        return std::make_shared<rational_stream>(v);
    }
    return geo.unit_target_rational(parse_rational(spec));
}

} // namespace

extern "C" {

const char* cantor_status_str(cantor_status s) {
    switch (s) {
    case CANTOR_OK: return "ok";
    case CANTOR_EINVAL: return "invalid argument";
    case CANTOR_EPARSE: return "parse error";
    case CANTOR_EUNRESOLVED: return "difference unresolved within budget";
    case CANTOR_EIO: return "i/o error";
    case CANTOR_EINTERNAL: return "internal error";
    }
    return "unknown";
}

const char* cantor_last_error(void) { return g_last_error.c_str(); }

void cantor_string_free(char* s) { ::free(s); }

cantor_status cantor_ctx_new(const char* window_lo, const char* window_hi, cantor_ctx** out) {
    return guarded([&] {
        if (!window_lo || !window_hi || !out)
            throw error(errc::invalid_argument, "null argument");
        auto geo = std::make_shared<run_geometry>(parse_rational(window_lo),
                                                  parse_rational(window_hi));
        *out = new cantor_ctx{std::move(geo)};
    });
}

void cantor_ctx_free(cantor_ctx* ctx) { delete ctx; }

cantor_status cantor_enumerate_json(cantor_ctx* ctx, uint64_t index, uint32_t precision,
                                    char** json_out) {
    return guarded([&] {
        if (!ctx || !json_out || precision < 1)
            throw error(errc::invalid_argument, "bad arguments");
        algebraic_real a = ctx->geo->enumeration().at(index);
        stream_ptr s = ctx->geo->sigma0()->at(index + 1);
        nlohmann::json rec = {{"record", "algebraic"},
                              {"index", index},
                              {"value", algebraic_json(a)},
                              {"precision", precision},
                              {"digits", s->digit_prefix(precision)}};
        *json_out = dup_string(rec.dump());
    });
}

cantor_status cantor_stream_oracle(const char* name, cantor_stream** out) {
    return guarded([&] {
        if (!name || !out)
            throw error(errc::invalid_argument, "null argument");
        if (std::string(name) != "liouville")
            throw error(errc::invalid_argument, std::string("unknown oracle: ") + name);
        *out = new cantor_stream{liouville_stream::shared()};
    });
}

cantor_status cantor_stream_rational(cantor_ctx* ctx, const char* window_value,
                                     cantor_stream** out) {
    return guarded([&] {
        if (!ctx || !window_value || !out)
            throw error(errc::invalid_argument, "null argument");
        *out = new cantor_stream{ctx->geo->unit_target_rational(parse_rational(window_value))};
    });
}

cantor_status cantor_stream_prefix(const char* digits, cantor_stream** out) {
    return guarded([&] {
        if (!digits || !out)
            throw error(errc::invalid_argument, "null argument");
        std::string d(digits);
        if (d.empty() || d.find_first_not_of("01") != std::string::npos)
            throw error(errc::parse_error, "digits must be a nonempty 0/1 string");
        mpz_class k = 0;
        for (char ch : d)
            k = 2 * k + (ch == '1');
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), d.size());
        mpq_class v(k, den);
        v.canonicalize();
        *out = new cantor_stream{std::make_shared<rational_stream>(v)};
    });
}

cantor_status cantor_stream_algebraic(cantor_ctx* ctx, uint64_t index, cantor_stream** out) {
    return guarded([&] {
        if (!ctx || !out)
            throw error(errc::invalid_argument, "null argument");
        *out = new cantor_stream{ctx->geo->sigma0()->at(index + 1)};
    });
}

cantor_status cantor_stream_digit(cantor_stream* s, uint64_t position, int32_t* bit) {
    return guarded([&] {
        if (!s || !bit || position < 1)
            throw error(errc::invalid_argument, "bad arguments");
        *bit = s->s->digit_at(position);
    });
}

cantor_status cantor_stream_digits(cantor_stream* s, uint64_t count, char** digits_out) {
    return guarded([&] {
        if (!s || !digits_out)
            throw error(errc::invalid_argument, "null argument");
        *digits_out = dup_string(s->s->digit_prefix(count));
    });
}

cantor_status cantor_stream_descriptor(cantor_stream* s, char** json_out) {
    return guarded([&] {
        if (!s || !json_out)
            throw error(errc::invalid_argument, "null argument");
        *json_out = dup_string(s->s->descriptor().dump());
    });
}

void cantor_stream_free(cantor_stream* s) { delete s; }

cantor_status cantor_reals_differ(cantor_stream* a, cantor_stream* b, uint64_t budget,
                                  uint64_t* position) {
    return guarded([&] {
        if (!a || !b || !position || budget < 1)
            throw error(errc::invalid_argument, "bad arguments");
        difference_result r = reals_differ(*a->s, *b->s, budget);
        *position = r.proved ? r.position : 0;
    });
}

cantor_status cantor_sigma_build(cantor_ctx* ctx, uint32_t depth, cantor_sigma** out) {
    return guarded([&] {
        if (!ctx || !out)
            throw error(errc::invalid_argument, "null argument");
        *out = new cantor_sigma{ctx->geo, ctx->geo->sigma(depth), depth};
    });
}

cantor_status cantor_sigma_element(cantor_sigma* s, uint64_t index, cantor_stream** out) {
    return guarded([&] {
        if (!s || !out || index < 1)
            throw error(errc::invalid_argument, "bad arguments");
        *out = new cantor_stream{s->seq->at(index)};
    });
}

cantor_status cantor_sigma_record_json(cantor_sigma* s, uint64_t index, uint32_t precision,
                                       char** json_out) {
    return guarded([&] {
        if (!s || !json_out || index < 1 || precision < 1)
            throw error(errc::invalid_argument, "bad arguments");
        nlohmann::json rec = {{"record", "sigma-element"},
                              {"depth", s->depth},
                              {"index", index},
                              {"provenance", s->seq->provenance_at(index).to_json()},
                              {"precision", precision},
                              {"digits", s->seq->at(index)->digit_prefix(precision)}};
        *json_out = dup_string(rec.dump());
    });
}

cantor_status cantor_sigma_diagonalize(cantor_sigma* s, uint64_t offset, cantor_stream** out) {
    return guarded([&] {
        if (!s || !out)
            throw error(errc::invalid_argument, "null argument");
        *out = new cantor_stream{diagonalize(s->seq, offset)};
    });
}

cantor_status cantor_index_of(uint32_t layer, uint64_t element, uint32_t at_level,
                              uint64_t* out) {
    return guarded([&] {
        if (!out || element < 1)
            throw error(errc::invalid_argument, "bad arguments");
        *out = index_of(layer, element, at_level);
    });
}

void cantor_sigma_free(cantor_sigma* s) { delete s; }

cantor_status cantor_certify_diagonal(cantor_sigma* s, uint64_t offset, uint64_t count,
                                      uint64_t budget, char** json_out) {
    return guarded([&] {
        if (!s || !json_out || count < 1 || budget < 1)
            throw error(errc::invalid_argument, "bad arguments");
        stream_ptr d = diagonalize(s->seq, offset);
        *json_out = dup_string(certify_diagonal(s->seq, d, offset, count, budget).dump());
    });
}

cantor_status cantor_certify_nonalgebraic(cantor_stream* s, uint32_t height, uint32_t degree,
                                          uint32_t precision, char** json_out) {
    return guarded([&] {
        if (!s || !json_out)
            throw error(errc::invalid_argument, "null argument");
        *json_out = dup_string(certify_nonalgebraic(*s->s, height, degree, precision).dump());
    });
}

cantor_status cantor_scan_collisions(cantor_sigma* s, uint64_t count, uint64_t budget,
                                     char** json_out) {
    return guarded([&] {
        if (!s || !json_out)
            throw error(errc::invalid_argument, "null argument");
        *json_out = dup_string(scan_collisions(*s->seq, count, budget).dump());
    });
}

cantor_status cantor_certificate_check(const char* json, int32_t* valid, char** reason_out) {
    return guarded([&] {
        if (!json || !valid)
            throw error(errc::invalid_argument, "null argument");
        nlohmann::json doc = nlohmann::json::parse(json, nullptr, false);
        if (doc.is_discarded())
            throw error(errc::parse_error, "certificate is not valid JSON");
        check_result r = check_certificate(doc);
        *valid = r.valid ? 1 : 0;
        if (reason_out)
            *reason_out = dup_string(r.reason);
    });
}

cantor_status cantor_placement_new(cantor_ctx* ctx, const char* mode, const char* policy,
                                   cantor_placement** out) {
    return guarded([&] {
        if (!ctx || !mode || !policy || !out)
            throw error(errc::invalid_argument, "null argument");
        placement_mode m = parse_mode(mode);
        auto p = new cantor_placement{ctx->geo, m, policy, nullptr};
        p->state = std::make_unique<placement_state>(ctx->geo, m, policy);
        *out = p;
    });
}

cantor_status cantor_placement_run(cantor_placement* p, uint32_t steps) {
    return guarded([&] {
        if (!p)
            throw error(errc::invalid_argument, "null argument");
        p->state->run(steps);
    });
}

cantor_status cantor_placement_segments_json(cantor_placement* p, uint32_t precision,
                                             char** json_out) {
    return guarded([&] {
        if (!p || !json_out || precision < 1)
            throw error(errc::invalid_argument, "bad arguments");
        *json_out = dup_string(p->state->segments_json(precision).dump());
    });
}

void cantor_placement_free(cantor_placement* p) { delete p; }

cantor_status cantor_hunt_json(cantor_ctx* ctx, const char* mode, const char* policy,
                               const char* target_spec, uint32_t steps, uint64_t budget,
                               uint32_t precision, char** json_out) {
    return guarded([&] {
        if (!ctx || !mode || !policy || !target_spec || !json_out || steps < 1 || budget < 1 ||
            precision < 1)
            throw error(errc::invalid_argument, "bad arguments");
        stream_ptr target = target_from_spec(*ctx->geo, target_spec);
        hunt_result r = hunt_target(ctx->geo, parse_mode(mode), policy, target, steps, budget,
                                    precision);
        nlohmann::json both = {{"report", r.report}, {"certificate", r.chain_certificate}};
        *json_out = dup_string(both.dump());
    });
}

cantor_status cantor_checkpoint_load(cantor_ctx* ctx, const char* path) {
    return guarded([&] {
        if (!ctx || !path)
            throw error(errc::invalid_argument, "null argument");
        load_checkpoint(*ctx->geo, path);
    });
}

cantor_status cantor_checkpoint_save(cantor_ctx* ctx, const char* path, uint32_t depth) {
    return guarded([&] {
        if (!ctx || !path)
            throw error(errc::invalid_argument, "null argument");
        save_checkpoint(*ctx->geo, path, depth);
    });
}

uint64_t cantor_base_digit_extractions(void) {
    return stats::base_digit_extractions.load(std::memory_order_relaxed);
}

} // extern "C"

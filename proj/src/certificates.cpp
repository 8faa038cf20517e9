#include "certificates.hpp"

#include "error.hpp"
#include "sha256.hpp"

namespace cantor {

using nlohmann::json;

nlohmann::json seal_certificate(nlohmann::json body) {
    body["digest"] = sha256_hex(body.dump());
    return body;
}

std::optional<int_poly> first_algebraic_hit(const dyadic_interval& I, uint64_t height,
                                            uint64_t degree) {
    std::optional<int_poly> hit;
    for_each_poly_up_to(height, degree, [&](const int_poly& p) {
        if (hit)
            return;
        dyadic_interval img = p.eval_interval(I);
        if (img.lo.sign() > 0 || img.hi.sign() < 0)
            return; // image excludes zero, certainly no root
        if (p.sign_at_dyadic(I.lo) == 0 || p.sign_at_dyadic(I.hi) == 0) {
            hit = p;
            return;
        }
        int_poly sf = square_free_part(p);
        if (sturm_chain(sf).count_open(I.lo, I.hi) >= 1)
            hit = p;
    });
    return hit;
}

nlohmann::json certify_diagonal(const sequence_ptr& source, const stream_ptr& output,
                                uint64_t offset, uint64_t count, uint64_t budget) {
    if (count < 1)
        throw error(errc::invalid_argument, "count must be >= 1");
    json witnesses = json::array();
    json outcomes = json::array();
    for (uint64_t nu = 1; nu <= count; ++nu) {
        stream_ptr row = source->at(nu);
        uint64_t pos = nu + offset;
        int ob = output->digit_at(nu);
        int sb = row->digit_at(pos);
        witnesses.push_back(
            {{"index", nu}, {"position", pos}, {"output_bit", ob}, {"source_bit", sb}});
        difference_result dr = reals_differ(*output, *row, budget);
        if (dr.proved) {
            outcomes.push_back({{"index", nu},
                                {"status", "proved"},
                                {"position", dr.position},
                                {"prefix_out", output->prefix_value(dr.position).get_str()},
                                {"prefix_src", row->prefix_value(dr.position).get_str()}});
        } else {
            outcomes.push_back({{"index", nu}, {"status", "unresolved"}});
        }
    }
    json body = {{"schema", 1},
                 {"kind", "digit-difference"},
                 {"offset", offset},
                 {"count", count},
                 {"budget", budget},
                 {"source", source->descriptor()},
                 {"output", output->descriptor()},
                 {"witnesses", witnesses},
                 {"real_outcomes", outcomes}};
    return seal_certificate(body);
}

nlohmann::json certify_nonalgebraic(const digit_stream& s, uint64_t height, uint64_t degree,
                                    uint64_t precision) {
    if (height < 1 || degree < 1 || precision < 8)
        throw error(errc::invalid_argument, "certify_nonalgebraic requires H >= 1, d >= 1, p >= 8");
    std::string digits = s.digit_prefix(precision);
    dyadic_interval I = s.to_interval(precision);
    std::optional<int_poly> hit = first_algebraic_hit(I, height, degree);
    json outcome;
    if (hit) {
        json coeffs = json::array();
        for (const auto& c : hit->coeffs())
            coeffs.push_back(c.get_str());
        outcome = {{"status", "failure"}, {"witness_poly", coeffs}};
    } else {
        outcome = {{"status", "success"}};
    }
    json body = {{"schema", 1},
                 {"kind", "nonalgebraic-up-to"},
                 {"height", height},
                 {"degree", degree},
                 {"precision", precision},
                 {"subject", s.descriptor()},
                 {"digits", digits},
                 {"interval", {{"lo", dyadic_json(I.lo)}, {"hi", dyadic_json(I.hi)}}},
                 {"outcome", outcome}};
    return seal_certificate(body);
}

nlohmann::json scan_collisions(const stream_sequence& seq, uint64_t count, uint64_t budget) {
    if (count < 2)
        throw error(errc::invalid_argument, "collision scan requires count >= 2");
    json pairs = json::array();
    json unresolved = json::array();
    uint64_t proved = 0;
    for (uint64_t i = 1; i <= count; ++i) {
        for (uint64_t j = i + 1; j <= count; ++j) {
            stream_ptr a = seq.at(i), b = seq.at(j);
            difference_result dr = reals_differ(*a, *b, budget);
            if (dr.proved) {
                ++proved;
                pairs.push_back({{"i", i},
                                 {"j", j},
                                 {"status", "proved"},
                                 {"position", dr.position},
                                 {"prefix_i", a->prefix_value(dr.position).get_str()},
                                 {"prefix_j", b->prefix_value(dr.position).get_str()}});
            } else {
                pairs.push_back({{"i", i}, {"j", j}, {"status", "unresolved"}});
                unresolved.push_back({i, j});
            }
        }
    }
    json body = {{"schema", 1},
                 {"kind", "collision-scan"},
                 {"count", count},
                 {"budget", budget},
                 {"source", seq.descriptor()},
                 {"pairs", pairs},
                 {"proved_count", proved},
                 {"unresolved", unresolved}};
    return seal_certificate(body);
}

namespace {

struct checker {
    const json& c;
    std::string why;

    bool fail(const std::string& r) {
        why = r;
        return false;
    }

    static bool parse_mpz(const json& j, mpz_class& out) {
        if (!j.is_string())
            return false;
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty())
            return false;
        return mpz_set_str(out.get_mpz_t(), s.c_str(), 10) == 0;
    }

    static bool parse_dyadic(const json& j, dyadic& out) {
        if (!j.is_object() || !j.contains("num") || !j.contains("exp") ||
            !j.at("exp").is_number_unsigned())
            return false;
        mpz_class n;
        if (!parse_mpz(j.at("num"), n))
            return false;
        out = dyadic(n, j.at("exp").get<uint64_t>());
        return true;
    }

    static bool cell_of_digits(const std::string& digits, dyadic_interval& out) {
        mpz_class k = 0;
        for (char ch : digits) {
            if (ch != '0' && ch != '1')
                return false;
            k = 2 * k + (ch == '1');
        }
        out = dyadic_interval(dyadic(k, digits.size()), dyadic(k + 1, digits.size()));
        return true;
    }

    // ceilings keeping the checker total on adversarial inputs; far above any
    // value the generators emit
    static constexpr uint64_t kMaxCount = 1u << 20;
    static constexpr uint64_t kMaxBudget = 1u << 22;
    static constexpr uint64_t kMaxBound = 64;

    bool check_digit_difference() {
        uint64_t count = c.at("count").get<uint64_t>();
        uint64_t offset = c.at("offset").get<uint64_t>();
        uint64_t budget = c.at("budget").get<uint64_t>();
        if (count > kMaxCount || budget > kMaxBudget)
            return fail("parameters exceed checker limits");
        const json& ws = c.at("witnesses");
        const json& os = c.at("real_outcomes");
        if (!ws.is_array() || ws.size() != count)
            return fail("witness list size mismatch");
        if (!os.is_array() || os.size() != count)
            return fail("real outcome list size mismatch");
        for (uint64_t i = 0; i < count; ++i) {
            const json& w = ws[i];
            if (w.at("index").get<uint64_t>() != i + 1)
                return fail("witness index out of order");
            if (w.at("position").get<uint64_t>() != i + 1 + offset)
                return fail("witness position disagrees with offset");
            int ob = w.at("output_bit").get<int>();
            int sb = w.at("source_bit").get<int>();
            if ((ob != 0 && ob != 1) || (sb != 0 && sb != 1))
                return fail("witness bits must be 0/1");
            if (ob == sb)
                return fail("witness bits do not differ");
        }
        for (uint64_t i = 0; i < count; ++i) {
            const json& o = os[i];
            if (o.at("index").get<uint64_t>() != i + 1)
                return fail("outcome index out of order");
            std::string st = o.at("status").get<std::string>();
            if (st == "unresolved")
                continue;
            if (st != "proved")
                return fail("unknown outcome status");
            uint64_t pos = o.at("position").get<uint64_t>();
            if (pos < 1 || pos > budget)
                return fail("proof position outside budget");
            mpz_class a, b;
            if (!parse_mpz(o.at("prefix_out"), a) || !parse_mpz(o.at("prefix_src"), b))
                return fail("malformed prefix integers");
            mpz_class lim = 1;
            mpz_mul_2exp(lim.get_mpz_t(), lim.get_mpz_t(), pos);
            if (a < 0 || b < 0 || a >= lim || b >= lim)
                return fail("prefix integers out of range");
            if (abs(a - b) < 2)
                return fail("prefix cells are not disjoint");
        }
        return true;
    }

    bool check_nonalgebraic() {
        uint64_t height = c.at("height").get<uint64_t>();
        uint64_t degree = c.at("degree").get<uint64_t>();
        uint64_t precision = c.at("precision").get<uint64_t>();
        if (height < 1 || degree < 1 || precision < 8)
            return fail("parameters below contract minima");
        if (height > kMaxBound || degree > kMaxBound || precision > kMaxBudget)
            return fail("parameters exceed checker limits");
        std::string digits = c.at("digits").get<std::string>();
        if (digits.size() != precision)
            return fail("digit string length disagrees with precision");
        dyadic_interval cell;
        if (!cell_of_digits(digits, cell))
            return fail("malformed digit string");
        dyadic lo, hi;
        if (!parse_dyadic(c.at("interval").at("lo"), lo) ||
            !parse_dyadic(c.at("interval").at("hi"), hi))
            return fail("malformed interval");
        if (lo != cell.lo || hi != cell.hi)
            return fail("interval disagrees with digits");
        const json& oc = c.at("outcome");
        std::string st = oc.at("status").get<std::string>();
        if (st == "success") {
            // the re-scan enumerates every polynomial class up to height+degree,
            // which grows exponentially; refuse sizes no generator here emits
            if (height + degree > 16)
                return fail("success re-check exceeds checker scan limits");
            if (first_algebraic_hit(cell, height, degree))
                return fail("scan finds an algebraic hit the certificate denies");
            return true;
        }
        if (st != "failure")
            return fail("unknown outcome status");
        const json& pc = oc.at("witness_poly");
        if (!pc.is_array() || pc.size() < 2)
            return fail("witness polynomial malformed");
        std::vector<mpz_class> coeffs(pc.size());
        for (size_t i = 0; i < pc.size(); ++i)
            if (!parse_mpz(pc[i], coeffs[i]))
                return fail("witness polynomial malformed");
        int_poly p(std::move(coeffs));
        if (p.degree() < 1 || (uint64_t)p.degree() > degree)
            return fail("witness polynomial degree out of range");
        if (p.height() > (long)height)
            return fail("witness polynomial height out of range");
        if (p.leading() <= 0 || p.content() != 1)
            return fail("witness polynomial not normalized");
        if (p.sign_at_dyadic(cell.lo) != 0 && p.sign_at_dyadic(cell.hi) != 0 &&
            sturm_chain(square_free_part(p)).count_open(cell.lo, cell.hi) == 0)
            return fail("witness polynomial has no root in the interval");
        return true;
    }

    bool check_collision_scan() {
        uint64_t count = c.at("count").get<uint64_t>();
        uint64_t budget = c.at("budget").get<uint64_t>();
        if (count < 2)
            return fail("count below contract minimum");
        if (count > 4096 || budget > kMaxBudget)
            return fail("parameters exceed checker limits");
        const json& pairs = c.at("pairs");
        if (!pairs.is_array() || pairs.size() != count * (count - 1) / 2)
            return fail("pair list size mismatch");
        uint64_t proved = 0;
        std::vector<std::pair<uint64_t, uint64_t>> unresolved;
        size_t k = 0;
        for (uint64_t i = 1; i <= count; ++i) {
            for (uint64_t j = i + 1; j <= count; ++j, ++k) {
                const json& p = pairs[k];
                if (p.at("i").get<uint64_t>() != i || p.at("j").get<uint64_t>() != j)
                    return fail("pair ordering violated");
                std::string st = p.at("status").get<std::string>();
                if (st == "unresolved") {
                    unresolved.emplace_back(i, j);
                    continue;
                }
                if (st != "proved")
                    return fail("unknown pair status");
                ++proved;
                uint64_t pos = p.at("position").get<uint64_t>();
                if (pos < 1 || pos > budget)
                    return fail("proof position outside budget");
                mpz_class a, b;
                if (!parse_mpz(p.at("prefix_i"), a) || !parse_mpz(p.at("prefix_j"), b))
                    return fail("malformed prefix integers");
                mpz_class lim = 1;
                mpz_mul_2exp(lim.get_mpz_t(), lim.get_mpz_t(), pos);
                if (a < 0 || b < 0 || a >= lim || b >= lim)
                    return fail("prefix integers out of range");
                if (abs(a - b) < 2)
                    return fail("prefix cells are not disjoint");
            }
        }
        if (c.at("proved_count").get<uint64_t>() != proved)
            return fail("proved_count disagrees with pairs");
        const json& un = c.at("unresolved");
        if (!un.is_array() || un.size() != unresolved.size())
            return fail("unresolved list disagrees with pairs");
        for (size_t i = 0; i < unresolved.size(); ++i) {
            if (un[i][0].get<uint64_t>() != unresolved[i].first ||
                un[i][1].get<uint64_t>() != unresolved[i].second)
                return fail("unresolved list disagrees with pairs");
        }
        return true;
    }

    bool check_nested_chain() {
        uint64_t precision = c.at("precision").get<uint64_t>();
        std::string digits = c.at("target_digits").get<std::string>();
        if (digits.size() != precision || precision < 1)
            return fail("target digits length disagrees with precision");
        dyadic_interval cell;
        if (!cell_of_digits(digits, cell))
            return fail("malformed target digits");
        const json& chain = c.at("chain");
        if (!chain.is_array())
            return fail("chain must be an array");
        struct elem {
            uint64_t lo_pt, hi_pt;
            dyadic_interval lo_b, hi_b;
        };
        std::vector<elem> es;
        for (const json& e : chain) {
            elem x;
            x.lo_pt = e.at("lo_point").get<uint64_t>();
            x.hi_pt = e.at("hi_point").get<uint64_t>();
            dyadic a1, a2, b1, b2;
            if (!parse_dyadic(e.at("lo_bound").at("lo"), a1) ||
                !parse_dyadic(e.at("lo_bound").at("hi"), a2) ||
                !parse_dyadic(e.at("hi_bound").at("lo"), b1) ||
                !parse_dyadic(e.at("hi_bound").at("hi"), b2))
                return fail("malformed endpoint bounds");
            if (!(a1 < a2) || !(b1 < b2))
                return fail("degenerate endpoint bounds");
            x.lo_b = dyadic_interval(a1, a2);
            x.hi_b = dyadic_interval(b1, b2);
            es.push_back(std::move(x));
        }
        for (const elem& e : es) {
            if (!(e.lo_b.hi <= cell.lo && cell.hi <= e.hi_b.lo))
                return fail("chain element does not provably contain the target");
        }
        for (size_t i = 0; i + 1 < es.size(); ++i) {
            const elem& cur = es[i];
            const elem& nxt = es[i + 1];
            bool lo_equal = cur.lo_pt == nxt.lo_pt;
            bool hi_equal = cur.hi_pt == nxt.hi_pt;
            if (lo_equal && hi_equal)
                return fail("consecutive chain elements are not strictly nested");
            if (!lo_equal && !(cur.lo_b.hi <= nxt.lo_b.lo))
                return fail("left endpoints not provably ordered");
            if (!hi_equal && !(nxt.hi_b.hi <= cur.hi_b.lo))
                return fail("right endpoints not provably ordered");
        }
        return true;
    }

    bool run() {
        if (!c.is_object())
            return fail("certificate must be a JSON object");
        if (!c.contains("schema") || c.at("schema") != 1)
            return fail("unsupported schema");
        if (!c.contains("digest") || !c.at("digest").is_string())
            return fail("missing digest");
        json body = c;
        std::string digest = body.at("digest").get<std::string>();
        body.erase("digest");
        if (sha256_hex(body.dump()) != digest)
            return fail("digest mismatch: certificate was altered");
        std::string kind = c.at("kind").get<std::string>();
        if (kind == "digit-difference")
            return check_digit_difference();
        if (kind == "nonalgebraic-up-to")
            return check_nonalgebraic();
        if (kind == "collision-scan")
            return check_collision_scan();
        if (kind == "nested-chain")
            return check_nested_chain();
        return fail("unknown certificate kind");
    }
};

} // namespace

check_result check_certificate(const nlohmann::json& cert) {
    checker ch{cert, {}};
    try {
        bool ok = ch.run();
        return {ok, ok ? "" : ch.why};
    } catch (const json::exception& e) {
        return {false, std::string("malformed certificate: ") + e.what()};
    } catch (const std::exception& e) {
        return {false, std::string("validation error: ") + e.what()};
    }
}

} // namespace cantor

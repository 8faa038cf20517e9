#include "segments.hpp"

#include <cassert>

#include "error.hpp"
#include "certificates.hpp"

namespace cantor {

placement_mode parse_mode(const std::string& s) {
    if (s == "adjacent")
        return placement_mode::adjacent;
    if (s == "allpairs" || s == "all-pairs")
        return placement_mode::all_pairs;
    throw error(errc::invalid_argument, "unknown mode: " + s);
}

std::string mode_name(placement_mode m) {
    return m == placement_mode::adjacent ? "adjacent" : "allpairs";
}

stream_ptr fill_segment(const std::shared_ptr<run_geometry>& geo, const algebraic_real& lo,
                        const algebraic_real& hi, const std::string& policy) {
    ordering o = compare(lo, hi);
    if (o == ordering::equal)
        throw error(errc::invalid_argument, "degenerate segment");
    assert(o == ordering::less);

    if (policy == "liouville-affine")
        return std::make_shared<affine_liouville_stream>(lo, hi);

    if (policy == "diagonal-local") {
        // smallest dyadic cell [k/2^m, (k+1)/2^m] provably inside (lo, hi), then
        // the diagonal rule over the enumeration restricted to the segment
        algebraic_real a = lo, b = hi;
        for (uint64_t m = 1;; ++m) {
            a.refine_to(-(int64_t)(m + 6));
            b.refine_to(-(int64_t)(m + 6));
            mpz_class k0 = a.hi().floor_scaled(m);
            for (mpz_class k = k0; k <= k0 + 4; ++k) {
                if (k < 0)
                    continue;
                if (a.hi() <= dyadic(k, m) && dyadic(k + 1, m) <= b.lo()) {
                    std::vector<uint8_t> bits(m);
                    for (uint64_t i = 0; i < m; ++i)
                        bits[i] = (uint8_t)mpz_tstbit(k.get_mpz_t(), m - 1 - i);
                    auto restricted = std::make_shared<restricted_enumeration_sequence>(
                        geo->sigma0(), lo, hi);
                    return std::make_shared<prefixed_diagonal_stream>(std::move(bits), restricted);
                }
            }
        }
    }

    throw error(errc::invalid_argument, "unknown filler policy: " + policy);
}

placement_state::placement_state(std::shared_ptr<run_geometry> geo, placement_mode mode,
                                 std::string policy)
    : geo_(std::move(geo)), mode_(mode), policy_(std::move(policy)) {}

void placement_state::make_segment(size_t lo_pt, size_t hi_pt) {
    segment_rec s;
    s.lo_point = lo_pt;
    s.hi_point = hi_pt;
    s.filler = fill_segment(geo_, placed_[lo_pt].unit_value, placed_[hi_pt].unit_value, policy_);
    s.created_step = (uint32_t)placed_.size();
    segments_.push_back(std::move(s));
}

void placement_state::place_next() {
    uint64_t idx = placed_.size();
    placed_point pt;
    pt.enum_index = idx;
    pt.window_value = geo_->enumeration().at(idx);
    pt.unit_value = geo_->sigma0()->unit_value(idx + 1);
    placed_.push_back(std::move(pt));
    size_t me = placed_.size() - 1;

    // sorted insert by unit value (values are distinct by enumeration dedup)
    size_t lo = 0, hi = by_value_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (compare(placed_[by_value_[mid]].unit_value, placed_[me].unit_value) == ordering::less)
            lo = mid + 1;
        else
            hi = mid;
    }
    size_t pos = lo;
    by_value_.insert(by_value_.begin() + pos, me);

    if (mode_ == placement_mode::all_pairs) {
        for (size_t q = 0; q + 1 < placed_.size(); ++q) {
            bool q_less = compare(placed_[q].unit_value, placed_[me].unit_value) == ordering::less;
            make_segment(q_less ? q : me, q_less ? me : q);
        }
        return;
    }

    // adjacent: the new point segments its bounded gaps; a split parent retires
    bool has_left = pos > 0, has_right = pos + 1 < by_value_.size();
    size_t left = has_left ? by_value_[pos - 1] : 0;
    size_t right = has_right ? by_value_[pos + 1] : 0;
    if (has_left && has_right) {
        for (auto& s : segments_) {
            if (s.retired_step < 0 && s.lo_point == left && s.hi_point == right) {
                s.retired_step = (int64_t)placed_.size();
                break;
            }
        }
    }
    if (has_left)
        make_segment(left, me);
    if (has_right)
        make_segment(me, right);
}

void placement_state::run(uint32_t steps) {
    while (placed_.size() < steps)
        place_next();
}

nlohmann::json placement_state::segments_json(uint64_t digit_precision) const {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < segments_.size(); ++i) {
        const auto& s = segments_[i];
        arr.push_back({{"record", "segment"},
                       {"id", i},
                       {"created_step", s.created_step},
                       {"retired_step", s.retired_step},
                       {"lo", algebraic_json(placed_[s.lo_point].window_value)},
                       {"hi", algebraic_json(placed_[s.hi_point].window_value)},
                       {"filler", s.filler->descriptor()},
                       {"filler_digits", s.filler->digit_prefix(digit_precision)}});
    }
    return arr;
}

namespace {

enum class containment { inside, outside, undecided };

struct hunt_ctx {
    const placement_state& state;
    const digit_stream& target;
    uint64_t precision;
    std::vector<algebraic_real> refined; // per placed point, refined copies
    int64_t cur_prec = 0;

    explicit hunt_ctx(const placement_state& st, const digit_stream& t, uint64_t prec)
        : state(st), target(t), precision(prec) {
        for (const auto& p : st.placed())
            refined.push_back(p.unit_value);
    }

    void refine_all(int64_t prec) {
        if (prec <= cur_prec)
            return;
        for (auto& r : refined)
            r.refine_to(-prec);
        cur_prec = prec;
    }

    containment decide(const segment_rec& s) {
        for (uint64_t prec = 32;; prec *= 2) {
            if (prec > precision)
                prec = precision;
            refine_all((int64_t)prec);
            dyadic_interval tv = target.to_interval(prec);
            const algebraic_real& a = refined[s.lo_point];
            const algebraic_real& b = refined[s.hi_point];
            if (a.hi() <= tv.lo && tv.hi <= b.lo())
                return containment::inside;
            if (tv.hi <= a.lo() || b.hi() <= tv.lo)
                return containment::outside;
            if (prec == precision)
                return containment::undecided;
        }
    }
};

} // namespace

hunt_result hunt_target(const std::shared_ptr<run_geometry>& geo, placement_mode mode,
                        const std::string& policy, const stream_ptr& target, uint32_t steps,
                        uint64_t budget, uint64_t precision) {
    if (steps < 1)
        throw error(errc::invalid_argument, "steps must be >= 1");
    placement_state state(geo, mode, policy);
    state.run(steps);

    hunt_ctx ctx(state, *target, precision);
    std::vector<size_t> chain;
    std::vector<size_t> exhausted;
    const auto& segs = state.segments();
    const auto& pts = state.placed();

    auto nested_strictly = [&](const segment_rec& inner, const segment_rec& outer) {
        ordering lo_o = inner.lo_point == outer.lo_point
                            ? ordering::equal
                            : compare(pts[outer.lo_point].unit_value, pts[inner.lo_point].unit_value);
        ordering hi_o = inner.hi_point == outer.hi_point
                            ? ordering::equal
                            : compare(pts[inner.hi_point].unit_value, pts[outer.hi_point].unit_value);
        bool lo_ok = lo_o != ordering::greater;
        bool hi_ok = hi_o != ordering::greater;
        bool strict = lo_o == ordering::less || hi_o == ordering::less;
        return lo_ok && hi_ok && strict;
    };

    for (size_t i = 0; i < segs.size(); ++i) {
        containment c = ctx.decide(segs[i]);
        if (c == containment::undecided) {
            exhausted.push_back(i);
            continue;
        }
        if (c != containment::inside)
            continue;
        if (chain.empty() || nested_strictly(segs[i], segs[chain.back()]))
            chain.push_back(i);
    }

    // verdict over all fillers created so far
    nlohmann::json target_desc = target->descriptor();
    int64_t planted_step = -1; // 1-based ordinal of the created segment
    bool all_proved = true;
    std::vector<difference_result> filler_rel(segs.size());
    for (size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].filler->descriptor() == target_desc) {
            if (planted_step < 0)
                planted_step = (int64_t)i + 1;
            filler_rel[i] = {false, 0};
            all_proved = false;
            continue;
        }
        filler_rel[i] = reals_differ(*segs[i].filler, *target, budget);
        if (!filler_rel[i].proved)
            all_proved = false;
    }

    nlohmann::json verdict;
    if (planted_step >= 0)
        verdict = {{"kind", "target-is-some-filler"}, {"step", planted_step}};
    else if (all_proved)
        verdict = {{"kind", "target-distinct-from-all-fillers-so-far"}};
    else
        verdict = {{"kind", "unresolved"}, {"budget", budget}};

    dyadic_interval tv = target->to_interval(precision);
    nlohmann::json chain_json = nlohmann::json::array();
    for (size_t ci = 0; ci < chain.size(); ++ci) {
        const segment_rec& s = segs[chain[ci]];
        const algebraic_real& a = ctx.refined[s.lo_point];
        const algebraic_real& b = ctx.refined[s.hi_point];
        dyadic w = b.hi() - a.lo(); // proven upper bound on the true width
        nlohmann::json rel;
        if (segs[chain[ci]].filler->descriptor() == target_desc)
            rel = {{"status", "identical-descriptor"}};
        else if (filler_rel[chain[ci]].proved)
            rel = {{"status", "proved-different"}, {"position", filler_rel[chain[ci]].position}};
        else
            rel = {{"status", "unresolved"}, {"budget", budget}};
        dyadic_interval fv = s.filler->to_interval(precision);
        dyadic gap1 = tv.lo - fv.hi, gap2 = fv.lo - tv.hi;
        dyadic dist_lo = std::max(dyadic(0), std::max(gap1, gap2));
        dyadic dist_hi = std::max(tv.hi - fv.lo, fv.hi - tv.lo);
        chain_json.push_back({{"segment", chain[ci]},
                              {"created_step", s.created_step},
                              {"endpoints",
                               {{"lo", algebraic_json(pts[s.lo_point].window_value)},
                                {"hi", algebraic_json(pts[s.hi_point].window_value)}}},
                              {"width_log2", ceil_log2(w)},
                              {"filler", s.filler->descriptor()},
                              {"filler_target_relation", rel},
                              {"distance", {{"lo", dyadic_json(dist_lo)}, {"hi", dyadic_json(dist_hi)}}}});
    }

    hunt_result out;
    out.report = {{"record", "hunt-report"},
                  {"schema", 1},
                  {"steps", steps},
                  {"mode", mode_name(mode)},
                  {"policy", policy},
                  {"target", target_desc},
                  {"chain", chain_json},
                  {"precision_exhausted", exhausted},
                  {"verdict", verdict}};

    // nested-chain certificate: refine neighbor separations, then freeze bounds
    nlohmann::json cert_chain = nlohmann::json::array();
    for (size_t ci = 0; ci < chain.size(); ++ci) {
        const segment_rec& s = segs[chain[ci]];
        if (ci + 1 < chain.size()) {
            const segment_rec& n = segs[chain[ci + 1]];
            // separate distinct endpoints so the checker sees dyadic gaps
            auto separate = [&](size_t pa, size_t pb) {
                if (pa == pb)
                    return;
                while (!(ctx.refined[pa].hi() <= ctx.refined[pb].lo() ||
                         ctx.refined[pb].hi() <= ctx.refined[pa].lo())) {
                    ctx.refined[pa].refine_step();
                    ctx.refined[pb].refine_step();
                }
            };
            separate(s.lo_point, n.lo_point);
            separate(n.hi_point, s.hi_point);
        }
    }
    for (size_t ci = 0; ci < chain.size(); ++ci) {
        const segment_rec& s = segs[chain[ci]];
        const algebraic_real& a = ctx.refined[s.lo_point];
        const algebraic_real& b = ctx.refined[s.hi_point];
        cert_chain.push_back(
            {{"lo_point", (uint64_t)s.lo_point},
             {"hi_point", (uint64_t)s.hi_point},
             {"lo_bound", {{"lo", dyadic_json(a.lo())}, {"hi", dyadic_json(a.hi())}}},
             {"hi_bound", {{"lo", dyadic_json(b.lo())}, {"hi", dyadic_json(b.hi())}}}});
    }
    nlohmann::json cert_body = {{"schema", 1},
                                {"kind", "nested-chain"},
                                {"target", target_desc},
                                {"precision", precision},
                                {"target_digits", target->digit_prefix(precision)},
                                {"chain", cert_chain}};
    out.chain_certificate = seal_certificate(cert_body);
    return out;
}

} // namespace cantor

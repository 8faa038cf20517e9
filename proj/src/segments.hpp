#pragma once

#include "context.hpp"

namespace cantor {

enum class placement_mode { adjacent, all_pairs };

placement_mode parse_mode(const std::string& s);
std::string mode_name(placement_mode m);

struct placed_point {
    uint64_t enum_index;         // 0-based index in the canonical enumeration
    algebraic_real window_value; // window coordinates (reporting)
    algebraic_real unit_value;   // unit coordinates (all analysis)
};

struct segment_rec {
    size_t lo_point, hi_point; // indices into placed()
    stream_ptr filler;         // value strictly inside the open segment
    uint32_t created_step;
    int64_t retired_step = -1; // adjacent mode: split by a later placement
};

// deterministic filler for the open unit segment (lo, hi); policies:
// "liouville-affine" and "diagonal-local". Throws on Equal endpoints.
stream_ptr fill_segment(const std::shared_ptr<run_geometry>& geo, const algebraic_real& lo,
                        const algebraic_real& hi, const std::string& policy);

// Sequential placement of the canonical enumeration. Adjacent mode keeps the
// bounded gaps between value-neighbors segmented (splits retire the parent);
// all-pairs mode pairs each new point with every earlier one. Every created
// segment is filled immediately.
class placement_state {
  public:
    placement_state(std::shared_ptr<run_geometry> geo, placement_mode mode, std::string policy);

    void place_next();
    void run(uint32_t steps);

    uint32_t steps() const { return (uint32_t)placed_.size(); }
    placement_mode mode() const { return mode_; }
    const std::string& policy() const { return policy_; }
    const std::vector<placed_point>& placed() const { return placed_; }
    const std::vector<segment_rec>& segments() const { return segments_; }
    const std::vector<size_t>& by_value() const { return by_value_; }
    const std::shared_ptr<run_geometry>& geometry() const { return geo_; }

    nlohmann::json segments_json(uint64_t digit_precision) const;

  private:
    void make_segment(size_t lo_pt, size_t hi_pt);

    std::shared_ptr<run_geometry> geo_;
    placement_mode mode_;
    std::string policy_;
    std::vector<placed_point> placed_;
    std::vector<segment_rec> segments_;
    std::vector<size_t> by_value_; // placed_ indices sorted by unit value
};

struct hunt_result {
    nlohmann::json report;            // the HuntReport serialization
    nlohmann::json chain_certificate; // nested-chain certificate over the same run
};

// Runs `steps` placements, extracts the greedy nested chain of created segments
// provably containing the target, and reports filler/target relations. The
// verdict records what finite evidence shows; it never adjudicates beyond it.
hunt_result hunt_target(const std::shared_ptr<run_geometry>& geo, placement_mode mode,
                        const std::string& policy, const stream_ptr& target, uint32_t steps,
                        uint64_t budget, uint64_t precision);

} // namespace cantor

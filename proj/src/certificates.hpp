#pragma once

#include <optional>

#include "diagonal.hpp"

namespace cantor {

// Certificates are JSON bodies sealed with a SHA-256 digest of the canonical
// serialization; checking needs only the witness data, never the generator.
nlohmann::json seal_certificate(nlohmann::json body);

struct check_result {
    bool valid = false;
    std::string reason;
};

check_result check_certificate(const nlohmann::json& cert);

// Digit-difference witnesses for every index <= count, plus real-difference
// outcomes at the stated budget (unresolved entries recorded, not fatal).
nlohmann::json certify_diagonal(const sequence_ptr& source, const stream_ptr& output,
                                uint64_t offset, uint64_t count, uint64_t budget);

// Succeeds iff no primitive polynomial with degree <= d and height <= H has a
// root in the closed prefix cell of s at the given precision; fails citing the
// first violating polynomial in canonical order.
nlohmann::json certify_nonalgebraic(const digit_stream& s, uint64_t height, uint64_t degree,
                                    uint64_t precision);

// Pairwise reals_differ over indices <= count.
nlohmann::json scan_collisions(const stream_sequence& seq, uint64_t count, uint64_t budget);

// first admissible polynomial with a root in the closed interval, if any
std::optional<int_poly> first_algebraic_hit(const dyadic_interval& I, uint64_t height,
                                            uint64_t degree);

} // namespace cantor

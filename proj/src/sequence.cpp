#include "sequence.hpp"

#include <cassert>

#include "error.hpp"

namespace cantor {

nlohmann::json provenance::to_json() const {
    nlohmann::json j{{"layer", layer}};
    if (diagonal) {
        j["kind"] = "diagonal";
        j["offset"] = detail;
        j["applied_at_level"] = applied_at_level;
    } else {
        j["kind"] = "algebraic";
        j["index"] = detail;
    }
    return j;
}

stream_ptr stream_sequence::at(uint64_t index) const {
    assert(index >= 1);
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(index);
    if (it != memo_.end())
        return it->second;
    stream_ptr s = make(index);
    memo_.emplace(index, s);
    return s;
}

std::vector<std::pair<uint64_t, stream_ptr>> stream_sequence::materialized() const {
    std::lock_guard<std::mutex> lk(mu_);
    return {memo_.begin(), memo_.end()};
}

// ---- sigma 0 ----

unit_enumeration_sequence::unit_enumeration_sequence(std::shared_ptr<algebraic_enumeration> en)
    : enum_(std::move(en)) {
    identity_ = enum_->window_lo() == 0 && enum_->window_hi() == 1;
}

algebraic_real unit_enumeration_sequence::unit_value(uint64_t index) const {
    algebraic_real x = enum_->at(index - 1);
    if (identity_)
        return x;
    return map_to_unit(x, enum_->window_lo(), enum_->window_hi());
}

stream_ptr unit_enumeration_sequence::make(uint64_t index) const {
    return std::make_shared<algebraic_stream>(unit_value(index));
}

provenance unit_enumeration_sequence::provenance_at(uint64_t index) const {
    return {0, false, index - 1, 0};
}

nlohmann::json unit_enumeration_sequence::descriptor() const {
    return {{"type", "sigma0"},
            {"window",
             {{"lo", enum_->window_lo().get_str()}, {"hi", enum_->window_hi().get_str()}}}};
}

// ---- merge ----

merged_sequence::merged_sequence(sequence_ptr base)
    : base_(std::move(base)), level_(base_->level() + 1) {}

stream_ptr merged_sequence::make(uint64_t index) const {
    if (index % 2 == 1)
        return base_->at((index + 1) / 2);
    return std::make_shared<diagonal_stream>(base_, index / 2 - 1);
}

provenance merged_sequence::provenance_at(uint64_t index) const {
    if (index % 2 == 1)
        return base_->provenance_at((index + 1) / 2);
    return {level_, true, index / 2 - 1, base_->level()};
}

nlohmann::json merged_sequence::descriptor() const {
    return {{"type", "sigma"}, {"depth", level_}, {"base", base_->descriptor()}};
}

// ---- prepend ----

prepended_sequence::prepended_sequence(stream_ptr head, sequence_ptr tail)
    : head_(std::move(head)), tail_(std::move(tail)) {}

stream_ptr prepended_sequence::make(uint64_t index) const {
    if (index == 1)
        return head_;
    return tail_->at(index - 1);
}

provenance prepended_sequence::provenance_at(uint64_t index) const {
    if (index == 1)
        return {tail_->level() + 1, true, 0, tail_->level()};
    return tail_->provenance_at(index - 1);
}

nlohmann::json prepended_sequence::descriptor() const {
    return {{"type", "prepended"}, {"head", head_->descriptor()}, {"tail", tail_->descriptor()}};
}

// ---- restriction ----

restricted_enumeration_sequence::restricted_enumeration_sequence(
    std::shared_ptr<const unit_enumeration_sequence> base, algebraic_real lo, algebraic_real hi)
    : base_(std::move(base)), lo_(std::move(lo)), hi_(std::move(hi)) {
    lo_.refine_to(-24);
    hi_.refine_to(-24);
}

uint64_t restricted_enumeration_sequence::member_base_index(uint64_t index) const {
    std::lock_guard<std::mutex> lk(scan_mu_);
    while (members_.size() < index) {
        uint64_t cand = ++scanned_;
        algebraic_real v = base_->unit_value(cand);
        if (compare(v, lo_) == ordering::greater && compare(v, hi_) == ordering::less)
            members_.push_back(cand);
    }
    return members_[index - 1];
}

stream_ptr restricted_enumeration_sequence::make(uint64_t index) const {
    return base_->at(member_base_index(index));
}

provenance restricted_enumeration_sequence::provenance_at(uint64_t index) const {
    return base_->provenance_at(member_base_index(index));
}

nlohmann::json restricted_enumeration_sequence::descriptor() const {
    return {{"type", "restricted-enumeration"},
            {"base", base_->descriptor()},
            {"lo", algebraic_json(lo_)},
            {"hi", algebraic_json(hi_)}};
}

// ---- tower ----

sequence_ptr build_sigma(std::shared_ptr<const unit_enumeration_sequence> sigma0, uint32_t depth) {
    sequence_ptr s = sigma0;
    for (uint32_t i = 0; i < depth; ++i)
        s = std::make_shared<merged_sequence>(s);
    return s;
}

uint64_t index_of(uint32_t layer, uint64_t element, uint32_t at_level) {
    if (layer > at_level)
        throw error(errc::invalid_argument, "layer exceeds level");
    assert(element >= 1);
    // entry index at the layer's own level, then one doubling per later merge:
    // q -> 2q - 1 (base side of the interleave)
    constexpr uint64_t limit = uint64_t(1) << 62;
    if (element >= limit)
        throw error(errc::invalid_argument, "element index too large");
    uint64_t q = layer == 0 ? element : 2 * element;
    for (uint32_t t = layer; t < at_level; ++t) {
        if (q >= limit)
            throw error(errc::invalid_argument, "index exceeds the representable range");
        q = 2 * q - 1;
    }
    return q;
}

} // namespace cantor

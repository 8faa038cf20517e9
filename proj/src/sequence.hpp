#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "digit_stream.hpp"
#include "enumeration.hpp"

namespace cantor {

// where an element of a layered enumeration came from
struct provenance {
    uint32_t layer = 0;
    bool diagonal = false;       // false: base algebraic element
    uint64_t detail = 0;         // enumeration index (0-based) or diagonal offset
    uint32_t applied_at_level = 0; // level the diagonal was taken over

    nlohmann::json to_json() const;
};

// Total, deterministic, 1-based indexed family of digit streams. Elements are
// constructed lazily and memoized so every consumer shares one digit cache per
// (sequence, index); without this sharing the layered recursion degenerates to
// exponential cost in the depth.
class stream_sequence {
  public:
    virtual ~stream_sequence() = default;

    stream_ptr at(uint64_t index) const;
    virtual provenance provenance_at(uint64_t index) const = 0;
    virtual uint32_t level() const = 0;
    virtual nlohmann::json descriptor() const = 0;

    // materialized (index, stream) pairs, ascending; checkpoint support
    std::vector<std::pair<uint64_t, stream_ptr>> materialized() const;

  protected:
    virtual stream_ptr make(uint64_t index) const = 0;

  private:
    mutable std::mutex mu_;
    mutable std::map<uint64_t, stream_ptr> memo_;
};

using sequence_ptr = std::shared_ptr<const stream_sequence>;

// level 0: the canonical algebraic enumeration of the window, mapped onto [0,1)
class unit_enumeration_sequence final : public stream_sequence {
  public:
    explicit unit_enumeration_sequence(std::shared_ptr<algebraic_enumeration> en);
    provenance provenance_at(uint64_t index) const override;
    uint32_t level() const override { return 0; }
    nlohmann::json descriptor() const override;
    algebraic_real unit_value(uint64_t index) const; // 1-based
    algebraic_enumeration& enumeration() const { return *enum_; }

  protected:
    stream_ptr make(uint64_t index) const override;

  private:
    std::shared_ptr<algebraic_enumeration> enum_;
    bool identity_;
};

// one interleaving step: odd indexes read the base, even indexes are the fresh
// offset-diagonal family over the base (offset k-1 at family position k)
class merged_sequence final : public stream_sequence {
  public:
    explicit merged_sequence(sequence_ptr base);
    provenance provenance_at(uint64_t index) const override;
    uint32_t level() const override { return level_; }
    nlohmann::json descriptor() const override;
    const sequence_ptr& base() const { return base_; }

  protected:
    stream_ptr make(uint64_t index) const override;

  private:
    sequence_ptr base_;
    uint32_t level_;
};

// persistent prepend: head at index 1, original index nu at nu + 1
class prepended_sequence final : public stream_sequence {
  public:
    prepended_sequence(stream_ptr head, sequence_ptr tail);
    provenance provenance_at(uint64_t index) const override;
    uint32_t level() const override { return tail_->level(); }
    nlohmann::json descriptor() const override;

  protected:
    stream_ptr make(uint64_t index) const override;

  private:
    stream_ptr head_;
    sequence_ptr tail_;
};

// every index resolves to the same stream (test and example fixture)
class constant_sequence final : public stream_sequence {
  public:
    explicit constant_sequence(stream_ptr s) : s_(std::move(s)) {}
    provenance provenance_at(uint64_t) const override { return {}; }
    uint32_t level() const override { return 0; }
    nlohmann::json descriptor() const override {
        return {{"type", "constant-seq"}, {"value", s_->descriptor()}};
    }

  protected:
    stream_ptr make(uint64_t) const override { return s_; }

  private:
    stream_ptr s_;
};

// base enumeration restricted to the open interval (lo, hi) with algebraic
// endpoints; element streams are shared with the base sequence
class restricted_enumeration_sequence final : public stream_sequence {
  public:
    restricted_enumeration_sequence(std::shared_ptr<const unit_enumeration_sequence> base,
                                    algebraic_real lo, algebraic_real hi);
    provenance provenance_at(uint64_t index) const override;
    uint32_t level() const override { return 0; }
    nlohmann::json descriptor() const override;

  protected:
    stream_ptr make(uint64_t index) const override;

  private:
    uint64_t member_base_index(uint64_t index) const; // 1-based -> 1-based
    std::shared_ptr<const unit_enumeration_sequence> base_;
    algebraic_real lo_, hi_;
    mutable std::mutex scan_mu_;
    mutable std::vector<uint64_t> members_; // base indices (1-based), ascending
    mutable uint64_t scanned_ = 0;          // base indices examined so far
};

// Sigma tower: level 0 is the enumeration; each further level interleaves the
// previous level with its offset-diagonal family.
sequence_ptr build_sigma(std::shared_ptr<const unit_enumeration_sequence> sigma0, uint32_t depth);

// index of element j of the given layer inside Sigma_at_level under strict
// alternation; throws when layer > at_level
uint64_t index_of(uint32_t layer, uint64_t element, uint32_t at_level);

} // namespace cantor

#pragma once

#include "sequence.hpp"

namespace cantor {

// Shared per-run geometry: the user window (M, W) and the unit-interval view of
// its algebraic enumeration. Internals work on [0,1); the window map is applied
// exactly once, here. Sigma towers are cached per depth so digit caches are
// shared across commands of one process.
class run_geometry {
  public:
    run_geometry(mpq_class window_lo, mpq_class window_hi);

    const mpq_class& window_lo() const { return wlo_; }
    const mpq_class& window_hi() const { return whi_; }
    mpq_class delta() const { return whi_ - wlo_; }

    algebraic_enumeration& enumeration() { return *enum_; }
    std::shared_ptr<const unit_enumeration_sequence> sigma0() const { return sigma0_; }
    sequence_ptr sigma(uint32_t depth);

    // window-coordinate rational -> unit coordinates; throws when outside (M, W)
    mpq_class unit_of_rational(const mpq_class& r) const;
    // a stream for a window-coordinate target specification
    stream_ptr unit_target_rational(const mpq_class& r) const;
    stream_ptr unit_target_liouville() const;

  private:
    mpq_class wlo_, whi_;
    std::shared_ptr<algebraic_enumeration> enum_;
    std::shared_ptr<unit_enumeration_sequence> sigma0_;
    std::mutex mu_;
    std::vector<sequence_ptr> towers_; // towers_[d] = sigma at depth d
};

} // namespace cantor

#include "context.hpp"

#include "error.hpp"

namespace cantor {

run_geometry::run_geometry(mpq_class window_lo, mpq_class window_hi)
    : wlo_(std::move(window_lo)), whi_(std::move(window_hi)) {
    wlo_.canonicalize();
    whi_.canonicalize();
    if (!(wlo_ < whi_))
        throw error(errc::invalid_argument, "window requires M < W");
    enum_ = std::make_shared<algebraic_enumeration>(wlo_, whi_);
    sigma0_ = std::make_shared<unit_enumeration_sequence>(enum_);
}

sequence_ptr run_geometry::sigma(uint32_t depth) {
    std::lock_guard<std::mutex> lk(mu_);
    while (towers_.size() <= depth) {
        if (towers_.empty())
            towers_.push_back(sigma0_);
        else
            towers_.push_back(std::make_shared<merged_sequence>(towers_.back()));
    }
    return towers_[depth];
}

mpq_class run_geometry::unit_of_rational(const mpq_class& r) const {
    if (!(wlo_ < r && r < whi_))
        throw error(errc::invalid_argument, "target provably outside the window");
    mpq_class u = (r - wlo_) / (whi_ - wlo_);
    u.canonicalize();
    return u;
}

stream_ptr run_geometry::unit_target_rational(const mpq_class& r) const {
    return std::make_shared<rational_stream>(unit_of_rational(r));
}

stream_ptr run_geometry::unit_target_liouville() const {
    if (wlo_ == 0 && whi_ == 1)
        return liouville_stream::shared();
    // ell in (M, W) is decidable: ell is transcendental, the bounds rational
    stream_ptr ell = liouville_stream::shared();
    for (uint64_t p = 8;; p *= 2) {
        dyadic_interval iv = ell->to_interval(p);
        mpq_class lo = iv.lo.to_mpq(), hi = iv.hi.to_mpq();
        if (wlo_ < lo && hi < whi_)
            break;
        if (hi <= wlo_ || whi_ <= lo)
            throw error(errc::invalid_argument, "target provably outside the window");
    }
    // unit value = (ell - M)/D = alpha + beta*ell: affine image with endpoints
    // alpha (at ell=0) and alpha + beta (at ell=1)
    mpq_class d = whi_ - wlo_;
    mpq_class alpha = -wlo_ / d;
    mpq_class beta = 1 / d;
    return std::make_shared<affine_liouville_stream>(rational_point(alpha),
                                                     rational_point(alpha + beta));
}

} // namespace cantor

#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <vector>

#include "algebraic.hpp"

namespace cantor {

// Canonical order of the algebraic numbers in an open window (M, W):
//   - size class N = degree + sum |coefficients|, ascending;
//   - within a class: degree ascending, then coefficient tuple compared from the
//     leading coefficient down, each coefficient keyed by |c| then positive first
//     (0 < 1 < -1 < 2 < -2 < ...);
//   - within a polynomial: real roots ascending;
//   - a root is emitted only when no earlier-ordered polynomial already produced
//     an Equal value (decided exactly).
// Only primitive polynomials with positive leading coefficient and degree >= 1
// participate, which makes every size class finite.
class algebraic_enumeration {
  public:
    algebraic_enumeration(mpq_class window_lo, mpq_class window_hi);

    // index-th distinct algebraic number of the window, 0-based; deterministic
    algebraic_real at(uint64_t index);
    uint64_t known_count();
    const mpq_class& window_lo() const { return wlo_; }
    const mpq_class& window_hi() const { return whi_; }

  private:
    void grow_one_class();

    mpq_class wlo_, whi_;
    dyadic hull_lo_, hull_hi_;
    bool hull_exact_;  // hull equals the window, so no per-root membership filter
    bool hull_pow2_;   // hull width is a power of two
    uint64_t next_class_ = 2;
    std::vector<algebraic_real> emitted_;
    std::vector<size_t> by_value_; // emitted_ indices sorted by represented value
    std::mutex mu_;
};

// Visit every admissible coefficient tuple of one size class in canonical order.
// Tuples arrive constant-term-first; primitivity is already enforced.
void for_each_poly_in_class(uint64_t size_class, const std::function<void(const int_poly&)>& fn);

// Visit all primitive polynomials with degree in [1, max_degree] and height
// (sum |c|) in [1, max_height], in canonical class order.
void for_each_poly_up_to(uint64_t max_height, uint64_t max_degree,
                         const std::function<void(const int_poly&)>& fn);

} // namespace cantor

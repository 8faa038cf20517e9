#pragma once

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace cantor {

// A real algebraic number: square-free primitive carrier polynomial plus an open
// dyadic isolating interval containing exactly one of its roots. The polynomial
// changes sign across the isolator and is nonzero at both endpoints.
class algebraic_real {
  public:
    algebraic_real() = default;
    // validates sign change; p must be square-free primitive with positive leading coeff
    algebraic_real(int_poly p, dyadic lo, dyadic hi);

    const int_poly& poly() const { return p_; }
    const dyadic& lo() const { return lo_; }
    const dyadic& hi() const { return hi_; }
    dyadic width() const { return hi_ - lo_; }

    bool is_rational() const { return p_.degree() == 1; }
    mpq_class rational_value() const; // requires is_rational()

    // one bisection step; width halves. When the midpoint is an exact root the
    // carrier collapses to the degree-1 polynomial of that dyadic value.
    void refine_step();
    // shrink isolator until width <= 2^target_log2 (idempotent beyond target)
    void refine_to(int64_t target_log2);
    // shrink until the dyadic point b lies outside the closed isolator, or the
    // value is discovered equal to b (returns true in that case)
    bool refine_excluding(const dyadic& b);

    std::string str() const;

  private:
    int_poly p_;
    dyadic lo_, hi_;
    int sign_lo_ = 0;
};

enum class ordering { less = -1, equal = 0, greater = 1 };

// exact trichotomy; Equal decided by the gcd common-root test, never by tolerance
ordering compare(const algebraic_real& a, const algebraic_real& b);
ordering compare_rational(const algebraic_real& a, const mpq_class& r);

// value-preserving refinement to width <= 2^target_log2
algebraic_real refine(const algebraic_real& a, int64_t target_log2);

// All real roots of p strictly inside the open window, ascending, pairwise-disjoint
// isolators. Roots at the window endpoints are excluded. Isolator widths are exact
// powers of two when the window width is; pass normalize_pow2 to force it otherwise.
std::vector<algebraic_real> isolate_roots(const int_poly& p, const dyadic& win_lo,
                                          const dyadic& win_hi, bool normalize_pow2 = false);

// Exact affine change of coordinates y = (x - m) / (w - m) carrying the number into
// the unit interval; requires m < value < w.
algebraic_real map_to_unit(const algebraic_real& x, const mpq_class& m, const mpq_class& w);

} // namespace cantor

#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cantor {

// Exact binary rational num/2^exp, exp >= 0. Normal form: num odd, or exp == 0.
class dyadic {
  public:
    dyadic() : num_(0), exp_(0) {}
    dyadic(long v) : num_(v), exp_(0) {}
    dyadic(mpz_class num, uint64_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

    const mpz_class& num() const { return num_; }
    uint64_t exp() const { return exp_; }

    int sign() const { return sgn(num_); }
    bool is_zero() const { return num_ == 0; }

    dyadic operator-() const { return dyadic(-num_, exp_); }
    dyadic operator+(const dyadic& o) const;
    dyadic operator-(const dyadic& o) const;
    dyadic operator*(const dyadic& o) const;

    // value / 2^k
    dyadic div_pow2(uint64_t k) const { return dyadic(num_, exp_ + k); }
    dyadic mul_pow2(uint64_t k) const;

    int cmp(const dyadic& o) const;
    bool operator<(const dyadic& o) const { return cmp(o) < 0; }
    bool operator<=(const dyadic& o) const { return cmp(o) <= 0; }
    bool operator>(const dyadic& o) const { return cmp(o) > 0; }
    bool operator>=(const dyadic& o) const { return cmp(o) >= 0; }
    bool operator==(const dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator!=(const dyadic& o) const { return !(*this == o); }

    // floor(value * 2^n), exact
    mpz_class floor_scaled(uint64_t n) const;

    mpq_class to_mpq() const;
    static bool from_mpq(const mpq_class& q, dyadic& out); // false when denominator not a power of two

    // midpoint of [a, b], exact
    static dyadic mid(const dyadic& a, const dyadic& b);

    std::string str() const; // "num/2^exp" or plain integer
    double approx() const { return mpq_get_d(to_mpq().get_mpq_t()); }

  private:
    void normalize();

    mpz_class num_;
    uint64_t exp_;
};

// Closed interval [lo, hi] with exact dyadic endpoints.
struct dyadic_interval {
    dyadic lo, hi;

    dyadic_interval() = default;
    dyadic_interval(dyadic l, dyadic h) : lo(std::move(l)), hi(std::move(h)) { assert(lo <= hi); }

    dyadic width() const { return hi - lo; }
    bool contains(const dyadic& d) const { return lo <= d && d <= hi; }
    bool disjoint(const dyadic_interval& o) const { return hi < o.lo || o.hi < lo; }

    dyadic_interval operator+(const dyadic_interval& o) const { return {lo + o.lo, hi + o.hi}; }
    dyadic_interval operator*(const dyadic_interval& o) const;
};

// true when w == 2^e for some integer e (e may be negative)
bool is_pow2_width(const dyadic& w);
// smallest e with w <= 2^e; requires w > 0
int64_t ceil_log2(const dyadic& w);

// floor(q * 2^scale) / 2^scale and the ceiling counterpart
dyadic dyadic_floor(const mpq_class& q, uint64_t scale);
dyadic dyadic_ceil(const mpq_class& q, uint64_t scale);

} // namespace cantor

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyadic.hpp"

namespace cantor {

// Integer-coefficient polynomial, constant term first. Zero polynomial has empty
// coefficient vector. Enumeration carriers are primitive with positive leading
// coefficient and degree >= 1.
class int_poly {
  public:
    int_poly() = default;
    explicit int_poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static int_poly from_longs(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const { return c_.back(); }
    const mpz_class& operator[](size_t i) const { return c_[i]; }

    mpz_class content() const; // gcd of coefficients, 0 for zero poly
    mpz_class height() const;  // sum of |coefficients|
    int_poly primitive_part() const;      // content 1, leading > 0
    int_poly divided_by_content() const;  // content 1, sign preserved (Sturm chains)
    int_poly derivative() const;
    int_poly negated() const;

    int sign_at_dyadic(const dyadic& x) const;
    int sign_at_mpq(const mpq_class& x) const;
    dyadic eval_dyadic(const dyadic& x) const;
    // Horner over exact interval arithmetic; result contains the true image p(I)
    dyadic_interval eval_interval(const dyadic_interval& I) const;

    int_poly operator*(const int_poly& o) const;
    int_poly operator-(const int_poly& o) const;
    int_poly operator+(const int_poly& o) const;
    int_poly scaled(const mpz_class& k) const;
    int_poly shifted(size_t k) const; // multiply by x^k

    // exact division; asserts divisibility
    int_poly div_exact(const int_poly& g) const;
    // divide out the known root m/2^e, i.e. the factor (2^e x - m)
    int_poly deflate_dyadic_root(const dyadic& r) const;

    // p(a + d*x) cleared to primitive integer coefficients (root map x -> (root-a)/d)
    int_poly compose_affine(const mpq_class& a, const mpq_class& d) const;

    bool operator==(const int_poly& o) const { return c_ == o.c_; }
    std::string str() const; // human form, e.g. "x^2 - 2"

  private:
    void trim();
    std::vector<mpz_class> c_;
};

int_poly gcd(const int_poly& a, const int_poly& b); // primitive, positive leading
int_poly square_free_part(const int_poly& p);

// Sturm chain of a square-free polynomial; counts distinct real roots exactly.
class sturm_chain {
  public:
    explicit sturm_chain(const int_poly& square_free);
    // number of roots in (a, b]; requires a < b
    uint64_t count_half_open(const dyadic& a, const dyadic& b) const;
    // number of roots in the open interval (a, b); requires p(a) != 0 and p(b) != 0
    uint64_t count_open(const dyadic& a, const dyadic& b) const;
    const int_poly& poly() const { return chain_.front(); }

  private:
    uint64_t variations_at(const dyadic& x) const;
    std::vector<int_poly> chain_;
};

} // namespace cantor

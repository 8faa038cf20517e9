#include "dyadic.hpp"

#include <algorithm>

namespace cantor {

void dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0)
        return;
    unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
    unsigned long k = std::min<unsigned long>(tz, exp_);
    if (k > 0) {
        mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), k);
        exp_ -= k;
    }
}

dyadic dyadic::operator+(const dyadic& o) const {
    uint64_t e = std::max(exp_, o.exp_);
    mpz_class a = num_, b = o.num_;
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), e - exp_);
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), e - o.exp_);
    return dyadic(a + b, e);
}

dyadic dyadic::operator-(const dyadic& o) const { return *this + (-o); }

dyadic dyadic::operator*(const dyadic& o) const { return dyadic(num_ * o.num_, exp_ + o.exp_); }

dyadic dyadic::mul_pow2(uint64_t k) const {
    if (k <= exp_)
        return dyadic(num_, exp_ - k);
    mpz_class n = num_;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), k - exp_);
    return dyadic(n, 0);
}

int dyadic::cmp(const dyadic& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb)
        return sa < sb ? -1 : 1;
    uint64_t e = std::max(exp_, o.exp_);
    mpz_class a = num_, b = o.num_;
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), e - exp_);
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), e - o.exp_);
    return ::cmp(a, b);
}

mpz_class dyadic::floor_scaled(uint64_t n) const {
    mpz_class r;
    if (n >= exp_) {
        mpz_mul_2exp(r.get_mpz_t(), num_.get_mpz_t(), n - exp_);
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_ - n);
    }
    return r;
}

mpq_class dyadic::to_mpq() const {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exp_);
    mpq_class q(num_, den);
    q.canonicalize();
    return q;
}

bool dyadic::from_mpq(const mpq_class& q, dyadic& out) {
    mpz_class den = q.get_den();
    if (den == 1) {
        out = dyadic(q.get_num(), 0);
        return true;
    }
    unsigned long tz = mpz_scan1(den.get_mpz_t(), 0);
    mpz_class odd;
    mpz_fdiv_q_2exp(odd.get_mpz_t(), den.get_mpz_t(), tz);
    if (odd != 1)
        return false;
    out = dyadic(q.get_num(), tz);
    return true;
}

dyadic dyadic::mid(const dyadic& a, const dyadic& b) { return (a + b).div_pow2(1); }

std::string dyadic::str() const {
    if (exp_ == 0)
        return num_.get_str();
    return num_.get_str() + "/2^" + std::to_string(exp_);
}

dyadic_interval dyadic_interval::operator*(const dyadic_interval& o) const {
    dyadic p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    dyadic mn = std::min({p1, p2, p3, p4});
    dyadic mx = std::max({p1, p2, p3, p4});
    return {mn, mx};
}

bool is_pow2_width(const dyadic& w) {
    if (w.sign() <= 0)
        return false;
    return mpz_popcount(w.num().get_mpz_t()) == 1;
}

int64_t ceil_log2(const dyadic& w) {
    assert(w.sign() > 0);
    // w = num/2^exp; w <= 2^e  <=>  num <= 2^(e+exp)
    size_t bits = mpz_sizeinbase(w.num().get_mpz_t(), 2); // num < 2^bits, num >= 2^(bits-1)
    int64_t e = (int64_t)bits - (int64_t)w.exp();
    if (mpz_popcount(w.num().get_mpz_t()) == 1)
        e -= 1; // num == 2^(bits-1) exactly
    return e;
}

dyadic dyadic_floor(const mpq_class& q, uint64_t scale) {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), q.get_num().get_mpz_t(), scale);
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), t.get_mpz_t(), q.get_den().get_mpz_t());
    return dyadic(k, scale);
}

dyadic dyadic_ceil(const mpq_class& q, uint64_t scale) {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), q.get_num().get_mpz_t(), scale);
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), t.get_mpz_t(), q.get_den().get_mpz_t());
    return dyadic(k, scale);
}

} // namespace cantor

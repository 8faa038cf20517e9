#include "algebraic.hpp"

#include <cassert>

#include "error.hpp"

namespace cantor {

static int_poly dyadic_carrier(const dyadic& v) {
    // primitive degree-1 polynomial with root v = m/2^e
    mpz_class lead = 1;
    mpz_mul_2exp(lead.get_mpz_t(), lead.get_mpz_t(), v.exp());
    return int_poly(std::vector<mpz_class>{-v.num(), lead});
}

algebraic_real::algebraic_real(int_poly p, dyadic lo, dyadic hi)
    : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
    assert(lo_ < hi_);
    sign_lo_ = p_.sign_at_dyadic(lo_);
    assert(sign_lo_ != 0);
    assert(p_.sign_at_dyadic(hi_) == -sign_lo_);
}

mpq_class algebraic_real::rational_value() const {
    assert(is_rational());
    mpq_class v(-p_[0], p_[1]);
    v.canonicalize();
    return v;
}

void algebraic_real::refine_step() {
    dyadic m = dyadic::mid(lo_, hi_);
    int sm = p_.sign_at_dyadic(m);
    if (sm == 0) {
        // midpoint is the root itself; recenter on it with a degree-1 carrier
        dyadic q = (hi_ - lo_).div_pow2(2);
        lo_ = m - q;
        hi_ = m + q;
        p_ = dyadic_carrier(m);
        sign_lo_ = p_.sign_at_dyadic(lo_);
        return;
    }
    if (sm == sign_lo_)
        lo_ = m;
    else
        hi_ = m;
}

void algebraic_real::refine_to(int64_t target_log2) {
    while (ceil_log2(width()) > target_log2)
        refine_step();
}

bool algebraic_real::refine_excluding(const dyadic& b) {
    for (;;) {
        if (b <= lo_ || b >= hi_)
            return false;
        int sb = p_.sign_at_dyadic(b);
        if (sb == 0) {
            // b is the single root inside the isolator
            p_ = dyadic_carrier(b);
            dyadic q = std::min(b - lo_, hi_ - b).div_pow2(1);
            lo_ = b - q;
            hi_ = b + q;
            sign_lo_ = p_.sign_at_dyadic(lo_);
            return true;
        }
        if (sb == sign_lo_)
            lo_ = b;
        else
            hi_ = b;
    }
}

std::string algebraic_real::str() const {
    return "root of " + p_.str() + " in (" + lo_.str() + ", " + hi_.str() + ")";
}

algebraic_real refine(const algebraic_real& a, int64_t target_log2) {
    algebraic_real r = a;
    r.refine_to(target_log2);
    return r;
}

ordering compare(const algebraic_real& a, const algebraic_real& b) {
    algebraic_real x = a, y = b;
    if (x.hi() <= y.lo())
        return ordering::less;
    if (y.hi() <= x.lo())
        return ordering::greater;
    // overlapping isolators: exact common-root test on the intersection; any
    // root of the gcd inside it is the single root of both isolators at once
    int_poly g = gcd(x.poly(), y.poly());
    if (g.degree() >= 1) {
        dyadic ilo = std::max(x.lo(), y.lo());
        dyadic ihi = std::min(x.hi(), y.hi());
        int_poly gs = g; // gcd of square-free polys is square-free
        while (gs.degree() >= 1 && gs.sign_at_dyadic(ilo) == 0)
            gs = gs.deflate_dyadic_root(ilo).primitive_part();
        while (gs.degree() >= 1 && gs.sign_at_dyadic(ihi) == 0)
            gs = gs.deflate_dyadic_root(ihi).primitive_part();
        if (gs.degree() >= 1 && sturm_chain(gs).count_open(ilo, ihi) >= 1)
            return ordering::equal;
    }
    // provably distinct: refine both until the isolators separate
    for (;;) {
        x.refine_step();
        y.refine_step();
        if (x.hi() <= y.lo())
            return ordering::less;
        if (y.hi() <= x.lo())
            return ordering::greater;
    }
}

ordering compare_rational(const algebraic_real& a, const mpq_class& r) {
    if (a.poly().sign_at_mpq(r) == 0) {
        // r is a root of the carrier; equal iff it is the root in the isolator
        mpq_class qlo = a.lo().to_mpq(), qhi = a.hi().to_mpq();
        if (qlo < r && r < qhi)
            return ordering::equal;
        return r <= qlo ? ordering::greater : ordering::less;
    }
    algebraic_real x = a;
    for (;;) {
        mpq_class qlo = x.lo().to_mpq(), qhi = x.hi().to_mpq();
        if (qhi <= r)
            return ordering::less;
        if (r <= qlo)
            return ordering::greater;
        x.refine_step();
    }
}

// candidate isolator for a known exact dyadic root inside (lo, hi); shrinks until
// the chain counts exactly one root and the endpoints are non-roots
static algebraic_real isolate_point(const sturm_chain& chain, const int_poly& p, const dyadic& root,
                                    const dyadic& lo, const dyadic& hi) {
    dyadic q = std::min(root - lo, hi - root);
    for (;;) {
        q = q.div_pow2(1);
        dyadic a = root - q, b = root + q;
        if (p.sign_at_dyadic(a) == 0 || p.sign_at_dyadic(b) == 0)
            continue;
        if (chain.count_open(a, b) == 1)
            return algebraic_real(dyadic_carrier(root), a, b);
    }
}

static void isolate_rec(const sturm_chain& chain, const int_poly& p, const dyadic& lo,
                        const dyadic& hi, std::vector<algebraic_real>& out) {
    uint64_t n = chain.count_open(lo, hi);
    if (n == 0)
        return;
    if (n == 1) {
        out.emplace_back(p, lo, hi);
        return;
    }
    dyadic m = dyadic::mid(lo, hi);
    if (p.sign_at_dyadic(m) == 0) {
        // m is a root: carve out a verified isolator around it and recurse on the
        // root-free flanks (keeps endpoints off the roots, as Sturm counting needs)
        algebraic_real point = isolate_point(chain, p, m, lo, hi);
        isolate_rec(chain, p, lo, point.lo(), out);
        out.push_back(point);
        isolate_rec(chain, p, point.hi(), hi, out);
        return;
    }
    isolate_rec(chain, p, lo, m, out);
    isolate_rec(chain, p, m, hi, out);
}

static dyadic pow2_dyadic(int64_t e) {
    dyadic one(mpz_class(1), 0);
    return e >= 0 ? one.mul_pow2(e) : one.div_pow2(-e);
}

// grow a power-of-two-width isolator around the root, verified by the chain
static void pow2_normalize(const sturm_chain& chain, algebraic_real& a) {
    for (;;) {
        if (is_pow2_width(a.width()))
            return;
        if (a.is_rational()) {
            dyadic b;
            if (dyadic::from_mpq(a.rational_value(), b)) {
                // exactly known dyadic value: symmetric interval once it fits
                dyadic q = pow2_dyadic(ceil_log2(a.width()) - 2);
                if (a.lo() <= b - q && b + q <= a.hi()) {
                    a = algebraic_real(a.poly(), b - q, b + q);
                    return;
                }
                a.refine_step();
                continue;
            }
        }
        // non-dyadic value, so the carrier is still the isolation polynomial:
        // extend the interval to the next power of two and re-verify isolation
        dyadic cand_hi = a.lo() + pow2_dyadic(ceil_log2(a.width()));
        if (a.poly().sign_at_dyadic(cand_hi) * a.poly().sign_at_dyadic(a.lo()) < 0 &&
            chain.count_open(a.lo(), cand_hi) == 1) {
            a = algebraic_real(a.poly(), a.lo(), cand_hi);
            return;
        }
        a.refine_step();
    }
}

std::vector<algebraic_real> isolate_roots(const int_poly& p_raw, const dyadic& win_lo,
                                          const dyadic& win_hi, bool normalize_pow2) {
    assert(win_lo < win_hi);
    int_poly p = square_free_part(p_raw);
    if (p.degree() < 1)
        return {};
    // roots at the window boundary are excluded (open window); deflate them away
    while (p.degree() >= 1 && p.sign_at_dyadic(win_lo) == 0)
        p = p.deflate_dyadic_root(win_lo).primitive_part();
    while (p.degree() >= 1 && p.sign_at_dyadic(win_hi) == 0)
        p = p.deflate_dyadic_root(win_hi).primitive_part();
    if (p.degree() < 1)
        return {};
    sturm_chain chain(p);
    std::vector<algebraic_real> out;
    isolate_rec(chain, p, win_lo, win_hi, out);
    if (normalize_pow2)
        for (auto& a : out)
            pow2_normalize(chain, a);
    return out;
}

algebraic_real map_to_unit(const algebraic_real& x, const mpq_class& m, const mpq_class& w) {
    mpq_class delta = w - m;
    assert(delta > 0);
    if (compare_rational(x, m) != ordering::greater || compare_rational(x, w) != ordering::less)
        throw error(errc::invalid_argument, "value not strictly inside the window");

    int_poly q = x.poly().compose_affine(m, delta);
    q = square_free_part(q); // affine images of distinct roots stay distinct; keep invariant

    dyadic dm, dd;
    bool m_dy = dyadic::from_mpq(m, dm);
    bool d_dy = dyadic::from_mpq(delta, dd) && mpz_popcount(dd.num().get_mpz_t()) == 1;
    if (m_dy && d_dy) {
        // exact endpoint map: (t - m) / 2^k
        int64_t k = ceil_log2(dd);
        auto mapped = [&](const dyadic& t) {
            dyadic s = t - dm;
            return k >= 0 ? s.div_pow2(k) : s.mul_pow2(-k);
        };
        return algebraic_real(q, mapped(x.lo()), mapped(x.hi()));
    }

    // general rational window: refine in x-space, then certify a dyadic cell in y-space
    algebraic_real xr = x;
    sturm_chain chain(q);
    for (int prec = 8;; prec += 8) {
        xr.refine_to(-prec);
        mpq_class ylo = (xr.lo().to_mpq() - m) / delta;
        mpq_class yhi = (xr.hi().to_mpq() - m) / delta;
        ylo.canonicalize();
        yhi.canonicalize();
        // enclosing dyadic cell at scale 2^-(prec-2)
        uint64_t s = (uint64_t)prec - 2;
        mpz_class kf;
        mpz_class num = ylo.get_num();
        mpz_class t;
        mpz_mul_2exp(t.get_mpz_t(), num.get_mpz_t(), s);
        mpz_fdiv_q(kf.get_mpz_t(), t.get_mpz_t(), ylo.get_den().get_mpz_t());
        dyadic a(kf, s), b(kf + 2, s);
        if (mpq_class(yhi) <= b.to_mpq() && q.sign_at_dyadic(a) != 0 && q.sign_at_dyadic(b) != 0 &&
            chain.count_open(a, b) == 1)
            return algebraic_real(q, a, b);
    }
}

} // namespace cantor

#include "polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace cantor {

void int_poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

int_poly int_poly::from_longs(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> v;
    v.reserve(coeffs.size());
    for (long x : coeffs)
        v.emplace_back(x);
    return int_poly(std::move(v));
}

mpz_class int_poly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

mpz_class int_poly::height() const {
    mpz_class h = 0;
    for (const auto& x : c_)
        h += abs(x);
    return h;
}

int_poly int_poly::primitive_part() const {
    if (is_zero())
        return *this;
    mpz_class g = content();
    if (leading() < 0)
        g = -g;
    if (g == 1)
        return *this;
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i] / g;
    return int_poly(std::move(v));
}

int_poly int_poly::divided_by_content() const {
    if (is_zero())
        return *this;
    mpz_class g = content();
    if (g == 1)
        return *this;
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i] / g;
    return int_poly(std::move(v));
}

int_poly int_poly::derivative() const {
    if (degree() < 1)
        return int_poly();
    std::vector<mpz_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * (long)i;
    return int_poly(std::move(v));
}

int_poly int_poly::negated() const {
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = -c_[i];
    return int_poly(std::move(v));
}

// p(m/2^e) * 2^(e*d) via Horner, fully exact
static mpz_class scaled_value_at_dyadic(const std::vector<mpz_class>& c, const dyadic& x) {
    int d = (int)c.size() - 1;
    const mpz_class& m = x.num();
    uint64_t e = x.exp();
    mpz_class r = c[d];
    for (int i = d - 1; i >= 0; --i) {
        r *= m;
        mpz_class t;
        mpz_mul_2exp(t.get_mpz_t(), c[i].get_mpz_t(), e * (uint64_t)(d - i));
        r += t;
    }
    return r;
}

int int_poly::sign_at_dyadic(const dyadic& x) const {
    if (is_zero())
        return 0;
    return sgn(scaled_value_at_dyadic(c_, x));
}

int int_poly::sign_at_mpq(const mpq_class& x) const {
    if (is_zero())
        return 0;
    int d = degree();
    const mpz_class& u = x.get_num();
    const mpz_class& v = x.get_den();
    // p(u/v) * v^d
    mpz_class r = c_[d];
    mpz_class vpow = 1;
    for (int i = d - 1; i >= 0; --i) {
        r *= u;
        vpow *= v;
        r += c_[i] * vpow;
    }
    return sgn(r);
}

dyadic int_poly::eval_dyadic(const dyadic& x) const {
    if (is_zero())
        return dyadic();
    mpz_class r = scaled_value_at_dyadic(c_, x);
    return dyadic(r, x.exp() * (uint64_t)degree());
}

dyadic_interval int_poly::eval_interval(const dyadic_interval& I) const {
    if (is_zero())
        return {dyadic(), dyadic()};
    int d = degree();
    dyadic_interval acc(dyadic(c_[d], 0), dyadic(c_[d], 0));
    for (int i = d - 1; i >= 0; --i) {
        acc = acc * I;
        dyadic ci(c_[i], 0);
        acc = dyadic_interval(acc.lo + ci, acc.hi + ci);
    }
    return acc;
}

int_poly int_poly::operator*(const int_poly& o) const {
    if (is_zero() || o.is_zero())
        return int_poly();
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    return int_poly(std::move(v));
}

int_poly int_poly::operator-(const int_poly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        v[i] -= o.c_[i];
    return int_poly(std::move(v));
}

int_poly int_poly::operator+(const int_poly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        v[i] += o.c_[i];
    return int_poly(std::move(v));
}

int_poly int_poly::scaled(const mpz_class& k) const {
    if (k == 0)
        return int_poly();
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i] * k;
    return int_poly(std::move(v));
}

int_poly int_poly::shifted(size_t k) const {
    if (is_zero())
        return *this;
    std::vector<mpz_class> v(c_.size() + k, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i + k] = c_[i];
    return int_poly(std::move(v));
}

int_poly int_poly::div_exact(const int_poly& g) const {
    assert(!g.is_zero());
    if (is_zero())
        return int_poly();
    assert(degree() >= g.degree());
    std::vector<mpz_class> r = c_;
    std::vector<mpz_class> q(degree() - g.degree() + 1, mpz_class(0));
    for (int i = degree(); i >= g.degree(); --i) {
        if (r[i] == 0)
            continue;
        mpz_class qi, rem;
        mpz_tdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), g.leading().get_mpz_t());
        assert(rem == 0 && "div_exact: inexact division");
        q[i - g.degree()] = qi;
        for (int j = 0; j <= g.degree(); ++j)
            r[i - g.degree() + j] -= qi * g[j];
    }
    for (const auto& x : r)
        assert(x == 0 && "div_exact: nonzero remainder");
    (void)r;
    return int_poly(std::move(q));
}

int_poly int_poly::deflate_dyadic_root(const dyadic& r) const {
    // factor is (2^e x - m), primitive since m odd or e == 0
    mpz_class lead = 1;
    mpz_mul_2exp(lead.get_mpz_t(), lead.get_mpz_t(), r.exp());
    int_poly factor(std::vector<mpz_class>{-r.num(), lead});
    return div_exact(factor);
}

int_poly int_poly::compose_affine(const mpq_class& a, const mpq_class& d) const {
    assert(d != 0);
    // Horner over Q[x]: q = (((c_n)*(dx+a) + c_{n-1})*(dx+a) + ...)
    std::vector<mpq_class> q;
    q.emplace_back(c_.back());
    for (int i = degree() - 1; i >= 0; --i) {
        std::vector<mpq_class> nq(q.size() + 1, mpq_class(0));
        for (size_t j = 0; j < q.size(); ++j) {
            nq[j + 1] += q[j] * d;
            nq[j] += q[j] * a;
        }
        nq[0] += mpq_class(c_[i]);
        q = std::move(nq);
    }
    mpz_class den = 1;
    for (auto& x : q) {
        x.canonicalize();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    }
    std::vector<mpz_class> v(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        mpq_class s = q[i] * mpq_class(den);
        s.canonicalize();
        assert(s.get_den() == 1);
        v[i] = s.get_num();
    }
    return int_poly(std::move(v)).primitive_part();
}

std::string int_poly::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0)
            continue;
        mpz_class a = c_[i];
        if (s.empty()) {
            if (a < 0)
                s += "-";
        } else {
            s += (a < 0) ? " - " : " + ";
        }
        mpz_class m = abs(a);
        if (m != 1 || i == 0)
            s += m.get_str();
        if (i >= 1)
            s += "x";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s;
}

// r := sign-corrected pseudo-remainder of f by g: a positive integer multiple of rem(f, g)
static int_poly prem_positive(const int_poly& f, const int_poly& g) {
    assert(!g.is_zero());
    int_poly r = f;
    uint64_t mults = 0;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        size_t k = r.degree() - g.degree();
        r = r.scaled(g.leading()) - g.scaled(r.leading()).shifted(k);
        ++mults;
    }
    if (g.leading() < 0 && (mults & 1))
        r = r.negated();
    return r;
}

int_poly gcd(const int_poly& a, const int_poly& b) {
    int_poly f = a.primitive_part(), g = b.primitive_part();
    if (f.is_zero())
        return g;
    if (g.is_zero())
        return f;
    if (f.degree() < g.degree())
        std::swap(f, g);
    while (!g.is_zero()) {
        int_poly r = prem_positive(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    return f.primitive_part();
}

int_poly square_free_part(const int_poly& p) {
    int_poly q = p.primitive_part();
    if (q.degree() <= 1)
        return q;
    int_poly g = gcd(q, q.derivative());
    if (g.degree() == 0)
        return q;
    return q.div_exact(g).primitive_part();
}

sturm_chain::sturm_chain(const int_poly& p) {
    assert(!p.is_zero());
    chain_.push_back(p);
    if (p.degree() == 0)
        return;
    chain_.push_back(p.derivative());
    while (chain_.back().degree() > 0) {
        int_poly r = prem_positive(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero())
            break;
        chain_.push_back(r.negated().divided_by_content());
    }
}

uint64_t sturm_chain::variations_at(const dyadic& x) const {
    uint64_t v = 0;
    int prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at_dyadic(x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

uint64_t sturm_chain::count_half_open(const dyadic& a, const dyadic& b) const {
    assert(a < b);
    uint64_t va = variations_at(a), vb = variations_at(b);
    assert(va >= vb);
    return va - vb;
}

uint64_t sturm_chain::count_open(const dyadic& a, const dyadic& b) const {
    assert(poly().sign_at_dyadic(a) != 0 && poly().sign_at_dyadic(b) != 0);
    return count_half_open(a, b);
}

} // namespace cantor

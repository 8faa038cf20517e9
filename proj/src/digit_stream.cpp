#include "digit_stream.hpp"

#include <cassert>

#include "error.hpp"
#include "sequence.hpp"

namespace cantor {

namespace stats {
std::atomic<uint64_t> base_digit_extractions{0};
}

int digit_stream::digit_at(uint64_t position) const {
    assert(position >= 1);
    std::lock_guard<std::mutex> lk(mu_);
    if (cache_.size() < position)
        extend_to(position, cache_);
    assert(cache_.size() >= position);
    return cache_[position - 1];
}

std::string digit_stream::digit_prefix(uint64_t count) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (cache_.size() < count)
        extend_to(count, cache_);
    std::string s;
    s.reserve(count);
    for (uint64_t i = 0; i < count; ++i)
        s.push_back(cache_[i] ? '1' : '0');
    return s;
}

mpz_class digit_stream::prefix_value(uint64_t precision) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (cache_.size() < precision)
        extend_to(precision, cache_);
    mpz_class k = 0;
    for (uint64_t i = 0; i < precision; ++i) {
        mpz_mul_2exp(k.get_mpz_t(), k.get_mpz_t(), 1);
        if (cache_[i])
            k += 1;
    }
    return k;
}

dyadic_interval digit_stream::to_interval(uint64_t precision) const {
    mpz_class k = prefix_value(precision);
    return {dyadic(k, precision), dyadic(k + 1, precision)};
}

void digit_stream::seed_prefix(const std::string& bits) const {
    std::lock_guard<std::mutex> lk(mu_);
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw error(errc::parse_error, "checkpoint digits must be 0/1");
        if (i < cache_.size() && (cache_[i] != 0) != (bits[i] == '1'))
            throw error(errc::parse_error, "checkpoint digits disagree with computed digits");
    }
    if (bits.size() <= cache_.size())
        return;
    cache_.resize(bits.size());
    for (size_t i = 0; i < bits.size(); ++i)
        cache_[i] = bits[i] == '1';
    on_seeded(cache_);
}

std::string digit_stream::cached_prefix() const {
    std::lock_guard<std::mutex> lk(mu_);
    std::string s;
    s.reserve(cache_.size());
    for (uint8_t b : cache_)
        s.push_back(b ? '1' : '0');
    return s;
}

// ---- rational ----

rational_stream::rational_stream(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
    assert(value_ >= 0 && value_ < 1);
    remainder_ = value_.get_num();
}

void rational_stream::extend_to(uint64_t n, std::vector<uint8_t>& cache) const {
    const mpz_class& den = value_.get_den();
    while (cache.size() < n) {
        remainder_ *= 2;
        int d = remainder_ >= den ? 1 : 0;
        if (d)
            remainder_ -= den;
        cache.push_back((uint8_t)d);
        stats::base_digit_extractions.fetch_add(1, std::memory_order_relaxed);
    }
}

void rational_stream::on_seeded(const std::vector<uint8_t>& cache) const {
    // value = K/2^m + remainder/(den * 2^m)
    mpz_class k = 0;
    for (uint8_t b : cache)
        k = 2 * k + b;
    mpz_class r;
    mpz_mul_2exp(r.get_mpz_t(), value_.get_num().get_mpz_t(), cache.size());
    remainder_ = r - value_.get_den() * k;
}

nlohmann::json rational_stream::descriptor() const {
    return {{"type", "rational"}, {"value", value_.get_str()}};
}

// ---- liouville ----

liouville_stream::liouville_stream() : next_factorial_(1), next_k_(1) {}

stream_ptr liouville_stream::shared() {
    static stream_ptr inst = std::make_shared<liouville_stream>();
    return inst;
}

void liouville_stream::extend_to(uint64_t n, std::vector<uint8_t>& cache) const {
    while (cache.size() < n) {
        uint64_t pos = cache.size() + 1;
        while (next_factorial_ < pos) {
            ++next_k_;
            next_factorial_ *= next_k_;
        }
        cache.push_back(next_factorial_ == pos ? 1 : 0);
        stats::base_digit_extractions.fetch_add(1, std::memory_order_relaxed);
    }
}

nlohmann::json liouville_stream::descriptor() const { return {{"type", "liouville"}}; }

// ---- algebraic ----

algebraic_stream::algebraic_stream(algebraic_real value)
    : value_(std::move(value)), cur_(value_), prefix_(0) {}

static int dyadic_digit(const dyadic& v, uint64_t position) {
    // v in [0,1); canonical terminating expansion
    if (position > v.exp())
        return 0;
    return mpz_tstbit(v.num().get_mpz_t(), v.exp() - position);
}

void algebraic_stream::extend_to(uint64_t n, std::vector<uint8_t>& cache) const {
    while (cache.size() < n) {
        uint64_t m = cache.size();
        int d;
        if (exact_) {
            d = dyadic_digit(exact_value_, m + 1);
        } else {
            dyadic b(2 * prefix_ + 1, m + 1);
            if (cur_.refine_excluding(b)) {
                exact_ = true;
                exact_value_ = b;
                d = 1;
            } else {
                d = b <= cur_.lo() ? 1 : 0;
            }
        }
        prefix_ = 2 * prefix_ + d;
        cache.push_back((uint8_t)d);
        stats::base_digit_extractions.fetch_add(1, std::memory_order_relaxed);
    }
}

void algebraic_stream::on_seeded(const std::vector<uint8_t>& cache) const {
    mpz_class k = 0;
    for (uint8_t b : cache)
        k = 2 * k + b;
    prefix_ = k;
}

nlohmann::json algebraic_stream::descriptor() const {
    return {{"type", "algebraic"}, {"value", algebraic_json(value_)}};
}

// ---- diagonal ----

diagonal_stream::diagonal_stream(std::shared_ptr<const stream_sequence> source, uint64_t offset)
    : source_(std::move(source)), offset_(offset) {}

void diagonal_stream::extend_to(uint64_t n, std::vector<uint8_t>& cache) const {
    while (cache.size() < n) {
        uint64_t nu = cache.size() + 1;
        int a = source_->at(nu)->digit_at(nu + offset_);
        cache.push_back((uint8_t)(1 - a));
    }
}

nlohmann::json diagonal_stream::descriptor() const {
    return {{"type", "diagonal"}, {"offset", offset_}, {"source", source_->descriptor()}};
}

// ---- affine liouville ----

affine_liouville_stream::affine_liouville_stream(algebraic_real a, algebraic_real b)
    : a_(std::move(a)), b_(std::move(b)), ra_(a_), rb_(b_), ell_(liouville_stream::shared()) {}

void affine_liouville_stream::extend_to(uint64_t n, std::vector<uint8_t>& cache) const {
    for (;;) {
        uint64_t t = std::max<uint64_t>(work_precision_, n + 4);
        ra_.refine_to(-(int64_t)t);
        rb_.refine_to(-(int64_t)t);
        dyadic_interval liv = ell_->to_interval(t);
        dyadic gap_lo = rb_.lo() - ra_.hi();
        if (gap_lo.sign() < 0)
            gap_lo = dyadic(0);
        dyadic lo = ra_.lo() + gap_lo * liv.lo;
        dyadic hi = ra_.hi() + (rb_.hi() - ra_.lo()) * liv.hi;
        mpz_class k = lo.floor_scaled(n);
        if (k >= 0 && hi <= dyadic(k + 1, n)) {
            for (uint64_t i = cache.size(); i < n; ++i) {
                int bit = mpz_tstbit(k.get_mpz_t(), n - 1 - i);
                cache.push_back((uint8_t)bit);
            }
            return;
        }
        work_precision_ = t + 32;
    }
}

nlohmann::json affine_liouville_stream::descriptor() const {
    return {{"type", "affine-liouville"}, {"a", algebraic_json(a_)}, {"b", algebraic_json(b_)}};
}

// ---- prefixed diagonal ----

prefixed_diagonal_stream::prefixed_diagonal_stream(std::vector<uint8_t> prefix_bits,
                                                   std::shared_ptr<const stream_sequence> source)
    : prefix_(std::move(prefix_bits)), source_(std::move(source)) {}

void prefixed_diagonal_stream::extend_to(uint64_t n, std::vector<uint8_t>& cache) const {
    while (cache.size() < n) {
        uint64_t pos = cache.size() + 1;
        if (pos <= prefix_.size()) {
            cache.push_back(prefix_[pos - 1]);
        } else {
            uint64_t j = pos - prefix_.size();
            int a = source_->at(j)->digit_at(pos);
            cache.push_back((uint8_t)(1 - a));
        }
    }
}

nlohmann::json prefixed_diagonal_stream::descriptor() const {
    std::string p;
    for (uint8_t b : prefix_)
        p.push_back(b ? '1' : '0');
    return {{"type", "prefixed-diagonal"}, {"prefix", p}, {"source", source_->descriptor()}};
}

// ---- helpers ----

difference_result reals_differ(const digit_stream& s, const digit_stream& t, uint64_t budget) {
    mpz_class ks = 0, kt = 0;
    for (uint64_t p = 1; p <= budget; ++p) {
        ks = 2 * ks + s.digit_at(p);
        kt = 2 * kt + t.digit_at(p);
        mpz_class d = abs(ks - kt);
        if (d >= 2)
            return {true, p};
    }
    return {false, 0};
}

algebraic_real rational_point(const mpq_class& v_in) {
    mpq_class v = v_in;
    v.canonicalize();
    int_poly carrier(std::vector<mpz_class>{-v.get_num(), v.get_den()});
    dyadic lo = dyadic_floor(v, 8) - dyadic(mpz_class(1), 8);
    dyadic hi = dyadic_ceil(v, 8) + dyadic(mpz_class(1), 8);
    return algebraic_real(carrier, lo, hi);
}

nlohmann::json dyadic_json(const dyadic& d) {
    return {{"num", d.num().get_str()}, {"exp", d.exp()}};
}

dyadic dyadic_from_json(const nlohmann::json& j) {
    return dyadic(mpz_class(j.at("num").get<std::string>()), j.at("exp").get<uint64_t>());
}

nlohmann::json algebraic_json(const algebraic_real& a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : a.poly().coeffs())
        coeffs.push_back(c.get_str());
    return {{"poly", coeffs},
            {"isolator", {{"lo", dyadic_json(a.lo())}, {"hi", dyadic_json(a.hi())}}}};
}

} // namespace cantor

#include "enumeration.hpp"

#include <cassert>

namespace cantor {

namespace {

// coefficient order 0, 1, -1, 2, -2, ...
void gen_tuples(std::vector<long>& c, int pos, long remaining,
                const std::function<void(const std::vector<long>&)>& emit) {
    if (pos == 0) {
        if (remaining == 0) {
            c[0] = 0;
            emit(c);
        } else {
            c[0] = remaining;
            emit(c);
            c[0] = -remaining;
            emit(c);
        }
        return;
    }
    for (long v = 0; v <= remaining; ++v) {
        if (v == 0) {
            c[pos] = 0;
            gen_tuples(c, pos - 1, remaining, emit);
        } else {
            c[pos] = v;
            gen_tuples(c, pos - 1, remaining - v, emit);
            c[pos] = -v;
            gen_tuples(c, pos - 1, remaining - v, emit);
        }
    }
}

long content_of(const std::vector<long>& c) {
    long g = 0;
    for (long x : c) {
        x = x < 0 ? -x : x;
        while (x) {
            long t = g % x;
            g = x;
            x = t;
        }
        if (g == 1)
            return 1;
    }
    return g;
}

} // namespace

void for_each_poly_in_class(uint64_t size_class, const std::function<void(const int_poly&)>& fn) {
    if (size_class < 2)
        return;
    for (uint64_t d = 1; d < size_class; ++d) {
        long weight = (long)(size_class - d); // sum of |coefficients|
        std::vector<long> c(d + 1);
        for (long lead = 1; lead <= weight; ++lead) {
            c[d] = lead;
            auto emit = [&](const std::vector<long>& t) {
                if (content_of(t) != 1)
                    return;
                std::vector<mpz_class> v(t.size());
                for (size_t i = 0; i < t.size(); ++i)
                    v[i] = t[i];
                fn(int_poly(std::move(v)));
            };
            gen_tuples(c, (int)d - 1, weight - lead, emit);
        }
    }
}

void for_each_poly_up_to(uint64_t max_height, uint64_t max_degree,
                         const std::function<void(const int_poly&)>& fn) {
    for (uint64_t n = 2; n <= max_height + max_degree; ++n) {
        for_each_poly_in_class(n, [&](const int_poly& p) {
            if ((uint64_t)p.degree() <= max_degree && p.height() <= (long)max_height)
                fn(p);
        });
    }
}

algebraic_enumeration::algebraic_enumeration(mpq_class window_lo, mpq_class window_hi)
    : wlo_(std::move(window_lo)), whi_(std::move(window_hi)) {
    assert(wlo_ < whi_);
    dyadic dlo, dhi;
    if (dyadic::from_mpq(wlo_, dlo) && dyadic::from_mpq(whi_, dhi)) {
        hull_lo_ = dlo;
        hull_hi_ = dhi;
        hull_exact_ = true;
    } else {
        hull_lo_ = dyadic_floor(wlo_, 16);
        hull_hi_ = dyadic_ceil(whi_, 16);
        if (hull_lo_ == hull_hi_)
            hull_hi_ = hull_hi_ + dyadic(mpz_class(1), 16);
        hull_exact_ = false;
    }
    hull_pow2_ = is_pow2_width(hull_hi_ - hull_lo_);
}

algebraic_real algebraic_enumeration::at(uint64_t index) {
    std::lock_guard<std::mutex> lk(mu_);
    while (emitted_.size() <= index)
        grow_one_class();
    return emitted_[index];
}

uint64_t algebraic_enumeration::known_count() {
    std::lock_guard<std::mutex> lk(mu_);
    return emitted_.size();
}

void algebraic_enumeration::grow_one_class() {
    uint64_t n = next_class_++;
    for_each_poly_in_class(n, [&](const int_poly& p) {
        auto roots = isolate_roots(p, hull_lo_, hull_hi_, /*normalize_pow2=*/!hull_pow2_);
        for (auto& r : roots) {
            if (!hull_exact_) {
                if (compare_rational(r, wlo_) != ordering::greater ||
                    compare_rational(r, whi_) != ordering::less)
                    continue;
            }
            // dedup: binary search the value-sorted index
            size_t lo = 0, hi = by_value_.size();
            bool dup = false;
            while (lo < hi) {
                size_t mid = (lo + hi) / 2;
                ordering o = compare(r, emitted_[by_value_[mid]]);
                if (o == ordering::equal) {
                    dup = true;
                    break;
                }
                if (o == ordering::less)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            if (dup)
                continue;
            by_value_.insert(by_value_.begin() + lo, emitted_.size());
            emitted_.push_back(std::move(r));
        }
    });
}

} // namespace cantor

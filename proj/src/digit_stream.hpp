#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebraic.hpp"

namespace cantor {

namespace stats {
// digits computed (cache misses) on base-level sources: algebraic, rational, oracle
extern std::atomic<uint64_t> base_digit_extractions;
} // namespace stats

// Lazy, deterministic, memoized binary expansion of a real in [0,1).
// Positions are 1-based. A prefix of length p pins the value to the closed
// dyadic cell [k/2^p, (k+1)/2^p]. Sources that represent an exactly known real
// (rational, algebraic, affine images) produce the canonical expansion, i.e.
// the terminating one for dyadic rationals; digit-defined sources (diagonals)
// produce whatever their rule says, and reals_differ exists because a digit
// mismatch alone does not separate the represented reals.
class digit_stream {
  public:
    virtual ~digit_stream() = default;

    int digit_at(uint64_t position) const;
    std::string digit_prefix(uint64_t count) const;
    mpz_class prefix_value(uint64_t precision) const;
    dyadic_interval to_interval(uint64_t precision) const;

    virtual nlohmann::json descriptor() const = 0;

    // checkpoint support: adopt a previously computed prefix / expose the cache
    void seed_prefix(const std::string& bits) const;
    std::string cached_prefix() const;

  protected:
    // extend cache to >= n bits; invoked with the stream lock held
    virtual void extend_to(uint64_t n, std::vector<uint8_t>& cache) const = 0;
    // resynchronize internal state after the cache was adopted from a checkpoint
    virtual void on_seeded(const std::vector<uint8_t>& cache) const { (void)cache; }

  private:
    mutable std::mutex mu_;
    mutable std::vector<uint8_t> cache_;
};

using stream_ptr = std::shared_ptr<const digit_stream>;

// exact rational constant in [0,1); terminating expansion for dyadics
class rational_stream final : public digit_stream {
  public:
    explicit rational_stream(mpq_class value);
    nlohmann::json descriptor() const override;

  protected:
    void extend_to(uint64_t n, std::vector<uint8_t>& cache) const override;
    void on_seeded(const std::vector<uint8_t>& cache) const override;

  private:
    mpq_class value_;
    mutable mpz_class remainder_;
};

// digit n is 1 exactly when n = k! for some k >= 1
class liouville_stream final : public digit_stream {
  public:
    liouville_stream();
    static stream_ptr shared(); // process-wide instance, shared digit cache
    nlohmann::json descriptor() const override;

  protected:
    void extend_to(uint64_t n, std::vector<uint8_t>& cache) const override;

  private:
    mutable mpz_class next_factorial_;
    mutable unsigned long next_k_;
};

// canonical expansion of an algebraic number in [0,1), extracted by refining the
// isolating interval against successive cell boundaries
class algebraic_stream final : public digit_stream {
  public:
    explicit algebraic_stream(algebraic_real value);
    const algebraic_real& value() const { return value_; }
    nlohmann::json descriptor() const override;

  protected:
    void extend_to(uint64_t n, std::vector<uint8_t>& cache) const override;
    void on_seeded(const std::vector<uint8_t>& cache) const override;

  private:
    algebraic_real value_;
    mutable algebraic_real cur_;
    mutable mpz_class prefix_; // integer value of the known prefix
    mutable bool exact_ = false;
    mutable dyadic exact_value_;
};

class stream_sequence; // sequence.hpp

// digit nu = 1 - digit(source[nu], nu + offset)
class diagonal_stream final : public digit_stream {
  public:
    diagonal_stream(std::shared_ptr<const stream_sequence> source, uint64_t offset);
    uint64_t offset() const { return offset_; }
    const stream_sequence& source() const { return *source_; }
    nlohmann::json descriptor() const override;

  protected:
    void extend_to(uint64_t n, std::vector<uint8_t>& cache) const override;

  private:
    std::shared_ptr<const stream_sequence> source_;
    uint64_t offset_;
};

// value = a + (b - a) * liouville, a < b; digits recovered by exact interval
// refinement of the three components (the value is transcendental, so every
// digit is eventually determined)
class affine_liouville_stream final : public digit_stream {
  public:
    affine_liouville_stream(algebraic_real a, algebraic_real b);
    nlohmann::json descriptor() const override;

  protected:
    void extend_to(uint64_t n, std::vector<uint8_t>& cache) const override;

  private:
    algebraic_real a_, b_;
    mutable algebraic_real ra_, rb_;
    mutable uint64_t work_precision_ = 8;
    stream_ptr ell_;
};

// fixed prefix placing the value inside a chosen dyadic cell, then the
// offset-diagonal rule against a sequence: digit m+j flips digit m+j of element j
class prefixed_diagonal_stream final : public digit_stream {
  public:
    prefixed_diagonal_stream(std::vector<uint8_t> prefix_bits,
                             std::shared_ptr<const stream_sequence> source);
    nlohmann::json descriptor() const override;

  protected:
    void extend_to(uint64_t n, std::vector<uint8_t>& cache) const override;

  private:
    std::vector<uint8_t> prefix_;
    std::shared_ptr<const stream_sequence> source_;
};

struct difference_result {
    bool proved = false;
    uint64_t position = 0; // witness precision when proved
};

// Sound real-difference test: proved iff the closed prefix cells of s and t are
// disjoint at some precision p <= budget (prefix integers differ by >= 2).
// Unresolved is never a claim of equality.
difference_result reals_differ(const digit_stream& s, const digit_stream& t, uint64_t budget);

// a point value as a degree-1 algebraic_real (carrier den*x - num)
algebraic_real rational_point(const mpq_class& v);

nlohmann::json dyadic_json(const dyadic& d);
dyadic dyadic_from_json(const nlohmann::json& j);
nlohmann::json algebraic_json(const algebraic_real& a);

} // namespace cantor

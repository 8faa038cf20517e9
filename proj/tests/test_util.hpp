#pragma once

#include <functional>

#include "sequence.hpp"

namespace cantor::testutil {

// digit-rule stream for fixtures (twin expansions, planted adversaries)
class fn_stream final : public digit_stream {
  public:
    explicit fn_stream(std::function<int(uint64_t)> fn, std::string label = "fn")
        : fn_(std::move(fn)), label_(std::move(label)) {}
    nlohmann::json descriptor() const override { return {{"type", "opaque"}, {"label", label_}}; }

  protected:
    void extend_to(uint64_t n, std::vector<uint8_t>& cache) const override {
        while (cache.size() < n)
            cache.push_back((uint8_t)fn_(cache.size() + 1));
    }

  private:
    std::function<int(uint64_t)> fn_;
    std::string label_;
};

// sequence from a finite list, then a fallback stream for all later indices
class list_sequence final : public stream_sequence {
  public:
    list_sequence(std::vector<stream_ptr> items, stream_ptr fallback)
        : items_(std::move(items)), fallback_(std::move(fallback)) {}
    provenance provenance_at(uint64_t) const override { return {}; }
    uint32_t level() const override { return 0; }
    nlohmann::json descriptor() const override { return {{"type", "opaque-seq"}}; }

  protected:
    stream_ptr make(uint64_t index) const override {
        if (index <= items_.size())
            return items_[index - 1];
        return fallback_;
    }

  private:
    std::vector<stream_ptr> items_;
    stream_ptr fallback_;
};

inline stream_ptr zeros() {
    return std::make_shared<rational_stream>(mpq_class(0));
}

inline stream_ptr ones() {
    return std::make_shared<fn_stream>([](uint64_t) { return 1; }, "all-ones");
}

inline sequence_ptr const_seq(stream_ptr s) {
    return std::make_shared<constant_sequence>(std::move(s));
}

} // namespace cantor::testutil

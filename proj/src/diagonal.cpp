#include "diagonal.hpp"

#include "error.hpp"

namespace cantor {

stream_ptr diagonalize(sequence_ptr source, uint64_t offset) {
    return std::make_shared<diagonal_stream>(std::move(source), offset);
}

stream_ptr layer_family_member(sequence_ptr base, uint64_t k) {
    if (k < 1)
        throw error(errc::invalid_argument, "family positions start at 1");
    return diagonalize(std::move(base), k - 1);
}

sequence_ptr prepend_and_shift(sequence_ptr s, stream_ptr head) {
    return std::make_shared<prepended_sequence>(std::move(head), std::move(s));
}

std::vector<stream_ptr> recursive_t_sequence(sequence_ptr source, uint64_t count, uint64_t budget) {
    if (count < 1)
        throw error(errc::invalid_argument, "count must be >= 1");
    std::vector<stream_ptr> out;
    sequence_ptr cur = source;
    for (uint64_t j = 1; j <= count; ++j) {
        stream_ptr t = diagonalize(cur, 0);
        for (uint64_t i = 1; i <= count; ++i) {
            if (!reals_differ(*t, *source->at(i), budget).proved)
                throw difference_unresolved(i, j, budget);
        }
        for (uint64_t i = 0; i < out.size(); ++i) {
            if (!reals_differ(*t, *out[i], budget).proved)
                throw difference_unresolved(i + 1, j, budget);
        }
        out.push_back(t);
        cur = prepend_and_shift(cur, t);
    }
    return out;
}

} // namespace cantor

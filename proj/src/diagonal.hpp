#pragma once

#include "sequence.hpp"

namespace cantor {

// output digit nu = 1 - digit(source[nu], nu + offset); lazy, deterministic
stream_ptr diagonalize(sequence_ptr source, uint64_t offset);

// member k of the simultaneous diagonal family, k >= 1 (offset k - 1)
stream_ptr layer_family_member(sequence_ptr base, uint64_t k);

// persistent update; the original sequence stays readable
sequence_ptr prepend_and_shift(sequence_ptr s, stream_ptr head);

// T_1..T_count with T_{j+1} the plain diagonal of the source extended by
// T_1..T_j prepended in turn. Every T_j is proved real-different from the first
// `count` source elements and from the earlier T's within `budget`; throws
// difference_unresolved otherwise.
std::vector<stream_ptr> recursive_t_sequence(sequence_ptr source, uint64_t count, uint64_t budget);

} // namespace cantor

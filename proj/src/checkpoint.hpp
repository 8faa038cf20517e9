#pragma once

#include "context.hpp"

namespace cantor {

// Versioned digit ledger for long runs: persists the computed base-level
// (level-0) digit prefixes; everything above them is cheap to rederive.
void save_checkpoint(run_geometry& geo, const std::string& path, uint32_t depth);
void load_checkpoint(run_geometry& geo, const std::string& path);

} // namespace cantor

#pragma once

#include <cstdint>
#include <string>

namespace cantor {

// FIPS 180-4 SHA-256, hex digest
std::string sha256_hex(const std::string& data);

} // namespace cantor

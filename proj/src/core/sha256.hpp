#pragma once

#include <cstdint>
#include <string>

namespace inksyn {

// FIPS 180-4 SHA-256, used for artifact hashes in run manifests.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);
std::string sha256_file_hex(const std::string& path);

}  // namespace inksyn

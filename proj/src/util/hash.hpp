#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ldtalk {

uint64_t fnv1a64(const void* data, size_t n);
uint64_t fnv1a64(std::string_view s);

// 16 hex chars, lower case
std::string hash_hex(uint64_t h);

// FNV-1a of a file's raw bytes; throws data_error when unreadable.
uint64_t hash_file(const std::string& path);

}  // namespace ldtalk

#pragma once

#include "supconv/sampled_function.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace supconv {

/// Function file layout:
///
///   {"k": 2, "N": 2, "values": [
///     [0, 0, 2, 0, 1],
///     ...
///   ]}
///
/// Each entry is the lattice point N*x followed by the numerator and
/// denominator of f(x). Entries follow the lattice order. Numerators and
/// denominators outside the 64-bit range are written as decimal strings.
std::string format_function(const SampledFunction& f);
SampledFunction parse_function(std::string_view text);

SampledFunction read_function_file(const std::filesystem::path& path);
void write_function_file(const std::filesystem::path& path, const SampledFunction& f);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

}  // namespace supconv

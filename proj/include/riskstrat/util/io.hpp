#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace riskstrat {

std::string read_text_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

/// FNV-1a 64-bit digest of a file's bytes, as 16 lowercase hex chars.
/// Used to record input fingerprints in run manifests.
std::string file_digest_hex(const std::filesystem::path& path);

std::string fnv1a64_hex(const std::string& bytes);

/// Fixed-precision decimal rendering for metric files; stable across runs.
std::string format_double(double value, int decimals);

/// Shortest round-trip rendering ("%.17g" trimmed) for full-precision CSVs.
std::string format_double_exact(double value);

}  // namespace riskstrat

#pragma once

// OEIS b-files: ASCII lines "<n> <a(n)>". Blank lines and lines starting
// with '#' are ignored.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <vector>

#include "uppart/bigint.hpp"

namespace uppart {

struct BFileEntry {
  std::int64_t index;
  BigInt value;
};

struct BFile {
  /// Strictly increasing indices.
  std::vector<BFileEntry> entries;
};

/// Throws std::invalid_argument naming the offending line.
BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::filesystem::path& path);

}  // namespace uppart

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "loopkit/loop.hpp"

namespace loopkit {

/// .tbl format: line 1 is n, then n lines of n whitespace-separated 0-based
/// indices (row i, column j holds i*j). Lines starting with '#' are comments.
/// Ragged rows and out-of-range entries are rejected.
FiniteLoop read_table(std::istream& in);
FiniteLoop read_table_file(const std::filesystem::path& path);

void write_table(std::ostream& out, const FiniteLoop& q, const std::string& comment = "");
void write_table_file(const std::filesystem::path& path, const FiniteLoop& q,
                      const std::string& comment = "");

}  // namespace loopkit

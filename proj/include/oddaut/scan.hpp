#pragma once

// Batch analysis of a directory of group files into tab-separated records,
// with a digest-keyed results cache in DIR/.oddaut_cache.tsv.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oddaut/aut.hpp"
#include "oddaut/error.hpp"
#include "oddaut/group_io.hpp"

namespace oddaut {

struct ScanRecord {
  std::string name;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::string aut_order;   // decimal
  std::string aut_parity;  // "even" or "odd"
  std::string ni_status;   // "ni", "not-ni" or "trivial"
  std::string spec;
  long long wall_time_ms = 0;
};

std::string scan_header();
std::string format_record(const ScanRecord& r);
/// Inverse of format_record; throws ParseError.
ScanRecord parse_record(const std::string& line);

/// Computes one record. Throws BudgetExceeded when the search budget runs out.
ScanRecord analyze_record(const GroupFile& file, std::uint64_t budget = kDefaultAutBudget);

struct ScanOptions {
  bool odd_only = false;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultAutBudget;
  bool use_cache = true;
};

struct ScanFailure {
  std::string file;
  ErrorKind kind;
  std::string message;
};

struct ScanSummary {
  std::vector<ScanRecord> records;
  std::size_t files = 0;
  std::size_t skipped_even = 0;
  std::size_t from_cache = 0;
  std::vector<ScanFailure> failures;
};

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Scans every *.cay file of `dir` in file-name order and streams the
/// header, records in that order and trailing comment lines to `out`.
ScanSummary scan_directory(const std::string& dir, const ScanOptions& options, std::ostream& out);

}  // namespace oddaut

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitscatter/harness.hpp"

namespace bitscatter {

inline constexpr std::string_view kRecordsHeader =
    "k,m,repeat,seed,rho_lz,rho_ppm,l0_lz_bytes,l0_ppm_bytes,delta0_bits,p0_hat,n0,overall_error,effective_n,"
    "delta0_valid";

/// Shortest decimal text with 17 significant digits.
std::string format_double(double value);

/// One CSV row without the trailing newline. Floats carry 17 significant
/// digits, so reading the row back is lossless.
std::string format_record(const RunRecord& record);

/// Parses one data row. Throws ParseError tagged with `line`.
RunRecord parse_record(std::string_view row, std::size_t line);

void write_records_csv(std::ostream& out, std::span<const RunRecord> records);
void write_records_csv(const std::filesystem::path& path, std::span<const RunRecord> records);

/// Reads a header plus data rows. Throws ParseError (with the 1-based line)
/// on a wrong header, wrong column count, or unparsable field.
std::vector<RunRecord> read_records_csv(std::istream& in);
std::vector<RunRecord> read_records_csv(const std::filesystem::path& path);

}  // namespace bitscatter

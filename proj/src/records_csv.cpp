#include "bitscatter/records_csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "bitscatter/errors.hpp"

namespace bitscatter {
namespace {

constexpr std::size_t kColumns = 14;

std::vector<std::string_view> split(std::string_view row) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(row.substr(start));
      return fields;
    }
    fields.push_back(row.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, std::string_view column) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || field.empty())
    throw ParseError(line, "column '" + std::string(column) + "': cannot parse '" + std::string(field) + "'");
  return value;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_record(const RunRecord& r) {
  std::string row;
  row += std::to_string(r.k) + ',' + std::to_string(r.m) + ',' + std::to_string(r.repeat) + ',' +
         std::to_string(r.seed) + ',';
  row += format_double(r.rho_lz) + ',' + format_double(r.rho_ppm) + ',';
  row += std::to_string(r.l0_lz_bytes) + ',' + std::to_string(r.l0_ppm_bytes) + ',';
  row += format_double(r.delta0_bits) + ',' + format_double(r.p0_hat) + ',';
  row += std::to_string(r.n0) + ',' + format_double(r.overall_error) + ',' + std::to_string(r.effective_n) + ',';
  row += r.delta0_valid ? '1' : '0';
  return row;
}

RunRecord parse_record(std::string_view row, std::size_t line) {
  const auto f = split(strip_cr(row));
  if (f.size() != kColumns)
    throw ParseError(line, "expected " + std::to_string(kColumns) + " columns, found " + std::to_string(f.size()));
  RunRecord r;
  r.k = parse_number<int>(f[0], line, "k");
  r.m = parse_number<std::size_t>(f[1], line, "m");
  r.repeat = parse_number<int>(f[2], line, "repeat");
  r.seed = parse_number<std::uint64_t>(f[3], line, "seed");
  r.rho_lz = parse_number<double>(f[4], line, "rho_lz");
  r.rho_ppm = parse_number<double>(f[5], line, "rho_ppm");
  r.l0_lz_bytes = parse_number<std::size_t>(f[6], line, "l0_lz_bytes");
  r.l0_ppm_bytes = parse_number<std::size_t>(f[7], line, "l0_ppm_bytes");
  r.delta0_bits = parse_number<double>(f[8], line, "delta0_bits");
  r.p0_hat = parse_number<double>(f[9], line, "p0_hat");
  r.n0 = parse_number<std::size_t>(f[10], line, "n0");
  r.overall_error = parse_number<double>(f[11], line, "overall_error");
  r.effective_n = parse_number<std::size_t>(f[12], line, "effective_n");
  const int valid = parse_number<int>(f[13], line, "delta0_valid");
  if (valid != 0 && valid != 1) throw ParseError(line, "column 'delta0_valid' must be 0 or 1");
  r.delta0_valid = valid == 1;
  return r;
}

void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << kRecordsHeader << '\n';
  for (const auto& r : records) out << format_record(r) << '\n';
}

void write_records_csv(const std::filesystem::path& path, std::span<const RunRecord> records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_records_csv(out, records);
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string row;
  if (!std::getline(in, row)) throw ParseError(1, "missing header row");
  if (strip_cr(row) != kRecordsHeader) throw ParseError(1, "unexpected header");
  std::vector<RunRecord> records;
  std::size_t line = 1;
  while (std::getline(in, row)) {
    ++line;
    if (strip_cr(row).empty()) continue;
    records.push_back(parse_record(row, line));
  }
  return records;
}

std::vector<RunRecord> read_records_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_records_csv(in);
}

}  // namespace bitscatter

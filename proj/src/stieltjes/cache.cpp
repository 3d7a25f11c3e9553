#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "li/error.hpp"
#include "li/stieltjes/gamma_table.hpp"

namespace li::stieltjes {

namespace {

constexpr std::string_view kHeader = "li-gamma-cache v1";
constexpr std::string_view kChecksumPrefix = "# checksum=fnv1a64:";

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

[[noreturn]] void cache_error(ErrorKind kind, const std::filesystem::path& path, std::size_t line, const std::string& what) {
  fail(kind, "stieltjes", path.string() + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool parse_int(const std::string& text, long& out) {
  if (text.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stol(text, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == text.size();
}

}  // namespace

void save_cache(const GammaTable& table, const std::filesystem::path& path) {
  if (table.values.size() != table.digits.size()) {
    fail(ErrorKind::validation, "stieltjes", "gamma table values/digits length mismatch");
  }
  std::string entries;
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    const int digits = std::max(table.digits[n], 1);
    entries += std::to_string(n) + '\t' + table.values[n].to_scientific(digits) + '\t' +
               std::to_string(table.digits[n]) + '\n';
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "stieltjes", "cannot write cache " + path.string());
  out << kHeader << '\n'
      << "convention=" << to_string(table.convention) << '\n'
      << "count=" << table.values.size() << '\n'
      << entries << kChecksumPrefix << hex64(fnv1a(entries)) << '\n';
  if (!out) fail(ErrorKind::io, "stieltjes", "failed writing cache " + path.string());
}

GammaTable load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "stieltjes", "cannot open cache " + path.string());

  enum class Stage { header, convention, count, entries };
  Stage stage = Stage::header;
  GammaTable table;
  long count = 0;
  std::string entries;
  std::string checksum;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kChecksumPrefix, 0) == 0) {
      checksum = line.substr(kChecksumPrefix.size());
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    switch (stage) {
      case Stage::header:
        if (line != kHeader) cache_error(ErrorKind::format, path, line_no, "malformed header '" + line + "'");
        stage = Stage::convention;
        break;
      case Stage::convention: {
        if (line.rfind("convention=", 0) != 0) cache_error(ErrorKind::convention, path, line_no, "convention missing");
        auto convention = parse_convention(line.substr(11));
        if (!convention) cache_error(ErrorKind::convention, path, line_no, "unknown convention '" + line.substr(11) + "'");
        table.convention = *convention;
        stage = Stage::count;
        break;
      }
      case Stage::count:
        if (line.rfind("count=", 0) != 0 || !parse_int(line.substr(6), count) || count < 0) {
          cache_error(ErrorKind::format, path, line_no, "malformed header: expected count=<N>");
        }
        stage = Stage::entries;
        break;
      case Stage::entries: {
        const auto fields = split_tabs(line);
        long index = 0;
        long digits = 0;
        if (fields.size() != 3 || !parse_int(fields[0], index) || !parse_int(fields[2], digits) || digits < 0) {
          cache_error(ErrorKind::format, path, line_no, "malformed entry");
        }
        if (index != static_cast<long>(table.values.size())) {
          cache_error(ErrorKind::format, path, line_no, "entry index " + fields[0] + " out of sequence");
        }
        if (index >= count) cache_error(ErrorKind::format, path, line_no, "entry-count: more entries than count=" + std::to_string(count));
        BigReal value(2);
        if (!BigReal::parse(fields[1], bits_for_digits(static_cast<int>(digits) + 5), value)) {
          cache_error(ErrorKind::format, path, line_no, "unparsable value '" + fields[1] + "'");
        }
        table.values.push_back(std::move(value));
        table.digits.push_back(static_cast<int>(digits));
        entries += line + '\n';
        break;
      }
    }
  }
  if (stage == Stage::header) cache_error(ErrorKind::format, path, line_no, "malformed header: empty file");
  if (stage == Stage::convention) cache_error(ErrorKind::convention, path, line_no, "convention missing");
  if (stage == Stage::count) cache_error(ErrorKind::format, path, line_no, "malformed header: count missing");
  if (static_cast<long>(table.values.size()) != count) {
    cache_error(ErrorKind::format, path, line_no,
                "entry-count: expected " + std::to_string(count) + " entries, found " + std::to_string(table.values.size()));
  }
  if (!checksum.empty() && checksum != hex64(fnv1a(entries))) {
    cache_error(ErrorKind::checksum, path, line_no, "checksum mismatch");
  }
  return table;
}

}  // namespace li::stieltjes

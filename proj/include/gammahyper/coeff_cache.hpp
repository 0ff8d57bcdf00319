#pragma once

#include "gammahyper/exact.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammahyper {

class CacheError : public std::runtime_error {
 public:
  CacheError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// 1-based offending line, or 0 for file-level failures.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text format:
///   gamma-coeffs v1 <method>
///   count <n>
///   <index>\t<num>/<den>      (n lines)
///   sha256 <hex over all prior lines, each terminated by '\n'>
std::string cache_serialize(const StirlingTable& table);
StirlingTable cache_parse(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Writes to a sibling temporary file and renames it over `path`.
void cache_save(const StirlingTable& table, const std::filesystem::path& path);
StirlingTable cache_load(const std::filesystem::path& path,
                         std::vector<std::string>* warnings = nullptr);

std::string sha256_hex(const std::string& data);

}  // namespace gammahyper

#pragma once

#include "gammahyper/real.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gammahyper {

enum class OutputFormat { text, json, csv };

struct CliConfig {
  Bits precision_bits = 256;
  std::filesystem::path cache_path;
  OutputFormat output_format = OutputFormat::text;
  long seed = 0;
};

/// $GAMMA_HYPER_CACHE, else $XDG_CACHE_HOME/gamma-hyper/coeffs.txt, else
/// ~/.cache/gamma-hyper/coeffs.txt. Read only if present.
std::filesystem::path default_cache_path();

/// Exit codes: 0 success, 1 domain or numerical failure, 2 usage error.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammahyper

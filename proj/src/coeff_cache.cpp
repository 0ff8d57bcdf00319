#include "gammahyper/coeff_cache.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace gammahyper {

namespace {
constexpr const char* kMagic = "gamma-coeffs";
constexpr const char* kVersion = "v1";

bool parse_int(const std::string& s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return out.set_str(s, 10) == 0;
}
}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw CacheError("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

std::string cache_serialize(const StirlingTable& table) {
  std::ostringstream body;
  body << kMagic << ' ' << kVersion << ' ' << method_name(table.method) << '\n';
  body << "count " << table.size() << '\n';
  for (std::size_t n = 0; n < table.size(); ++n) {
    const auto& q = table[n];
    body << n << '\t' << q.get_num().get_str() << '/' << q.get_den().get_str() << '\n';
  }
  std::string text = body.str();
  return text + "sha256 " + sha256_hex(text) + '\n';
}

StirlingTable cache_parse(const std::string& text, std::vector<std::string>* warnings) {
  std::vector<std::string> lines;
  {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string::npos) {
        lines.push_back(text.substr(pos));
        break;
      }
      lines.push_back(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw CacheError("empty cache file", 1);

  std::istringstream head(lines[0]);
  std::string magic, version, method;
  head >> magic >> version >> method;
  if (magic != kMagic) throw CacheError("bad header, expected '" + std::string(kMagic) + "'", 1);
  if (version != kVersion) throw CacheError("unsupported version '" + version + "'", 1);
  auto m = parse_method(method);
  if (!m) throw CacheError("unknown method '" + method + "'", 1);

  if (lines.size() < 2) throw CacheError("missing count line", 2);
  std::size_t count = 0;
  {
    std::istringstream cl(lines[1]);
    std::string word;
    long long c = -1;
    if (!(cl >> word >> c) || word != "count" || c < 0) throw CacheError("malformed count line", 2);
    count = static_cast<std::size_t>(c);
  }

  StirlingTable table;
  table.method = *m;
  table.entries.reserve(count);
  std::string hashed = lines[0] + '\n' + lines[1] + '\n';
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t ln = n + 3;
    if (ln - 1 >= lines.size() || lines[ln - 1].rfind("sha256 ", 0) == 0)
      throw CacheError("truncated file: expected entry " + std::to_string(n), ln);
    const std::string& line = lines[ln - 1];
    std::size_t tab = line.find('\t');
    std::size_t slash = line.find('/', tab == std::string::npos ? 0 : tab);
    if (tab == std::string::npos || slash == std::string::npos)
      throw CacheError("malformed entry '" + line + "'", ln);
    mpz_class idx, num, den;
    if (!parse_int(line.substr(0, tab), idx) || idx != static_cast<unsigned long>(n))
      throw CacheError("bad index, expected " + std::to_string(n), ln);
    if (!parse_int(line.substr(tab + 1, slash - tab - 1), num) ||
        !parse_int(line.substr(slash + 1), den))
      throw CacheError("malformed fraction '" + line.substr(tab + 1) + "'", ln);
    if (den == 0) throw CacheError("zero denominator", ln);
    ExactRational q(num, den);
    q.canonicalize();
    if (q.get_num() != num || q.get_den() != den) {
      if (warnings)
        warnings->push_back("line " + std::to_string(ln) + ": fraction not in lowest terms, reduced to " +
                            q.get_str());
    }
    table.entries.push_back(std::move(q));
    hashed += line + '\n';
  }
  std::size_t sl = count + 3;
  if (sl - 1 >= lines.size()) throw CacheError("truncated file: missing sha256 line", sl);
  const std::string& tail = lines[sl - 1];
  if (tail.rfind("sha256 ", 0) != 0) throw CacheError("expected sha256 line", sl);
  if (tail.substr(7) != sha256_hex(hashed)) throw CacheError("checksum mismatch", sl);
  for (std::size_t k = sl; k < lines.size(); ++k)
    if (!lines[k].empty()) throw CacheError("trailing content after checksum", k + 1);
  return table;
}

void cache_save(const StirlingTable& table, const std::filesystem::path& path) {
  std::string text = cache_serialize(table);
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw CacheError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw CacheError("cannot rename into '" + path.string() + "': " + ec.message());
  }
}

StirlingTable cache_load(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return cache_parse(ss.str(), warnings);
}

}  // namespace gammahyper

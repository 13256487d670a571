#include "demchar/store.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace demchar {

int RunConfig::effective_threads() const {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = line.find_first_not_of(" \t\r");
    if (notspace == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "numbering") base.numbering = val;
    else if (key == "term_budget") base.term_budget = std::stoull(val);
    else if (key == "brute_bound") base.brute_bound = std::stoi(val);
    else if (key == "cache_dir") base.cache_dir = val;
    else if (key == "threads") base.threads = std::stoi(val);
    else if (key == "format") base.format = val;
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
  }
  return base;
}

void apply_env_overrides(RunConfig& cfg) {
  if (const char* dir = std::getenv("DEMCHAR_CACHE_DIR")) cfg.cache_dir = dir;
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string CharKey::slug() const {
  std::string s = "v" + std::to_string(kFormatVersion) + "_" + type + "_" +
                  std::to_string(rank) + "_l" + std::to_string(ell) + "_";
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (i) s += "-";
    s += std::to_string(lambda[i]);
  }
  s += graded ? "_g1" : "_g0";
  return s;
}

namespace {
std::string header_line(const CharKey& k, bool graded, std::size_t nterms) {
  std::ostringstream os;
  os << "demchar v" << kFormatVersion << " type " << k.type << " rank " << k.rank
     << " ell " << k.ell << " lambda ";
  for (std::size_t i = 0; i < k.lambda.rank(); ++i) {
    if (i) os << ",";
    os << k.lambda[i];
  }
  os << " graded " << (graded ? 1 : 0) << " terms " << nterms << "\n";
  return os.str();
}

std::string with_checksum(std::string body) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(body)));
  return body + "checksum " + buf + "\n";
}
}  // namespace

std::string serialize_character(const CharKey& key, const Character& ch) {
  std::string body = header_line(key, false, ch.size());
  for (const auto& [w, c] : ch.sorted_terms()) {
    std::string line;
    for (std::size_t i = 0; i < w.rank(); ++i) line += std::to_string(w[i]) + " ";
    line += "0 1 ";  // delta exponent 0/1 for classical terms
    line += c.str();
    body += line + "\n";
  }
  return with_checksum(std::move(body));
}

std::string serialize_character(const CharKey& key, const AffineCharacter& ch) {
  std::string body = header_line(key, true, ch.size());
  for (const auto& [k, c] : ch.sorted_terms()) {
    std::string line;
    for (std::size_t i = 0; i < k.classical.rank(); ++i)
      line += std::to_string(k.classical[i]) + " ";
    line += std::to_string(k.delta.num()) + " " + std::to_string(k.delta.den()) + " ";
    line += c.str();
    body += line + "\n";
  }
  return with_checksum(std::move(body));
}

ParsedCharacter parse_character(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  ParsedCharacter out;
  int version = 0;
  std::size_t nterms = 0;
  in >> tok;
  if (tok != "demchar") throw std::runtime_error("character payload: bad magic");
  in >> tok;
  if (tok.size() < 2 || tok[0] != 'v') throw std::runtime_error("character payload: bad version");
  version = std::stoi(tok.substr(1));
  if (version != kFormatVersion)
    throw std::runtime_error("character payload: version mismatch");
  std::string lambda_csv;
  int graded_flag = 0;
  in >> tok >> out.key.type >> tok >> out.key.rank >> tok >> out.key.ell >> tok >>
      lambda_csv >> tok >> graded_flag >> tok >> nterms;
  out.key.graded = graded_flag != 0;
  out.key.lambda = Weight(out.key.rank);
  {
    std::istringstream ls(lambda_csv);
    std::string cell;
    int i = 0;
    while (std::getline(ls, cell, ',')) out.key.lambda[i++] = std::stoi(cell);
    if (i != out.key.rank) throw std::runtime_error("character payload: lambda rank mismatch");
  }
  out.graded = AffineCharacter(out.key.ell);
  for (std::size_t t = 0; t < nterms; ++t) {
    Weight w(out.key.rank);
    for (int i = 0; i < out.key.rank; ++i) {
      int64_t v;
      if (!(in >> v)) throw std::runtime_error("character payload: truncated");
      w[i] = static_cast<int32_t>(v);
    }
    int64_t dn, dd;
    std::string coeff;
    if (!(in >> dn >> dd >> coeff)) throw std::runtime_error("character payload: truncated");
    Coeff c(coeff);
    if (out.key.graded)
      out.graded.add_term(w, Rat(dn, dd), c);
    else
      out.classical.add_term(w, c);
  }
  in >> tok;
  if (tok != "checksum") throw std::runtime_error("character payload: missing checksum");
  return out;
}

std::string CharStore::path_for(const CharKey& key) const {
  return (fs::path(dir_) / (key.slug() + ".chr")).string();
}

std::optional<ParsedCharacter> CharStore::get(const CharKey& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto pos = text.rfind("checksum ");
  if (pos == std::string::npos) {
    std::cerr << "demchar: warning: cache entry " << path_for(key)
              << " has no checksum, treating as miss\n";
    return std::nullopt;
  }
  std::string body = text.substr(0, pos);
  std::string sum = text.substr(pos + 9);
  while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.pop_back();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
  if (sum != buf) {
    std::cerr << "demchar: warning: cache entry " << path_for(key)
              << " failed its checksum, treating as miss\n";
    return std::nullopt;
  }
  try {
    return parse_character(text);
  } catch (const std::exception& e) {
    std::cerr << "demchar: warning: cache entry " << path_for(key) << " unreadable ("
              << e.what() << "), treating as miss\n";
    return std::nullopt;
  }
}

void CharStore::put(const CharKey& key, const std::string& payload) const {
  fs::create_directories(dir_);
  std::string final_path = path_for(key);
  static std::atomic<uint64_t> counter{0};
  std::string tmp = final_path + ".tmp." + std::to_string(counter.fetch_add(1)) + "." +
                    std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << payload;
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cache write failed for " + final_path);
    }
  }
  fs::rename(tmp, final_path);
}

int CharStore::gc() const {
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return 0;
  int removed = 0;
  std::string want_prefix = "v" + std::to_string(kFormatVersion) + "_";
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    bool drop = false;
    if (name.size() > 4 && name.substr(name.size() - 4) == ".tmp") drop = true;
    if (name.find(".tmp.") != std::string::npos) drop = true;
    if (name.size() > 4 && name.substr(name.size() - 4) == ".chr") {
      if (name.rfind(want_prefix, 0) != 0) {
        drop = true;
      } else {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        auto pos = text.rfind("checksum ");
        if (pos == std::string::npos) {
          drop = true;
        } else {
          std::string body = text.substr(0, pos);
          std::string sum = text.substr(pos + 9);
          while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.pop_back();
          char buf[32];
          std::snprintf(buf, sizeof buf, "%016llx",
                        static_cast<unsigned long long>(fnv1a64(body)));
          if (sum != buf) drop = true;
        }
      }
    }
    if (drop) {
      fs::remove(entry.path(), ec);
      if (!ec) ++removed;
    }
  }
  return removed;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto work = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  int k = std::min<int>(threads, static_cast<int>(n));
  for (int t = 0; t < k; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace demchar

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "demchar/charring.hpp"

namespace demchar {

inline constexpr int kFormatVersion = 1;

struct RunConfig {
  std::string numbering = "bourbaki";
  std::size_t term_budget = 5'000'000;
  int brute_bound = 3;
  std::string cache_dir;  // empty = caching disabled unless set by env/config/flag
  int threads = 0;        // 0 = hardware concurrency
  std::string format = "plain";  // json | csv | plain

  int effective_threads() const;
};

// key=value lines; '#' starts a comment.  Unknown keys are an error.
RunConfig load_config_file(const std::string& path, RunConfig base = {});
void apply_env_overrides(RunConfig& cfg);  // DEMCHAR_CACHE_DIR

// -- canonical character serialization --------------------------------------
// Header records the query key; terms are sorted (coords, d_num, d_den, coeff).
struct CharKey {
  char type = '?';
  int rank = 0;
  int64_t ell = 0;
  Weight lambda;
  bool graded = false;
  std::string slug() const;
};

std::string serialize_character(const CharKey& key, const Character& ch);
std::string serialize_character(const CharKey& key, const AffineCharacter& ch);

struct ParsedCharacter {
  CharKey key;
  Character classical;        // valid when !key.graded
  AffineCharacter graded;     // valid when key.graded
};
ParsedCharacter parse_character(const std::string& text);

// -- persistent cache --------------------------------------------------------
// One file per key under cache_dir; atomic rename writes; checksum trailer.
class CharStore {
public:
  explicit CharStore(std::string dir) : dir_(std::move(dir)) {}

  // nullopt on miss or corruption (corruption also warns to stderr)
  std::optional<ParsedCharacter> get(const CharKey& key) const;
  void put(const CharKey& key, const std::string& payload) const;

  // drop entries with stale version or failing checksum; returns removed count
  int gc() const;

  const std::string& dir() const { return dir_; }

private:
  std::string path_for(const CharKey& key) const;
  std::string dir_;
};

uint64_t fnv1a64(const std::string& data);

// -- batch executor ----------------------------------------------------------
// Runs fn(0..n-1) on a small pool; results are whatever fn writes, indexed by i,
// so the outcome is schedule independent.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace demchar

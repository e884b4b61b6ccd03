#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "parab/frobenius.hpp"

namespace parab {

// on-disk store of the expensive per-pair artifacts (defining polynomial and the
// reduced form element); one JSON file per pair, keyed by "p_q.json"
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  struct Entry {
    UniPoly riley, omega, iota;
  };

  std::optional<Entry> load(long p, long q) const;
  void save(long p, long q, const Entry& e) const;

  static constexpr int kSchema = 1;

 private:
  std::filesystem::path file_for(long p, long q) const;
  std::filesystem::path dir_;
};

// build through the store when one is given: hit assembles, miss builds and saves
ParabolicAlgebra build_algebra_cached(long p, long q, const CacheStore* store);

}  // namespace parab

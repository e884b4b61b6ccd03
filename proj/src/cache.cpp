#include "parab/cache.hpp"

#include <fstream>

#include "parab/errors.hpp"
#include "parab/serialize.hpp"

namespace parab {

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path CacheStore::file_for(long p, long q) const {
  return dir_ / (std::to_string(p) + "_" + std::to_string(q) + ".json");
}

std::optional<CacheStore::Entry> CacheStore::load(long p, long q) const {
  std::ifstream in(file_for(p, q));
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
    if (j.at("schema").get<int>() != kSchema) return std::nullopt;
    if (j.at("p").get<long>() != p || j.at("q").get<long>() != q) return std::nullopt;
    Entry e;
    e.riley = poly_from_json(j.at("riley"));
    e.omega = poly_from_json(j.at("omega"));
    e.iota = poly_from_json(j.at("iota"));
    return e;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries behave like misses
  }
}

void CacheStore::save(long p, long q, const Entry& e) const {
  Json j;
  j["schema"] = kSchema;
  j["p"] = p;
  j["q"] = q;
  j["riley"] = poly_to_json(e.riley);
  j["omega"] = poly_to_json(e.omega);
  j["iota"] = poly_to_json(e.iota);
  auto tmp = file_for(p, q);
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, file_for(p, q));
}

ParabolicAlgebra build_algebra_cached(long p, long q, const CacheStore* store) {
  if (!store) return build_algebra(p, q);
  if (auto hit = store->load(p, q)) {
    TwoBridgeParams tb = make_params(p, q);
    ParabolicAlgebra v = assemble_algebra(std::move(tb), hit->riley, hit->omega);
    if (v.iota.rep() != hit->iota)
      throw internal_inconsistency("cached iota disagrees with the rebuilt basis");
    return v;
  }
  ParabolicAlgebra v = build_algebra(p, q);
  store->save(p, q, {v.ring.modulus(), v.omega.rep(), v.iota.rep()});
  return v;
}

}  // namespace parab

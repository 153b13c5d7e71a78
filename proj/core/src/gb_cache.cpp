#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qkgr/errors.hpp"
#include "qkgr/groebner.hpp"

namespace qkgr {

namespace fs = std::filesystem;

namespace {
constexpr const char* kCacheVersion = "qkgr-gb-1";
}

GroebnerCache::GroebnerCache(fs::path dir) : dir_(std::move(dir)) {}

GroebnerCache GroebnerCache::from_env() {
  if (const char* env = std::getenv("QKGR_CACHE_DIR"); env && *env) return GroebnerCache(env);
  if (const char* home = std::getenv("HOME"); home && *home) return GroebnerCache(fs::path(home) / ".cache" / "qkgr");
  return GroebnerCache(".qkgr-cache");
}

fs::path GroebnerCache::path_for(std::uint64_t fingerprint) const {
  return dir_ / ("gb-" + hex64(fingerprint) + ".json");
}

std::optional<GroebnerBasis> GroebnerCache::load(const std::vector<Poly>& gens, const TermOrder& order) const {
  if (gens.empty()) return std::nullopt;
  const auto fp = ideal_fingerprint(gens, order);
  const auto path = path_for(fp);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("version", "") != kCacheVersion) return std::nullopt;
    if (j.value("fingerprint", "") != hex64(fp)) return std::nullopt;
    if (j.value("order", "") != order.name()) return std::nullopt;
    const auto& space = gens.front().space();
    if (j.at("variables").get<std::vector<std::string>>() != space->names()) return std::nullopt;
    std::vector<std::string> stored_gens = j.at("source").get<std::vector<std::string>>();
    if (stored_gens.size() != gens.size()) return std::nullopt;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (stored_gens[i] != to_string(gens[i])) return std::nullopt;
    std::vector<Poly> basis;
    for (const auto& s : j.at("basis").get<std::vector<std::string>>()) basis.push_back(parse_poly(s, space));
    return GroebnerBasis(space, order, std::move(basis), fp);
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
}

std::vector<fs::path> GroebnerCache::entries() const {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    auto name = entry.path().filename().string();
    if (name.rfind("gb-", 0) == 0 && entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GroebnerCache::clear() const {
  std::size_t n = 0;
  for (const auto& p : entries()) {
    std::error_code ec;
    if (fs::remove(p, ec)) ++n;
  }
  return n;
}

GroebnerBasis groebner_cached(const std::vector<Poly>& gens, const TermOrder& order, const GroebnerCache* cache,
                              const GroebnerOptions& options) {
  if (cache) {
    if (auto hit = cache->load(gens, order)) return *hit;
  }
  GroebnerBasis gb = groebner(gens, order, options);
  if (!cache) return gb;
  std::error_code ec;
  fs::create_directories(cache->dir(), ec);
  if (ec) return gb;  // cache is best effort
  nlohmann::json j;
  j["schema"] = 1;
  j["version"] = kCacheVersion;
  j["fingerprint"] = hex64(gb.fingerprint());
  j["order"] = order.name();
  j["variables"] = gb.space()->names();
  std::vector<std::string> src, basis;
  for (const auto& g : gens) src.push_back(to_string(g));
  for (const auto& g : gb.generators()) basis.push_back(to_string(g));
  j["source"] = src;
  j["basis"] = basis;
  std::random_device rd;
  auto final_path = cache->path_for(gb.fingerprint());
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) return gb;
    out << j.dump(1) << "\n";
  }
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
  return gb;
}

}  // namespace qkgr

#include "burnside/ctx.hpp"

#include <filesystem>
#include <iostream>

#include "burnside/table_io.hpp"

namespace burnside {

namespace {

int64_t factorial(int n) {
  int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

bool is_full_symmetric(const PermutationGroup& g) {
  return g.degree() <= 16 && g.order() == factorial(g.degree());
}

}  // namespace

Ctx::Ctx(Caps caps, std::string cache_dir)
    : caps_(caps),
      cache_dir_(std::move(cache_dir)),
      warn_([](const std::string& m) { std::cerr << m << std::endl; }) {}

void Ctx::set_warn_handler(std::function<void(const std::string&)> handler) {
  warn_ = std::move(handler);
}

void Ctx::warn(const std::string& message) {
  if (warn_) warn_(message);
}

std::string Ctx::group_key(const PermutationGroup& g) const {
  std::vector<uint64_t> sorted = g.packed_elements();
  std::sort(sorted.begin(), sorted.end());
  std::string key = std::to_string(g.degree());
  key.push_back(':');
  key.reserve(key.size() + sorted.size() * 8);
  for (uint64_t v : sorted)
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
  return key;
}

GroupPtr Ctx::intern(PermutationGroup g) {
  std::string key = group_key(g);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = groups_.find(key);
  if (it != groups_.end()) return it->second;
  auto ptr = std::make_shared<const PermutationGroup>(std::move(g));
  groups_.emplace(std::move(key), ptr);
  return ptr;
}

GroupPtr Ctx::symmetric(int degree) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = symmetric_.find(degree);
    if (it != symmetric_.end()) return it->second;
  }
  GroupPtr g = intern(PermutationGroup::symmetric(degree));
  std::lock_guard<std::mutex> lock(mu_);
  symmetric_.emplace(degree, g);
  return g;
}

GroupPtr Ctx::trivial(int degree) { return intern(PermutationGroup::trivial(degree)); }

GroupPtr Ctx::young(int i, int j) { return intern(young_embedding(i, j)); }

TablePtr Ctx::table(const GroupPtr& g, TableInfo* info) {
  if (info) *info = TableInfo{};
  const std::string key = group_key(*g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(key);
    if (it != tables_.end()) {
      if (info) info->source = TableSource::kMemory;
      return it->second;
    }
  }
  GroupPtr canonical;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = groups_.find(key);
    canonical = it != groups_.end() ? it->second : nullptr;
  }
  if (!canonical) canonical = intern(*g);

  const bool cacheable = !cache_dir_.empty() && is_full_symmetric(*canonical);
  const std::string path =
      cacheable ? (std::filesystem::path(cache_dir_) / table_cache_filename(canonical->degree()))
                      .string()
                : "";

  if (info) info->cache_path = path;
  TablePtr result;
  if (cacheable && std::filesystem::exists(path)) {
    try {
      result = std::make_shared<const SubgroupTable>(load_table_file(canonical, path, caps_));
      if (info) info->source = TableSource::kCacheHit;
    } catch (const CacheError& e) {
      warn(std::string("warning: ") + e.what() + "; recomputing table");
      result.reset();
    }
  }
  bool fresh = false;
  if (!result) {
    result = std::make_shared<const SubgroupTable>(enumerate_subgroup_classes(canonical, caps_));
    fresh = true;
    if (info) info->source = TableSource::kComputed;
  }
  if (cacheable && fresh) {
    try {
      save_table_file(*result, path);
      if (info) info->cache_written = true;
    } catch (const CacheError& e) {
      warn(std::string("warning: ") + e.what());
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = tables_.emplace(key, result);
  return it->second;
}

TablePtr Ctx::symmetric_table(int degree, TableInfo* info) {
  return table(symmetric(degree), info);
}

}  // namespace burnside

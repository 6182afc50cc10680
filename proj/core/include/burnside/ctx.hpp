#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "burnside/caps.hpp"
#include "burnside/group.hpp"
#include "burnside/subgroup_table.hpp"

namespace burnside {

enum class TableSource { kMemory, kComputed, kCacheHit };

// Where a table came from and, when a cache directory is active, which file
// backs it.
struct TableInfo {
  TableSource source = TableSource::kComputed;
  std::string cache_path;    // empty when the table is not cacheable
  bool cache_written = false;
};

// Shared registry for groups and their subgroup tables. Groups are
// canonicalized by (degree, element set), so the block group with one
// length-n block and the symmetric group of degree n intern to the same
// object and share a single table. Symmetric-group tables persist to
// cache_dir when one is configured; unusable cache files are reported
// through the warning handler, recomputed and rewritten.
class Ctx {
 public:
  explicit Ctx(Caps caps = Caps{}, std::string cache_dir = "");

  const Caps& caps() const { return caps_; }
  const std::string& cache_dir() const { return cache_dir_; }

  GroupPtr intern(PermutationGroup g);
  GroupPtr symmetric(int degree);
  GroupPtr trivial(int degree);
  // Block subgroup S_i x S_j of S_{i+j}.
  GroupPtr young(int i, int j);

  TablePtr table(const GroupPtr& g, TableInfo* info = nullptr);
  TablePtr symmetric_table(int degree, TableInfo* info = nullptr);

  void set_warn_handler(std::function<void(const std::string&)> handler);

 private:
  std::string group_key(const PermutationGroup& g) const;
  void warn(const std::string& message);

  Caps caps_;
  std::string cache_dir_;
  std::function<void(const std::string&)> warn_;

  std::mutex mu_;
  std::unordered_map<std::string, GroupPtr> groups_;
  std::unordered_map<std::string, TablePtr> tables_;
  std::map<int, GroupPtr> symmetric_;
};

}  // namespace burnside

#pragma once

#include <memory>
#include <string>

#include "burnside/subgroup_table.hpp"

namespace burnside {

inline constexpr int kTableCacheVersion = 1;

// Cache file name for the degree-n symmetric group table.
std::string table_cache_filename(int degree);

std::string table_to_json(const SubgroupTable& table);

// Rebuilds a table from cached JSON. Every class is reconstructed by closing
// its stored generators; element sets, normalizer orders and the full marks
// matrix are recomputed and compared against the stored values. Throws
// CacheError on parse failure or any mismatch.
SubgroupTable table_from_json(std::shared_ptr<const PermutationGroup> ambient,
                              const std::string& json_text, const Caps& caps);

void save_table_file(const SubgroupTable& table, const std::string& path);
SubgroupTable load_table_file(std::shared_ptr<const PermutationGroup> ambient,
                              const std::string& path, const Caps& caps);

}  // namespace burnside

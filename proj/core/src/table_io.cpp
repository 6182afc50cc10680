#include "burnside/table_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "burnside/errors.hpp"
#include "json.hpp"

namespace burnside {

namespace {
using nlohmann::json;
}

std::string table_cache_filename(int degree) {
  return "sym" + std::to_string(degree) + "_v" + std::to_string(kTableCacheVersion) + ".json";
}

std::string table_to_json(const SubgroupTable& table) {
  json j;
  j["format_version"] = kTableCacheVersion;
  j["degree"] = table.ambient().degree();
  j["ambient_order"] = table.ambient().order();
  json classes = json::array();
  for (const auto& c : table.classes()) {
    json gens = json::array();
    for (const auto& g : c.representative.generators()) gens.push_back(g.images());
    classes.push_back(json{{"order", c.order},
                           {"normalizer_order", c.normalizer_order},
                           {"generators", std::move(gens)}});
  }
  j["classes"] = std::move(classes);
  j["marks"] = table.marks();
  return j.dump();
}

SubgroupTable table_from_json(std::shared_ptr<const PermutationGroup> ambient,
                              const std::string& json_text, const Caps& caps) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw CacheError(std::string("cache parse failure: ") + e.what());
  }
  try {
    if (!j.is_object() || j.at("format_version").get<int>() != kTableCacheVersion)
      throw CacheError("cache format version mismatch");
    if (j.at("degree").get<int>() != ambient->degree() ||
        j.at("ambient_order").get<int64_t>() != ambient->order())
      throw CacheError("cache ambient group mismatch");

    const int deg = ambient->degree();
    std::vector<SubgroupClass> classes;
    for (const auto& jc : j.at("classes")) {
      std::vector<Permutation> gens;
      for (const auto& jg : jc.at("generators"))
        gens.emplace_back(jg.get<std::vector<int>>());
      auto rep = PermutationGroup::closure(deg, std::move(gens));
      if (!rep.is_subgroup_of(*ambient)) throw CacheError("cached class escapes ambient group");
      SubgroupClass sc{PermutationGroup::from_elements(deg, rep.elements()),
                       rep.order(),
                       normalizer(*ambient, rep).order(),
                       "o" + std::to_string(rep.order()) + "_c" + std::to_string(classes.size()),
                       rep.packed_elements(),
                       subgroup_bucket_key(rep)};
      std::sort(sc.sorted_elements.begin(), sc.sorted_elements.end());
      if (jc.at("order").get<int64_t>() != sc.order)
        throw CacheError("cached class order mismatch");
      if (jc.at("normalizer_order").get<int64_t>() != sc.normalizer_order)
        throw CacheError("cached normalizer order mismatch");
      classes.push_back(std::move(sc));
    }
    for (size_t i = 1; i < classes.size(); ++i) {
      const auto& a = classes[i - 1];
      const auto& b = classes[i];
      if (std::tie(a.order, a.bucket, a.sorted_elements) >=
          std::tie(b.order, b.bucket, b.sorted_elements))
        throw CacheError("cached classes out of canonical order");
    }

    auto marks = compute_marks(*ambient, classes);
    if (j.at("marks").get<std::vector<std::vector<int64_t>>>() != marks)
      throw CacheError("cached marks disagree with recomputation");
    return SubgroupTable(std::move(ambient), std::move(classes), std::move(marks), caps);
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(std::string("cache content invalid: ") + e.what());
  }
}

void save_table_file(const SubgroupTable& table, const std::string& path) {
  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CacheError("cannot open cache file for writing: " + path);
  out << table_to_json(table) << '\n';
  if (!out) throw CacheError("failed writing cache file: " + path);
}

SubgroupTable load_table_file(std::shared_ptr<const PermutationGroup> ambient,
                              const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return table_from_json(std::move(ambient), buf.str(), caps);
}

}  // namespace burnside

#include "decalg/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "decalg/json_io.hpp"

#ifndef DECALG_DEFAULT_DATA_DIR
#define DECALG_DEFAULT_DATA_DIR "data"
#endif

namespace decalg {

namespace fs = std::filesystem;

std::string default_data_dir() {
  if (const char* env = std::getenv("DECALG_DATA_DIR")) return env;
  return DECALG_DEFAULT_DATA_DIR;
}

namespace {

std::vector<std::string> sorted_json_stems(const std::string& dir) {
  std::vector<std::string> names;
  if (!fs::is_directory(dir)) throw InvalidArgument("data directory not found: " + dir);
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::vector<CatalogEntry> load_group_catalog(const std::string& dir) {
  std::string base = dir.empty() ? default_data_dir() : dir;
  std::vector<CatalogEntry> out;
  for (const auto& name : sorted_json_stems(base + "/groups"))
    out.push_back({name, catalog_group(name, base)});
  return out;
}

PermGroup catalog_group(const std::string& name, const std::string& dir) {
  std::string base = dir.empty() ? default_data_dir() : dir;
  return group_from_json(load_json_file(base + "/groups/" + name + ".json"));
}

std::vector<std::string> catalog_table_names(const std::string& dir) {
  std::string base = dir.empty() ? default_data_dir() : dir;
  return sorted_json_stems(base + "/chartab");
}

CharacterTable catalog_table(const std::string& name, const std::string& dir) {
  std::string base = dir.empty() ? default_data_dir() : dir;
  CharacterTable t =
      character_table_from_json(load_json_file(base + "/chartab/" + name + ".json"));
  t.validate(1e-9);
  return t;
}

}  // namespace decalg

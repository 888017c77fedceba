#pragma once

#include <string>
#include <vector>

#include "decalg/chartheory.hpp"
#include "decalg/permgroup.hpp"

namespace decalg {

struct CatalogEntry {
  std::string name;
  PermGroup group;
};

/// Data directory resolution: explicit argument, else $DECALG_DATA_DIR, else
/// the compile-time default.
std::string default_data_dir();

/// All groups under <dir>/groups/*.json, sorted by name.
std::vector<CatalogEntry> load_group_catalog(const std::string& dir = "");
PermGroup catalog_group(const std::string& name, const std::string& dir = "");

/// Shipped character tables under <dir>/chartab/*.json.
std::vector<std::string> catalog_table_names(const std::string& dir = "");
CharacterTable catalog_table(const std::string& name, const std::string& dir = "");

}  // namespace decalg

#pragma once

// Named, replayable checks of the library's reference results.

#include <functional>
#include <string>
#include <vector>

namespace cpg {

struct CatalogOutcome {
  bool passed = false;
  std::string detail;
};

struct CatalogItem {
  std::string id;  // stable; removing one is a breaking change
  std::string description;
  std::function<CatalogOutcome()> run;
};

const std::vector<CatalogItem>& verify_catalog();
/// nullptr when the id is unknown.
const CatalogItem* find_catalog_item(const std::string& id);

}  // namespace cpg

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pseudoreal/catalog.hpp"
#include "pseudoreal/extension.hpp"
#include "pseudoreal/rules.hpp"

namespace pseudoreal {

struct ClassificationRow {
  TableRow table;                          // what gets printed
  std::shared_ptr<Group> full_group;       // concrete full group
  std::vector<Elt> conformal_members;      // index-2 conformal subgroup
  NecGeneratingVector witness;             // in full_group coordinates
  const CatalogRecord* conformal_record = nullptr;
};

struct ClassifyOptions {
  int jobs = 1;
  int max_conformal_order = 0;  // 0: the 6(g-1) bound
  const std::vector<ActionRecord>* actions = nullptr;
  RuleSet rules = builtin_rules();
};

/// The five-step pipeline for one genus. Throws CatalogError when a needed
/// even order is not complete in the catalog (unless an action list supplies
/// the candidates).
std::vector<ClassificationRow> classify_genus(int genus, const Catalog& catalog,
                                              const ClassifyOptions& options = {});

std::vector<TableRow> to_table(const std::vector<ClassificationRow>& rows);

/// Theorem-based validators; empty means all good.
std::vector<std::string> cross_validate(const std::vector<ClassificationRow>& rows, int genus,
                                        const Catalog& catalog);

/// The plane-quintic sub-table of the genus-6 rows.
std::vector<ClassificationRow> quintic_filter(const std::vector<ClassificationRow>& genus6,
                                              const Catalog& catalog);

}  // namespace pseudoreal

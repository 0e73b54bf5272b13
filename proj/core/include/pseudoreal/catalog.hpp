#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pseudoreal/epimorphism.hpp"
#include "pseudoreal/group.hpp"
#include "pseudoreal/signature.hpp"

namespace pseudoreal {

class CatalogError : public std::runtime_error {
public:
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

struct CatalogRecord {
  int order = 0;
  std::string id;    // "<order>.<index>"
  std::string name;  // human name
  std::shared_ptr<Group> group;
};

class Catalog {
public:
  std::vector<CatalogRecord> records;
  std::map<int, int> expected_counts;  // order -> number of groups, when declared

  bool order_complete(int order) const;
  const CatalogRecord* by_id(const std::string& id) const;
  std::vector<const CatalogRecord*> of_order(int order) const;
  /// Identifies a group against the catalog up to isomorphism
  /// (fingerprint-first). Returns nullptr when absent.
  const CatalogRecord* identify(const Group& g) const;

  void rebuild_index();

private:
  std::map<std::string, size_t> by_id_;
  mutable std::map<std::string, std::vector<size_t>> by_fingerprint_;
};

Catalog load_catalog(const std::string& path);

struct ActionRecord {
  int genus = 0;
  std::string group_id;
  FuchsianSignature signature;
  GeneratingVector vector;  // resolved against the catalog group
};

std::vector<ActionRecord> load_actions(const std::string& path, const Catalog& catalog);

/// One emitted classification row (see classify.hpp for the producer).
struct TableRow {
  int genus = 0;
  std::string conformal_label;
  FuchsianSignature fuchsian;
  std::string full_label;
  NecSignature nec;
  std::string witness;

  bool operator==(const TableRow&) const = default;
};

enum class TableFormat { Text, Csv };

std::string emit_rows(const std::vector<TableRow>& rows, TableFormat format);
std::vector<TableRow> parse_rows_csv(const std::string& text);

/// Order-insensitive row-set comparison; field-exact per row. When
/// compare_witness is false the witness column is ignored.
std::vector<std::string> diff_rows(const std::vector<TableRow>& got,
                                   const std::vector<TableRow>& expected,
                                   bool compare_witness);

}  // namespace pseudoreal

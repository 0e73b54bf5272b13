#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "pseudoreal/classify.hpp"

using namespace pseudoreal;

namespace {

std::string data_dir() {
  const char* env = std::getenv("PSEUDOREAL_DATA");
  return env ? env : "data";
}

const Catalog& catalog() {
  static Catalog cat = load_catalog(data_dir() + "/catalog.txt");
  return cat;
}

}  // namespace

TEST_CASE("genus 2 is the single C2/C4 row") {
  auto rows = classify_genus(2, catalog());
  REQUIRE(rows.size() == 1);
  const auto& t = rows[0].table;
  CHECK(t.conformal_label == "C2");
  CHECK(t.fuchsian == make_fuchsian(0, {2, 2, 2, 2, 2, 2}));
  CHECK(t.full_label == "C4");
  CHECK(t.nec == make_nec(1, {2, 2, 2}));
  CHECK(t.witness == "(a;a^2,a^2,a^2)");
}

TEST_CASE("genus 3 has exactly the two published rows") {
  auto rows = classify_genus(3, catalog());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].table.conformal_label == "C2");
  CHECK(rows[0].table.fuchsian == make_fuchsian(1, {2, 2, 2, 2}));
  CHECK(rows[0].table.full_label == "C4");
  CHECK(rows[1].table.conformal_label == "C2^2");
  CHECK(rows[1].table.full_label == "C4xC2");
  CHECK(rows[1].table.nec == make_nec(1, {2, 2, 2}));
}

TEST_CASE("genus 4 has exactly the four published rows including F20") {
  auto rows = classify_genus(4, catalog());
  REQUIRE(rows.size() == 4);
  bool f20 = false;
  for (const auto& r : rows)
    if (r.table.conformal_label == "D5" && r.table.full_label == "F20" &&
        r.table.nec == make_nec(1, {2, 5}))
      f20 = true;
  CHECK(f20);
}

TEST_CASE("classification is deterministic across worker counts") {
  ClassifyOptions serial, parallel;
  parallel.jobs = 4;
  auto a = to_table(classify_genus(5, catalog(), serial));
  auto b = to_table(classify_genus(5, catalog(), parallel));
  CHECK(a == b);
  CHECK(emit_rows(a, TableFormat::Csv) == emit_rows(b, TableFormat::Csv));
}

TEST_CASE("imported action lists reproduce the native genus-2 result") {
  std::string path = "/tmp/pseudoreal_actions_g2.txt";
  {
    std::ofstream out(path);
    out << "ACTION genus=2 group=2.1 sig=(0;[2^6]) vector=(a,a,a,a,a,a)\n";
    out << "ACTION genus=2 group=6.2 sig=(0;[2,3,7]) vector=(a,a,a)\n";  // ignored: invalid
  }
  // the second record is invalid; write only the first
  {
    std::ofstream out(path);
    out << "ACTION genus=2 group=2.1 sig=(0;[2^6]) vector=(a,a,a,a,a,a)\n";
  }
  auto actions = load_actions(path, catalog());
  ClassifyOptions opt;
  opt.actions = &actions;
  auto rows = classify_genus(2, catalog(), opt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].table.full_label == "C4");
}

TEST_CASE("cross validation accepts the real tables and flags synthetic junk") {
  auto rows = classify_genus(4, catalog());
  CHECK(cross_validate(rows, 4, catalog()).empty());

  // synthetic violation: break the witness so revalidation fails
  auto broken = rows;
  broken[0].witness.elliptic[0] = 0;
  CHECK_FALSE(cross_validate(broken, 4, catalog()).empty());
}

TEST_CASE("comp-excluded conformal groups never appear") {
  for (int g : {4, 5, 6}) {
    for (const auto& row : classify_genus(g, catalog()))
      CHECK_FALSE(comp_excluded(*row.conformal_record->group));
  }
}

TEST_CASE("quintic filter returns the two plane-quintic rows") {
  auto rows = classify_genus(6, catalog(), ClassifyOptions{.jobs = 2});
  auto q = quintic_filter(rows, catalog());
  REQUIRE(q.size() == 2);
  bool c4row = false, c2row = false;
  for (const auto& r : q) {
    if (r.table.conformal_label == "C4" && r.table.full_label == "C8" &&
        r.table.fuchsian == make_fuchsian(0, {4, 4, 4, 4, 4, 4}) &&
        r.table.nec == make_nec(1, {4, 4, 4}))
      c4row = true;
    if (r.table.conformal_label == "C2" && r.table.full_label == "C4" &&
        r.table.fuchsian == make_fuchsian(2, {2, 2, 2, 2, 2, 2}) &&
        r.table.nec == make_nec(3, {2, 2, 2}))
      c2row = true;
  }
  CHECK(c4row);
  CHECK(c2row);
  CHECK(quintic_filter({}, catalog()).empty());
  // no D5 case in the quintic table
  for (const auto& r : q) CHECK(r.table.conformal_label != "D5");
}

TEST_CASE("incomplete catalogs are refused") {
  Catalog tiny;
  CatalogRecord rec;
  rec.order = 2;
  rec.id = "2.1";
  rec.name = "C2";
  rec.group = std::make_shared<Group>(make_cyclic(2));
  tiny.records.push_back(rec);
  tiny.expected_counts[2] = 1;
  tiny.rebuild_index();
  ClassifyOptions opt;
  CHECK_THROWS_AS(classify_genus(3, tiny, opt), CatalogError);  // order 4 missing
  opt.max_conformal_order = 2;
  CHECK_NOTHROW(classify_genus(3, tiny, opt));
}

TEST_CASE("every emitted row validates: genus 5 spot check") {
  auto rows = classify_genus(5, catalog(), ClassifyOptions{.jobs = 2});
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) {
    CHECK_FALSE(validate_vector(row.witness).has_value());
    CHECK(canonical_fuchsian(row.table.nec) == row.table.fuchsian);
    CHECK(bounds_check(5, row.conformal_record->order, row.full_group->order()).empty());
    CHECK(nec_preimages(row.table.fuchsian).size() == 1);
    CHECK_FALSE(is_odd_signature(row.table.fuchsian));
  }
}

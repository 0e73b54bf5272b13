#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <set>

#include "pseudoreal/catalog.hpp"

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

TEST_CASE("catalog loads, orders are complete, ids unique") {
  const Catalog& cat = catalog();
  CHECK(cat.records.size() == 266);  // 263 complete orders + 3 labeled extras
  // counts for the orders the genus-10 run needs
  for (int o = 2; o <= 54; o += 2) CHECK(cat.order_complete(o));
  for (int o : {1, 3, 5, 7, 9, 11, 13, 15}) CHECK(cat.order_complete(o));
  CHECK_FALSE(cat.order_complete(72));  // labeled extras only

  std::set<std::string> ids, names;
  for (const auto& r : cat.records) {
    CHECK(ids.insert(r.id).second);
    CHECK(names.insert(r.name).second);
    CHECK(r.group->order() == r.order);
  }
}

TEST_CASE("expected counts match the standard table for small orders") {
  const Catalog& cat = catalog();
  std::map<int, int> expect = {{4, 2},  {8, 5},   {12, 5}, {16, 14},
                               {24, 15}, {32, 51}, {48, 52}, {54, 15}};
  for (auto [o, c] : expect) {
    CHECK(cat.expected_counts.at(o) == c);
    CHECK(int(cat.of_order(o).size()) == c);
  }
  // 42 isomorphism classes with order at most 16
  int upto16 = 0;
  for (const auto& r : cat.records)
    if (r.order <= 16) ++upto16;
  CHECK(upto16 == 42);
}

TEST_CASE("catalog groups are pairwise non-isomorphic per order") {
  const Catalog& cat = catalog();
  for (int o : {8, 12, 16, 20}) {
    auto list = cat.of_order(o);
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = i + 1; j < list.size(); ++j)
        CHECK_FALSE(is_isomorphic(*list[i]->group, *list[j]->group).has_value());
  }
}

TEST_CASE("identification against the catalog") {
  const Catalog& cat = catalog();
  Group q8 = make_metacyclic(4, 2, 3, 2);  // quaternion in disguise
  const CatalogRecord* rec = cat.identify(q8);
  REQUIRE(rec);
  CHECK(rec->name == "Q8");
  CHECK(cat.identify(make_metacyclic(13, 6, 4, 0))->name == "ID(78,1)");
}

TEST_CASE("invalid records are rejected with line information") {
  std::string path = "/tmp/pseudoreal_badcat.txt";
  {
    std::ofstream out(path);
    out << "GROUP id=4.1 name=C4 order=4\nCONS cyclic 6\nEND\n";
  }
  CHECK_THROWS_AS(load_catalog(path), CatalogError);
  {
    std::ofstream out(path);
    out << "GROUP id=2.1 name=C2 order=2\nDEGREE 2\nGEN a : 0 0\nEND\n";
  }
  CHECK_THROWS_AS(load_catalog(path), CatalogError);  // not a permutation
}

TEST_CASE("table rows round-trip through CSV") {
  std::vector<TableRow> rows;
  TableRow r;
  r.genus = 2;
  r.conformal_label = "C2";
  r.fuchsian = make_fuchsian(0, {2, 2, 2, 2, 2, 2});
  r.full_label = "C4";
  r.nec = make_nec(1, {2, 2, 2});
  r.witness = "(a;a^2,a^2,a^2)";
  rows.push_back(r);
  r.genus = 5;
  r.conformal_label = "C2^3";
  r.fuchsian = make_fuchsian(0, {2, 2, 2, 2, 2, 2});
  r.full_label = "ID(16,3)";
  r.nec = make_nec(1, {2, 2, 2});
  r.witness = "(a;b,b,a^2)";
  rows.push_back(r);

  auto text = emit_rows(rows, TableFormat::Csv);
  auto parsed = parse_rows_csv(text);
  REQUIRE(parsed.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) CHECK(parsed[i] == rows[i]);
  CHECK(diff_rows(parsed, rows, true).empty());

  auto text_fmt = emit_rows(rows, TableFormat::Text);
  CHECK(text_fmt.find("C2 ") != std::string::npos);
  CHECK(text_fmt.find("(1;-;[2^3])") != std::string::npos);
}

TEST_CASE("golden tables round-trip exactly") {
  for (int g : {2, 3, 4, 9}) {
    std::ifstream in(data_dir() + "/golden/genus" + std::to_string(g) + ".csv");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    auto rows = parse_rows_csv(buf.str());
    auto emitted = emit_rows(rows, TableFormat::Csv);
    auto again = parse_rows_csv(emitted);
    CHECK(rows.size() == again.size());
    CHECK(diff_rows(rows, again, true).empty());
  }
}

TEST_CASE("diff is order-insensitive but field-exact") {
  TableRow a;
  a.genus = 2;
  a.conformal_label = "C2";
  a.fuchsian = make_fuchsian(0, {2, 2, 2, 2, 2, 2});
  a.full_label = "C4";
  a.nec = make_nec(1, {2, 2, 2});
  a.witness = "(a;a^2,a^2,a^2)";
  TableRow b = a;
  b.conformal_label = "C4";
  CHECK(diff_rows({a, b}, {b, a}, true).empty());
  TableRow c = a;
  c.witness = "(a^3;a^2,a^2,a^2)";
  CHECK_FALSE(diff_rows({a}, {c}, true).empty());
  CHECK(diff_rows({a}, {c}, false).empty());
}

TEST_CASE("action records: load, validate, reject garbage") {
  std::string path = "/tmp/pseudoreal_actions.txt";
  {
    std::ofstream out(path);
    out << "# genus-2 conformal action of C2\n";
    out << "ACTION genus=2 group=2.1 sig=(0;[2^6]) vector=(a,a,a,a,a,a)\n";
  }
  auto actions = load_actions(path, catalog());
  REQUIRE(actions.size() == 1);
  CHECK(actions[0].genus == 2);
  CHECK(actions[0].vector.elliptic.size() == 6);

  {
    std::ofstream out(path);
    out << "ACTION genus=2 group=2.1 sig=(0;[2^6]) vector=(a,a,a,a,a,1)\n";
  }
  CHECK_THROWS_AS(load_actions(path, catalog()), CatalogError);  // order violated

  {
    std::ofstream out(path);
    out << "ACTION genus=2 group=99.1 sig=(0;[2^6]) vector=(a,a,a,a,a,a)\n";
  }
  CHECK_THROWS_AS(load_actions(path, catalog()), CatalogError);  // unknown group
}

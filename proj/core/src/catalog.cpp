#include "pseudoreal/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace pseudoreal {

namespace {

std::map<std::string, std::string> parse_fields(std::istringstream& is) {
  std::map<std::string, std::string> out;
  std::string field;
  while (is >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw CatalogError("expected key=value, got: " + field);
    out[field.substr(0, eq)] = field.substr(eq + 1);
  }
  return out;
}

std::vector<int> parse_ints(std::istringstream& is) {
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  return out;
}

}  // namespace

bool Catalog::order_complete(int order) const {
  auto it = expected_counts.find(order);
  if (it == expected_counts.end()) return false;
  int have = 0;
  for (const auto& r : records)
    if (r.order == order) ++have;
  return have == it->second;
}

const CatalogRecord* Catalog::by_id(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &records[it->second];
}

std::vector<const CatalogRecord*> Catalog::of_order(int order) const {
  std::vector<const CatalogRecord*> out;
  for (const auto& r : records)
    if (r.order == order) out.push_back(&r);
  return out;
}

const CatalogRecord* Catalog::identify(const Group& g) const {
  std::string fp = fingerprint(g).to_string();
  auto it = by_fingerprint_.find(fp);
  if (it == by_fingerprint_.end()) return nullptr;
  for (size_t idx : it->second)
    if (is_isomorphic(*records[idx].group, g)) return &records[idx];
  return nullptr;
}

void Catalog::rebuild_index() {
  by_id_.clear();
  by_fingerprint_.clear();
  for (size_t i = 0; i < records.size(); ++i) {
    if (!by_id_.emplace(records[i].id, i).second)
      throw CatalogError("duplicate catalog id " + records[i].id);
    by_fingerprint_[fingerprint(*records[i].group).to_string()].push_back(i);
  }
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file " + path);
  Catalog cat;

  std::string line;
  int lineno = 0;
  std::map<std::string, std::string> head;
  int degree = 0;
  std::vector<std::vector<int>> perms;
  std::vector<std::string> gen_names;
  std::string cons;
  std::vector<std::vector<int>> act_rows;
  bool in_group = false;

  auto resolve = [&](const std::string& id) -> const Group& {
    const CatalogRecord* r = cat.by_id(id);
    if (!r) throw CatalogError("catalog record references unknown id " + id);
    return *r->group;
  };

  auto finish_group = [&]() {
    CatalogRecord rec;
    rec.id = head.at("id");
    rec.name = head.count("name") ? head.at("name") : rec.id;
    rec.order = std::stoi(head.at("order"));
    try {
      if (!cons.empty()) {
        std::istringstream is(cons);
        std::string kind;
        is >> kind;
        if (kind == "cyclic") {
          int n;
          is >> n;
          rec.group = std::make_shared<Group>(make_cyclic(n));
        } else if (kind == "abelian") {
          rec.group = std::make_shared<Group>(make_abelian(parse_ints(is)));
        } else if (kind == "dihedral") {
          int n;
          is >> n;
          rec.group = std::make_shared<Group>(make_dihedral(n));
        } else if (kind == "dicyclic") {
          int n;
          is >> n;
          rec.group = std::make_shared<Group>(make_dicyclic(n));
        } else if (kind == "semidihedral") {
          int n;
          is >> n;
          rec.group = std::make_shared<Group>(make_semidihedral(n));
        } else if (kind == "modular") {
          int n;
          is >> n;
          rec.group = std::make_shared<Group>(make_modular(n));
        } else if (kind == "metacyclic") {
          int n, m, r, s;
          is >> n >> m >> r >> s;
          rec.group = std::make_shared<Group>(make_metacyclic(n, m, r, s));
        } else if (kind == "symmetric") {
          int n;
          is >> n;
          rec.group = std::make_shared<Group>(make_symmetric(n));
        } else if (kind == "alternating") {
          int n;
          is >> n;
          rec.group = std::make_shared<Group>(make_alternating(n));
        } else if (kind == "direct") {
          std::string a, b;
          is >> a >> b;
          rec.group = std::make_shared<Group>(direct_product(resolve(a), resolve(b)));
        } else if (kind == "semidirect") {
          std::string nid, hid;
          is >> nid >> hid;
          const Group& n = resolve(nid);
          const Group& h = resolve(hid);
          if (act_rows.size() != h.generators().size())
            throw CatalogError("semidirect needs one ACT line per H generator");
          std::vector<std::vector<Elt>> action;
          for (auto& row : act_rows) action.push_back(std::vector<Elt>(row.begin(), row.end()));
          rec.group = std::make_shared<Group>(semidirect_product(n, h, action));
        } else {
          throw CatalogError("unknown constructor " + kind);
        }
      } else {
        if (degree <= 0 || perms.empty())
          throw CatalogError("record without constructor or permutations");
        rec.group = std::make_shared<Group>(Group::from_permutations(degree, perms, gen_names));
      }
    } catch (const GroupError& e) {
      throw CatalogError("record " + rec.id + " is invalid: " + e.what());
    }
    if (rec.group->order() != rec.order)
      throw CatalogError("record " + rec.id + " declares order " + std::to_string(rec.order) +
                         " but constructs order " + std::to_string(rec.group->order()));
    rec.group->label = rec.id;
    if (rec.group->name.empty() || !head.count("name")) rec.group->name = rec.name;
    rec.group->name = rec.name;
    cat.records.push_back(std::move(rec));
    head.clear();
    degree = 0;
    perms.clear();
    gen_names.clear();
    cons.clear();
    act_rows.clear();
    in_group = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string headword;
    if (!(is >> headword)) continue;
    try {
      if (headword == "COUNT") {
        int order, count;
        is >> order >> count;
        cat.expected_counts[order] = count;
      } else if (headword == "GROUP") {
        if (in_group) throw CatalogError("GROUP block without END");
        head = parse_fields(is);
        if (!head.count("id") || !head.count("order"))
          throw CatalogError("GROUP needs id= and order=");
        in_group = true;
      } else if (headword == "CONS") {
        std::getline(is, cons);
      } else if (headword == "ACT") {
        act_rows.push_back(parse_ints(is));
      } else if (headword == "DEGREE") {
        is >> degree;
      } else if (headword == "GEN") {
        std::string name, colon;
        is >> name >> colon;
        if (colon != ":") throw CatalogError("GEN needs ':' before images");
        gen_names.push_back(name);
        perms.push_back(parse_ints(is));
      } else if (headword == "END") {
        if (!in_group) throw CatalogError("END without GROUP");
        finish_group();
      } else {
        throw CatalogError("unknown directive " + headword);
      }
    } catch (const CatalogError& e) {
      throw CatalogError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in_group) throw CatalogError("unterminated GROUP block");
  cat.rebuild_index();
  return cat;
}

std::vector<ActionRecord> load_actions(const std::string& path, const Catalog& catalog) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open action file " + path);
  std::vector<ActionRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string headword;
    if (!(is >> headword)) continue;
    if (headword != "ACTION")
      throw CatalogError(path + ":" + std::to_string(lineno) + ": expected ACTION");
    auto fields = parse_fields(is);
    ActionRecord rec;
    try {
      rec.genus = std::stoi(fields.at("genus"));
      rec.group_id = fields.at("group");
      auto sig = parse_fuchsian(fields.at("sig"));
      if (!sig) throw CatalogError("bad signature " + fields.at("sig"));
      rec.signature = *sig;
      const CatalogRecord* grec = catalog.by_id(rec.group_id);
      if (!grec) throw CatalogError("unresolvable group id " + rec.group_id);
      const Group& g = *grec->group;

      // vector=(e1,...;h1,h2,...) with [-] for an empty part
      std::string vec = fields.at("vector");
      if (vec.size() < 2 || vec.front() != '(' || vec.back() != ')')
        throw CatalogError("bad vector " + vec);
      std::string innerv = vec.substr(1, vec.size() - 2);
      auto semi = innerv.find(';');
      std::string epart = semi == std::string::npos ? innerv : innerv.substr(0, semi);
      std::string hpart = semi == std::string::npos ? "" : innerv.substr(semi + 1);
      auto split_words = [&](const std::string& text) {
        std::vector<std::string> words;
        if (text.empty() || text == "[-]") return words;
        std::istringstream ws(text);
        std::string w;
        while (std::getline(ws, w, ',')) words.push_back(w);
        return words;
      };
      rec.vector.group = &g;
      rec.vector.signature = rec.signature;
      for (const auto& w : split_words(epart)) {
        auto e = g.parse_word(w);
        if (!e) throw CatalogError("unparsable element word " + w);
        rec.vector.elliptic.push_back(*e);
      }
      auto hw = split_words(hpart);
      if (hw.size() % 2 != 0) throw CatalogError("odd hyperbolic word count");
      for (size_t i = 0; i + 1 < hw.size(); i += 2) {
        auto a = g.parse_word(hw[i]), b = g.parse_word(hw[i + 1]);
        if (!a || !b) throw CatalogError("unparsable hyperbolic word");
        rec.vector.hyperbolic.push_back({*a, *b});
      }
      if (auto err = validate_vector(rec.vector))
        throw CatalogError("action vector invalid: " + *err);
    } catch (const std::exception& e) {
      throw CatalogError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string emit_rows(const std::vector<TableRow>& rows, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::Csv) {
    os << "genus,conformal,fuchsian,full,nec,vector\n";
    for (const auto& r : rows)
      os << r.genus << ',' << csv_quote(r.conformal_label) << ','
         << csv_quote(r.fuchsian.to_string(true)) << ',' << csv_quote(r.full_label) << ','
         << csv_quote(r.nec.to_string(true)) << ',' << csv_quote(r.witness) << '\n';
    return os.str();
  }
  std::vector<std::array<std::string, 5>> cells;
  for (const auto& r : rows)
    cells.push_back({r.conformal_label, r.fuchsian.to_string(true), r.full_label,
                     r.nec.to_string(true), r.witness});
  std::array<size_t, 5> width{};
  for (const auto& c : cells)
    for (size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], c[i].size());
  for (const auto& c : cells) {
    for (size_t i = 0; i < 5; ++i) {
      if (i) os << " | ";
      os << std::left << std::setw(int(width[i])) << c[i];
    }
    os << '\n';
  }
  return os.str();
}

std::vector<TableRow> parse_rows_csv(const std::string& text) {
  std::vector<TableRow> rows;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first && line.rfind("genus,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    auto f = csv_split(line);
    if (f.size() != 6) throw CatalogError("bad CSV row: " + line);
    TableRow r;
    r.genus = std::stoi(f[0]);
    r.conformal_label = f[1];
    auto fs = parse_fuchsian(f[2]);
    auto ns = parse_nec(f[4]);
    if (!fs || !ns) throw CatalogError("bad signature in CSV row: " + line);
    r.fuchsian = *fs;
    r.full_label = f[3];
    r.nec = *ns;
    r.witness = f[5];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> diff_rows(const std::vector<TableRow>& got,
                                   const std::vector<TableRow>& expected, bool compare_witness) {
  auto key = [&](const TableRow& r) {
    std::ostringstream os;
    os << r.genus << '|' << r.conformal_label << '|' << r.fuchsian.to_string() << '|'
       << r.full_label << '|' << r.nec.to_string();
    if (compare_witness) os << '|' << r.witness;
    return os.str();
  };
  std::multiset<std::string> a, b;
  for (const auto& r : got) a.insert(key(r));
  for (const auto& r : expected) b.insert(key(r));
  std::vector<std::string> out;
  for (const auto& k : a)
    if (!b.count(k)) out.push_back("unexpected row: " + k);
  for (const auto& k : b)
    if (!a.count(k)) out.push_back("missing row: " + k);
  // multiplicity differences
  for (const auto& k : a)
    if (b.count(k) && a.count(k) != b.count(k))
      out.push_back("row multiplicity differs: " + k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pseudoreal

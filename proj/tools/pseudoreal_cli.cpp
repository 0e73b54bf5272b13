// Command-line driver: classification per genus, extension listings, vector
// searches, golden-table verification, and the explicit existence witness.
//
// Exit codes: 0 success, 1 violation/diff, 2 usage error, 3 data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pseudoreal/classify.hpp"

using namespace pseudoreal;

namespace {

std::string default_data_dir() {
  if (const char* env = std::getenv("PSEUDOREAL_DATA")) return env;
  return "data";
}

int default_jobs() {
  if (const char* env = std::getenv("PSEUDOREAL_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

RuleSet load_rules(const std::string& path) {
  if (path.empty()) return builtin_rules();
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open rules file " + path);
  return parse_rules(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudoreal: automorphism groups of pseudoreal Riemann surfaces"};
  app.require_subcommand(1);

  std::string catalog_path = default_data_dir() + "/catalog.txt";
  std::string rules_path;
  app.add_option("--catalog", catalog_path, "group catalog file")->capture_default_str();
  app.add_option("--rules", rules_path, "containment rule fixture (default: built in)");

  auto* classify = app.add_subcommand("classify", "classify one genus");
  int genus = 0;
  std::string actions_path, format = "text", out_path;
  int jobs = default_jobs();
  int max_order = 0;
  classify->add_option("--genus", genus, "genus (>= 2)")->required();
  classify->add_option("--actions", actions_path, "imported conformal action list");
  classify->add_option("--format", format, "text or csv")->capture_default_str();
  classify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  classify->add_option("--out", out_path, "write the table here instead of stdout");
  classify->add_option("--max-order", max_order,
                       "cap the conformal order (testing aid; 0 = 6(g-1))");

  auto* extensions = app.add_subcommand("extensions", "list E(G) for a catalog group");
  std::string group_id;
  extensions->add_option("--group", group_id, "catalog id or name")->required();

  auto* vectors = app.add_subcommand("vectors", "search generating vectors");
  std::string vec_group, vec_sig, vec_full;
  bool vec_nec = false, vec_all = false;
  vectors->add_option("--group", vec_group, "catalog id or name")->required();
  vectors->add_option("--sig", vec_sig, "Fuchsian or NEC signature")->required();
  vectors->add_flag("--nec", vec_nec, "NEC search (needs --full)");
  vectors->add_option("--full", vec_full, "full group for the NEC search");
  vectors->add_flag("--all", vec_all, "list all vectors up to conjugation");

  auto* verify = app.add_subcommand("verify", "diff a genus against a golden table");
  int vgenus = 0;
  std::string expected_path, witness_policy = "auto";
  int vjobs = default_jobs();
  verify->add_option("--genus", vgenus, "genus")->required();
  verify->add_option("--expected", expected_path, "golden CSV")->required();
  verify->add_option("--witnesses", witness_policy, "auto|exact|ignore")
      ->capture_default_str();
  verify->add_option("--jobs", vjobs, "worker threads")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "explicit pseudoreal action in a genus");
  int wgenus = 0;
  witness->add_option("--genus", wgenus, "genus (>= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) {
      Catalog cat = load_catalog(catalog_path);
      ClassifyOptions opt;
      opt.jobs = jobs;
      opt.max_conformal_order = max_order;
      opt.rules = load_rules(rules_path);
      std::vector<ActionRecord> actions;
      if (!actions_path.empty()) {
        actions = load_actions(actions_path, cat);
        opt.actions = &actions;
      }
      auto rows = classify_genus(genus, cat, opt);
      auto violations = cross_validate(rows, genus, cat);
      std::string text =
          emit_rows(to_table(rows), format == "csv" ? TableFormat::Csv : TableFormat::Text);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
      }
      if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
        return 1;
      }
      return 0;
    }

    if (*extensions) {
      Catalog cat = load_catalog(catalog_path);
      const CatalogRecord* rec = cat.by_id(group_id);
      if (!rec)
        for (const auto& r : cat.records)
          if (r.name == group_id) rec = &r;
      if (!rec) throw CatalogError("unknown group " + group_id);
      for (const auto& cls : eg_classes(*rec->group)) {
        const CatalogRecord* ext = cat.identify(*cls.extension);
        std::cout << (ext ? ext->name : "(uncatalogued)") << "  order "
                  << cls.extension->order() << (cls.split ? "  split" : "  non-split")
                  << (cls.direct_product ? "  direct-product" : "") << '\n';
      }
      return 0;
    }

    if (*vectors) {
      Catalog cat = load_catalog(catalog_path);
      const CatalogRecord* rec = cat.by_id(vec_group);
      if (!rec)
        for (const auto& r : cat.records)
          if (r.name == vec_group) rec = &r;
      if (!rec) throw CatalogError("unknown group " + vec_group);
      SearchMode mode = vec_all ? SearchMode::All : SearchMode::First;
      if (vec_nec) {
        const CatalogRecord* full = cat.by_id(vec_full);
        if (!full)
          for (const auto& r : cat.records)
            if (r.name == vec_full) full = &r;
        if (!full) throw CatalogError("unknown full group " + vec_full);
        auto nsig = parse_nec(vec_sig);
        if (!nsig) throw CatalogError("bad NEC signature " + vec_sig);
        int found = 0;
        for (const auto& h : index_two_subgroups(*full->group)) {
          Group hg = induced_group(*full->group, h);
          if (!is_isomorphic(hg, *rec->group)) continue;
          auto vecs = nec_vectors(*full->group, h, *nsig, mode);
          for (const auto& v : vecs) {
            std::cout << render_vector(v) << '\n';
            ++found;
          }
          if (!vecs.empty()) break;
        }
        return found ? 0 : 1;
      }
      auto fsig = parse_fuchsian(vec_sig);
      if (!fsig) throw CatalogError("bad Fuchsian signature " + vec_sig);
      auto vecs = fuchsian_vectors(*rec->group, *fsig, mode);
      const Group& g = *rec->group;
      for (const auto& v : vecs) {
        std::ostringstream os;
        os << '(';
        for (size_t i = 0; i < v.elliptic.size(); ++i) {
          if (i) os << ',';
          os << g.word_string(v.elliptic[i]);
        }
        if (!v.hyperbolic.empty()) {
          os << ';';
          for (size_t i = 0; i < v.hyperbolic.size(); ++i) {
            if (i) os << ',';
            os << g.word_string(v.hyperbolic[i].first) << ','
               << g.word_string(v.hyperbolic[i].second);
          }
        }
        os << ')';
        std::cout << os.str() << '\n';
      }
      return vecs.empty() ? 1 : 0;
    }

    if (*verify) {
      Catalog cat = load_catalog(catalog_path);
      ClassifyOptions opt;
      opt.jobs = vjobs;
      opt.rules = load_rules(rules_path);
      auto rows = classify_genus(vgenus, cat, opt);
      std::ifstream in(expected_path);
      if (!in) throw CatalogError("cannot open " + expected_path);
      std::stringstream buf;
      buf << in.rdbuf();
      auto expected = parse_rows_csv(buf.str());
      bool exact = witness_policy == "exact" || (witness_policy == "auto" && vgenus <= 4);
      auto diffs = diff_rows(to_table(rows), expected, exact);
      auto violations = cross_validate(rows, vgenus, cat);
      for (const auto& d : diffs) std::cerr << d << '\n';
      for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
      if (diffs.empty() && violations.empty()) {
        std::cout << "genus " << vgenus << ": " << rows.size() << " rows match "
                  << expected_path << '\n';
        return 0;
      }
      return 1;
    }

    if (*witness) {
      auto w = existencia_witness(wgenus);
      std::cout << "genus " << wgenus << ": full group C4, NEC signature "
                << w.vector.signature.to_string(true) << ", vector "
                << render_vector(w.vector) << '\n';
      return 0;
    }
  } catch (const CatalogError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

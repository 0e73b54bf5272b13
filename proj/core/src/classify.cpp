#include "pseudoreal/classify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace pseudoreal {

namespace {

// All even Fuchsian signatures (every period with even multiplicity) over the
// element orders of g with rh_genus(|G|, s) = genus. Enumerated as multisets
// of period pairs.
std::vector<FuchsianSignature> even_signatures(const Group& g, int genus) {
  std::vector<int> orders;
  for (int d = 2; d <= g.order(); ++d)
    if (!g.elements_of_order(d).empty()) orders.push_back(d);

  long long n = g.order();
  long long target_total = 2LL * genus - 2;
  std::vector<FuchsianSignature> out;

  // n * (2 g0 - 2) + sum over pairs of 2(n - n/m) = 2g - 2
  for (int g0 = 0;; ++g0) {
    long long base = n * (2LL * g0 - 2);
    if (base > target_total) break;
    long long need = target_total - base;
    // DFS over period pair multisets, orders nondecreasing
    std::vector<int> pairs;
    std::function<void(size_t, long long)> rec = [&](size_t oi, long long rem) {
      if (rem == 0) {
        std::vector<int> periods;
        for (int m : pairs) {
          periods.push_back(m);
          periods.push_back(m);
        }
        auto s = make_fuchsian(g0, periods);
        if (rh_genus(n, s) == genus) out.push_back(s);
        return;
      }
      if (oi >= orders.size() || rem < 0) return;
      long long v = 2 * (n - n / orders[oi]);
      // skip this order entirely
      rec(oi + 1, rem);
      if (v <= rem) {
        pairs.push_back(orders[oi]);
        rec(oi, rem - v);
        pairs.pop_back();
      }
    };
    rec(0, need);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Task {
  const CatalogRecord* record = nullptr;
  FuchsianSignature signature;
};

// Extension classes of one conformal group, grouped by abstract isomorphism
// type of the extension.
struct FullCandidate {
  std::vector<ExtensionClass> classes;  // same abstract full group
};

std::vector<FullCandidate> grouped_nonsplit(const Group& g) {
  auto classes = nonsplit_extensions(g);
  std::vector<FullCandidate> out;
  for (auto& c : classes) {
    bool placed = false;
    for (auto& fc : out)
      if (is_isomorphic(*fc.classes.front().extension, *c.extension)) {
        fc.classes.push_back(std::move(c));
        placed = true;
        break;
      }
    if (!placed) out.push_back(FullCandidate{{std::move(c)}});
  }
  return out;
}

std::string fallback_label(const Group& g) {
  std::ostringstream os;
  os << g.order() << ".x" << std::hex
     << (std::hash<std::string>{}(fingerprint(g).to_string()) & 0xffff);
  return os.str();
}

}  // namespace

std::vector<ClassificationRow> classify_genus(int genus, const Catalog& catalog,
                                              const ClassifyOptions& options) {
  if (genus < 2) throw CatalogError("classification needs genus >= 2");
  long long order_cap = 6LL * (genus - 1);
  if (options.max_conformal_order > 0)
    order_cap = std::min<long long>(order_cap, options.max_conformal_order);
  if (order_cap > 160)
    throw CatalogError("conformal order bound exceeds the automorphism limit");

  // Candidate list: either native enumeration over the catalog, which
  // requires complete even orders, or an imported action list.
  std::vector<Task> tasks;
  if (options.actions) {
    std::set<std::pair<std::string, FuchsianSignature>> seen;
    for (const auto& a : *options.actions) {
      if (a.genus != genus) continue;
      const CatalogRecord* rec = catalog.by_id(a.group_id);
      if (!rec) throw CatalogError("action list references unknown group " + a.group_id);
      if (rec->order % 2 != 0 || rec->order > order_cap) continue;
      if (nec_preimages(a.signature).empty()) continue;
      if (seen.insert({a.group_id, a.signature}).second)
        tasks.push_back(Task{rec, a.signature});
    }
  } else {
    for (long long o = 2; o <= order_cap; o += 2)
      if (!catalog.order_complete(int(o)))
        throw CatalogError("catalog is incomplete at order " + std::to_string(o) +
                           "; supply --actions or extend the catalog");
    for (long long o = 2; o <= order_cap; o += 2)
      for (const CatalogRecord* rec : catalog.of_order(int(o)))
        for (auto& s : even_signatures(*rec->group, genus))
          tasks.push_back(Task{rec, s});
  }
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    return std::tie(a.record->order, a.record->id, a.signature) <
           std::tie(b.record->order, b.record->id, b.signature);
  });

  // shared memo of grouped non-split extensions per conformal group
  std::mutex memo_mutex;
  std::map<std::string, std::shared_ptr<std::vector<FullCandidate>>> memo;
  auto extensions_of = [&](const CatalogRecord& rec) {
    {
      std::lock_guard<std::mutex> lock(memo_mutex);
      auto it = memo.find(rec.id);
      if (it != memo.end()) return it->second;
    }
    auto computed = std::make_shared<std::vector<FullCandidate>>(grouped_nonsplit(*rec.group));
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(rec.id, computed).first->second;
  };

  auto run_task = [&](const Task& task) {
    std::vector<ClassificationRow> rows;
    const Group& g = *task.record->group;
    const FuchsianSignature& s = task.signature;
    auto pre = nec_preimages(s);
    if (pre.empty()) return rows;
    NecSignature n = pre[0];

    if (fuchsian_vectors(g, s, SearchMode::First).empty()) return rows;
    auto kind = nec_nonmaximal_kind(n);

    for (const auto& fc : *extensions_of(*task.record)) {
      for (const auto& cls : fc.classes) {
        const Group& full = *cls.extension;
        Subgroup conf = make_subgroup(full, cls.embedding.images);
        NecGeneratingVector witness;
        bool found = false;
        if (!kind) {
          auto vecs = nec_vectors(full, conf, n, SearchMode::First);
          if (!vecs.empty()) {
            witness = vecs[0];
            found = true;
          }
        } else {
          const auto& rule = options.rules.rule_for(*kind);
          for (auto& v : nec_vectors(full, conf, n, SearchMode::All)) {
            if (apply_rule(rule, v)) {
              witness = v;
              found = true;
              break;
            }
          }
        }
        if (!found) continue;

        ClassificationRow row;
        row.table.genus = genus;
        row.table.conformal_label = task.record->name;
        row.table.fuchsian = s;
        row.table.nec = n;
        const CatalogRecord* full_rec = catalog.identify(full);
        row.table.full_label = full_rec ? full_rec->name : fallback_label(full);
        if (full_rec) {
          auto iso = is_isomorphic(full, *full_rec->group);
          row.table.witness = render_vector(witness, *full_rec->group, *iso);
        } else {
          row.table.witness = render_vector(witness);
        }
        row.full_group = cls.extension;
        row.conformal_members = cls.embedding.images;
        row.witness = witness;
        row.conformal_record = task.record;
        rows.push_back(std::move(row));
        break;  // one row per abstract full-group type
      }
    }
    return rows;
  };

  int jobs = std::max(1, options.jobs);
  std::vector<std::vector<ClassificationRow>> results(tasks.size());
  if (jobs == 1 || tasks.size() <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = run_task(tasks[i]);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          results[i] = run_task(tasks[i]);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::vector<ClassificationRow> rows;
  std::set<std::tuple<std::string, FuchsianSignature, std::string, NecSignature>> seen;
  for (auto& batch : results)
    for (auto& row : batch) {
      auto key = std::make_tuple(row.table.conformal_label, row.table.fuchsian,
                                 row.table.full_label, row.table.nec);
      if (seen.insert(key).second) rows.push_back(std::move(row));
    }
  std::sort(rows.begin(), rows.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
    int oa = a.conformal_record->order, ob = b.conformal_record->order;
    return std::tie(oa, a.table.conformal_label, a.table.fuchsian, a.table.full_label,
                    a.table.nec) < std::tie(ob, b.table.conformal_label, b.table.fuchsian,
                                            b.table.full_label, b.table.nec);
  });
  return rows;
}

std::vector<TableRow> to_table(const std::vector<ClassificationRow>& rows) {
  std::vector<TableRow> out;
  for (const auto& r : rows) out.push_back(r.table);
  return out;
}

std::vector<std::string> cross_validate(const std::vector<ClassificationRow>& rows, int genus,
                                        const Catalog& catalog) {
  std::vector<std::string> violations;
  for (const auto& row : rows) {
    const Group& full = *row.full_group;
    const Group& g = *row.conformal_record->group;
    std::string where = row.table.conformal_label + " " + row.table.fuchsian.to_string(true) +
                        " / " + row.table.full_label;

    // (e) order bounds and index-2 coherence
    for (auto& b : bounds_check(genus, g.order(), full.order()))
      violations.push_back(where + ": " + b);

    // (a) maximal-order rows must be non-abelian with NEC (1;-;[2,3])
    if (full.order() == 12 * (genus - 1)) {
      if (g.is_abelian()) violations.push_back(where + ": maximal full group over an abelian conformal group");
      if (!(row.table.nec == make_nec(1, {2, 3})))
        violations.push_back(where + ": maximal full group without signature (1;-;[2,3])");
    }

    // (b) excluded conformal groups
    if (comp_excluded(g)) violations.push_back(where + ": conformal group is comp-excluded");

    // (c) genus-zero central quotient forces an abelian conformal group
    Subgroup conf{&full, row.conformal_members};
    std::vector<Elt> parent;
    Group confg = induced_group(full, conf, &parent);
    Subgroup z = center(confg);
    std::vector<Elt> z_parent;
    for (Elt x : z.members) z_parent.push_back(parent[x]);
    auto qsig = conformal_quotient_signature(row.witness, z_parent);
    if (qsig.orbit_genus == 0 && !g.is_abelian())
      violations.push_back(where + ": X/Z(G) has genus zero but G is not abelian");

    // (d) even signatures only
    if (is_odd_signature(row.table.fuchsian))
      violations.push_back(where + ": odd conformal signature");

    // the witness must re-validate
    if (auto err = validate_vector(row.witness))
      violations.push_back(where + ": witness fails validation: " + *err);

    // Theorem 5.1 coherence
    if (!(canonical_fuchsian(row.table.nec) == row.table.fuchsian))
      violations.push_back(where + ": NEC signature does not double to the conformal one");
  }
  (void)catalog;
  return violations;
}

std::vector<ClassificationRow> quintic_filter(const std::vector<ClassificationRow>& genus6,
                                              const Catalog& catalog) {
  std::vector<ClassificationRow> out;
  Group c4 = make_cyclic(4), c2 = make_cyclic(2);
  const CatalogRecord* rc4 = catalog.identify(c4);
  const CatalogRecord* rc2 = catalog.identify(c2);
  if (!rc4 || !rc2) throw CatalogError("quintic filter needs C2 and C4 in the catalog");
  auto quartic = make_fuchsian(0, {4, 4, 4, 4, 4, 4});
  auto quadric = make_fuchsian(2, {2, 2, 2, 2, 2, 2});
  for (const auto& row : genus6) {
    if (row.table.genus != 6) continue;
    bool caseC4 = row.table.conformal_label == rc4->name && row.table.fuchsian == quartic;
    bool caseC2 = row.table.conformal_label == rc2->name && row.table.fuchsian == quadric;
    if (caseC4 || caseC2) out.push_back(row);
  }
  return out;
}

}  // namespace pseudoreal

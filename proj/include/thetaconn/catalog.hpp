#pragma once

// Built-in example gradings reachable through `examples` and `list`:
// the principal (all-ones) gradings with the all-ones vector, the order-3
// subregular G2 grading, and the outer involutions of A_{2n}.

#include "thetaconn/report.hpp"

namespace thetaconn {

inline std::vector<int> flip_permutation(int rank) {
  std::vector<int> p(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) p[static_cast<size_t>(i)] = rank - 1 - i;
  return p;
}

/// JobSpec for a named example; throws InputError on unknown names.
inline JobSpec example_job(const std::string& name) {
  JobSpec j;
  j.format = "json";
  if (name.rfind("frenkel-gross:", 0) == 0) {
    std::string type = name.substr(std::string("frenkel-gross:").size());
    if (type.size() < 2) throw InputError("unknown example: " + name);
    j.series = type[0];
    j.rank = std::stoi(type.substr(1));
    ChevalleyAlgebra probe = ChevalleyAlgebra::build(j.series, j.rank);  // validates the type
    j.kac.assign(static_cast<size_t>(j.rank) + 1, 1);
    j.sampled = false;
    j.vector_coords.assign(static_cast<size_t>(j.rank) + 1, Rat(1));  // dim g_1 = rank + 1
    return j;
  }
  if (name == "g2-subregular") {
    j.series = 'G';
    j.rank = 2;
    j.kac = {1, 1, 0};
    j.sampled = true;
    j.predicate = Predicate::Stable;
    j.seed = 7;
    return j;
  }
  if (name.rfind("2a2n:", 0) == 0) {
    int n = std::stoi(name.substr(std::string("2a2n:").size()));
    if (n < 1 || 2 * n > 8) throw InputError("2a2n:<n> requires 1 <= n <= 4");
    j.series = 'A';
    j.rank = 2 * n;
    j.sigma_perm = flip_permutation(j.rank);
    j.kac.assign(static_cast<size_t>(n) + 1, 0);
    j.kac[0] = 1;
    j.sampled = true;
    j.predicate = Predicate::Stable;
    j.seed = 11;
    return j;
  }
  throw InputError("unknown example: " + name +
                   " (expected frenkel-gross:<type>, g2-subregular, or 2a2n:<n>)");
}

struct CatalogRow {
  std::string name;
  std::string type;
  int sigma_order;
  std::vector<long> kac;
  long m;
  bool stable;
};

/// The shipped example table; every row is recomputed from its JobSpec so
/// repeated invocations agree byte for byte.
inline std::vector<CatalogRow> catalog_rows() {
  std::vector<std::string> names = {
      "frenkel-gross:A1", "frenkel-gross:A2", "frenkel-gross:A3", "frenkel-gross:B2",
      "frenkel-gross:G2", "g2-subregular",    "2a2n:1",           "2a2n:2",
  };
  std::vector<CatalogRow> rows;
  for (const std::string& name : names) {
    JobSpec j = example_job(name);
    auto g = build_grading(j);
    CatalogRow r;
    r.name = name;
    r.type = j.type_name();
    r.sigma_order = g->e;
    r.kac = j.kac;
    r.m = g->m;
    bool stable = false;
    try {
      g->sample_vector(Predicate::Stable, 1);
      stable = true;
    } catch (const SamplingError&) {
    }
    r.stable = stable;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace thetaconn

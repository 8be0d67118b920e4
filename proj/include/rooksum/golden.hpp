#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rooksum/dalg.hpp"
#include "rooksum/reference_tables.hpp"
#include "rooksum/report.hpp"
#include "rooksum/rook.hpp"

namespace rooksum {

/// Literal comparison of computed minimal polynomials against the reference
/// table for one n. Both the set of (a, b, c) keys and every string must match.
inline Report minpol_golden_check(int n, const std::vector<MinpolRow>& rows) {
  Report report;
  report.name = "minpol-golden n=" + std::to_string(n);
  report.run("rows", [&](CheckResult& c) {
    std::map<std::tuple<int, int, int>, std::string> expected;
    for (const auto& e : reference::kMinpolTable) {
      if (e.n == n) expected[{e.a, e.b, e.c}] = std::string(e.minpol);
    }
    c.record("expected_rows", static_cast<std::int64_t>(expected.size()));
    c.record("computed_rows", static_cast<std::int64_t>(rows.size()));
    if (expected.empty()) c.fail("no reference rows for n=" + std::to_string(n));
    std::size_t matched = 0;
    for (const auto& r : rows) {
      std::string key = "(" + std::to_string(r.a) + "," + std::to_string(r.b) + "," + std::to_string(r.c) + ")";
      auto it = expected.find({r.a, r.b, r.c});
      if (it == expected.end()) {
        c.fail(key + " not in reference table");
        continue;
      }
      std::string got = r.formatted(FactorStyle::kTeX);
      if (got != it->second) {
        c.fail(key + " computed " + got + ", reference " + it->second);
      } else {
        ++matched;
      }
    }
    c.expect(matched == expected.size() && rows.size() == expected.size(), "row sets differ");
  });
  return report;
}

/// The reference unity of the delta algebra for n <= 3, or nullopt.
template <ExactField F>
std::optional<typename DeltaAlgebra<F>::Element> reference_unity(const DeltaAlgebra<F>& alg) {
  int n = alg.degree();
  bool any = false;
  auto e = alg.zero();
  for (const auto& t : reference::kUnityTerms) {
    if (t.n != n) continue;
    any = true;
    e[alg.index_of(Subset::parse(n, t.to), Subset::parse(n, t.from))] = alg.field().parse(t.coeff);
  }
  if (!any) return std::nullopt;
  return e;
}

/// Compares computed statistics with the reference row for s.n.
inline Report delta_stats_golden_check(const DeltaStats& s) {
  Report report;
  report.name = "delta-golden n=" + std::to_string(s.n);
  report.run("stats", [&](CheckResult& c) {
    const reference::DeltaStatsEntry* ref = nullptr;
    for (const auto& e : reference::kDeltaStats) {
      if (e.n == s.n) ref = &e;
    }
    if (!ref) {
      c.skip("no reference row");
      return;
    }
    c.expect(s.dim == ref->dim, "dim " + std::to_string(s.dim) + " != " + std::to_string(ref->dim));
    c.expect(s.center_dim == ref->center_dim,
             "center " + std::to_string(s.center_dim) + " != " + std::to_string(ref->center_dim));
    c.expect(s.radical_dim && *s.radical_dim == ref->radical_dim, "radical differs from reference");
  });
  return report;
}

}  // namespace rooksum

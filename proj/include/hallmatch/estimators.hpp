#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hallmatch/generators.hpp"
#include "hallmatch/graph.hpp"
#include "hallmatch/rational.hpp"

namespace hallmatch {

/// L(G): vertices with a neighbour of degree at most their own.
VertexSet locally_superior_set(const Graph& g);

/// L_t(G): members of L(G) of degree at most t.
VertexSet l_t_set(const Graph& g, std::size_t t);

/// H_t(G): vertices of degree greater than t.
VertexSet h_t_set(const Graph& g, std::size_t t);

/// S_t(G): edges whose endpoints both have degree at most t.
std::vector<Edge> s_t_edges(const Graph& g, std::size_t t);

/// K_t(G) = L_t(G) ∪ H_t(G). Throws std::invalid_argument for t < 2.
VertexSet k_t_set(const Graph& g, std::size_t t);

struct ReportOptions {
  /// Threshold for the K_t column.
  std::size_t t = 2;
  /// When set, also evaluates |S_{2a+3}| + |H_{2a+3}| for this arboricity.
  std::optional<std::size_t> arboricity;
};

struct EstimatorReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t nu = 0;
  std::size_t ls = 0;
  std::size_t s2 = 0;
  std::size_t h2 = 0;
  std::size_t t = 2;
  std::size_t kt = 0;
  /// |S_{2a+3}| + |H_{2a+3}| when an arboricity was supplied.
  std::optional<std::size_t> sh_2a3;

  /// Estimator / nu; empty when nu = 0.
  [[nodiscard]] std::optional<Rational> ls_ratio() const { return ratio(ls); }
  [[nodiscard]] std::optional<Rational> sh2_ratio() const { return ratio(s2 + h2); }
  [[nodiscard]] std::optional<Rational> kt_ratio() const { return ratio(kt); }

 private:
  [[nodiscard]] std::optional<Rational> ratio(std::size_t value) const;
};

/// All estimator counts plus nu from max_matching.
EstimatorReport report(const Graph& g, const ReportOptions& options = {});

/// "p/q", "p" or "n/a".
std::string format_ratio(const std::optional<Rational>& r);

/// One failed bound, e.g. "|L| <= 3nu".
struct BoundViolation {
  std::string bound;
  std::string detail;
};

/// Checks every bound that must hold for `gen` given its certificate:
///  - all graphs: nu <= |L|, nu <= |S_t| + |H_t| (t = 1, 2, report.t),
///    L(G) ⊆ K_t(G), every edge has an endpoint in L(G);
///  - planar: |L|, |S_2| + |H_2| and |K_2| are at most 3nu;
///  - arboricity a (taken as max(a, 2)): |L| and |K_a| at most (a+1)nu;
///  - planar with minimum degree >= 3: nu >= ceil(n/3).
std::vector<BoundViolation> check_bounds(const GeneratedGraph& gen, const EstimatorReport& rep);

/// Bounds that are conjectured or proved elsewhere; reported, never asserted.
struct Observation {
  std::string name;
  bool holds = true;
  std::string detail;
};

///  - forests: |S_1| + |H_1| <= 2nu;
///  - arboricity a >= 3: |S_a| + |H_a| <= (a+1)nu (open conjecture);
///  - arboricity a: |S_{2a+3}| + |H_{2a+3}| <= (5a+9)nu.
std::vector<Observation> experimental_checks(const GeneratedGraph& gen, const EstimatorReport& rep);

}  // namespace hallmatch

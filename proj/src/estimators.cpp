#include "hallmatch/estimators.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallmatch/matching.hpp"

namespace hallmatch {
namespace {

std::vector<Vertex> select(const Graph& g, auto&& keep) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep(v)) out.push_back(v);
  }
  return out;
}

std::string count_pair(std::size_t lhs, const std::string& op, std::size_t rhs) {
  return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

}  // namespace

VertexSet locally_superior_set(const Graph& g) {
  return VertexSet(select(g, [&](Vertex u) {
    const std::size_t du = g.degree(u);
    const auto nbrs = g.neighbors(u);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return g.degree(w) <= du; });
  }));
}

VertexSet l_t_set(const Graph& g, std::size_t t) {
  std::vector<Vertex> out;
  for (Vertex v : locally_superior_set(g)) {
    if (g.degree(v) <= t) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet h_t_set(const Graph& g, std::size_t t) {
  return VertexSet(select(g, [&](Vertex v) { return g.degree(v) > t; }));
}

std::vector<Edge> s_t_edges(const Graph& g, std::size_t t) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) <= t && g.degree(e.v) <= t) out.push_back(e);
  }
  return out;
}

VertexSet k_t_set(const Graph& g, std::size_t t) {
  if (t < 2) throw std::invalid_argument("K_t requires t >= 2");
  std::vector<Vertex> merged = l_t_set(g, t).members();
  const VertexSet high = h_t_set(g, t);
  merged.insert(merged.end(), high.begin(), high.end());
  return VertexSet(std::move(merged));
}

std::optional<Rational> EstimatorReport::ratio(std::size_t value) const {
  if (nu == 0) return std::nullopt;
  return Rational(static_cast<std::int64_t>(value), static_cast<std::int64_t>(nu));
}

EstimatorReport report(const Graph& g, const ReportOptions& options) {
  EstimatorReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.nu = max_matching(g).size();
  r.ls = locally_superior_set(g).size();
  r.s2 = s_t_edges(g, 2).size();
  r.h2 = h_t_set(g, 2).size();
  r.t = options.t;
  r.kt = k_t_set(g, options.t).size();
  if (options.arboricity) {
    const std::size_t t = 2 * *options.arboricity + 3;
    r.sh_2a3 = s_t_edges(g, t).size() + h_t_set(g, t).size();
  }
  return r;
}

std::string format_ratio(const std::optional<Rational>& r) {
  return r ? to_compact_string(*r) : "n/a";
}

std::vector<BoundViolation> check_bounds(const GeneratedGraph& gen, const EstimatorReport& rep) {
  const Graph& g = gen.graph;
  const auto& cert = gen.certificate;
  const std::size_t nu = rep.nu;
  std::vector<BoundViolation> out;
  const auto require = [&](bool ok, std::string bound, std::string detail) {
    if (!ok) out.push_back({std::move(bound), std::move(detail)});
  };

  require(nu <= rep.ls, "nu <= |L|", count_pair(nu, ">", rep.ls));
  for (std::size_t t : {std::size_t{1}, std::size_t{2}, rep.t}) {
    const std::size_t sh = s_t_edges(g, t).size() + h_t_set(g, t).size();
    require(nu <= sh, "nu <= |S_t|+|H_t| (t=" + std::to_string(t) + ")", count_pair(nu, ">", sh));
  }

  const VertexSet ls = locally_superior_set(g);
  require(ls.is_subset_of(k_t_set(g, std::max<std::size_t>(rep.t, 2))), "L(G) subset of K_t(G)", "");
  for (const Edge& e : g.edges()) {
    if (!ls.contains(e.u) && !ls.contains(e.v)) {
      require(false, "L(G) covers every edge",
              "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      break;
    }
  }

  if (cert.planar) {
    const std::size_t k2 = k_t_set(g, 2).size();
    require(rep.ls <= 3 * nu, "|L| <= 3nu", count_pair(rep.ls, ">", 3 * nu));
    require(rep.s2 + rep.h2 <= 3 * nu, "|S_2|+|H_2| <= 3nu", count_pair(rep.s2 + rep.h2, ">", 3 * nu));
    require(k2 <= 3 * nu, "|K_2| <= 3nu", count_pair(k2, ">", 3 * nu));
    if (cert.min_degree && *cert.min_degree >= 3) {
      const std::size_t need = (rep.n + 2) / 3;
      require(nu >= need, "nu >= ceil(n/3)", count_pair(nu, "<", need));
    }
  }

  if (cert.arboricity_upper) {
    const std::size_t a = std::max<std::size_t>(*cert.arboricity_upper, 2);
    const std::size_t ka = k_t_set(g, a).size();
    const std::string tag = "(a=" + std::to_string(a) + ")";
    require(rep.ls <= (a + 1) * nu, "|L| <= (a+1)nu " + tag, count_pair(rep.ls, ">", (a + 1) * nu));
    require(ka <= (a + 1) * nu, "|K_a| <= (a+1)nu " + tag, count_pair(ka, ">", (a + 1) * nu));
  }
  return out;
}

std::vector<Observation> experimental_checks(const GeneratedGraph& gen, const EstimatorReport& rep) {
  const Graph& g = gen.graph;
  std::vector<Observation> out;
  if (!gen.certificate.arboricity_upper) return out;
  const std::size_t a = *gen.certificate.arboricity_upper;
  const auto sh = [&](std::size_t t) { return s_t_edges(g, t).size() + h_t_set(g, t).size(); };

  if (a == 1) {
    const std::size_t v = sh(1);
    out.push_back({"forest |S_1|+|H_1| <= 2nu", v <= 2 * rep.nu, count_pair(v, "vs", 2 * rep.nu)});
  }
  if (a >= 3) {
    const std::size_t v = sh(a);
    out.push_back({"conjecture |S_a|+|H_a| <= (a+1)nu", v <= (a + 1) * rep.nu,
                   count_pair(v, "vs", (a + 1) * rep.nu)});
  }
  const std::size_t esf = sh(2 * a + 3);
  out.push_back({"|S_{2a+3}|+|H_{2a+3}| <= (5a+9)nu", esf <= (5 * a + 9) * rep.nu,
                 count_pair(esf, "vs", (5 * a + 9) * rep.nu)});
  return out;
}

}  // namespace hallmatch

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hallmatch/graph.hpp"
#include "hallmatch/rational.hpp"

namespace hallmatch {

/// Largest |X| accepted by binding_number_of_set (2^|X| subsets are scanned).
inline constexpr std::size_t kBindingMaxSetSize = 20;

/// bind(X): the minimum of |N(S)|/|S| over nonempty S ⊆ X with N(S) != V.
/// `value` is empty when no such S exists (the binding number is unbounded).
struct BindingResult {
  std::optional<Rational> value;
  /// The minimising S; empty when unbounded. Ties go to the smallest |S|,
  /// then to the lexicographically smallest member list.
  VertexSet argmin;

  [[nodiscard]] bool unbounded() const { return !value.has_value(); }
  /// bind(X) >= bound, treating unbounded as +infinity.
  [[nodiscard]] bool at_least(const Rational& bound) const { return unbounded() || *value >= bound; }
};

/// Exact binding number of X by subset enumeration. Throws
/// std::invalid_argument when X is empty, larger than kBindingMaxSetSize, or
/// names a vertex outside the graph.
BindingResult binding_number_of_set(const Graph& g, const VertexSet& x);

/// Woodall's binding number: binding_number_of_set(g, V).
BindingResult woodall_binding(const Graph& g);

/// f : X -> N(X) sending each x to a neighbour, hitting every target at most
/// k times.
struct Assignment {
  VertexSet domain;
  /// target[i] is f(domain.members()[i]).
  std::vector<Vertex> target;
  std::map<Vertex, std::size_t> loads;
  std::size_t k = 0;

  [[nodiscard]] Vertex operator()(Vertex x) const;
};

/// S ⊆ X with k·|N(S)| < |S| and N(S) != V: proof that bind(X) < 1/k.
struct Violator {
  VertexSet set;
};

/// Throws std::logic_error unless every x maps to a neighbour and every load
/// is at most `a.k`.
void check_assignment(const Graph& g, const Assignment& a);

/// Throws std::logic_error unless `v` satisfies the violator conditions for k.
void check_violator(const Graph& g, const Violator& v, std::size_t k);

/// Either a load-k assignment of X or a Hall-type violator, decided by one
/// max-flow computation: source -> x (capacity 1), x -> y for every edge
/// xy with y in N(X) (capacity |X|+1), y -> sink (capacity k). A full flow
/// gives the assignment; otherwise the X-side of the source half of the
/// residual min cut is the violator. Returns an Assignment exactly when
/// bind(X) >= 1/k. Throws std::invalid_argument for k < 1 or empty X.
std::variant<Assignment, Violator> witness_assignment(const Graph& g, const VertexSet& x,
                                                      std::size_t k);

}  // namespace hallmatch

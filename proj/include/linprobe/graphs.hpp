#ifndef LINPROBE_GRAPHS_HPP
#define LINPROBE_GRAPHS_HPP

#include <map>
#include <utility>
#include <vector>

#include "linprobe/series.hpp"

namespace linprobe {

/// Exact counts of connected labeled graphs keyed by (edges, vertices).
/// Lookups outside the stored range return zero, which is also the true
/// count below the tree bound and above the complete-graph bound.
class GraphCountTable {
 public:
  void set(unsigned edges, unsigned vertices, ExactInteger count);
  ExactInteger count(unsigned edges, unsigned vertices) const;

  /// All (edges, count) pairs for a fixed vertex count, edge-sorted.
  std::vector<std::pair<unsigned, ExactInteger>> rows(unsigned vertices) const;

  unsigned max_vertices() const { return max_vertices_; }

 private:
  std::map<std::pair<unsigned, unsigned>, ExactInteger> entries_;
  unsigned max_vertices_ = 0;
};

/// Connected-graph counts from the parking polynomials: re-expanding the
/// parking polynomial for v−1 cars around x = 1 lists the counts for v
/// vertices by excess edge count.
GraphCountTable graph_counts(unsigned n_vertices_max);

/// Independent oracle: enumerate all 2^(v(v−1)/2) labeled graphs on
/// v <= 6 vertices, test connectivity by search, tally by edge count.
GraphCountTable brute_force_connected_counts(unsigned n_vertices);

/// EGF of rooted labeled trees: coefficients n^(n−1)/n!. Satisfies
/// t(z) = z·e^(t(z)) and z·t'(z) = t(z)/(1 − t(z)) through the order.
RationalSeries tree_series(unsigned order);

/// EGF of connected labeled graphs with fixed excess k (edges − vertices
/// + 1 = k): k = 0 unrooted trees, k = 1 unicyclic, and so on.
struct WrightSeries {
  unsigned k = 0;
  RationalSeries series;
};

WrightSeries wright_series_numeric(unsigned k, unsigned order);

/// One w-power row of the excess expansion: the bivariate parking EGF at
/// x = 1+w equals (t/z) times a function f(w, t) of the rooted-tree series
/// t; `series` holds the coefficient of w^k in f as a series in t.
struct ExcessExpansionRow {
  unsigned k = 0;
  RationalSeries series;
};

/// The classical closed forms for the w^0..w^3 rows of f, expanded as
/// exact series in t. Rows beyond 3 have no complete published closed
/// form and are rejected.
ExcessExpansionRow f_closed_form(unsigned k, unsigned order);

/// The same rows computed from first principles: build the w^k coefficient
/// of z·F(1+w,z)/t(z) from the graph counts, then re-expand the series in
/// powers of t by compositional inversion of t = t(z).
ExcessExpansionRow f_numeric(unsigned k, unsigned order);

}  // namespace linprobe

#endif

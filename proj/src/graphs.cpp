#include "linprobe/graphs.hpp"

#include <stdexcept>

#include "linprobe/parking.hpp"

namespace linprobe {

void GraphCountTable::set(unsigned edges, unsigned vertices,
                          ExactInteger count) {
  entries_[{edges, vertices}] = std::move(count);
  if (vertices > max_vertices_) max_vertices_ = vertices;
}

ExactInteger GraphCountTable::count(unsigned edges, unsigned vertices) const {
  auto it = entries_.find({edges, vertices});
  return it == entries_.end() ? ExactInteger(0) : it->second;
}

std::vector<std::pair<unsigned, ExactInteger>> GraphCountTable::rows(
    unsigned vertices) const {
  std::vector<std::pair<unsigned, ExactInteger>> out;
  for (const auto& [key, count] : entries_) {
    if (key.second == vertices) out.emplace_back(key.first, count);
  }
  return out;
}

GraphCountTable graph_counts(unsigned n_vertices_max) {
  if (n_vertices_max < 1)
    throw std::invalid_argument("graph_counts: need at least one vertex");
  GraphCountTable table;
  ParkingTable parking(n_vertices_max - 1);
  for (unsigned v = 1; v <= n_vertices_max; ++v) {
    IntPolynomial shifted = taylor_shift_one(parking.poly(v - 1));
    for (std::size_t k = 0; k < shifted.size(); ++k) {
      table.set(static_cast<unsigned>(v - 1 + k), v, shifted.coeff(k));
    }
  }
  return table;
}

GraphCountTable brute_force_connected_counts(unsigned n_vertices) {
  if (n_vertices < 1 || n_vertices > 6)
    throw std::invalid_argument(
        "brute_force_connected_counts: vertex count must be in 1..6");

  const unsigned v = n_vertices;
  const unsigned max_edges = v * (v - 1) / 2;

  // edge slot index -> endpoints
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned a = 0; a < v; ++a)
    for (unsigned b = a + 1; b < v; ++b) slots.emplace_back(a, b);

  std::vector<std::uint64_t> by_edges(max_edges + 1, 0);
  const std::uint64_t total = 1ULL << max_edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // depth-first reachability from vertex 0
    unsigned adjacency[6] = {};
    for (unsigned e = 0; e < max_edges; ++e) {
      if (mask >> e & 1) {
        adjacency[slots[e].first] |= 1u << slots[e].second;
        adjacency[slots[e].second] |= 1u << slots[e].first;
      }
    }
    unsigned seen = 1u;
    unsigned frontier = 1u;
    while (frontier) {
      unsigned next = 0;
      for (unsigned i = 0; i < v; ++i)
        if (frontier >> i & 1) next |= adjacency[i];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == (1u << v) - 1) {
      ++by_edges[static_cast<unsigned>(__builtin_popcountll(mask))];
    }
  }

  GraphCountTable table;
  for (unsigned e = 0; e <= max_edges; ++e) {
    if (by_edges[e] > 0)
      table.set(e, v, ExactInteger(static_cast<unsigned long>(by_edges[e])));
  }
  return table;
}

RationalSeries tree_series(unsigned order) {
  if (order < 1) throw std::invalid_argument("tree_series: order must be >= 1");
  RationalSeries t(order);
  for (unsigned n = 1; n <= order; ++n) {
    t.set_coeff(n, ExactRational(int_pow(ExactInteger(n), n - 1)) /
                       ExactRational(factorial(n)));
  }
  return t;
}

WrightSeries wright_series_numeric(unsigned k, unsigned order) {
  if (order < 1)
    throw std::invalid_argument("wright_series_numeric: order must be >= 1");
  GraphCountTable counts = graph_counts(order);
  RationalSeries w(order);
  for (unsigned n = 1; n <= order; ++n) {
    ExactInteger c = counts.count(n - 1 + k, n);
    if (c != 0) w.set_coeff(n, ExactRational(c) / ExactRational(factorial(n)));
  }
  return {k, w};
}

namespace {

// c · t^p · (a − 2t) / (1 − t)^q as an exact series
RationalSeries pole_term(const ExactRational& c, unsigned p, long a, unsigned q,
                         unsigned order) {
  RationalSeries one_minus_t(order);
  one_minus_t.set_coeff(0, ExactRational(1));
  one_minus_t.set_coeff(1, ExactRational(-1));
  RationalSeries numerator(order);
  if (p <= order) numerator.set_coeff(p, c * a);
  if (p + 1 <= order) numerator.set_coeff(p + 1, c * -2);
  return numerator * one_minus_t.inverse().pow(q);
}

}  // namespace

ExcessExpansionRow f_closed_form(unsigned k, unsigned order) {
  RationalSeries row(order);
  switch (k) {
    case 0:
      row.set_coeff(0, ExactRational(1));
      break;
    case 1: {
      // t^2 / (2(1−t)^2)
      RationalSeries one_minus_t(order);
      one_minus_t.set_coeff(0, ExactRational(1));
      one_minus_t.set_coeff(1, ExactRational(-1));
      RationalSeries numerator(order);
      if (2 <= order) numerator.set_coeff(2, ExactRational(1) / 2);
      row = numerator * one_minus_t.inverse().pow(2);
      break;
    }
    case 2:
      row = pole_term(ExactRational(5) / 24, 4, 5, 5, order) +
            pole_term(ExactRational(1) / 4, 3, 4, 4, order);
      break;
    case 3:
      row = pole_term(ExactRational(5) / 16, 7, 8, 8, order) +
            pole_term(ExactRational(55) / 48, 6, 7, 7, order) +
            pole_term(ExactRational(73) / 48, 5, 6, 6, order) +
            pole_term(ExactRational(3) / 4, 4, 5, 5, order) +
            pole_term(ExactRational(1) / 24, 3, 4, 4, order);
      break;
    default:
      throw std::invalid_argument(
          "f_closed_form: rows beyond w^3 have no complete closed form");
  }
  return {k, row};
}

ExcessExpansionRow f_numeric(unsigned k, unsigned order) {
  if (order < 1) throw std::invalid_argument("f_numeric: order must be >= 1");

  // w^k coefficient of F(1+w, z) as a series in z, from the graph counts:
  // its EGF coefficient at z^n counts connected graphs on n+1 vertices
  // with n+k edges.
  GraphCountTable counts = graph_counts(order + 1);
  RationalSeries s(order);
  for (unsigned n = 0; n <= order; ++n) {
    ExactInteger c = counts.count(n + k, n + 1);
    if (c != 0) s.set_coeff(n, ExactRational(c) / ExactRational(factorial(n)));
  }

  // divide by t(z)/z, then re-expand in powers of t by composing with the
  // compositional inverse of t(z)
  RationalSeries tree = tree_series(order + 1);
  RationalSeries tree_over_z = tree.divided_by_power(1);
  s = s * tree_over_z.inverse();
  RationalSeries inverse_tree = tree.truncated(order).reversion();
  return {k, s.compose(inverse_tree)};
}

}  // namespace linprobe

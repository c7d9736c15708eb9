#include "graphoid/topo.hpp"

#include <stdexcept>

namespace graphoid {

Rat PointCloud::dist_sq(size_t i, size_t j) const {
  Rat d(0);
  for (size_t k = 0; k < arity; ++k) d += chordal_sq(points[i][k], points[j][k]);
  d.canonicalize();
  return d;
}

namespace {

// column rank over GF(2); columns are bitsets of row indices
size_t gf2_rank(std::vector<std::vector<uint64_t>> cols, size_t rows) {
  size_t words = (rows + 63) / 64;
  std::vector<long> pivot_of_row(rows, -1);
  size_t rank = 0;
  for (size_t c = 0; c < cols.size(); ++c) {
    for (;;) {
      long low = -1;
      for (size_t w = words; w-- > 0;) {
        if (cols[c].size() <= w) continue;
        if (cols[c][w] != 0) {
          low = static_cast<long>(w * 64 + (63 - static_cast<size_t>(
                                                     __builtin_clzll(cols[c][w]))));
          break;
        }
      }
      if (low < 0) break;  // zero column
      long other = pivot_of_row[static_cast<size_t>(low)];
      if (other < 0) {
        pivot_of_row[static_cast<size_t>(low)] = static_cast<long>(c);
        ++rank;
        break;
      }
      for (size_t w = 0; w < cols[static_cast<size_t>(other)].size(); ++w) {
        if (cols[c].size() <= w) cols[c].resize(cols[static_cast<size_t>(other)].size(), 0);
        cols[c][w] ^= cols[static_cast<size_t>(other)][w];
      }
    }
  }
  return rank;
}

} // namespace

RipsSummary rips_betti(const PointCloud& cloud, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("scale must be positive");
  size_t n = cloud.points.size();
  if (n > 512) throw std::invalid_argument("point cloud above the 512-point cap");
  for (const auto& p : cloud.points)
    if (p.size() != cloud.arity)
      throw std::invalid_argument("point arity mismatch in the cloud");

  RipsSummary s;
  s.scale = eps;
  s.vertices = n;
  if (n == 0) return s;

  Rat eps2 = eps * eps;
  size_t words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> adj(n, std::vector<uint64_t>(words, 0));
  std::vector<std::pair<size_t, size_t>> edges;
  std::vector<std::vector<long>> edge_index(n, std::vector<long>(n, -1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (cloud.dist_sq(i, j) <= eps2) {
        edge_index[i][j] = static_cast<long>(edges.size());
        edges.push_back({i, j});
        adj[i][j / 64] |= 1ull << (j % 64);
        adj[j][i / 64] |= 1ull << (i % 64);
      }
    }
  }
  s.edges = edges.size();

  // boundary of edges over vertices
  std::vector<std::vector<uint64_t>> d1;
  d1.reserve(edges.size());
  for (const auto& [i, j] : edges) {
    std::vector<uint64_t> col(words, 0);
    col[i / 64] |= 1ull << (i % 64);
    col[j / 64] |= 1ull << (j % 64);
    d1.push_back(std::move(col));
  }
  size_t rank1 = gf2_rank(std::move(d1), n);

  // triangles and their boundaries over edges
  size_t ewords = (edges.size() + 63) / 64;
  std::vector<std::vector<uint64_t>> d2;
  size_t tri = 0;
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    for (size_t w = 0; w < words; ++w) {
      uint64_t common = adj[i][w] & adj[j][w];
      while (common) {
        size_t k = w * 64 + static_cast<size_t>(__builtin_ctzll(common));
        common &= common - 1;
        if (k <= j) continue;  // count each triangle once: i < j < k
        ++tri;
        std::vector<uint64_t> col(ewords, 0);
        long e1 = edge_index[i][j], e2 = edge_index[i][k], e3 = edge_index[j][k];
        for (long eidx : {e1, e2, e3})
          col[static_cast<size_t>(eidx) / 64] |= 1ull << (static_cast<size_t>(eidx) % 64);
        d2.push_back(std::move(col));
      }
    }
  }
  s.triangles = tri;
  size_t rank2 = d2.empty() ? 0 : gf2_rank(std::move(d2), edges.size());

  s.betti0 = n - rank1;
  s.betti1 = edges.size() - rank1 - rank2;
  return s;
}

StableRange stable_range(const PointCloud& cloud, const std::vector<Rat>& eps_grid) {
  for (size_t i = 0; i + 1 < eps_grid.size(); ++i)
    if (!(eps_grid[i] < eps_grid[i + 1]))
      throw std::invalid_argument("scale grid must be sorted ascending");
  StableRange out;
  for (const Rat& e : eps_grid) out.summaries.push_back({e, rips_betti(cloud, e)});
  size_t best_len = 0;
  for (size_t i = 0; i < out.summaries.size();) {
    size_t j = i;
    while (j + 1 < out.summaries.size() &&
           out.summaries[j + 1].second == out.summaries[i].second)
      ++j;
    if (j - i + 1 > best_len) {
      best_len = j - i + 1;
      out.run_begin = i;
      out.run_end = j;
      out.run_betti0 = out.summaries[i].second.betti0;
      out.run_betti1 = out.summaries[i].second.betti1;
    }
    i = j + 1;
  }
  return out;
}

} // namespace graphoid

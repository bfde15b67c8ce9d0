#include "curvelab/rooted.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "curvelab/curvature.hpp"

namespace curvelab {

RootedGraph::RootedGraph(long root, const std::vector<Edge>& edges,
                         const std::map<long, double>& measure)
    : root_(root), measure_(measure) {
  for (const auto& [u, v, w] : edges) {
    if (u == v) fail(ErrorCode::InvalidArgument, "self loops not allowed");
    if (!(w > 0.0))
      fail(ErrorCode::InvalidArgument, "edge weights must be positive");
    adj_[u].emplace_back(v, w);
    adj_[v].emplace_back(u, w);
    measure_.try_emplace(u, 1.0);
    measure_.try_emplace(v, 1.0);
  }
  measure_.try_emplace(root_, 1.0);
  for (const auto& [v, m] : measure_) {
    if (!(m > 0.0))
      fail(ErrorCode::InvalidArgument, "vertex measures must be positive");
    vertices_.push_back(v);
  }

  // BFS from the root; spheres are distance classes.
  std::map<long, long> dist;
  std::deque<long> queue{root_};
  dist[root_] = 0;
  while (!queue.empty()) {
    long v = queue.front();
    queue.pop_front();
    long d = dist[v];
    if (std::size_t(d) >= spheres_.size()) spheres_.resize(std::size_t(d) + 1);
    spheres_[std::size_t(d)].push_back(v);
    auto it = adj_.find(v);
    if (it == adj_.end()) continue;
    for (const auto& [u, w] : it->second) {
      if (dist.emplace(u, d + 1).second) queue.push_back(u);
    }
  }
  sphere_of_ = std::move(dist);
  if (sphere_of_.size() != vertices_.size())
    fail(ErrorCode::Disconnected, "graph is not connected from the root");
}

long RootedGraph::sphere_index(long v) const {
  auto it = sphere_of_.find(v);
  if (it == sphere_of_.end())
    fail(ErrorCode::VertexOutOfSupport, "unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<std::pair<long, double>> RootedGraph::neighbors(long v) const {
  sphere_index(v);
  auto it = adj_.find(v);
  if (it == adj_.end()) return {};
  return it->second;
}

double RootedGraph::measure(long v) const {
  auto it = measure_.find(v);
  if (it == measure_.end())
    fail(ErrorCode::VertexOutOfSupport, "unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<RootedGraph::Edge> RootedGraph::edges() const {
  std::vector<Edge> out;
  for (const auto& [u, nbrs] : adj_) {
    for (const auto& [v, w] : nbrs) {
      if (u < v) out.emplace_back(u, v, w);
    }
  }
  return out;
}

namespace {

double outward_degree(const RootedGraph& rg, long v) {
  long d = rg.sphere_index(v);
  double acc = 0.0;
  for (const auto& [u, w] : rg.neighbors(v)) {
    if (rg.sphere_index(u) > d) acc += w;
  }
  return acc / rg.measure(v);
}

}  // namespace

SymmetryCheck check_weak_symmetry(const RootedGraph& rg) {
  SymmetryCheck check;
  const double tol = 1e-12;
  for (long n = 0; n <= rg.depth(); ++n) {
    const auto& sphere = rg.spheres()[std::size_t(n)];
    long first = sphere.front();
    SphereRow row{n, outward_degree(rg, first), rg.measure(first)};
    for (long v : sphere) {
      double dp = outward_degree(rg, v);
      double m = rg.measure(v);
      if (std::abs(dp - row.d_plus) > tol * std::max(1.0, std::abs(row.d_plus))) {
        check.witness_a = first;
        check.witness_b = v;
        check.witness_field = "d_plus";
        return check;
      }
      if (std::abs(m - row.m) > tol * std::max(1.0, row.m)) {
        check.witness_a = first;
        check.witness_b = v;
        check.witness_field = "measure";
        return check;
      }
    }
    check.rows.push_back(row);
  }
  check.symmetric = true;
  return check;
}

Projection project(const RootedGraph& rg) {
  SymmetryCheck check = check_weak_symmetry(rg);
  if (!check.symmetric)
    fail(ErrorCode::NotWeaklySymmetric,
         "spheres disagree in " + check.witness_field + " at vertices " +
             std::to_string(check.witness_a) + ", " +
             std::to_string(check.witness_b));

  long depth = rg.depth();
  SequenceModel m_p;
  WeightModel w_p;
  for (long n = 0; n <= depth; ++n) {
    double m = 0.0;
    for (long v : rg.spheres()[std::size_t(n)]) m += rg.measure(v);
    m_p.prefix.push_back(m);
    if (n < depth) {
      double w = 0.0;
      for (long v : rg.spheres()[std::size_t(n)]) {
        for (const auto& [u, wu] : rg.neighbors(v)) {
          if (rg.sphere_index(u) == n + 1) w += wu;
        }
      }
      w_p.prefix.push_back(w);
    }
  }

  Projection out{LinearGraph(Support::interval(0, depth), std::move(w_p),
                             MeasureSpec::explicit_(std::move(m_p))),
                 true, true};
  const double tol = 1e-12;
  for (long n = 0; n <= depth; ++n) {
    if (std::abs(out.graph.measure(n) - 1.0) > tol)
      out.physical_symmetric = false;
  }
  for (long v : rg.vertices()) {
    double deg = 0.0;
    for (const auto& [u, w] : rg.neighbors(v)) {
      (void)u;
      deg += w;
    }
    if (std::abs(deg / rg.measure(v) - 1.0) > tol)
      out.normalized_symmetric = false;
  }
  return out;
}

TransferReport projection_curvature_transfer(const RootedGraph& rg,
                                             DimensionParam D, long depth) {
  Projection proj = project(rg);
  depth = std::min(depth, rg.depth());

  TransferReport report;
  for (long r = 0; r <= depth; ++r) {
    TransferRow row;
    row.r = r;
    row.k_projection = optimal_curvature(proj.graph, r, D);
    row.k_sphere_min = std::numeric_limits<double>::infinity();
    for (long v : rg.spheres()[std::size_t(r)]) {
      row.k_sphere_min =
          std::min(row.k_sphere_min, optimal_curvature_psd(rg, v, D));
    }
    row.ok = row.k_projection >= row.k_sphere_min - 1e-9;
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

RootedGraph cartesian_product(const RootedGraph& a, const RootedGraph& b) {
  // Pair (u, v) -> u * stride + index of v in b's vertex list.
  long stride = long(b.vertices().size());
  std::map<long, long> b_index;
  for (long i = 0; std::size_t(i) < b.vertices().size(); ++i)
    b_index[b.vertices()[std::size_t(i)]] = i;
  auto pair_id = [&](long u, long v) { return u * stride + b_index.at(v); };

  std::vector<RootedGraph::Edge> edges;
  std::map<long, double> measure;
  for (long u : a.vertices()) {
    for (long v : b.vertices()) {
      measure[pair_id(u, v)] = a.measure(u) * b.measure(v);
    }
  }
  for (const auto& [u1, u2, w] : a.edges()) {
    for (long v : b.vertices())
      edges.emplace_back(pair_id(u1, v), pair_id(u2, v), w);
  }
  for (const auto& [v1, v2, w] : b.edges()) {
    for (long u : a.vertices())
      edges.emplace_back(pair_id(u, v1), pair_id(u, v2), w);
  }
  return RootedGraph(pair_id(a.root(), b.root()), edges, measure);
}

RootedGraph symmetric_tree(const std::vector<long>& branching,
                           const std::vector<double>& sphere_weights,
                           const std::vector<double>& sphere_measures,
                           double root_measure) {
  if (branching.size() != sphere_weights.size() ||
      branching.size() != sphere_measures.size())
    fail(ErrorCode::InconsistentSpec,
         "branching, weights and measures must have equal length");

  std::vector<RootedGraph::Edge> edges;
  std::map<long, double> measure{{0, root_measure}};
  std::vector<long> frontier{0};
  long next_id = 1;
  for (std::size_t d = 0; d < branching.size(); ++d) {
    if (branching[d] < 1)
      fail(ErrorCode::InconsistentSpec, "branching factors must be >= 1");
    std::vector<long> next;
    for (long parent : frontier) {
      for (long c = 0; c < branching[d]; ++c) {
        long id = next_id++;
        edges.emplace_back(parent, id, sphere_weights[d]);
        measure[id] = sphere_measures[d];
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  return RootedGraph(0, edges, measure);
}

}  // namespace curvelab

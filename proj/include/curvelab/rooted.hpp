#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "curvelab/graph.hpp"

namespace curvelab {

/// A finite weighted graph with a distinguished root and cached sphere
/// decomposition by combinatorial distance to the root.
class RootedGraph final : public GraphView {
public:
  using Edge = std::tuple<long, long, double>;

  RootedGraph(long root, const std::vector<Edge>& edges,
              const std::map<long, double>& measure);

  long root() const { return root_; }
  const std::vector<long>& vertices() const { return vertices_; }
  const std::vector<std::vector<long>>& spheres() const { return spheres_; }
  long depth() const { return long(spheres_.size()) - 1; }
  long sphere_index(long v) const;

  std::vector<std::pair<long, double>> neighbors(long v) const override;
  double measure(long v) const override;

  std::vector<Edge> edges() const;  // each undirected edge once, u < v

private:
  long root_ = 0;
  std::vector<long> vertices_;
  std::map<long, std::vector<std::pair<long, double>>> adj_;
  std::map<long, double> measure_;
  std::map<long, long> sphere_of_;
  std::vector<std::vector<long>> spheres_;
};

struct SphereRow {
  long n = 0;
  double d_plus = 0.0;
  double m = 0.0;
};

struct SymmetryCheck {
  bool symmetric = false;
  std::vector<SphereRow> rows;  // valid when symmetric
  // Failure witness: two vertices on the same sphere that disagree.
  long witness_a = 0;
  long witness_b = 0;
  std::string witness_field;  // "d_plus" or "measure"
};

/// Constancy of the outward degree and the measure on every sphere.
SymmetryCheck check_weak_symmetry(const RootedGraph& rg);

struct Projection {
  LinearGraph graph;
  bool physical_symmetric = false;    // m_P == 1 on every sphere
  bool normalized_symmetric = false;  // Deg == 1 at every vertex
};

/// The linear graph of sphere aggregates m_P(n) = m(S_n),
/// w_P(n, n+1) = w(S_n, S_{n+1}).  Requires weak symmetry.
Projection project(const RootedGraph& rg);

struct TransferRow {
  long r = 0;
  double k_projection = 0.0;
  double k_sphere_min = 0.0;
  bool ok = false;
};

struct TransferReport {
  std::vector<TransferRow> rows;
  bool all_ok = true;
};

/// Checks that projecting does not decrease curvature: for each radius
/// r <= depth, K*(G_P, r, D) >= min over the sphere of the PSD-oracle
/// optimum on the rooted graph, within 1e-9.
TransferReport projection_curvature_transfer(const RootedGraph& rg,
                                             DimensionParam D, long depth);

/// Cartesian product with w((a,b),(a',b')) = w1(a,a') [b=b'] + w2(b,b') [a=a']
/// and m(a,b) = m1(a) m2(b); rooted at the pair of roots.
RootedGraph cartesian_product(const RootedGraph& a, const RootedGraph& b);

/// Rooted tree where every depth-n vertex has branching[n] children, all
/// depth-n edges share sphere_weights[n] and all depth-n vertices share
/// sphere_measures[n].  root_measure is the measure of the root.
RootedGraph symmetric_tree(const std::vector<long>& branching,
                           const std::vector<double>& sphere_weights,
                           const std::vector<double>& sphere_measures,
                           double root_measure = 1.0);

}  // namespace curvelab

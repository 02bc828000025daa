#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "toriplan/complex.hpp"
#include "toriplan/planner.hpp"
#include "toriplan/sphere.hpp"

namespace toriplan {

using Rng = std::mt19937_64;

/// Independent stream for sample `index` under `seed`, so results do not
/// depend on how samples are split across workers.
Rng sample_rng(std::uint64_t seed, std::uint64_t index);

/// Normalized Gaussian vector.
SpherePoint random_sphere_point(SphereKind kind, Rng& rng);
ProductPoint random_product_point(SphereKind kind, int n, Rng& rng);
/// Generic values on the coordinates of `face`, e elsewhere.
ProductPoint random_point_on_face(SphereKind kind, int n, VertexSet face, Rng& rng);

/// Random complex on [n]: between 1 and 2n random facets.
SimplicialComplex random_complex(int n, Rng& rng);
/// Erdős–Rényi graph with an edge probability drawn from [0.1, 0.9].
Graph random_graph(int n, Rng& rng);

using PointPair = std::pair<ProductPoint, ProductPoint>;

/// Draws endpoint pairs from X × X.
class PairSampler {
 public:
  PairSampler(SimplicialComplex complex, SphereKind sphere);

  /// Uniform face for each endpoint, then generic values on it.
  PointPair random_pair(Rng& rng) const;
  /// Pairs on faces J, K with coordinates forced onto the strata
  /// boundaries: y_i = -x_i on J ∩ K, x_i = -e or y_i = -e where allowed.
  PointPair directed_pair(Rng& rng) const;
  /// Full-product pairs with a prescribed antipodal pattern: a random set
  /// I (odd) or a random alpha ∈ {0,1,2}^n (even).
  PointPair pattern_pair(Rng& rng) const;

  const SimplicialComplex& complex() const { return complex_; }
  SphereKind sphere() const { return sphere_; }

 private:
  VertexSet random_face(Rng& rng) const;

  SimplicialComplex complex_;
  SphereKind sphere_;
  std::vector<VertexSet> faces_;
};

}  // namespace toriplan

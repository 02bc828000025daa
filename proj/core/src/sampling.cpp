#include "toriplan/sampling.hpp"

#include <algorithm>

namespace toriplan {

Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

SpherePoint random_sphere_point(SphereKind kind, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(kind.ambient_dim()));
  for (double& v : c) v = gauss(rng);
  return SpherePoint::normalized(kind, std::move(c));
}

ProductPoint random_product_point(SphereKind kind, int n, Rng& rng) {
  return random_point_on_face(kind, n, VertexSet::full(n), rng);
}

ProductPoint random_point_on_face(SphereKind kind, int n, VertexSet face, Rng& rng) {
  std::vector<SpherePoint> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    c.push_back(face.contains(i) ? random_sphere_point(kind, rng) : SpherePoint::basepoint(kind));
  }
  return ProductPoint(kind, std::move(c));
}

SimplicialComplex random_complex(int n, Rng& rng) {
  std::uniform_int_distribution<int> count(1, std::max(1, 2 * n));
  std::uniform_real_distribution<double> density(0.15, 0.75);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int m = count(rng);
  const double p = density(rng);
  std::vector<VertexSet> facets;
  for (int f = 0; f < m; ++f) {
    VertexSet s;
    for (int i = 1; i <= n; ++i) {
      if (coin(rng) < p) s |= VertexSet::singleton(i);
    }
    facets.push_back(s);
  }
  return SimplicialComplex::from_facets(n, facets);
}

Graph random_graph(int n, Rng& rng) {
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double p = density(rng);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

PairSampler::PairSampler(SimplicialComplex complex, SphereKind sphere)
    : complex_(std::move(complex)), sphere_(sphere), faces_(complex_.faces()) {}

VertexSet PairSampler::random_face(Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, faces_.size() - 1);
  return faces_[pick(rng)];
}

PointPair PairSampler::random_pair(Rng& rng) const {
  const VertexSet j = random_face(rng);
  const VertexSet k = random_face(rng);
  return {random_point_on_face(sphere_, complex_.n(), j, rng),
          random_point_on_face(sphere_, complex_.n(), k, rng)};
}

PointPair PairSampler::directed_pair(Rng& rng) const {
  // Prefer maximal faces half the time so extremal strata show up.
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const auto& maximal = complex_.maximal_faces();
  std::uniform_int_distribution<std::size_t> pick_max(0, maximal.size() - 1);
  const VertexSet j = coin(rng) < 0.5 ? maximal[pick_max(rng)] : random_face(rng);
  const VertexSet k = coin(rng) < 0.5 ? maximal[pick_max(rng)] : random_face(rng);

  const int n = complex_.n();
  const SpherePoint e = SpherePoint::basepoint(sphere_);
  std::vector<SpherePoint> x;
  std::vector<SpherePoint> y;
  x.reserve(static_cast<std::size_t>(n));
  y.reserve(static_cast<std::size_t>(n));
  // Per-pair forcing rate and preferred option, so fully forced patterns
  // are not exponentially rare.
  const double rate = coin(rng);
  std::uniform_int_distribution<int> option(0, 3);
  const int preferred = option(rng);
  for (int i = 1; i <= n; ++i) {
    const bool in_j = j.contains(i);
    const bool in_k = k.contains(i);
    SpherePoint xi = in_j ? random_sphere_point(sphere_, rng) : e;
    SpherePoint yi = in_k ? random_sphere_point(sphere_, rng) : e;
    if ((in_j || in_k) && coin(rng) < rate) {
      const int o = coin(rng) < 0.5 ? preferred : option(rng);
      if (in_j && in_k) {
        switch (o) {
          case 0: yi = -xi; break;
          case 1: xi = -e; break;
          case 2: yi = -e; break;
          default: xi = -e; yi = -e; break;
        }
      } else if (in_j) {
        xi = -e;
      } else {
        yi = -e;
      }
    }
    x.push_back(std::move(xi));
    y.push_back(std::move(yi));
  }
  return {ProductPoint(sphere_, std::move(x)), ProductPoint(sphere_, std::move(y))};
}

PointPair PairSampler::pattern_pair(Rng& rng) const {
  const int n = complex_.n();
  const SpherePoint e = SpherePoint::basepoint(sphere_);
  std::vector<SpherePoint> x;
  std::vector<SpherePoint> y;
  x.reserve(static_cast<std::size_t>(n));
  y.reserve(static_cast<std::size_t>(n));
  if (sphere_.parity == Parity::kOdd) {
    // |I| uniform in 0..n, then a uniform I of that size.
    std::uniform_int_distribution<int> size(0, n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const int m = size(rng);
    std::vector<bool> anti(static_cast<std::size_t>(n), false);
    for (int i = 0; i < m; ++i) anti[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = true;
    for (int i = 0; i < n; ++i) {
      SpherePoint xi = random_sphere_point(sphere_, rng);
      SpherePoint yi = anti[static_cast<std::size_t>(i)] ? -xi : random_sphere_point(sphere_, rng);
      x.push_back(std::move(xi));
      y.push_back(std::move(yi));
    }
  } else {
    std::uniform_int_distribution<int> digit(0, 2);
    for (int i = 0; i < n; ++i) {
      switch (digit(rng)) {
        case 0:
          x.push_back(e);
          y.push_back(-e);
          break;
        case 1: {
          SpherePoint xi = random_sphere_point(sphere_, rng);
          y.push_back(-xi);
          x.push_back(std::move(xi));
          break;
        }
        default:
          x.push_back(random_sphere_point(sphere_, rng));
          y.push_back(random_sphere_point(sphere_, rng));
          break;
      }
    }
  }
  return {ProductPoint(sphere_, std::move(x)), ProductPoint(sphere_, std::move(y))};
}

}  // namespace toriplan

#include "toriplan/complex.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "toriplan/error.hpp"

namespace toriplan {

const char* to_string(Parity p) { return p == Parity::kOdd ? "odd" : "even"; }

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGround) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground set size " + std::to_string(n) + " outside 0..63");
  }
}

// Number of l-subsets of [n], saturating at `cap + 1`.
std::uint64_t bounded_binomial(int n, int l, std::uint64_t cap) {
  l = std::min(l, n - l);
  std::uint64_t result = 1;
  for (int i = 1; i <= l; ++i) {
    result = result * static_cast<std::uint64_t>(n - l + i) / static_cast<std::uint64_t>(i);
    if (result > cap) return cap + 1;
  }
  return result;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
  int pivot = 0;
  int best = -1;
  for (int u : (p | x).members()) {
    const int c = (p & g.neighbours(u)).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : (p - g.neighbours(pivot)).members()) {
    const VertexSet nv = g.neighbours(v);
    bron_kerbosch(g, r | VertexSet::singleton(v), p & nv, x & nv, out);
    p = p - VertexSet::singleton(v);
    x |= VertexSet::singleton(v);
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const VertexSet> facets) {
  check_ground(n);
  std::vector<VertexSet> sorted(facets.begin(), facets.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!sorted[i].within(n)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "facet " + std::to_string(i) + " " + sorted[i].to_string() +
                      " not contained in [" + std::to_string(n) + "]");
    }
  }
  // Larger faces first, so a face only needs checking against those kept.
  std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : sorted) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                      [f](VertexSet m) { return f.subset_of(m); });
    if (!absorbed) kept.push_back(f);
  }
  if (kept.empty()) kept.push_back(VertexSet{});
  std::sort(kept.begin(), kept.end());
  return SimplicialComplex(n, std::move(kept));
}

SimplicialComplex SimplicialComplex::skeleton(int n, int l) {
  check_ground(n);
  if (l < 0 || l > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "skeleton dimension " + std::to_string(l) + " outside 0.." + std::to_string(n));
  }
  constexpr std::uint64_t kCap = 10'000'000;
  if (bounded_binomial(n, l, kCap) > kCap) {
    throw Error(ErrorCode::kSizeCap, "skeleton(" + std::to_string(n) + ", " +
                                         std::to_string(l) + ") has too many maximal faces");
  }
  std::vector<VertexSet> faces;
  if (l == 0) {
    faces.push_back(VertexSet{});
  } else {
    // Gosper's hack walks the l-subsets in increasing bit order.
    const std::uint64_t limit = VertexSet::full(n).bits();
    // n <= 63 keeps r = s + c below 2^64.
    std::uint64_t s = (std::uint64_t{1} << l) - 1;
    while ((s & ~limit) == 0) {
      faces.emplace_back(s);
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return SimplicialComplex(n, std::move(faces));
}

bool SimplicialComplex::is_face(VertexSet face) const {
  return std::any_of(maximal_faces_.begin(), maximal_faces_.end(),
                     [face](VertexSet m) { return face.subset_of(m); });
}

std::vector<VertexSet> SimplicialComplex::faces(int max_face_size) const {
  std::unordered_set<VertexSet> seen;
  for (VertexSet m : maximal_faces_) {
    if (m.size() > max_face_size) {
      throw Error(ErrorCode::kSizeCap, "maximal face " + m.to_string() + " has more than " +
                                           std::to_string(max_face_size) + " vertices");
    }
    // All submasks of m, including m and ∅.
    std::uint64_t s = m.bits();
    while (true) {
      seen.insert(VertexSet(s));
      if (s == 0) break;
      s = (s - 1) & m.bits();
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Graph::Graph(int n) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
  check_ground(n);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    const std::string where = "edge " + std::to_string(e) + " (" + std::to_string(u) + "," +
                              std::to_string(v) + ")";
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(ErrorCode::kIndexOutOfRange, where + ": vertex outside 1.." + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, where + ": loop");
    if (g.adjacent(u, v)) throw Error(ErrorCode::kInvalidArgument, where + ": repeated edge");
    g.adjacency_[static_cast<std::size_t>(u - 1)] |= VertexSet::singleton(v);
    g.adjacency_[static_cast<std::size_t>(v - 1)] |= VertexSet::singleton(u);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet row : adjacency_) twice += static_cast<std::size_t>(row.size());
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v : neighbours(u).members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  bron_kerbosch(g, VertexSet{}, VertexSet::full(g.n()), VertexSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex flag_complex(const Graph& g) {
  const auto cliques = maximal_cliques(g);
  return SimplicialComplex::from_facets(g.n(), cliques);
}

int d_invariant(const SimplicialComplex& x) {
  int d = 0;
  for (VertexSet m : x.maximal_faces()) d = std::max(d, m.size());
  return d;
}

ZResult z_invariant(const SimplicialComplex& x) {
  const auto& faces = x.maximal_faces();
  ZResult best{-1, {}};
  for (VertexSet a : faces) {
    for (VertexSet b : faces) {
      const Witness w{a, b - a};
      const int size = w.size();
      if (size > best.z ||
          (size == best.z && std::pair(w.j, w.k) < std::pair(best.witness.j, best.witness.k))) {
        best = {size, w};
      }
    }
  }
  return best;
}

int z_bruteforce(const SimplicialComplex& x) {
  const int n = x.n();
  if (n > 20) {
    throw Error(ErrorCode::kSizeCap,
                "z_bruteforce supports n <= 20, got n = " + std::to_string(n));
  }
  const std::size_t masks = std::size_t{1} << n;
  std::vector<char> is_face(masks, 0);
  for (VertexSet m : x.maximal_faces()) is_face[m.bits()] = 1;
  // Downward closure: a mask is a face if some superset is.
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < masks; ++s) {
      if ((s & bit) != 0 && is_face[s]) is_face[s ^ bit] = 1;
    }
  }
  // largest[s] = max |F| over faces F ⊆ s.
  std::vector<std::uint8_t> largest(masks, 0);
  for (std::size_t s = 0; s < masks; ++s) {
    if (is_face[s]) largest[s] = static_cast<std::uint8_t>(std::popcount(s));
  }
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < masks; ++s) {
      if ((s & bit) != 0) largest[s] = std::max(largest[s], largest[s ^ bit]);
    }
  }
  const std::size_t all = masks - 1;
  int z = 0;
  for (std::size_t j = 0; j < masks; ++j) {
    if (!is_face[j]) continue;
    z = std::max(z, std::popcount(j) + largest[all & ~j]);
  }
  return z;
}

bool union_closed(const SimplicialComplex& x) { return x.maximal_faces().size() == 1; }

TcReport tc(const SimplicialComplex& x, Parity parity, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "sphere parameter k must be >= 1");
  TcReport report;
  report.parity = parity;
  report.k = k;
  report.d = d_invariant(x);
  const ZResult z = z_invariant(x);
  report.z = z.z;
  if (parity == Parity::kOdd) {
    report.tc = z.z + 1;
    report.witness = z.witness;
  } else {
    report.tc = 2 * report.d + 1;
    for (VertexSet m : x.maximal_faces()) {
      if (m.size() == report.d) {
        report.witness = {m, VertexSet{}};
        break;
      }
    }
  }
  return report;
}

SimplicialComplex product(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  const int n = x1.n() + x2.n();
  check_ground(n);
  std::vector<VertexSet> facets;
  facets.reserve(x1.maximal_faces().size() * x2.maximal_faces().size());
  for (VertexSet a : x1.maximal_faces()) {
    for (VertexSet b : x2.maximal_faces()) facets.push_back(a | b.shifted(x1.n()));
  }
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex wedge(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  const int n = x1.n() + x2.n();
  check_ground(n);
  std::vector<VertexSet> facets(x1.maximal_faces());
  for (VertexSet b : x2.maximal_faces()) facets.push_back(b.shifted(x1.n()));
  return SimplicialComplex::from_facets(n, facets);
}

}  // namespace toriplan

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "toriplan/vertex_set.hpp"

namespace toriplan {

/// Sphere parity of the product a complex lives in: odd spheres S^{2k-1}
/// (tori when k = 1) or even spheres S^{2k}.
enum class Parity { kOdd, kEven };

const char* to_string(Parity p);

/// A subcomplex of the standard CW decomposition of a product of n spheres.
/// Cells are indexed by subsets of [n]; the complex is stored by its
/// inclusion-maximal faces, kept sorted by bit value. The empty face is
/// always present, so the empty complex is {∅}.
class SimplicialComplex {
 public:
  /// The point complex on an empty ground set.
  SimplicialComplex() : n_(0), maximal_faces_{VertexSet{}} {}

  /// Reduces `facets` to its inclusion-maximal antichain. Throws
  /// kIndexOutOfRange when a facet leaves [n], kInvalidArgument for n
  /// outside 0..63.
  static SimplicialComplex from_facets(int n, std::span<const VertexSet> facets);
  static SimplicialComplex from_facets(int n, std::initializer_list<VertexSet> facets) {
    return from_facets(n, std::span<const VertexSet>(facets.begin(), facets.size()));
  }
  /// Every l-subset of [n] as a maximal face; l = n gives the full simplex.
  static SimplicialComplex skeleton(int n, int l);
  /// The full simplex on [n], i.e. the whole product of n spheres.
  static SimplicialComplex full(int n) { return skeleton(n, n); }

  int n() const { return n_; }
  const std::vector<VertexSet>& maximal_faces() const { return maximal_faces_; }

  /// True iff `face` is contained in some maximal face.
  bool is_face(VertexSet face) const;

  /// All faces, including ∅. Throws kSizeCap when a maximal face has more
  /// than `max_face_size` vertices.
  std::vector<VertexSet> faces(int max_face_size = 24) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(int n, std::vector<VertexSet> maximal)
      : n_(n), maximal_faces_(std::move(maximal)) {}

  int n_;
  std::vector<VertexSet> maximal_faces_;
};

/// Simple graph on vertices 1..n with adjacency stored as bit rows.
class Graph {
 public:
  explicit Graph(int n = 0);

  /// Throws kInvalidArgument on loops or repeated edges, kIndexOutOfRange
  /// on vertices outside 1..n.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int n() const { return n_; }
  VertexSet neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
  bool adjacent(int u, int v) const { return neighbours(u).contains(v); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_;
  std::vector<VertexSet> adjacency_;
};

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted by bits.
/// A graph with no vertices has the single clique ∅.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// The flag complex: faces are the cliques of `g`.
SimplicialComplex flag_complex(const Graph& g);

/// A disjoint pair of faces (J, K) realizing z.
struct Witness {
  VertexSet j;
  VertexSet k;
  int size() const { return j.size() + k.size(); }
  bool operator==(const Witness&) const = default;
};

struct ZResult {
  int z = 0;
  Witness witness;
};

/// Largest face cardinality.
int d_invariant(const SimplicialComplex& x);

/// z(X) = max |J| + |K| over disjoint faces J, K, found as the largest
/// union of two (possibly equal) maximal faces M1, M2: (M1, M2 \ M1) is
/// then a disjoint realization. Ties go to the smallest (J, K) by bits.
ZResult z_invariant(const SimplicialComplex& x);

/// Exhaustive z over all ordered pairs of disjoint faces, via a subset
/// dynamic program over 2^n masks. Throws kSizeCap for n > 20.
int z_bruteforce(const SimplicialComplex& x);

/// True iff the union of any two faces is a face, i.e. X has one maximal face.
bool union_closed(const SimplicialComplex& x);

struct TcReport {
  int tc = 0;
  int z = 0;
  int d = 0;
  Witness witness;
  Parity parity = Parity::kOdd;
  int k = 1;
};

/// Odd parity: tc = z(X) + 1 with the z witness. Even parity: tc = 2 d(X) + 1
/// with witness (maximum face, ∅).
TcReport tc(const SimplicialComplex& x, Parity parity, int k = 1);

/// Faces are J1 ⊔ (J2 shifted by n1).
SimplicialComplex product(const SimplicialComplex& x1, const SimplicialComplex& x2);
/// Faces of X1 plus shifted faces of X2, glued at the basepoint cell ∅.
SimplicialComplex wedge(const SimplicialComplex& x1, const SimplicialComplex& x2);

}  // namespace toriplan

#pragma once

#include <string>
#include <vector>

#include "toriplan/algebra.hpp"
#include "toriplan/complex.hpp"

namespace toriplan {

/// A tc value computed twice: by closed formula and from a combinatorial
/// model complex through tc(). `agree` records whether they match.
struct TcAnswer {
  int tc = 0;
  int formula = 0;
  int model_tc = 0;
  bool agree = false;
  SimplicialComplex model;
  Witness witness;
  Parity parity = Parity::kOdd;
  int k = 1;
  std::string citation;
};

/// tc of the toric complex of a right-angled Artin group: z(Γ) + 1, with
/// z(Γ) the most vertices covered by two cliques. Independent of k.
TcAnswer raag_tc(const Graph& g, int k = 1);

/// Complement of n affine hyperplanes in general position in C^l:
/// min(n + 1, 2l + 1), modelled by the l-skeleton of the n-torus.
TcAnswer general_position_tc(int n, int l);

/// Generic central arrangement of n hyperplanes in C^l: min(n + 1, 2l),
/// modelled by skeleton(n - 1, l - 1) × S^1. Throws kInvalidArgument if n < l.
TcAnswer generic_central_tc(int n, int l);

/// Redundant subspace arrangement in (C^l)^k: same model and value as the
/// general-position case, for every k.
TcAnswer redundant_tc(int n, int l, int k);

/// max(tc X1, tc X2, cat X1 + cat X2 - 1) with cat = d + 1, checked
/// against tc of the wedge.
TcAnswer wedge_tc(const SimplicialComplex& x1, const SimplicialComplex& x2);

/// tc of a complex read from a file, no closed formula.
TcAnswer complex_tc(const SimplicialComplex& x, Parity parity, int k = 1);

/// The affine hyperplane {y : normal · y = offset} in C^l.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;
};

class ArrangementSpec {
 public:
  /// Throws kInvalidArgument on a zero normal, a normal of the wrong
  /// dimension, or two proportional functionals.
  ArrangementSpec(int ell, std::vector<Hyperplane> hyperplanes);

  int ell() const { return ell_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }

  /// "y1", "y2 - 1", "y1 - y2", ...
  std::string functional_string(std::size_t index) const;

 private:
  int ell_;
  std::vector<Hyperplane> hyperplanes_;
};

/// Hyperplanes of y_1 (y_n - 1) ∏ (y_i - y_{i+1}) in C^n, in that order.
ArrangementSpec open_string_arrangement(int n);

/// n + 2, via general_position_tc(n + 1, n).
TcAnswer open_string_tc(int n);

/// Every m <= l hyperplanes have independent normals and every l + 1 have
/// empty intersection, by exact rank computations. Throws kSizeCap when
/// more than 10^6 subsets would be inspected.
bool check_general_position(const ArrangementSpec& a);

/// Rank of a rational matrix given by rows.
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace toriplan

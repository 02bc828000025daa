#include "toriplan/applications.hpp"

#include <algorithm>
#include <functional>

#include "toriplan/error.hpp"

namespace toriplan {

namespace {

TcAnswer from_model(SimplicialComplex model, int formula, Parity parity, int k,
                    std::string citation) {
  const TcReport r = tc(model, parity, k);
  TcAnswer a;
  a.tc = formula;
  a.formula = formula;
  a.model_tc = r.tc;
  a.agree = r.tc == formula;
  a.model = std::move(model);
  a.witness = r.witness;
  a.parity = parity;
  a.k = k;
  a.citation = std::move(citation);
  return a;
}

void require_positive(int v, const char* name) {
  if (v < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must be >= 1, got " + std::to_string(v));
  }
}

SimplicialComplex skeleton_model(int n, int l) {
  return SimplicialComplex::skeleton(n, std::min(n, l));
}

bool proportional(const Hyperplane& a, const Hyperplane& b) {
  std::vector<Rational> u = a.normal;
  std::vector<Rational> v = b.normal;
  u.push_back(a.offset);
  v.push_back(b.offset);
  // Scale from the first nonzero entry of u, then compare.
  std::size_t p = 0;
  while (u[p] == 0) ++p;
  if (v[p] == 0) return false;
  const Rational s = v[p] / u[p];
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] * s != v[i]) return false;
  }
  return true;
}

std::string coefficient_prefix(const Rational& c, bool first) {
  std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  const Rational m = c < 0 ? Rational(-c) : c;
  if (m == 1) return sign;
  return sign + (boost::multiprecision::denominator(m) == 1 ? boost::multiprecision::numerator(m).str()
                                                          : "(" + to_string(m) + ")") + "*";
}

}  // namespace

TcAnswer raag_tc(const Graph& g, int k) {
  require_positive(k, "k");
  // z(Γ) straight from the cliques, independent of the complex-core search.
  const auto cliques = maximal_cliques(g);
  int z = 0;
  for (VertexSet a : cliques) {
    for (VertexSet b : cliques) z = std::max(z, (a | b).size());
  }
  return from_model(flag_complex(g), z + 1, Parity::kOdd, k, "raag: tc = z(graph) + 1");
}

TcAnswer general_position_tc(int n, int l) {
  require_positive(n, "n");
  require_positive(l, "l");
  return from_model(skeleton_model(n, l), std::min(n + 1, 2 * l + 1), Parity::kOdd, 1,
                    "general-position: tc = min(n+1, 2l+1)");
}

TcAnswer generic_central_tc(int n, int l) {
  require_positive(l, "l");
  if (n < l) {
    throw Error(ErrorCode::kInvalidArgument,
                "a generic central arrangement in C^" + std::to_string(l) + " needs n >= l, got n = " +
                    std::to_string(n));
  }
  SimplicialComplex model =
      product(SimplicialComplex::skeleton(n - 1, l - 1), SimplicialComplex::full(1));
  return from_model(std::move(model), std::min(n + 1, 2 * l), Parity::kOdd, 1,
                    "generic-central: tc = min(n+1, 2l)");
}

TcAnswer redundant_tc(int n, int l, int k) {
  require_positive(n, "n");
  require_positive(l, "l");
  require_positive(k, "k");
  return from_model(skeleton_model(n, l), std::min(n + 1, 2 * l + 1), Parity::kOdd, k,
                    "redundant: tc = min(n+1, 2l+1) for every k");
}

TcAnswer wedge_tc(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  const int tc1 = tc(x1, Parity::kOdd).tc;
  const int tc2 = tc(x2, Parity::kOdd).tc;
  const int cat_sum = d_invariant(x1) + 1 + d_invariant(x2) + 1;
  return from_model(wedge(x1, x2), std::max({tc1, tc2, cat_sum - 1}), Parity::kOdd, 1,
                    "wedge: tc = max(tc1, tc2, cat1 + cat2 - 1)");
}

TcAnswer complex_tc(const SimplicialComplex& x, Parity parity, int k) {
  require_positive(k, "k");
  const TcReport r = tc(x, parity, k);
  return from_model(x, r.tc, parity, k,
                    parity == Parity::kOdd ? "odd spheres: tc = z + 1" : "even spheres: tc = 2d + 1");
}

ArrangementSpec::ArrangementSpec(int ell, std::vector<Hyperplane> hyperplanes)
    : ell_(ell), hyperplanes_(std::move(hyperplanes)) {
  require_positive(ell, "ambient dimension");
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    const auto& h = hyperplanes_[i];
    if (h.normal.size() != static_cast<std::size_t>(ell)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "hyperplane " + std::to_string(i + 1) + " has " +
                      std::to_string(h.normal.size()) + " coefficients, expected " +
                      std::to_string(ell));
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c == 0; })) {
      throw Error(ErrorCode::kInvalidArgument,
                  "hyperplane " + std::to_string(i + 1) + " has a zero normal");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(hyperplanes_[j], h)) {
        throw Error(ErrorCode::kInvalidArgument, "hyperplanes " + std::to_string(j + 1) + " and " +
                                                     std::to_string(i + 1) + " coincide");
      }
    }
  }
}

std::string ArrangementSpec::functional_string(std::size_t index) const {
  const Hyperplane& h = hyperplanes_.at(index);
  std::string out;
  for (std::size_t i = 0; i < h.normal.size(); ++i) {
    if (h.normal[i] == 0) continue;
    out += coefficient_prefix(h.normal[i], out.empty()) + "y" + std::to_string(i + 1);
  }
  if (h.offset != 0) {
    const Rational c = -h.offset;
    const Rational m = c < 0 ? Rational(-c) : c;
    out += (c < 0 ? " - " : " + ") + (boost::multiprecision::denominator(m) == 1
                                          ? boost::multiprecision::numerator(m).str()
                                          : to_string(m));
  }
  return out;
}

ArrangementSpec open_string_arrangement(int n) {
  require_positive(n, "n");
  const auto unit = [n](int i) {
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
  };
  std::vector<Hyperplane> hs;
  hs.push_back({unit(1), 0});
  hs.push_back({unit(n), 1});
  for (int i = 1; i < n; ++i) {
    std::vector<Rational> v = unit(i);
    v[static_cast<std::size_t>(i)] = -1;
    hs.push_back({std::move(v), 0});
  }
  return ArrangementSpec(n, std::move(hs));
}

TcAnswer open_string_tc(int n) {
  require_positive(n, "n");
  TcAnswer a = general_position_tc(n + 1, n);
  a.citation = "open-string: tc = n + 2";
  return a;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

bool check_general_position(const ArrangementSpec& a) {
  const std::size_t count = a.size();
  const auto ell = static_cast<std::size_t>(a.ell());
  const std::size_t top = std::min(count, ell + 1);

  // Budget check on sum_{m <= top} C(count, m).
  double subsets = 0.0;
  double binom = 1.0;
  for (std::size_t m = 1; m <= top; ++m) {
    binom = binom * static_cast<double>(count - m + 1) / static_cast<double>(m);
    subsets += binom;
  }
  if (subsets > 1e6) {
    throw Error(ErrorCode::kSizeCap, "general position check limited to 10^6 subsets");
  }

  std::vector<std::size_t> chosen;
  const std::function<bool(std::size_t)> visit = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      std::vector<std::vector<Rational>> normals;
      std::vector<std::vector<Rational>> augmented;
      for (std::size_t i : chosen) {
        const Hyperplane& h = a.hyperplanes()[i];
        normals.push_back(h.normal);
        augmented.push_back(h.normal);
        augmented.back().push_back(h.offset);
      }
      const int rank = rational_rank(normals);
      if (chosen.size() <= ell) {
        if (rank != static_cast<int>(chosen.size())) return false;
      } else if (rational_rank(augmented) == rank) {
        return false;  // l + 1 hyperplanes with a common point
      }
    }
    if (chosen.size() == top) return true;
    for (std::size_t i = start; i < count; ++i) {
      chosen.push_back(i);
      const bool ok = visit(i + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return visit(0);
}

}  // namespace toriplan

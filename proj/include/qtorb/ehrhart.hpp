#pragma once

// Lattice simplices inside Δ_F = { Σ a_i λ_i : a_i >= 0, Σ a_i = 1 } and
// their dilate counts l(kΔ).

#include <vector>

#include "qtorb/exact.hpp"
#include "qtorb/intlat.hpp"
#include "qtorb/model.hpp"

namespace qtorb {

struct LatticeSimplex {
  FacetSet ambient_face;   ///< F with Δ_F containing the simplex
  int ambient_codim = 0;   ///< codim of F in P
  std::vector<IntVec> verts;
  std::vector<RatVec> coords;  ///< each vertex over λ_F: nonnegative, summing to 1
  /// Optional vertex labels (facet indices), parallel to verts.
  std::vector<int> tags;

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  /// Codimension inside Δ_F.
  int codim() const { return (ambient_codim - 1) - dim(); }
};

/// Builds a simplex inside Δ_F from lattice points, computing their
/// coordinates over λ_F. Throws Error when a point lies outside Δ_F or the
/// points are linearly dependent.
LatticeSimplex make_simplex(const Model& model, const FacetSet& ambient_face,
                            std::vector<IntVec> verts, std::vector<int> tags = {});

/// Δ_F itself, vertices λ_F in facet order. Throws Error for F = P.
LatticeSimplex delta_of_face(const Face& face, const Model& model);

/// l(kΔ) by exhaustive search over the bounding box of k·verts.
Int dilate_count(const LatticeSimplex& sx, int k);

/// l(kΔ) = Σ_g C(k - age(g) + d - 1, d - 1) over Box elements of the cone over
/// the simplex. Throws NonIntegralAge when the cone has a non-integral age.
Int dilate_count_fast(const LatticeSimplex& sx, int k);

/// ψ_0 ... ψ_{d-1} from the first d dilates (d = vertex count): the series
/// Σ l(kΔ) t^k times (1 - t)^d, truncated. Throws Error on a negative
/// coefficient.
std::vector<Int> numerator_from_dilates(const std::vector<Int>& dilates, int d);

/// Ehrhart numerator using the exhaustive counter. Throws NonIntegralAge when
/// the cone is not quasi-SL.
std::vector<Int> ehrhart_numerator(const LatticeSimplex& sx);

}  // namespace qtorb

#pragma once

// Local groups G_F realized as Box elements of the cone over λ_F, their ages
// and heights, and the age generating polynomials W and W̃.

#include <span>
#include <string>
#include <vector>

#include "qtorb/exact.hpp"
#include "qtorb/intlat.hpp"
#include "qtorb/model.hpp"

namespace qtorb {

/// g = Σ a_j λ_j with every a_j in [0, 1); this representation is unique.
struct BoxElement {
  FacetSet face;   ///< facets whose vectors generate the cone (empty for P)
  RatVec coeffs;   ///< a_j, one per generator
  IntVec point;    ///< g as a lattice vector
  Rat age;         ///< Σ a_j
  int height = 0;  ///< number of nonzero a_j, equal to rank(g - I)

  bool is_identity() const { return height == 0; }
  bool is_interior() const { return height == static_cast<int>(coeffs.size()); }
};

/// Thrown when a W polynomial is requested for a cone with a non-integral age.
class NonIntegralAge : public Error {
 public:
  using Error::Error;
};

/// |G| for the cone over independent lattice vectors `gens` in Z^ambient.
Int cone_group_order(std::span<const IntVec> gens, int ambient);

/// Box elements of the cone over independent vectors, sorted
/// lexicographically by coefficients (identity first). `face` is copied into
/// every element as a label.
std::vector<BoxElement> enumerate_cone_box(std::span<const IntVec> gens, int ambient,
                                           const FacetSet& face = {});

/// Σ s^age over the elements; throws NonIntegralAge naming `context`.
Poly age_polynomial(std::span<const BoxElement> elements, const std::string& context);

/// W of the cone over arbitrary independent lattice vectors.
Poly cone_w_polynomial(std::span<const IntVec> gens, int ambient);

Int local_group_order(const Face& face, const Model& model);
std::vector<BoxElement> enumerate_box(const Face& face, const Model& model);
/// Elements with every coefficient in (0, 1). For F = P, the identity alone.
std::vector<BoxElement> box_interior(const Face& face, const Model& model);
std::vector<BoxElement> interior_of(std::span<const BoxElement> box, const Face& face);

Poly w_polynomial(const Face& face, const Model& model);
/// Restriction of W to height = codim(F); 1 for F = P.
Poly w_tilde_polynomial(const Face& face, const Model& model);
Poly w_polynomial(std::span<const BoxElement> box, const Face& face);
Poly w_tilde_polynomial(std::span<const BoxElement> box, const Face& face);

struct QuasiSlReport {
  bool quasi_sl = true;
  /// Box elements of vertex cones with non-integral age.
  std::vector<BoxElement> witnesses;
};

/// Integral age at every vertex suffices, since G_v is the disjoint union of
/// G_F° over the faces F containing v.
QuasiSlReport is_quasi_sl(const Model& model);

struct Sector {
  Face face;
  BoxElement element;
  bool untwisted() const { return face.is_polytope(); }
};

/// Untwisted sector (P, 0) followed by every (F, g), g ∈ Box_F° nontrivial,
/// in canonical face order.
std::vector<Sector> sectors(const Model& model);

struct PartitionCheck {
  FacetSet vertex;
  bool pass = false;
  std::string detail;
};

/// Box_v = ⊔_{F ∋ v} Box_F° for every vertex, compared as lattice points.
std::vector<PartitionCheck> check_box_partition(const Model& model);

}  // namespace qtorb

#pragma once

// Combinatorial blowups: truncating a face F of P and assigning the new facet
// the vector λ_0 = Σ b_j λ_j (b_j > 0), together with the subdivisions of
// Δ_F and of Δ_F' (F' ≤ F) that a crepant blowup induces.

#include <string>
#include <vector>

#include "qtorb/cohomology.hpp"
#include "qtorb/ehrhart.hpp"
#include "qtorb/model.hpp"

namespace qtorb {

class BlowupError : public Error {
 public:
  using Error::Error;
};

struct BlowupSpec {
  FacetSet face;     ///< S, the facets whose intersection is blown up
  RatVec weights;    ///< b_j, parallel to face
};

/// Sorts face indices, permuting weights alongside.
BlowupSpec normalized(BlowupSpec spec);

/// λ_0 = Σ b_j λ_j after checking the spec against the model. Throws
/// BlowupError when a weight is not positive, S is not a face of codim >= 2,
/// λ_0 is not integral or not primitive, or λ_0 = ±λ_j for some j ∈ S.
IntVec blowup_vector(const Model& model, const BlowupSpec& spec);

/// The truncated model: facet m gets λ_0, every vertex v with S ⊆ I(v) is
/// replaced by the |S| vertices {m} ∪ I(v) \ {j}. Throws BlowupError when the
/// result fails validation.
Model blow_up(const Model& model, const BlowupSpec& spec);

/// Σ b_j = 1.
bool is_crepant(const BlowupSpec& spec);

/// Every crepant spec of the model: one per age-1 element of Box_F°,
/// codim F >= 2, with weights equal to its coefficients.
std::vector<BlowupSpec> crepant_specs(const Model& model);

struct Subdivision {
  FacetSet ambient_face;
  /// All simplices, vertices tagged by facet index (λ_0 carries tag m), sorted
  /// by (vertex count, tags).
  std::vector<LatticeSimplex> simplices;
  /// Simplices meeting the relative interior of Δ_F.
  std::vector<LatticeSimplex> interior_simplices;
};

/// Star subdivision of Δ_F at λ_0. Requires λ_0 = Σ b_j λ_j over λ_F with all
/// b_j > 0 and Σ b_j = 1; throws Error otherwise.
Subdivision star_subdivide(const Face& face, const IntVec& lambda0, const Model& model);

/// Subdivision of Δ_F' for F' ≤ F with simplices θ ∪ β, θ ∈ τ_F ∪ {∅} and
/// β ⊆ λ_F' \ λ_F. Throws Error when F' is not a subface of F.
Subdivision induced_triangulation(const Face& subface, const Subdivision& tau, const Model& model);

/// Violations of the triangulation axioms: closure under faces, normalized
/// volumes summing to that of Δ_F, no maximal simplex containing another's
/// barycenter in its interior. Empty when valid.
std::vector<std::string> subdivision_problems(const Subdivision& sub);

struct WdeltaCheck {
  FacetSet face;
  bool pass = false;
  Poly lhs;  ///< W(Δ_F)
  Poly rhs;  ///< Σ_θ (s - 1)^codim θ W(θ) over interior simplices
  std::size_t interior_count = 0;
  /// Triangulation axiom violations, or a non-integral age met on either side.
  std::vector<std::string> subdivision_problems;
};

WdeltaCheck check_wdelta(const Face& face, const Subdivision& sub, const Model& model);

struct McKayReport {
  BlowupSpec spec;
  IntVec lambda0;
  Model blown_up;
  bool quasi_sl_after = false;
  CrReport before;
  CrReport after;  ///< empty when the blowup is not quasi-SL
  bool pp_cr_equal = false;
  std::vector<WdeltaCheck> wdelta;
  /// Positivity of the omniorientation under the increasing-facet-order
  /// convention. Informational; not part of the verdict.
  bool positive_before = false;
  bool positive_after = false;
  bool verdict = false;
};

/// Blows up, re-checks quasi-SL, compares PP_CR of both sides by all routes,
/// and checks the subdivision identity on Δ_F' for every F' ≤ F. Throws
/// BlowupError for a non-crepant or invalid spec and NotQuasiSl when the input
/// is not quasi-SL.
McKayReport mckay_check(const Model& model, const BlowupSpec& spec);

}  // namespace qtorb

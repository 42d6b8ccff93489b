#pragma once

// Poincaré polynomials of faces and Chen-Ruan Poincaré polynomials, assembled
// three ways, plus the stratification identities relating them. All
// polynomials are in s = v^2.

#include <string>
#include <vector>

#include "qtorb/exact.hpp"
#include "qtorb/model.hpp"
#include "qtorb/sectors.hpp"

namespace qtorb {

class NotQuasiSl : public Error {
 public:
  using Error::Error;
};

/// Faces of a model together with their Box elements, in canonical face order.
struct FaceTable {
  std::vector<Face> faces;
  std::vector<std::vector<BoxElement>> boxes;
};

FaceTable build_face_table(const Model& model);

/// Σ h_i(F) s^i.
Poly pp_ordinary(const Face& face, const Model& model);
Poly pp_ordinary(const Face& face, const std::vector<Face>& all_faces);

/// E-polynomial of a k-dimensional complex torus, (s - 1)^k.
Poly e_torus(int k);

/// Throws NotQuasiSl with a witness unless every vertex age is integral.
void require_quasi_sl(const Model& model);

/// Σ_F Σ_{g ∈ Box_F°} s^age(g) PP(F).
Poly pp_cr_direct(const Model& model);
/// Σ_F PP(F) W̃(F).
Poly pp_cr_via_closures(const Model& model);
/// Σ_F (s - 1)^dim F W(F).
Poly pp_cr_via_strata(const Model& model);

struct IdentityCheck {
  std::string name;
  FacetSet face;  ///< the face checked, when the identity is per face
  bool pass = false;
  Poly lhs;
  Poly rhs;
};

/// W(F) = Σ_{H ⊇ F} W̃(H) for every face F.
std::vector<IdentityCheck> check_morestrat(const Model& model);
/// PP(P) = Σ_F (s - 1)^dim F.
IdentityCheck check_h_identity(const Model& model);

struct SectorContribution {
  Face face;
  Rat age;
  Poly contribution;  ///< s^age PP(F)
};

struct CrReport {
  Poly pp;
  Poly pp_cr_direct;
  Poly pp_cr_closures;
  Poly pp_cr_strata;
  std::vector<SectorContribution> per_sector;
  std::vector<IdentityCheck> identities;

  bool routes_agree() const;
  /// All checks whose name matches, true when none exist.
  bool identity_passes(const std::string& name) const;
  bool all_identities_pass() const;
};

/// Everything above in one pass over the face table. Throws NotQuasiSl.
CrReport cr_report(const Model& model);

}  // namespace qtorb

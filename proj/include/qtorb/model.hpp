#pragma once

// Combinatorial model (P, Λ) of a quasitoric orbifold: a simple polytope given
// by its vertex-facet incidence together with one primitive characteristic
// vector per facet.

#include <string>
#include <string_view>
#include <vector>

#include "qtorb/exact.hpp"
#include "qtorb/intlat.hpp"

namespace qtorb {

/// Sorted set of 0-based facet indices.
using FacetSet = std::vector<int>;

struct Model {
  int n = 0;  ///< dimension of P (rank of N)
  int m = 0;  ///< number of facets
  std::vector<FacetSet> vertices;  ///< each vertex as the n facets containing it
  std::vector<IntVec> lambda;      ///< characteristic vector of each facet
  std::string name;
};

/// A face F, identified with I(F), the set of facets containing it.
/// The empty set stands for P itself.
struct Face {
  FacetSet facets;
  int codim = 0;
  int dim = 0;
  std::vector<int> vertex_ids;  ///< vertices v with facets ⊆ I(v)

  bool is_polytope() const { return facets.empty(); }
};

/// Raised when a model violates one or more structural invariants. what()
/// joins every violation; violations() lists them individually.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Every violated invariant of the model, empty when valid.
std::vector<std::string> validation_problems(const Model& model);
/// Throws ValidationError unless validation_problems() is empty.
void validate(const Model& model);

/// Parses and validates the model JSON schema
/// {"name"?, "n", "m", "vertices": [[int]], "lambda": [[int]]}.
/// Integers may be JSON numbers or decimal strings.
Model parse_model(std::string_view text);

/// Canonical JSON text of the model (sorted keys, no whitespace).
std::string model_to_json_text(const Model& model);

/// All faces sorted by (codim, facet set). Includes P and every vertex.
std::vector<Face> faces(const Model& model);

/// Looks up a face by its facet set; throws Error when the set is not a face.
Face face_of(const Model& model, FacetSet facets);

/// f_0 ... f_d of the sub-polytope F (d = dim F).
std::vector<Int> f_vector(const Face& face, const Model& model);
std::vector<Int> f_vector(const Face& face, const std::vector<Face>& all_faces);

/// h_0 ... h_d of the sub-polytope F.
std::vector<Int> h_vector(const Face& face, const Model& model);
std::vector<Int> h_vector(const Face& face, const std::vector<Face>& all_faces);

/// Λ_(v): columns λ_i for i ∈ I(v) in increasing facet order.
IntMat vertex_matrix(const Model& model, int vertex);
/// Sign of det Λ_(v) under the increasing-facet-order convention.
int vertex_sign(const Model& model, int vertex);
/// All vertex signs positive under the increasing-facet-order convention.
bool positively_omnioriented(const Model& model);

/// The characteristic vectors λ_F of a face, in facet order.
std::vector<IntVec> characteristic_set(const Model& model, const FacetSet& facets);

/// λ_i -> U λ_i for every facet. U must be square of size n.
Model apply_basis_change(const Model& model, const IntMat& u);
/// Renames facet i to perm[i]; perm must be a permutation of 0..m-1.
Model relabel_facets(const Model& model, const std::vector<int>& perm);

}  // namespace qtorb

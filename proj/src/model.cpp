#include "qtorb/model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qtorb/json_io.hpp"

namespace qtorb {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string set_str(const FacetSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

bool face_less(const FacetSet& a, const FacetSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("invalid model: " + join(violations, "; ")), violations_(std::move(violations)) {}

std::vector<std::string> validation_problems(const Model& model) {
  std::vector<std::string> problems;
  if (model.n < 1) problems.push_back("dimension n must be at least 1");
  if (model.m < 1) problems.push_back("facet count m must be at least 1");
  if (static_cast<int>(model.lambda.size()) != model.m) {
    problems.push_back("lambda has " + std::to_string(model.lambda.size()) +
                       " vectors but m = " + std::to_string(model.m));
  }
  bool lambda_ok = true;
  for (std::size_t i = 0; i < model.lambda.size(); ++i) {
    const IntVec& v = model.lambda[i];
    if (static_cast<int>(v.size()) != model.n) {
      problems.push_back("lambda[" + std::to_string(i) + "] has length " +
                         std::to_string(v.size()) + ", expected " + std::to_string(model.n));
      lambda_ok = false;
      continue;
    }
    if (gcd_of(v) == 0) {
      problems.push_back("lambda[" + std::to_string(i) + "] is the zero vector");
      lambda_ok = false;
    } else if (!is_primitive(v)) {
      problems.push_back("lambda[" + std::to_string(i) + "] is not primitive (gcd " +
                         gcd_of(v).get_str() + ")");
    }
  }

  bool vertices_ok = true;
  std::vector<bool> seen(static_cast<std::size_t>(std::max(model.m, 0)), false);
  std::set<FacetSet> distinct;
  for (std::size_t k = 0; k < model.vertices.size(); ++k) {
    FacetSet s = model.vertices[k];
    std::sort(s.begin(), s.end());
    std::string label = "vertex " + std::to_string(k) + " " + set_str(model.vertices[k]);
    bool ok = true;
    if (static_cast<int>(s.size()) != model.n) {
      problems.push_back(label + " has " + std::to_string(s.size()) + " facets, expected " +
                         std::to_string(model.n) + " (polytope not simple)");
      ok = false;
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      problems.push_back(label + " repeats a facet index");
      ok = false;
    }
    for (int f : s) {
      if (f < 0 || f >= model.m) {
        problems.push_back(label + " references facet " + std::to_string(f) + " outside [0, " +
                           std::to_string(model.m) + ")");
        ok = false;
      } else {
        seen[static_cast<std::size_t>(f)] = true;
      }
    }
    if (!distinct.insert(s).second) {
      problems.push_back(label + " duplicates an earlier vertex");
      ok = false;
    }
    vertices_ok = vertices_ok && ok;
  }
  if (model.vertices.empty()) problems.push_back("model has no vertices");
  for (int f = 0; f < model.m; ++f) {
    if (!seen[static_cast<std::size_t>(f)]) {
      problems.push_back("facet " + std::to_string(f) + " contains no vertex");
    }
  }

  // Independence at every vertex implies independence at every face.
  if (vertices_ok && lambda_ok && static_cast<int>(model.lambda.size()) == model.m) {
    for (std::size_t k = 0; k < model.vertices.size(); ++k) {
      if (det(vertex_matrix(model, static_cast<int>(k))) == 0) {
        FacetSet s = model.vertices[k];
        std::sort(s.begin(), s.end());
        problems.push_back("characteristic vectors dependent at vertex " + set_str(s));
      }
    }
  }
  return problems;
}

void validate(const Model& model) {
  auto problems = validation_problems(model);
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

Model parse_model(std::string_view text) {
  using json_io::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("malformed JSON: ") + e.what()});
  }
  if (!j.is_object()) throw ValidationError({"model JSON must be an object"});

  std::vector<std::string> problems;
  Model model;
  auto read_small = [&](const char* key, int& out) {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing field '") + key + "'");
      return;
    }
    try {
      Int v = json_io::decode_int(j.at(key));
      if (!v.fits_sint_p()) throw Error("out of range");
      out = static_cast<int>(v.get_si());
    } catch (const Error& e) {
      problems.push_back(std::string("field '") + key + "': " + e.what());
    }
  };
  read_small("n", model.n);
  read_small("m", model.m);
  if (j.contains("name")) {
    if (j["name"].is_string()) {
      model.name = j["name"].get<std::string>();
    } else if (!j["name"].is_null()) {
      problems.push_back("field 'name' must be a string");
    }
  }

  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    problems.push_back("field 'vertices' must be an array of facet-index arrays");
  } else {
    for (const auto& v : j["vertices"]) {
      FacetSet s;
      if (!v.is_array()) {
        problems.push_back("vertex entry " + v.dump() + " is not an array");
        continue;
      }
      for (const auto& f : v) {
        if (!f.is_number_integer()) {
          problems.push_back("vertex entry " + v.dump() + " has a non-integer facet index");
          s.clear();
          break;
        }
        s.push_back(f.get<int>());
      }
      std::sort(s.begin(), s.end());
      model.vertices.push_back(std::move(s));
    }
  }

  if (!j.contains("lambda") || !j["lambda"].is_array()) {
    problems.push_back("field 'lambda' must be an array of integer vectors");
  } else {
    for (const auto& v : j["lambda"]) {
      IntVec vec;
      if (!v.is_array()) {
        problems.push_back("lambda entry " + v.dump() + " is not an array");
        model.lambda.emplace_back();
        continue;
      }
      try {
        for (const auto& x : v) vec.push_back(json_io::decode_int(x));
      } catch (const Error& e) {
        problems.push_back("lambda entry " + v.dump() + ": " + e.what());
      }
      model.lambda.push_back(std::move(vec));
    }
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  validate(model);
  return model;
}

std::string model_to_json_text(const Model& model) {
  using json_io::json;
  json j;
  if (!model.name.empty()) j["name"] = model.name;
  j["n"] = model.n;
  j["m"] = model.m;
  json verts = json::array();
  for (const auto& v : model.vertices) verts.push_back(json_io::encode(v));
  j["vertices"] = verts;
  json lam = json::array();
  for (const auto& v : model.lambda) lam.push_back(json_io::encode(v));
  j["lambda"] = lam;
  return j.dump();
}

std::vector<Face> faces(const Model& model) {
  std::map<FacetSet, std::vector<int>, decltype(&face_less)> found(&face_less);
  for (std::size_t k = 0; k < model.vertices.size(); ++k) {
    const FacetSet& v = model.vertices[k];
    const std::size_t count = v.size();
    for (unsigned long mask = 0; mask < (1UL << count); ++mask) {
      FacetSet s;
      for (std::size_t b = 0; b < count; ++b)
        if (mask & (1UL << b)) s.push_back(v[b]);
      found[s].push_back(static_cast<int>(k));
    }
  }
  std::vector<Face> out;
  out.reserve(found.size());
  for (auto& [facets, verts] : found) {
    Face f;
    f.facets = facets;
    f.codim = static_cast<int>(facets.size());
    f.dim = model.n - f.codim;
    f.vertex_ids = verts;
    out.push_back(std::move(f));
  }
  return out;
}

Face face_of(const Model& model, FacetSet facets) {
  std::sort(facets.begin(), facets.end());
  Face f;
  f.facets = facets;
  f.codim = static_cast<int>(facets.size());
  f.dim = model.n - f.codim;
  for (std::size_t k = 0; k < model.vertices.size(); ++k) {
    const FacetSet& v = model.vertices[k];
    if (std::includes(v.begin(), v.end(), facets.begin(), facets.end())) {
      f.vertex_ids.push_back(static_cast<int>(k));
    }
  }
  if (f.vertex_ids.empty()) throw Error("facet set " + set_str(facets) + " is not a face");
  return f;
}

std::vector<Int> f_vector(const Face& face, const std::vector<Face>& all_faces) {
  std::vector<Int> f(static_cast<std::size_t>(face.dim) + 1);
  for (const Face& h : all_faces) {
    if (!std::includes(h.facets.begin(), h.facets.end(), face.facets.begin(), face.facets.end()))
      continue;
    f[static_cast<std::size_t>(h.dim)] += 1;
  }
  return f;
}

std::vector<Int> f_vector(const Face& face, const Model& model) {
  return f_vector(face, faces(model));
}

std::vector<Int> h_vector(const Face& face, const std::vector<Face>& all_faces) {
  const int d = face.dim;
  std::vector<Int> f = f_vector(face, all_faces);
  // Σ_{i=0}^{d} g_i (t-1)^{d-i}, where g_i counts faces of codimension i.
  Poly sum;
  const Poly t_minus_1{-1, 1};
  for (int i = 0; i <= d; ++i) {
    Int fi = f[static_cast<std::size_t>(d - i)];
    sum += Poly::constant(fi) * pow(t_minus_1, static_cast<unsigned>(d - i));
  }
  std::vector<Int> h(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) h[static_cast<std::size_t>(i)] = sum.coeff(static_cast<std::size_t>(d - i));
  return h;
}

std::vector<Int> h_vector(const Face& face, const Model& model) {
  return h_vector(face, faces(model));
}

std::vector<IntVec> characteristic_set(const Model& model, const FacetSet& facets) {
  std::vector<IntVec> out;
  out.reserve(facets.size());
  for (int f : facets) out.push_back(model.lambda.at(static_cast<std::size_t>(f)));
  return out;
}

IntMat vertex_matrix(const Model& model, int vertex) {
  FacetSet s = model.vertices.at(static_cast<std::size_t>(vertex));
  std::sort(s.begin(), s.end());
  auto cols = characteristic_set(model, s);
  return IntMat::from_columns(cols, static_cast<std::size_t>(model.n));
}

int vertex_sign(const Model& model, int vertex) {
  return sgn(det(vertex_matrix(model, vertex)));
}

bool positively_omnioriented(const Model& model) {
  for (std::size_t k = 0; k < model.vertices.size(); ++k)
    if (vertex_sign(model, static_cast<int>(k)) <= 0) return false;
  return true;
}

Model apply_basis_change(const Model& model, const IntMat& u) {
  if (u.rows() != static_cast<std::size_t>(model.n) || u.cols() != u.rows()) {
    throw Error("basis change must be an n x n matrix");
  }
  if (abs(det(u)) != 1) throw Error("basis change must be unimodular");
  Model out = model;
  for (auto& v : out.lambda) v = u * v;
  return out;
}

Model relabel_facets(const Model& model, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != model.m) throw Error("permutation has wrong length");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < model.m; ++i)
    if (check[static_cast<std::size_t>(i)] != i) throw Error("not a permutation of the facets");
  Model out = model;
  for (int i = 0; i < model.m; ++i)
    out.lambda[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        model.lambda[static_cast<std::size_t>(i)];
  for (auto& v : out.vertices) {
    for (int& f : v) f = perm[static_cast<std::size_t>(f)];
    std::sort(v.begin(), v.end());
  }
  return out;
}

}  // namespace qtorb

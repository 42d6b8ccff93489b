#include "qtorb/generate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qtorb/blowup.hpp"
#include "qtorb/sectors.hpp"

namespace qtorb {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::optional<Model> random_blowup(const Model& model, std::mt19937_64& rng) {
  std::vector<Face> candidates;
  for (Face& f : faces(model))
    if (f.codim >= 2) candidates.push_back(std::move(f));
  if (candidates.empty()) return std::nullopt;
  const Face& face = candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(candidates.size()) - 1))];

  auto interior = box_interior(face, model);
  std::vector<const BoxElement*> age_one;
  for (const auto& g : interior)
    if (g.age == 1) age_one.push_back(&g);

  BlowupSpec spec;
  spec.face = face.facets;
  const int mode = uniform(rng, 0, 2);
  if (mode == 0 && !age_one.empty()) {
    spec.weights = age_one[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(age_one.size()) - 1))]->coeffs;
  } else if (mode == 1 && !interior.empty()) {
    const auto& g = interior[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(interior.size()) - 1))];
    for (const auto& a : g.coeffs) spec.weights.push_back(a + uniform(rng, 0, 1));
  } else {
    for (std::size_t j = 0; j < face.facets.size(); ++j) spec.weights.emplace_back(uniform(rng, 1, 2));
  }

  try {
    Model out = blow_up(model, spec);
    if (!is_quasi_sl(out).quasi_sl) return std::nullopt;
    return out;
  } catch (const BlowupError&) {
    return std::nullopt;
  }
}

std::optional<Model> attempt(std::mt19937_64& rng, int n) {
  IntVec last(static_cast<std::size_t>(n));
  for (auto& x : last) {
    int v = uniform(rng, 1, 3);
    x = uniform(rng, 0, 3) == 0 ? v : -v;
  }
  if (!is_primitive(last)) return std::nullopt;
  Model model = simplex_model(n, last);
  if (!validation_problems(model).empty() || !is_quasi_sl(model).quasi_sl) return std::nullopt;

  const int blowups = uniform(rng, 0, n == 2 ? 3 : 2);
  for (int b = 0; b < blowups; ++b) {
    // A failed random blowup just leaves the model as is.
    if (auto next = random_blowup(model, rng)) model = std::move(*next);
  }
  model = apply_basis_change(model, random_unimodular(rng, n, uniform(rng, 0, 4)));
  if (!validation_problems(model).empty() || !is_quasi_sl(model).quasi_sl) return std::nullopt;
  return model;
}

}  // namespace

Model simplex_model(int n, const IntVec& last) {
  Model model;
  model.n = n;
  model.m = n + 1;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    model.lambda.push_back(std::move(e));
  }
  model.lambda.push_back(last);
  for (int omit = n; omit >= 0; --omit) {
    FacetSet v;
    for (int f = 0; f <= n; ++f)
      if (f != omit) v.push_back(f);
    model.vertices.push_back(std::move(v));
  }
  return model;
}

IntMat random_unimodular(std::mt19937_64& rng, int n, int steps) {
  IntMat u = IntMat::identity(static_cast<std::size_t>(n));
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    auto a = static_cast<std::size_t>(uniform(rng, 0, n - 1));
    auto b = static_cast<std::size_t>(uniform(rng, 0, n - 2));
    if (b >= a) ++b;
    switch (uniform(rng, 0, 3)) {
      case 0:
        u.swap_rows(a, b);
        break;
      case 1:
        u.negate_row(a);
        break;
      default:
        u.add_row(a, b, uniform(rng, 0, 1) ? 1 : -1);
        break;
    }
  }
  return u;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  // Fisher-Yates with our own draws so the result does not depend on
  // std::shuffle's implementation.
  for (int i = m - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(rng, 0, i))]);
  return p;
}

GeneratedCorpus generate_test_models(std::uint64_t seed, int count, int n, int budget) {
  if (n < 2 || n > 4) throw Error("generator supports n in {2, 3, 4}");
  std::mt19937_64 rng(seed);
  GeneratedCorpus corpus;
  for (int i = 0; i < count; ++i) {
    bool done = false;
    for (int tries = 0; tries < budget && !done; ++tries) {
      if (auto model = attempt(rng, n)) {
        model->name = "gen-n" + std::to_string(n) + "-s" + std::to_string(seed) + "-" + std::to_string(i);
        corpus.models.push_back(std::move(*model));
        done = true;
      }
    }
    if (!done) {
      corpus.failures.push_back("model " + std::to_string(i) + ": budget of " + std::to_string(budget) +
                                " attempts exhausted");
    }
  }
  return corpus;
}

}  // namespace qtorb

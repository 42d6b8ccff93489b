// qtorb command-line tool. Every report is canonical JSON on stdout.
//
// Exit codes: 0 success or verdict pass, 1 verdict fail or identity
// violation, 2 usage or validation error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qtorb/qtorb.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct ModelDeleter {
  void operator()(qtorb_model* m) const { qtorb_model_free(m); }
};
using ModelPtr = std::unique_ptr<qtorb_model, ModelDeleter>;

struct CString {
  char* ptr = nullptr;
  ~CString() { qtorb_string_free(ptr); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int report_error(qtorb_status st) {
  std::cerr << "error: " << qtorb_status_string(st) << ": " << qtorb_last_error() << "\n";
  return kExitInvalid;
}

int load(const std::string& path, ModelPtr& model) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitInvalid;
  }
  qtorb_model* raw = nullptr;
  qtorb_status st = qtorb_model_parse(text.c_str(), &raw);
  if (st != QTORB_OK) return report_error(st);
  model.reset(raw);
  return kExitOk;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

int emit(qtorb_status st, const CString& text, bool ok = true) {
  if (st != QTORB_OK) return report_error(st);
  std::cout << text.ptr << "\n";
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chen-Ruan cohomology and crepant blowups of quasitoric orbifolds"};
  app.require_subcommand(1);

  std::string input;
  std::vector<int> face;
  std::vector<std::string> weights;
  std::string output;
  std::uint64_t seed = 0;
  int count = 20;
  int dim = 2;
  int budget = 200;
  bool oracle = false;

  auto add_input = [&](CLI::App* sub) { sub->add_option("model", input, "model JSON file")->required(); };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--face", face, "facet indices of the blown-up face, e.g. 0,2")
        ->required()
        ->delimiter(',');
    sub->add_option("--weights", weights, "positive rational weights, e.g. 1/2,1/2")
        ->required()
        ->delimiter(',');
  };

  auto* validate = app.add_subcommand("validate", "check a model and list every violation");
  add_input(validate);
  auto* faces = app.add_subcommand("faces", "face lattice with f- and h-vectors");
  add_input(faces);
  auto* sectors = app.add_subcommand("sectors", "untwisted and twisted sectors with ages");
  add_input(sectors);
  auto* betti = app.add_subcommand("betti", "ordinary and Chen-Ruan Betti numbers");
  add_input(betti);
  auto* cr = app.add_subcommand("cr", "Chen-Ruan Poincare polynomial by three routes plus identities");
  add_input(cr);
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart numerators of every Delta_F");
  add_input(ehrhart);
  ehrhart->add_flag("--oracle", oracle, "count dilates exhaustively and cross-check against Box ages");
  auto* blowup = app.add_subcommand("blowup", "blow up a face");
  add_input(blowup);
  add_spec(blowup);
  blowup->add_option("-o,--output", output, "write the blown-up model here");
  auto* mckay = app.add_subcommand("mckay", "verify PP_CR invariance under a crepant blowup");
  add_input(mckay);
  add_spec(mckay);
  auto* fuzz = app.add_subcommand("fuzz", "generate models and run every check on them");
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--count", count, "number of models")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--n", dim, "dimension (2, 3 or 4)")->check(CLI::Range(2, 4));
  fuzz->add_option("--budget", budget, "attempts per model")->check(CLI::PositiveNumber);
  fuzz->add_flag("--oracle", oracle, "include exhaustive dilate counting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  CString text;

  if (validate->parsed()) {
    std::string json;
    if (!read_file(input, json)) {
      std::cerr << "error: cannot read " << input << "\n";
      return kExitInvalid;
    }
    qtorb_status st = qtorb_validate(json.c_str(), &text.ptr);
    if (text.ptr != nullptr) std::cout << text.ptr << "\n";
    if (st == QTORB_OK) return kExitOk;
    if (text.ptr == nullptr) report_error(st);
    return kExitInvalid;
  }

  if (fuzz->parsed()) {
    int all_pass = 0;
    qtorb_status st = qtorb_fuzz_report(seed, count, dim, budget, oracle ? 1 : 0, &text.ptr, &all_pass);
    return emit(st, text, all_pass != 0);
  }

  ModelPtr model;
  if (int rc = load(input, model); rc != kExitOk) return rc;

  if (faces->parsed()) return emit(qtorb_faces_report(model.get(), &text.ptr), text);
  if (sectors->parsed()) return emit(qtorb_sectors_report(model.get(), &text.ptr), text);
  if (betti->parsed()) return emit(qtorb_betti_report(model.get(), &text.ptr), text);
  if (cr->parsed()) {
    int ok = 0;
    qtorb_status st = qtorb_cr_report(model.get(), &text.ptr, &ok);
    return emit(st, text, ok != 0);
  }
  if (ehrhart->parsed()) {
    int consistent = 0;
    qtorb_status st = qtorb_ehrhart_report(model.get(), oracle ? 1 : 0, &text.ptr, &consistent);
    return emit(st, text, consistent != 0);
  }

  if (face.size() != weights.size()) {
    std::cerr << "error: --face and --weights must have the same length\n";
    return kExitInvalid;
  }
  auto weight_ptrs = c_strings(weights);

  if (blowup->parsed()) {
    qtorb_model* raw = nullptr;
    qtorb_status st = qtorb_blow_up(model.get(), face.data(), weight_ptrs.data(), face.size(), &raw,
                                    &text.ptr);
    if (st != QTORB_OK) return report_error(st);
    ModelPtr result(raw);
    CString model_json;
    st = qtorb_model_to_json(result.get(), &model_json.ptr);
    if (st != QTORB_OK) return report_error(st);
    if (output.empty()) {
      std::cout << model_json.ptr << "\n";
      return kExitOk;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << model_json.ptr << "\n")) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitInvalid;
    }
    std::cout << text.ptr << "\n";
    return kExitOk;
  }

  if (mckay->parsed()) {
    int verdict = 0;
    qtorb_status st = qtorb_mckay_report(model.get(), face.data(), weight_ptrs.data(), face.size(),
                                         &text.ptr, &verdict);
    return emit(st, text, verdict != 0);
  }
  return kExitInvalid;
}

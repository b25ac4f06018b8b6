// nchodge: analyze algebras, print cyclic and Deligne tables, check the triangle.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nchodge/error.hpp"
#include "nchodge/report.hpp"

using namespace nchodge;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInvalid = 2 };

struct Common {
  std::string input, preset_name;
  int imax = 9, truncation = 6;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string path = "reduced";
};

void add_common(CLI::App* app, Common& c, bool verify_flags) {
  app->add_option("--input", c.input, "algebra spec JSON file");
  app->add_option("--preset", c.preset_name, "named algebra (see `presets`)");
  app->add_option("--truncation", c.truncation, "Hochschild truncation N")->capture_default_str();
  app->add_option("--seed", c.seed, "seed for random choices")->capture_default_str();
  app->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  if (verify_flags) {
    app->add_option("--imax", c.imax, "degree range [-imax, imax]")->capture_default_str();
    app->add_option("--path", c.path, "middle-term path")
        ->check(CLI::IsMember({"reduced", "direct", "both"}))
        ->capture_default_str();
  }
}

FDAlgebra load_algebra(const Common& c) {
  if (c.input.empty() == c.preset_name.empty()) throw InvalidInputError("give exactly one of --input or --preset");
  if (!c.preset_name.empty()) return preset(c.preset_name);
  std::ifstream in(c.input);
  if (!in) throw InvalidInputError("cannot open '" + c.input + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
  FDAlgebra a = algebra_from_json(j);
  AlgebraCheck chk = check_algebra(a);
  if (!chk.ok) throw InvalidInputError("not an associative unital algebra: " + chk.failure);
  if (a.name.empty()) a.name = c.input;
  return a;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw InvalidInputError("expected integers, got '" + s + "'");
    }
  }
  return out;
}

// tate:J, spec_field:R1,R2, projective:N
HodgeComplex hodge_preset(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon), arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  std::vector<int> v = parse_ints(arg);
  if (name == "tate" && v.size() == 1) return make_tate(v[0]);
  if (name == "spec_field" && v.size() == 2) return spec_field(v[0], v[1]);
  if (name == "projective" && v.size() == 1) return projective_space_complex(v[0]);
  throw InvalidInputError("unknown Hodge preset '" + spec + "' (tate:J, spec_field:R1,R2, projective:N)");
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge-theoretic and cyclic invariants of finite-dimensional algebras"};
  app.require_subcommand(1);
  Common c;

  auto* analyze = app.add_subcommand("analyze", "Wedderburn data of an algebra");
  add_common(analyze, c, false);

  auto* verify = app.add_subcommand("verify", "check the triangle of ranks");
  add_common(verify, c, true);

  auto* cyclic = app.add_subcommand("cyclic", "HH, HC, HC- and HP tables");
  add_common(cyclic, c, false);

  auto* hodge = app.add_subcommand("hodge", "Deligne / absolute Hodge dimension tables");
  std::string hodge_name = "spec_field:1,0", kind = "deligne";
  int jmin = -2, jmax = 4, lo = -2, hi = 10;
  hodge->add_option("--preset", hodge_name, "tate:J, spec_field:R1,R2 or projective:N")->capture_default_str();
  hodge->add_option("--kind", kind, "deligne or abs")->check(CLI::IsMember({"deligne", "abs"}))->capture_default_str();
  hodge->add_option("--jmin", jmin)->capture_default_str();
  hodge->add_option("--jmax", jmax)->capture_default_str();
  hodge->add_option("--lo", lo)->capture_default_str();
  hodge->add_option("--hi", hi)->capture_default_str();
  hodge->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* presets = app.add_subcommand("presets", "list algebra presets");
  presets->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*presets) {
      json j = preset_names();
      std::string text;
      for (const auto& n : preset_names()) text += n + "\n";
      emit(c, j, text);
      return kOk;
    }
    if (*hodge) {
      HodgeComplex v = hodge_preset(hodge_name);
      json rows = json::array();
      std::string text;
      for (int j = jmin; j <= jmax; ++j) {
        auto dims = kind == "deligne" ? deligne_dims(v, j, lo, hi) : abs_hodge_dims(v, j, lo, hi);
        rows.push_back({{"j", j}, {"dims", to_json(dims)}});
        text += to_text(dims, kind + " cohomology of " + hodge_name + ", twist j = " + std::to_string(j));
      }
      emit(c, {{"preset", hodge_name}, {"kind", kind}, {"rows", rows}}, text);
      return kOk;
    }
    FDAlgebra a = load_algebra(c);
    if (*analyze) {
      WedderburnData w = factor_data(a, c.seed);
      json j = to_json(w);
      j["algebra"] = a.name;
      j["dim"] = a.dim;
      emit(c, j, to_text(a, w));
      return kOk;
    }
    if (*cyclic) {
      CyclicTables t = hc_hcminus_hp_dims(a, c.truncation, 0, MixedModel::Peirce);
      PeriodicityVerdict p = periodicity_check(a, c.truncation, MixedModel::Peirce);
      json j = to_json(t);
      j["algebra"] = a.name;
      j["truncation"] = c.truncation;
      j["periodicity"] = to_json(p);
      emit(c, j,
           "cyclic tables for " + a.name + " at truncation " + std::to_string(c.truncation) + "\n" + to_text(t) +
               "periodicity: " + to_string(p.status) + (p.message.empty() ? "" : " (" + p.message + ")") + "\n");
      return kOk;
    }
    if (*verify) {
      VerifyOptions opt;
      opt.imax = c.imax;
      opt.truncation = c.truncation;
      opt.seed = c.seed;
      opt.paths = c.path == "direct" ? PathChoice::Direct : c.path == "both" ? PathChoice::Both : PathChoice::Reduced;
      if (opt.imax < 0) throw InvalidInputError("--imax must be non-negative");
      AlgebraContext ctx = AlgebraContext::make(a, -opt.imax, opt.imax, opt.truncation, opt.seed);
      TriangleReport r = verify_triangle(ctx, opt);
      emit(c, to_json(r, ctx.data), to_text(r));
      return r.pass ? kOk : kFail;
    }
  } catch (const Error& e) {
    if (c.format == "json") {
      std::cout << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump(2) << "\n";
    } else {
      std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    }
    return kInvalid;
  }
  return kOk;
}

#include "cli.hpp"

#include "betticert/certify.hpp"
#include "betticert/errors.hpp"
#include "betticert/generators.hpp"
#include "betticert/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace betticert::cli {

namespace {

using io::Json;

Rational rational_from_text(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

std::string set_text(const std::vector<std::string>& ids) { return "{" + join(ids) + "}"; }

std::string profile_text(const BettiProfile& b) {
  std::vector<std::string> parts;
  for (int v : b.values) parts.push_back(std::to_string(v));
  return "[" + join(parts) + "]";
}

std::string identity_text(const LocalizationIdentity& id) {
  if (id.kind == LocalizationIdentity::Kind::volume)
    return "sum_z (-H(z))^" + std::to_string(id.exponent) + " / prod_i w_i(z) = " + to_string(id.value) +
           " (expected > 0, symplectic volume)";
  return "sum_z H(z)^" + std::to_string(id.exponent) + " / prod_i w_i(z) = " + to_string(id.value) +
         " (expected 0, identity e=" + std::to_string(id.exponent) + ")";
}

Json identity_json(const LocalizationIdentity& id) {
  Json j;
  j["identity"] = id.kind == LocalizationIdentity::Kind::volume ? "volume" : "moment";
  j["e"] = id.exponent;
  j["value"] = io::to_json(id.value);
  j["holds"] = id.holds;
  return j;
}

std::string class_text(const EquivariantClass& c, const FixedPointData& d) {
  std::vector<std::string> parts;
  for (std::size_t z = 0; z < d.size(); ++z)
    parts.push_back(d[z].id + " = " + to_string(c.restrictions(static_cast<Eigen::Index>(z))));
  return "degree " + std::to_string(c.degree) + ": " + join(parts);
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string data;
  std::string model;
  std::string format = "text";
};

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  const FixedPointData d = io::dataset_from_json(io::read_json(args.data));
  std::optional<CohomologyModel> model;
  if (!args.model.empty()) model = io::model_from_json(io::read_json(args.model), d);

  const BettiProfile profile = betti_profile(d);
  const LocalizationReport localization = localization_consistency(d);
  const DualityCheck duality = poincare_duality_check(profile);
  const IndexIncreasingCheck increasing = is_index_increasing(d);
  std::optional<ModelReport> model_report;
  if (model) model_report = validate_model(d, *model);

  std::vector<std::string> warnings;
  if (profile.values[0] != 1)
    warnings.push_back("b_0 = " + std::to_string(profile.values[0]) + " != 1: data does not describe a connected space");

  const bool pass = localization.pass && duality.pass && increasing.pass && (!model_report || model_report->pass);
  const int code = pass ? kPass : kFailed;

  if (args.format == "json") {
    Json checks;
    Json loc;
    loc["pass"] = localization.pass;
    loc["identities"] = Json::array();
    for (const auto& id : localization.identities) loc["identities"].push_back(identity_json(id));
    checks["localization"] = std::move(loc);

    Json dual;
    dual["pass"] = duality.pass;
    if (duality.failing_pair) dual["failing_pair"] = {duality.failing_pair->first, duality.failing_pair->second};
    checks["poincare_duality"] = std::move(dual);

    Json inc;
    inc["pass"] = increasing.pass;
    if (increasing.witness) inc["witness"] = {increasing.witness->first, increasing.witness->second};
    checks["index_increasing"] = std::move(inc);

    if (model_report) {
      Json m;
      m["pass"] = model_report->pass;
      m["failures"] = Json::array();
      for (const auto& f : model_report->failures) {
        Json jf;
        jf["check"] = f.check;
        jf["degree"] = 2 * f.k;
        jf["message"] = f.message;
        if (f.residual) jf["residual"] = io::to_json(*f.residual);
        m["failures"].push_back(std::move(jf));
      }
      checks["model"] = std::move(m);
    }

    Json report;
    report["command"] = "validate";
    report["data"] = args.data;
    if (!args.model.empty()) report["model"] = args.model;
    report["profile"] = io::to_json(profile);
    report["checks"] = std::move(checks);
    report["failed_identities"] = Json::array();
    for (const auto& id : localization.failures()) report["failed_identities"].push_back(identity_json(id));
    report["warnings"] = warnings;
    report["exit_code"] = code;
    out << io::dump(report);
    return code;
  }

  out << "validate " << args.data << (args.model.empty() ? "" : " --model " + args.model) << "\n";
  out << "schema: pass (n = " << d.half_dim() << ", " << d.size() << " fixed points)\n";
  out << "betti profile: " << profile_text(profile) << "\n";
  out << "localization: " << (localization.pass ? "pass" : "FAIL") << "\n";
  for (const auto& id : localization.identities) out << "  " << (id.holds ? "ok   " : "FAIL ") << identity_text(id) << "\n";
  out << "poincare duality: " << (duality.pass ? "pass" : "FAIL");
  if (duality.failing_pair)
    out << " (b_" << 2 * duality.failing_pair->first << " != b_" << 2 * duality.failing_pair->second << ")";
  out << "\n";
  out << "index-increasing: " << (increasing.pass ? "pass" : "FAIL");
  if (increasing.witness)
    out << " (ind(" << increasing.witness->first << ") < ind(" << increasing.witness->second << ") but H("
        << increasing.witness->first << ") >= H(" << increasing.witness->second << "))";
  out << "\n";
  if (model_report) {
    out << "model: " << (model_report->pass ? "pass" : "FAIL") << "\n";
    for (const auto& f : model_report->failures) out << "  FAIL [" << f.check << "] " << f.message << "\n";
  }
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  out << "result: " << (pass ? "pass" : "FAIL") << "\n";
  return code;
}

// ----------------------------------------------------------------- certify

struct CertifyArgs {
  std::string data;
  std::string model;
  std::string format = "text";
  std::string output;
  bool mechanism = false;
};

void certificate_text(const Certificate& cert, const FixedPointData& d, std::ostream& out) {
  out << "verdict: " << to_string(cert.verdict) << "\n";
  out << "betti profile: " << profile_text(cert.profile) << "\n";
  if (cert.verdict != Verdict::inconsistent) {
    out << cert.explanation << "\n";
    return;
  }
  const int k = *cert.k;
  out << "k = " << k << ": b_" << 2 * k << " = " << cert.profile.values[static_cast<std::size_t>(k)] << ", b_"
      << 2 * k + 2 << " = " << cert.profile.values[static_cast<std::size_t>(k) + 1] << "\n";
  out << "vanishing target: P1 = " << set_text(cert.target->p1) << ", P2 = " << set_text(cert.target->p2)
      << ", P3 = " << set_text(cert.target->p3) << "\n";
  out << "alpha (" << class_text(*cert.alpha, d) << ")\n";
  for (std::size_t j = 0; j < cert.partition->groups.size(); ++j)
    out << "I_" << j + 1 << " = " << set_text(cert.partition->groups[j]) << "\n";
  for (std::size_t j = 0; j < cert.partition->separators.size(); ++j)
    out << "r_" << j + 1 << " = " << to_string(cert.partition->separators[j]) << "\n";
  for (std::size_t j = 0; j < cert.ledger->subtotals.size(); ++j)
    out << "S_" << j + 1 << " = " << to_string(cert.ledger->subtotals[j]) << "  sign((-1)^k S_" << j + 1
        << ") = " << cert.ledger->normalized_signs[j] << "\n";
  out << "int_M beta = " << to_string(cert.ledger->total) << " * u^-1\n";
  out << cert.explanation << "\n";
}

int cmd_certify(const CertifyArgs& args, std::ostream& out) {
  const FixedPointData d = io::dataset_from_json(io::read_json(args.data));
  const CohomologyModel model = io::model_from_json(io::read_json(args.model), d);
  const Certificate cert = certify(d, model, {args.mechanism});
  const Json j = io::certificate_to_json(cert, d);
  if (!args.output.empty()) io::write_json(args.output, j);
  if (args.format == "json")
    out << io::dump(j);
  else
    certificate_text(cert, d, out);
  return cert.verdict == Verdict::inconsistent ? kFailed : kPass;
}

// ------------------------------------------------------------------- misc

int cmd_betti(const std::string& data, std::ostream& out) {
  const FixedPointData d = io::dataset_from_json(io::read_json(data));
  out << profile_text(betti_profile(d)) << "\n";
  return kPass;
}

int cmd_integrate(const std::string& data, const std::string& class_path, std::ostream& out) {
  const FixedPointData d = io::dataset_from_json(io::read_json(data));
  const EquivariantClass c = io::class_from_json(io::read_json(class_path), d);
  const IntegrationResult r = integrate(d, c);
  out << to_string(r.scalar) << " * u^" << r.u_exponent << "\n";
  return kPass;
}

struct FindClassArgs {
  std::string data;
  std::string model;
  int degree = 0;
  std::vector<std::string> vanish;
};

int cmd_find_class(const FindClassArgs& args, std::ostream& out) {
  if (args.degree < 0 || args.degree % 2 != 0) throw InvalidInput("--degree must be even and nonnegative");
  const FixedPointData d = io::dataset_from_json(io::read_json(args.data));
  const CohomologyModel model = io::model_from_json(io::read_json(args.model), d);
  for (const auto& id : args.vanish) d.position(id);
  const auto alpha = vanishing_class(d, model, args.degree / 2, args.vanish);
  if (!alpha) {
    out << "none: the restriction of R_" << args.degree << " to " << set_text(args.vanish) << " is injective\n";
    return kPass;
  }
  out << io::dump(io::class_to_json(*alpha, d));
  return kPass;
}

// --------------------------------------------------------------------- gen

struct GenArgs {
  std::string out;
  bool with_model = false;
  // cpn
  std::vector<long> weights;
  // product
  std::string left, left_model, right, right_model, scale = "1";
  // corrupt
  std::string data, point, moment;
  std::optional<std::size_t> weight_index;
  std::optional<long> weight_value;
  // synthetic
  std::vector<int> profile;
  std::vector<std::string> moments;
};

int emit(const GenArgs& args, const std::string& default_prefix, const FixedPointData& d,
         const std::optional<CohomologyModel>& model, std::ostream& out) {
  if (args.out == "-") {
    if (args.with_model) throw InvalidInput("--with-model needs a file prefix for --out");
    out << io::dump(io::dataset_to_json(d));
    return kPass;
  }
  const std::string prefix = args.out.empty() ? default_prefix : args.out;
  io::write_json(prefix + ".json", io::dataset_to_json(d));
  out << "wrote " << prefix << ".json\n";
  if (args.with_model) {
    if (!model) throw InvalidInput("this generator has no model to write");
    io::write_json(prefix + ".model.json", io::model_to_json(*model, d));
    out << "wrote " << prefix << ".model.json\n";
  }
  return kPass;
}

int cmd_gen_cpn(const GenArgs& args, std::ostream& out) {
  const GeneratedSpace s = gen_cpn(args.weights);
  return emit(args, "cp" + std::to_string(s.data.half_dim()), s.data, s.model, out);
}

int cmd_gen_product(const GenArgs& args, std::ostream& out, std::ostream& err) {
  auto load = [](const std::string& data, const std::string& model) {
    FixedPointData d = io::dataset_from_json(io::read_json(data));
    CohomologyModel m = io::model_from_json(io::read_json(model), d);
    return GeneratedSpace{std::move(d), std::move(m)};
  };
  const GeneratedSpace s = gen_product(load(args.left, args.left_model), load(args.right, args.right_model),
                                       rational_from_text(args.scale));
  if (const auto inc = is_index_increasing(s.data); !inc.pass)
    err << "warning: product moment map is not index-increasing (" << inc.witness->first << ", "
        << inc.witness->second << ")\n";
  return emit(args, "product", s.data, s.model, out);
}

int cmd_gen_corrupt(const GenArgs& args, std::ostream& out) {
  const FixedPointData d = io::dataset_from_json(io::read_json(args.data));
  Mutation mutation{args.point, std::monostate{}};
  if (args.weight_index || args.weight_value) {
    if (!args.weight_index || !args.weight_value)
      throw InvalidInput("--weight-index and --weight-value go together");
    mutation.change = WeightChange{*args.weight_index, *args.weight_value};
  } else if (!args.moment.empty()) {
    mutation.change = MomentChange{rational_from_text(args.moment)};
  }
  return emit(args, "corrupted", corrupt(d, mutation), std::nullopt, out);
}

int cmd_gen_synthetic(const GenArgs& args, std::ostream& out) {
  std::vector<Rational> moments;
  for (const auto& m : args.moments) moments.push_back(rational_from_text(m));
  const FixedPointData d = synthetic_data(BettiProfile{args.profile}, moments);
  return emit(args, "synthetic", d, claimed_model(d), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fixed point data checks and unimodality certificates for Hamiltonian circle actions",
               "betticert"};
  app.require_subcommand(1);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check localization identities, duality, index ordering and a model");
  validate_cmd->add_option("data", validate.data, "Dataset JSON")->required();
  validate_cmd->add_option("--model", validate.model, "Cohomology model JSON");
  validate_cmd->add_option("--format", validate.format)->check(CLI::IsMember({"text", "json"}));

  CertifyArgs cert;
  auto* certify_cmd = app.add_subcommand("certify", "Run the unimodality argument and emit a certificate");
  certify_cmd->add_option("data", cert.data, "Dataset JSON")->required();
  certify_cmd->add_option("--model", cert.model, "Cohomology model JSON")->required();
  certify_cmd->add_option("--format", cert.format)->check(CLI::IsMember({"text", "json"}));
  certify_cmd->add_option("--output", cert.output, "Also write the certificate JSON here");
  certify_cmd->add_flag("--mechanism", cert.mechanism,
                        "For unimodal profiles, also check that no class vanishes on any target P");

  std::string betti_data;
  auto* betti_cmd = app.add_subcommand("betti", "Print the Betti profile [b_0, b_2, ..., b_2n]");
  betti_cmd->add_option("data", betti_data, "Dataset JSON")->required();

  std::string integrate_data, integrate_class;
  auto* integrate_cmd = app.add_subcommand("integrate", "Integrate a class by localization");
  integrate_cmd->add_option("data", integrate_data, "Dataset JSON")->required();
  integrate_cmd->add_option("--class", integrate_class, "Class JSON")->required();

  FindClassArgs find;
  auto* find_cmd = app.add_subcommand("find-class", "Find a nonzero class vanishing at given points");
  find_cmd->add_option("data", find.data, "Dataset JSON")->required();
  find_cmd->add_option("--model", find.model, "Cohomology model JSON")->required();
  find_cmd->add_option("--degree", find.degree, "Even degree 2k")->required();
  find_cmd->add_option("--vanish", find.vanish, "Point ids")->delimiter(',');

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate fixture datasets and models");
  gen_cmd->require_subcommand(1);
  auto common = [&gen](CLI::App* cmd, bool has_model) {
    cmd->add_option("--out", gen.out, "Output prefix; '-' prints the dataset to stdout");
    if (has_model) cmd->add_flag("--with-model", gen.with_model, "Also write PREFIX.model.json");
  };
  auto* gen_cpn_cmd = gen_cmd->add_subcommand("cpn", "CP^n with weights a_0..a_n");
  gen_cpn_cmd->add_option("--weights", gen.weights, "Distinct integers")->delimiter(',')->required();
  common(gen_cpn_cmd, true);

  auto* gen_product_cmd = gen_cmd->add_subcommand("product", "Product of two datasets with models");
  gen_product_cmd->add_option("--left", gen.left)->required();
  gen_product_cmd->add_option("--left-model", gen.left_model)->required();
  gen_product_cmd->add_option("--right", gen.right)->required();
  gen_product_cmd->add_option("--right-model", gen.right_model)->required();
  gen_product_cmd->add_option("--scale", gen.scale, "Positive rational c in H_1 + c H_2");
  common(gen_product_cmd, true);

  auto* gen_corrupt_cmd = gen_cmd->add_subcommand("corrupt", "Change one weight or one moment value");
  gen_corrupt_cmd->add_option("data", gen.data, "Dataset JSON")->required();
  gen_corrupt_cmd->add_option("--point", gen.point, "Fixed point id")->required();
  gen_corrupt_cmd->add_option("--weight-index", gen.weight_index);
  gen_corrupt_cmd->add_option("--weight-value", gen.weight_value);
  gen_corrupt_cmd->add_option("--moment", gen.moment);
  common(gen_corrupt_cmd, false);

  auto* gen_synthetic_cmd = gen_cmd->add_subcommand("synthetic", "+-1-weight data realizing a Betti profile");
  gen_synthetic_cmd->add_option("--profile", gen.profile, "b_0,b_2,...,b_2n")->delimiter(',')->required();
  gen_synthetic_cmd->add_option("--moments", gen.moments, "Moment values in index order")->delimiter(',')->required();
  common(gen_synthetic_cmd, true);

  std::vector<std::string> argv_storage(args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate, out);
    if (*certify_cmd) return cmd_certify(cert, out);
    if (*betti_cmd) return cmd_betti(betti_data, out);
    if (*integrate_cmd) return cmd_integrate(integrate_data, integrate_class, out);
    if (*find_cmd) return cmd_find_class(find, out);
    if (*gen_cpn_cmd) return cmd_gen_cpn(gen, out);
    if (*gen_product_cmd) return cmd_gen_product(gen, out, err);
    if (*gen_corrupt_cmd) return cmd_gen_corrupt(gen, out);
    if (*gen_synthetic_cmd) return cmd_gen_synthetic(gen, out);
  } catch (const DegenerateCase& e) {
    err << "refused: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    // InvalidInput, PreconditionError and NotIndexIncreasing all land here.
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace betticert::cli

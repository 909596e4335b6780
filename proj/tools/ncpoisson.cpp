#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncpoisson/commands.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

bool is_input_error(const ncp::Error& e) {
  return e.code() == ncp::Errc::ParseError || e.code() == ncp::Errc::UnknownLaw;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ncp::fail(ncp::Errc::ParseError, "cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ncp::Params bindings(const std::vector<std::string>& raw) {
  ncp::Params out;
  for (const auto& b : raw) {
    auto [name, value] = ncp::parse_binding(b);
    out[name] = value;
  }
  return out;
}

int cmd_verify(const std::string& file, const std::string& law, const std::vector<std::string>& params) {
  ncp::VerifyResult result;
  try {
    const ncp::Document doc = ncp::parse_document(read_file(file), bindings(params));
    result = ncp::verify(doc, law);
  } catch (const ncp::Error& e) {
    if (is_input_error(e)) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
    std::cout << law << ": fail\n  error " << e.what() << "\n";
    return kFail;
  }
  std::cout << ncp::format_report(result);
  return result.pass ? kPass : kFail;
}

int cmd_build(const std::string& construction, const std::vector<std::string>& inputs, const std::string& out,
              const std::vector<std::string>& params) {
  std::string text;
  try {
    const ncp::Params bound = bindings(params);
    std::vector<ncp::Document> docs;
    for (const auto& f : inputs) docs.push_back(ncp::parse_document(read_file(f), bound));
    text = ncp::serialize(ncp::build(construction, docs, bound));
  } catch (const ncp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e) ? kInputError : kFail;
  }
  if (out == "-") {
    std::cout << text;
    return kPass;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "error: cannot write \"" << out << "\"\n";
    return kInputError;
  }
  return kPass;
}

int cmd_suite(const std::string& name, const ncp::AcceptanceConfig& cfg) {
  std::vector<ncp::CriterionResult> results;
  try {
    results = ncp::run_suite(name, cfg);
  } catch (const ncp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e) ? kInputError : kFail;
  }
  const ncp::Json summary = ncp::suite_summary(name, cfg, results);
  std::cout << summary.dump(2) << "\n";
  return summary["failed"].get<std::size_t>() == 0 ? kPass : kFail;
}

std::string joined(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and constructions for noncommutative Poisson algebras"};
  app.require_subcommand(1);

  std::vector<std::string> params;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--param", params, "bind a parameter, name=p/q (repeatable)")
        ->allow_extra_args(false)
        ->take_all();
  };

  std::string file, law;
  auto* verify = app.add_subcommand("verify", "check one law on a manifest");
  verify->add_option("file", file, "manifest")->required();
  verify->add_option("--law", law, "one of: " + joined(ncp::law_names()))->required();
  add_params(verify);

  std::string construction, out;
  std::vector<std::string> inputs;
  auto* build = app.add_subcommand("build", "run a construction and write its manifest");
  build->add_option("construction", construction, "one of: " + joined(ncp::construction_names()))->required();
  build->add_option("inputs", inputs, "input manifests")->required();
  build->add_option("-o,--output", out, "output file, - for stdout")->required();
  add_params(build);

  std::string suite;
  ncp::AcceptanceConfig cfg;
  auto* suite_cmd = app.add_subcommand("suite", "run an acceptance suite and print a JSON summary");
  std::string suite_names;
  for (const auto& [n, ids] : ncp::suites()) suite_names += (suite_names.empty() ? "" : ", ") + n;
  suite_cmd->add_option("name", suite, "one of: " + suite_names)->required();
  suite_cmd->add_option("--seed", cfg.seed, "random seed");
  suite_cmd->add_option("--samples", cfg.samples, "raise per-criterion sample counts to at least K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  if (*verify) return cmd_verify(file, law, params);
  if (*build) return cmd_build(construction, inputs, out, params);
  return cmd_suite(suite, cfg);
}

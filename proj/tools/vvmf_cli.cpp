// Command-line front end for the vvmf shared library. Everything mathematical
// happens behind the C API; this file only parses arguments, moves JSON
// between files and the library, and maps statuses to exit codes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vvmf.h"

namespace {

struct CommonArgs {
  std::string input_path;
  std::string inline_json;
  std::string output_path;
  long order = -1;
  long max_pole = -1;
  std::string bi_order;
  long component = -1;
  long shift_i = -1, shift_j = -1;
  std::string block;
  std::string weight;
};

void add_common(CLI::App* sub, CommonArgs& a, bool with_orders = true) {
  sub->add_option("--input", a.input_path, "path to the JSON input");
  sub->add_option("--json", a.inline_json, "inline JSON input (alternative to --input)");
  sub->add_option("--output", a.output_path, "write the report here instead of stdout");
  if (with_orders) {
    sub->add_option("--order", a.order, "series truncation order");
    sub->add_option("--max-pole", a.max_pole, "largest principal-part pole order to prepare");
    sub->add_option("--bi-order", a.bi_order, "bivariate truncation orders as Mq,Mz");
  }
  sub->add_option("--block", a.block,
                  "indecomposable block structure, e.g. \"0,1;2\" (for the trace relation)");
  sub->add_option("--component", a.component, "distinguished component index (0-based)");
  sub->add_option("--i", a.shift_i, "source row index for shift (0-based)");
  sub->add_option("--j", a.shift_j, "source column index for shift (0-based)");
  sub->add_option("--weight", a.weight, "half-integer weight, e.g. 12 or 7/2");
}

std::string read_input(const CommonArgs& a) {
  if (!a.inline_json.empty()) return a.inline_json;
  if (a.input_path.empty()) return "";
  std::ifstream in(a.input_path);
  if (!in) {
    std::cerr << "vvmf: cannot open input file '" << a.input_path << "'\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string build_options(const CommonArgs& a) {
  nlohmann::json o = nlohmann::json::object();
  if (a.order >= 0) o["order"] = a.order;
  if (a.max_pole >= 0) o["max_pole"] = a.max_pole;
  if (!a.bi_order.empty()) {
    auto comma = a.bi_order.find(',');
    if (comma == std::string::npos) {
      std::cerr << "vvmf: --bi-order expects Mq,Mz\n";
      std::exit(2);
    }
    o["bi_order"] = {std::stol(a.bi_order.substr(0, comma)), std::stol(a.bi_order.substr(comma + 1))};
  }
  if (a.component >= 0) o["component"] = a.component;
  if (a.shift_i >= 0) o["i"] = a.shift_i;
  if (a.shift_j >= 0) o["j"] = a.shift_j;
  if (!a.block.empty()) {
    nlohmann::json blocks = nlohmann::json::array();
    std::stringstream groups(a.block);
    std::string group;
    while (std::getline(groups, group, ';')) {
      nlohmann::json blk = nlohmann::json::array();
      std::stringstream idx(group);
      std::string v;
      while (std::getline(idx, v, ',')) blk.push_back(std::stoul(v));
      blocks.push_back(blk);
    }
    o["block"] = blocks;
  }
  if (!a.weight.empty()) o["weight"] = a.weight;
  return o.dump();
}

int run(const std::string& command, const CommonArgs& a) {
  std::string input = read_input(a);
  std::string options = build_options(a);
  char* report = nullptr;
  vvmf_status st = vvmf_run_job(command.c_str(), input.c_str(), options.c_str(), &report);
  if (report) {
    if (a.output_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(a.output_path);
      if (!out) {
        std::cerr << "vvmf: cannot open output file '" << a.output_path << "'\n";
        vvmf_string_free(report);
        return 2;
      }
      out << report;
    }
    vvmf_string_free(report);
  } else {
    std::cerr << "vvmf: " << vvmf_last_error() << "\n";
  }
  return int(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact vector-valued modular functions from fundamental data (Lambda, X)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vvmf_version()));

  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"validate", "spectral/monodromy/trace validators on fundamental data"},
      {"expand", "q-expansion of the fundamental matrix"},
      {"det-check", "determinant identity and its first-order equation"},
      {"hyper-check", "hypergeometric form of the compatibility equation"},
      {"dual", "dual data, dual fundamental matrix, double-dual identity"},
      {"shift", "move one exponent unit between two components"},
      {"basis", "canonical basis vectors up to a pole order"},
      {"invert", "reconstruct a function from its principal part"},
      {"gf-check", "generating-function identities in two variables"},
      {"dims", "dimensions of half-integer-weight form spaces"},
      {"form-basis", "explicit basis of a half-integer-weight form space"},
      {"rep-audit", "rationality, congruence and positivity diagnostics"},
      {"reduce", "fold an SL2 representation to a PSL2 one"},
  };

  std::vector<std::pair<std::string, CommonArgs>> args;
  args.reserve(std::size(entries));
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    args.emplace_back(e.name, CommonArgs{});
    add_common(sub, args.back().second);
  }

  CLI11_PARSE(app, argc, argv);

  for (auto& [name, a] : args)
    if (app.get_subcommand(name)->parsed()) return run(name, a);
  return 2;
}

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sublat/corpus.hpp"
#include "sublat/group_io.hpp"
#include "sublat/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct GroupSource {
  std::string builtin;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--builtin", builtin, "Name of a built-in group");
    auto* f = cmd->add_option("file", file, "Group file");
    b->excludes(f);
    f->excludes(b);
  }

  sublat::GroupPtr load(const sublat::Limits& limits) const {
    if (!builtin.empty()) return sublat::builtin(builtin);
    if (file.empty()) throw CLI::ValidationError("give --builtin NAME or a group file");
    std::ifstream in(file);
    if (!in) throw sublat::Error(sublat::ErrorCode::kParseError, "cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return sublat::parse_group(buf.str(), limits);
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices, chief factors and permutability of small permutation groups"};
  app.require_subcommand(1);
  sublat::Limits limits;

  auto* analyze = app.add_subcommand("analyze", "Structural summary of a group");
  GroupSource analyze_src;
  analyze_src.attach(analyze);
  std::string analyze_format = "text";
  analyze->add_option("--format", analyze_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* lattice = app.add_subcommand("lattice", "Export the subgroup lattice");
  GroupSource lattice_src;
  lattice_src.attach(lattice);
  std::string delta;
  std::string lattice_class;
  std::string lattice_format;
  lattice->add_option("--delta", delta, "Highlight L_delta: central, f-central:<class>, member:<class>");
  lattice->add_option("--class", lattice_class, "Highlight L_F for a class");
  lattice->add_option("--format", lattice_format, "dot or json")
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));

  auto* classify = app.add_subcommand("classify", "Strongest of T, PT, PST");
  GroupSource classify_src;
  classify_src.attach(classify);

  auto* verify = app.add_subcommand("verify", "Run the check catalog over the corpus");
  std::string checks_arg;
  std::string groups_arg;
  std::size_t max_order = 0;
  std::string verify_format = "text";
  bool extended = false;
  verify->add_option("--checks", checks_arg, "Comma-separated check ids (default: all)");
  verify->add_option("--groups", groups_arg, "Comma-separated built-in names (default: corpus)");
  verify->add_option("--max-order", max_order, "Skip groups above this order");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--extended", extended, "Include the extended corpus");

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in groups");
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List built-in groups");
  corpus_cmd->require_subcommand(1);
  bool list_extended = false;
  corpus_list->add_flag("--extended", list_extended, "Include the extended corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      sublat::Workspace ws(analyze_src.load(limits), limits);
      std::cout << sublat::export_analysis(ws, sublat::parse_format(analyze_format));
    } else if (*lattice) {
      sublat::Workspace ws(lattice_src.load(limits), limits);
      std::optional<sublat::LatticeSpec> highlight;
      if (!delta.empty() && !lattice_class.empty()) {
        throw CLI::ValidationError("--delta and --class are exclusive");
      }
      if (!delta.empty()) highlight = sublat::parse_delta(delta);
      if (!lattice_class.empty()) highlight = sublat::parse_group_class(lattice_class);
      std::cout << sublat::export_lattice(ws, sublat::parse_format(lattice_format), highlight);
    } else if (*classify) {
      sublat::Workspace ws(classify_src.load(limits), limits);
      std::cout << sublat::to_string(sublat::classify_t_pt_pst(ws)) << "\n";
    } else if (*verify) {
      std::vector<sublat::CheckId> checks;
      for (const auto& id : split_list(checks_arg)) checks.push_back(sublat::parse_check_id(id));
      if (checks_arg.empty()) checks.assign(sublat::kAllChecks.begin(), sublat::kAllChecks.end());
      std::vector<sublat::GroupPtr> groups;
      if (groups_arg.empty()) {
        groups = sublat::corpus(extended);
      } else {
        for (const auto& name : split_list(groups_arg)) groups.push_back(sublat::builtin(name));
      }
      if (max_order > 0) {
        std::erase_if(groups, [&](const sublat::GroupPtr& g) { return g->order() > max_order; });
      }
      const auto report = sublat::run_suite(groups, checks, limits);
      std::cout << sublat::export_report(report, sublat::parse_format(verify_format));
      const auto s = report.summary();
      if (s.undecided > 0) std::cerr << "warning: " << s.undecided << " undecided cells\n";
      return s.fail > 0 ? kExitCheckFailed : kExitOk;
    } else if (*corpus_list) {
      for (const auto& g : sublat::corpus(list_extended)) {
        std::cout << g->name() << " " << g->order() << "\n";
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sublat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_cap() ? kExitCap : kExitUsage;
  }
  return kExitOk;
}

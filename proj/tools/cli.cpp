// synsem command line: build the named transformation families and witness
// DFAs, classify DFA documents, run the bound verification table and the
// maximum-semigroup search.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "synsem/dfa.hpp"
#include "synsem/families.hpp"
#include "synsem/search.hpp"
#include "synsem/semigroup.hpp"
#include "synsem/transformation.hpp"

namespace {

using namespace synsem;

ClosureOptions closure_options_from_env() {
  ClosureOptions opts;
  if (const char* value = std::getenv("SYNSEM_CLOSURE_BUDGET")) {
    opts.max_elements = std::stoull(value);
  }
  return opts;
}

int verify_ceiling_from_env() {
  if (const char* value = std::getenv("SYNSEM_VERIFY_MAX_N")) return std::stoi(value);
  return 6;
}

void write_output(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << data;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string summary_class(const ClassificationReport& report) {
  if (report.is_finite) return "finite";
  if (report.is_cofinite) return "cofinite";
  if (report.is_definite) return "definite";
  if (report.is_reverse_definite) return "reverse definite";
  return "none";
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

int run_semigroup(const std::string& family_name, int n, int k, const std::string& format,
                  const std::string& out_path) {
  auto tag = families::family_from_name(family_name);
  if (!tag) throw std::invalid_argument("unknown family " + family_name);
  if (*tag == families::FamilyTag::Bk && k == 0) {
    throw std::invalid_argument("family Bk needs --k");
  }
  std::vector<Transformation> elements = families::build({*tag, n, k});
  write_output(format == "json" ? to_json_array(elements) + "\n" : to_text(n, elements), out_path);
  return 0;
}

int run_witness(const std::string& class_name, int n, const std::string& format) {
  auto witness_class = families::witness_class_from_name(class_name);
  if (!witness_class) throw std::invalid_argument("unknown witness class " + class_name);
  Dfa dfa = families::witness_dfa(*witness_class, n);
  std::cout << (format == "dot" ? to_dot(dfa) : to_json(dfa));
  return 0;
}

int run_classify(const std::string& path) {
  Dfa dfa = dfa_from_json(read_file(path));
  ClassificationReport report = classify(dfa, closure_options_from_env());
  std::cout << summary_class(report) << ", sigma=" << report.sigma << "\n";
  std::cout << "finite: " << yes_no(report.is_finite) << "\n";
  std::cout << "cofinite: " << yes_no(report.is_cofinite) << "\n";
  std::cout << "reverse-definite: " << yes_no(report.is_reverse_definite) << "\n";
  std::cout << "definite: " << yes_no(report.is_definite) << "\n";
  std::cout << "sigma: " << report.sigma << "\n";
  std::cout << "idempotents:";
  for (const auto& e : report.algebraic.idempotents) std::cout << " " << to_string(e);
  std::cout << "\n";
  std::cout << "zero: "
            << (report.algebraic.unique_zero ? to_string(*report.algebraic.unique_zero) : "none")
            << "\n";
  std::cout << "idempotents-all-right-zero: " << yes_no(report.algebraic.all_right_zero) << "\n";
  std::cout << "idempotents-all-left-zero: " << yes_no(report.algebraic.all_left_zero) << "\n";
  if (!report.structural_note.empty()) std::cout << "structural: " << report.structural_note << "\n";
  return 0;
}

int run_syntactic(const std::string& path) {
  Dfa dfa = dfa_from_json(read_file(path));
  std::cout << to_text(syntactic_semigroup(dfa, closure_options_from_env()));
  return 0;
}

int run_decompose(const std::string& family_name, int n, const std::string& text) {
  Transformation t = parse_transformation(text);
  if (t.degree() != n) {
    throw std::invalid_argument("transformation degree disagrees with --n");
  }
  families::DecomposeFamily family;
  if (family_name == "A") {
    family = families::DecomposeFamily::A;
  } else if (family_name == "B") {
    family = families::DecomposeFamily::B;
  } else {
    throw std::invalid_argument("decompose supports families A and B");
  }
  families::Decomposition d = families::decompose(t, family);
  std::cout << "t=" << to_string(t) << "\n";
  std::cout << "family=" << family_name << "\n";
  std::cout << "base=" << to_string(d.base) << "\n";
  std::cout << "shift=" << to_string(d.shift) << "\n";
  std::cout << "k=" << d.power << "\n";
  return 0;
}

int run_verify(int n) {
  const int ceiling = verify_ceiling_from_env();
  if (n > ceiling) {
    throw std::invalid_argument("verify ceiling is " + std::to_string(ceiling) +
                                " (override with SYNSEM_VERIFY_MAX_N)");
  }
  families::BoundsReport report = families::verify_bounds(n, closure_options_from_env());
  std::cout << std::left << std::setw(52) << "check" << std::setw(14) << "expected"
            << std::setw(14) << "actual" << "result\n";
  for (const auto& check : report.checks) {
    std::cout << std::left << std::setw(52) << check.name << std::setw(14) << check.expected
              << std::setw(14) << check.actual
              << (check.skipped ? "skipped" : (check.pass ? "pass" : "FAIL")) << "\n";
  }
  std::cout << "overall: " << (report.all_pass() ? "pass" : "FAIL") << "\n";
  return report.all_pass() ? 0 : 1;
}

int run_search(int n, std::uint64_t budget_nodes, double budget_seconds, bool oracle, bool serial) {
  search::SearchReport report;
  if (oracle) {
    report = search::subset_oracle(n);
  } else {
    search::SearchOptions options;
    if (budget_nodes > 0) options.budget.max_nodes = budget_nodes;
    if (budget_seconds > 0) options.budget.max_seconds = budget_seconds;
    options.parallel = !serial;
    report = search::max_non_permutational(n, options);
  }
  const bool match = report.max_size == report.conjectured;
  std::cout << "n=" << report.n << "\n";
  std::cout << "mode=" << (oracle ? "oracle" : (n <= 4 ? "exhaustive" : "best-effort")) << "\n";
  std::cout << "complete=" << yes_no(report.exhaustive) << "\n";
  std::cout << "max_size=" << report.max_size << "\n";
  std::cout << "conjectured=" << report.conjectured << "\n";
  std::cout << "match=" << yes_no(match) << "\n";
  std::cout << "maxima_count_up_to_relabeling=" << report.maxima_count() << "\n";
  std::cout << "min_generator_sizes=";
  if (report.min_generator_sizes.empty()) {
    std::cout << "none";
  } else {
    for (std::size_t i = 0; i < report.min_generator_sizes.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << report.min_generator_sizes[i];
    }
  }
  std::cout << "\n";
  for (const auto& note : report.generator_notes) std::cout << "generator_note: " << note << "\n";
  std::cout << "nodes_explored=" << report.nodes_explored << "\n";
  std::cout << "scope=" << report.scope_note << "\n";
  std::cout << "example_maximum:\n" << to_text(report.example_maximum());
  std::cerr << "elapsed_seconds=" << report.elapsed_seconds << "\n";

  if (report.max_size > report.conjectured) return 1;
  if (report.exhaustive && !match) return 1;
  return 0;
}

int run_table(const std::string& which) {
  if (which == "sizes") {
    std::cout << std::left << std::setw(4) << "n" << std::setw(8) << "|A_n|" << std::setw(8)
              << "|G_n|" << std::setw(8) << "|A'_n|" << std::setw(8) << "|G'_n|" << std::setw(8)
              << "|B_n|" << std::setw(8) << "|H_n|" << "\n";
    for (int n = 2; n <= 6; ++n) {
      using families::FamilyTag;
      std::cout << std::left << std::setw(4) << n;
      std::cout << std::setw(8) << families::build({FamilyTag::A, n}).size();
      if (n >= 3) {
        std::cout << std::setw(8) << families::build({FamilyTag::G, n}).size();
      } else {
        std::cout << std::setw(8) << "-";
      }
      std::cout << std::setw(8) << families::build({FamilyTag::Aprime, n}).size();
      if (n >= 4) {
        std::cout << std::setw(8) << families::build({FamilyTag::Gprime, n}).size();
      } else {
        std::cout << std::setw(8) << "-";
      }
      std::cout << std::setw(8) << families::build({FamilyTag::B, n}).size();
      if (n >= 3) {
        std::cout << std::setw(8) << families::build({FamilyTag::H, n}).size();
      } else {
        std::cout << std::setw(8) << "-";
      }
      std::cout << "\n";
    }
    return 0;
  }
  if (which == "examples") {
    using families::FamilyTag;
    auto print_with_generators = [](const std::vector<Transformation>& set,
                                    const std::vector<Transformation>& generators) {
      for (const auto& t : set) {
        bool bold = std::binary_search(generators.begin(), generators.end(), t);
        std::cout << to_string(t) << (bold ? " *" : "") << "\n";
      }
    };
    std::vector<Transformation> a4 = families::build({FamilyTag::A, 4});
    std::cout << "example (finite, n=4): the full family with its minimal generators starred\n";
    print_with_generators(a4, families::build({FamilyTag::G, 4}));
    std::cout << "\nexample (reverse definite, n=4): two top fixed points\n";
    print_with_generators(families::build({FamilyTag::Aprime, 4}),
                          families::build({FamilyTag::Gprime, 4}));
    std::cout << "\nexample (definite, n=4): the banded family by band\n";
    std::vector<Transformation> h4 = families::build({FamilyTag::H, 4});
    for (int k = 1; k <= 4; ++k) {
      std::cout << "band k=" << k << ":\n";
      print_with_generators(families::build({FamilyTag::Bk, 4, k}), h4);
    }
    return 0;
  }
  throw std::invalid_argument("table --which must be sizes or examples");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transformation-semigroup toolkit for finite/cofinite, reverse definite and "
               "definite regular languages"};
  app.require_subcommand(1);

  std::string family_name;
  std::string class_name;
  std::string format = "text";
  std::string witness_format = "doc";
  std::string out_path;
  std::string file_path;
  std::string t_text;
  std::string which;
  int n = 0;
  int k = 0;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  bool oracle = false;
  bool serial = false;

  auto* semigroup_cmd =
      app.add_subcommand("semigroup", "emit a named transformation family in the semigroup format");
  semigroup_cmd->add_option("--family", family_name, "A, G, Aprime, Gprime, B, Bk, C, alphaC or H")
      ->required();
  semigroup_cmd->add_option("--n", n, "degree")->required();
  semigroup_cmd->add_option("--k", k, "band index (family Bk)");
  semigroup_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  semigroup_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  auto* witness_cmd = app.add_subcommand("witness", "emit a witness DFA");
  witness_cmd->add_option("--class", class_name, "finite, cofinite, reverse-definite or definite")
      ->required();
  witness_cmd->add_option("--n", n, "state count")->required();
  witness_cmd->add_option("--format", witness_format, "doc (JSON) or dot")
      ->check(CLI::IsMember({"doc", "dot"}));

  auto* classify_cmd = app.add_subcommand("classify", "classify a DFA document");
  classify_cmd->add_option("file", file_path, "DFA document (JSON)")->required();

  auto* syntactic_cmd =
      app.add_subcommand("syntactic", "syntactic semigroup of a DFA document");
  syntactic_cmd->add_option("file", file_path, "DFA document (JSON)")->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "factor a transformation over a generator family");
  decompose_cmd->add_option("--family", family_name, "A or B")->required();
  decompose_cmd->add_option("--n", n, "degree")->required();
  decompose_cmd->add_option("--t", t_text, "transformation, e.g. \"[3,3,3,3]\"")->required();

  auto* verify_cmd = app.add_subcommand("verify", "re-derive every bound and witness property");
  verify_cmd->add_option("--n", n, "degree")->required();

  auto* search_cmd = app.add_subcommand("search-max",
                                        "search for the largest non-permutational semigroup");
  search_cmd->add_option("--n", n, "degree (2..4 exhaustive, 5 best-effort)")->required();
  search_cmd->add_option("--budget-nodes", budget_nodes, "node budget");
  search_cmd->add_option("--budget-seconds", budget_seconds, "time budget");
  search_cmd->add_flag("--oracle", oracle, "subset-enumeration oracle (degree <= 3)");
  search_cmd->add_flag("--serial", serial, "single-threaded exploration");

  auto* table_cmd = app.add_subcommand("table", "reproduce the size table or the worked examples");
  table_cmd->add_option("--which", which, "sizes or examples")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (semigroup_cmd->parsed()) return run_semigroup(family_name, n, k, format, out_path);
    if (witness_cmd->parsed()) return run_witness(class_name, n, witness_format);
    if (classify_cmd->parsed()) return run_classify(file_path);
    if (syntactic_cmd->parsed()) return run_syntactic(file_path);
    if (decompose_cmd->parsed()) return run_decompose(family_name, n, t_text);
    if (verify_cmd->parsed()) return run_verify(n);
    if (search_cmd->parsed()) return run_search(n, budget_nodes, budget_seconds, oracle, serial);
    if (table_cmd->parsed()) return run_table(which);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

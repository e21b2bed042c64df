// xpoincare: command-line front end.
//
// Exit codes: 0 ok, 2 parse or usage error, 3 matrix outside the reachable
// set, 4 property failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xpoincare/check.hpp"
#include "xpoincare/errors.hpp"
#include "xpoincare/io.hpp"
#include "xpoincare/poincare.hpp"

namespace {

using namespace xpoincare;

constexpr int kExitParse = 2;
constexpr int kExitDecomposition = 3;
constexpr int kExitProperty = 4;

// A document argument is a path, "-" for stdin, or inline JSON.
std::string read_document(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw ParseError("cannot read \"" + arg + "\"");
  return {std::istreambuf_iterator<char>(in), {}};
}

GroupParams read_element(const std::string& arg) { return io::parse_element(read_document(arg)); }

std::string lorentz_doc(const LorentzParams& p) {
  const Vec3& u = p.u.spatial();
  const Vec3& t = p.theta.vector();
  return "{\"u\":[" + io::format_number(u[0]) + "," + io::format_number(u[1]) + "," + io::format_number(u[2]) +
         "],\"theta\":[" + io::format_number(t[0]) + "," + io::format_number(t[1]) + "," + io::format_number(t[2]) +
         "]}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Poincare group toolkit"};
  app.require_subcommand(1);

  std::string arg_a, arg_b, matrix_path, suite = "all", format = "json", constants_path;
  bool csv = false, labels = false, numeric = false, closed = false, both_orders = false;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;

  auto* compose_cmd = app.add_subcommand("compose", "Compose two elements: A * B");
  compose_cmd->add_option("A", arg_a, "left element (file, '-' or inline JSON)")->required();
  compose_cmd->add_option("B", arg_b, "right element")->required();

  auto* invert_cmd = app.add_subcommand("invert", "Inverse element");
  invert_cmd->add_option("A", arg_a, "element")->required();

  auto* oplus_cmd = app.add_subcommand("oplus", "15x15 fundamental representation matrix");
  oplus_cmd->add_option("A", arg_a, "element")->required();
  oplus_cmd->add_flag("--csv", csv, "CSV instead of JSON");
  oplus_cmd->add_flag("--labels", labels, "include generator names");

  auto* theta_cmd = app.add_subcommand("theta", "15x15 Lie structure matrix");
  theta_cmd->add_option("A", arg_a, "element")->required();
  auto* numeric_flag = theta_cmd->add_flag("--numeric", numeric, "finite differences (default)");
  auto* closed_flag = theta_cmd->add_flag("--closed", closed, "closed-form entries; others print as null");
  numeric_flag->excludes(closed_flag);
  theta_cmd->add_flag("--csv", csv, "CSV instead of JSON");
  theta_cmd->add_flag("--labels", labels, "include generator names");

  auto* decompose_cmd = app.add_subcommand("decompose", "Recover parameters from a matrix");
  decompose_cmd->add_option("--matrix", matrix_path, "4x4, 5x5, 6x6 or {\"M\",\"t\"} JSON")->required();

  auto* check_cmd = app.add_subcommand("check", "Run property suites");
  check_cmd->add_option("--suite", suite, "jacobi|casimir|oracle|group-axioms|oplus-hom|theta|all")
      ->check(CLI::IsMember({"all", "jacobi", "casimir", "oracle", "group-axioms", "oplus-hom", "theta"}));
  check_cmd->add_option("--trials", trials, "random trials per property");
  check_cmd->add_option("--seed", seed, "random seed");
  check_cmd->add_option("--constants", constants_path, "structure constants CSV (a,b,c,f)");

  auto* dump_cmd = app.add_subcommand("dump-algebra", "Structure constants table");
  dump_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  dump_cmd->add_flag("--both-orders", both_orders, "list (b, a) rows as well as (a, b)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const auto matrix_format = csv ? io::MatrixFormat::Csv : io::MatrixFormat::Json;
  const auto names = labels ? io::generator_labels() : std::vector<std::string>{};

  try {
    if (*compose_cmd) {
      const GroupParams a = read_element(arg_a);
      const GroupParams b = read_element(arg_b);
      std::cout << io::format_element(compose(a, b)) << "\n";
    } else if (*invert_cmd) {
      std::cout << io::format_element(inverse(read_element(arg_a))) << "\n";
    } else if (*oplus_cmd) {
      std::cout << io::format_matrix(oplus(read_element(arg_a)), matrix_format, names);
    } else if (*theta_cmd) {
      const GroupParams g = read_element(arg_a);
      if (closed) {
        const ThetaClosed t = theta_closed(g);
        const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask = t.known;
        std::cout << io::format_matrix(t.value, matrix_format, names, &mask);
      } else {
        std::cout << io::format_matrix(theta_numeric(g), matrix_format, names);
      }
    } else if (*decompose_cmd) {
      const io::MatrixDoc doc = io::parse_matrix(read_document(matrix_path));
      if (const auto* m4 = std::get_if<Mat4>(&doc)) {
        std::cout << lorentz_doc(lorentz_decompose(*m4)) << "\n";
      } else if (const auto* m5 = std::get_if<Mat5>(&doc)) {
        GroupParams g;
        g.xl = xl_decompose(*m5);
        std::cout << io::format_element(g) << "\n";
      } else {
        std::cout << io::format_element(from_affine(std::get<AffineRep>(doc))) << "\n";
      }
    } else if (*check_cmd) {
      StructureConstants custom;
      CheckOptions options;
      options.suite = suite;
      options.trials = trials;
      options.seed = seed;
      if (!constants_path.empty()) {
        custom = io::parse_constants_csv(read_document(constants_path));
        options.constants = &custom;
      }
      const CheckReport report = run_check(options);
      std::cout << report.to_json();
      if (const PropertyResult* failure = report.first_failure()) {
        std::cerr << "property failed: " << failure->suite << "/" << failure->name
                  << " residual " << io::format_number(failure->max_residual) << " (tolerance "
                  << io::format_number(failure->tolerance) << ")\n"
                  << "counterexample: " << failure->counterexample << "\n";
        return kExitProperty;
      }
    } else if (*dump_cmd) {
      const auto& f = StructureConstants::extended_poincare();
      std::cout << (format == "csv" ? io::format_constants_csv(f, both_orders)
                                    : io::format_constants_json(f, both_orders));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what();
    if (e.position() != ParseError::npos) std::cerr << " (at byte " << e.position() << ")";
    std::cerr << "\n";
    return kExitParse;
  } catch (const DecompositionError& e) {
    std::cerr << "decomposition error: " << e.what() << "\n";
    return kExitDecomposition;
  }
  return 0;
}

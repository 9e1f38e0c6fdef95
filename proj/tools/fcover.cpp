#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "fcover/cli/commands.hpp"

using namespace fcover;
using namespace fcover::cli;

namespace {

int emit(const Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.text();
  return rep.exit_code;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fcover: exact checks for F-manifold structures and their spectral covers"};
  app.require_subcommand(1);

  std::string spec_path, format = "text";
  RunOptions opts;
  std::string route = "both";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", spec_path, "manifold spec (JSON)")->required();
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--samples", opts.samples, "number of seeded sample points")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opts.seed, "seed for sample points and random candidates");
    sub->add_option("--budget", opts.budget, "maximum S-pairs per Groebner computation")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", opts.timing, "include wall-clock time in the report");
  };

  auto* check = app.add_subcommand("check", "run every check the spec supports");
  add_common(check);
  check->add_option("--route", route, "F-manifold decision route")->check(CLI::IsMember({"identity", "spectral", "both"}));
  auto* euler = app.add_subcommand("euler", "Euler fields E1, E2 from Hodge gradings");
  add_common(euler);
  auto* fiber = app.add_subcommand("fiber", "fiber algebras at sample points");
  add_common(fiber);
  auto* rstable = app.add_subcommand("radical-stable", "Poisson stability of the stated radical");
  add_common(rstable);
  auto* pstable = app.add_subcommand("poisson-stable", "Poisson stability of the spectral cover ideal");
  add_common(pstable);

  auto* example = app.add_subcommand("example", "write the spec of an example family");
  int family = 1;
  std::size_t n = 3;
  std::vector<std::string> rho;
  std::string out_path;
  example->add_option("--family", family, "1 or 2")->required();
  example->add_option("-n,--n", n, "dimension")->required();
  example->add_option("--rho", rho, "family 1: rho_2 .. rho_n in order");
  example->add_option("-o,--output", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; usage errors share the input-error code
    return app.exit(e) == 0 ? exit_ok : exit_input_error;
  }

  static const std::map<std::string, Route> routes{
      {"identity", Route::identity}, {"spectral", Route::spectral}, {"both", Route::both}};
  opts.route = routes.at(route);

  return guarded([&]() -> int {
    if (example->parsed()) {
      auto spec = cmd_example(family, n, rho).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << spec;
      } else {
        std::ofstream f(out_path);
        if (!f) throw SpecError("cannot write " + out_path);
        f << spec;
      }
      return exit_ok;
    }
    auto spec = read_spec_file(spec_path);
    if (check->parsed()) return emit(cmd_check(spec, spec_path, opts), format);
    if (euler->parsed()) return emit(cmd_euler(spec, spec_path, opts), format);
    if (fiber->parsed()) return emit(cmd_fiber(spec, spec_path, opts), format);
    if (rstable->parsed()) return emit(cmd_radical_stable(spec, spec_path, opts), format);
    return emit(cmd_poisson_stable(spec, spec_path, opts), format);
  });
}

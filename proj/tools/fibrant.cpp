// Command-line front end: run scripts and the built-in example corpus.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fibrant/corpus.hpp"
#include "fibrant/errors.hpp"
#include "fibrant/report.hpp"
#include "fibrant/script.hpp"

namespace {

using namespace fibrant;

void emit(const Report& r, bool as_json) {
  if (as_json) {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    std::cout << report_text(r);
  }
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fibrant: fiber cones, reductions and Hilbert coefficients of ideals"};
  app.require_subcommand(1);

  RunOptions opts;
  std::string field = "declared";
  std::string window;
  bool as_json = false;
  bool allow_long = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nmax", opts.nmax, "Hilbert table depth")->check(CLI::Range(4, 64));
    sub->add_option("--red-bound", opts.red_bound, "largest reduction number searched")->check(CLI::Range(1, 64));
    sub->add_option("--seed", opts.seed, "seed for random minimal reductions");
    sub->add_option("--trials", opts.trials, "random reduction attempts")->check(CLI::Range(1, 1000));
    sub->add_option("--field", field, "qq or fp:<prime>; overrides the script's field");
    sub->add_option("--n-window", window, "window lo..hi for asymptotic tests");
    sub->add_flag("--json", as_json, "print the JSON report");
    sub->add_flag("--timing", opts.timing, "include task timings in JSON");
  };

  std::string file;
  CLI::App* run = app.add_subcommand("run", "run a script file");
  run->add_option("file", file, "script path")->required();
  add_common(run);

  std::string name;
  CLI::App* example = app.add_subcommand("example", "run a built-in example and check its expected values");
  example->add_option("name", name, "example name (see list-examples)")->required();
  example->add_flag("--long", allow_long, "allow LONG examples");
  add_common(example);

  CLI::App* list = app.add_subcommand("list-examples", "list the built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help is a success, bad arguments are usage errors
  }

  try {
    if (field == "qq") {
      opts.field = Field::rationals();
    } else if (field.rfind("fp:", 0) == 0) {
      opts.field = Field::prime(static_cast<std::uint32_t>(std::stoul(field.substr(3))));
    } else if (field != "declared") {
      std::cerr << "error: --field takes qq or fp:<prime>\n";
      return 2;
    }
    if (!window.empty()) std::tie(opts.window_lo, opts.window_hi) = option_range(window);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (list->parsed()) {
      for (const ExampleInfo& e : list_examples()) {
        std::cout << e.name << (e.long_running ? "  [LONG]" : "") << "\n    " << e.title << "\n";
      }
      return 0;
    }
    if (run->parsed()) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      Script s;
      try {
        s = parse_script(buf.str());
      } catch (const Error& e) {
        std::cerr << file << ":" << e.what() << "\n";
        return 2;
      }
      const Report r = make_script_report(s, file, opts);
      emit(r, as_json);
      return exit_code(r);
    }
    const Report r = run_example(name, opts, allow_long);
    emit(r, as_json);
    return exit_code(r);
  } catch (const Error& e) {
    std::cerr << "error " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
}

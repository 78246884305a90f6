// hgc — command-line driver for the convolution-algebra library.
//
// One subcommand per computation; all output is deterministic: canonical
// JSON (sorted keys, two-space indent) or fixed-precision numbers.  Exit
// codes: 0 success, 2 invalid input or computation-domain error, 64 usage.

#include <hgc.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

namespace {

namespace fs = std::filesystem;

// Thrown to unwind to main with a specific process exit code.
struct ExitWith {
  int code;
};

bool color_enabled() {
  static const bool enabled = isatty(fileno(stderr)) != 0 &&
                              std::getenv("HGC_NO_COLOR") == nullptr;
  return enabled;
}

[[noreturn]] void die(const std::string& message) {
  if (color_enabled()) {
    std::fprintf(stderr, "\x1b[31merror:\x1b[0m %s\n", message.c_str());
  } else {
    std::fprintf(stderr, "error: %s\n", message.c_str());
  }
  throw ExitWith{2};
}

// Checks a library status, converting failure into exit code 2.
void check(hgc_status status) {
  if (status != HGC_OK) die(hgc_last_error());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read \"" + path.string() + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) die("cannot write \"" + path.string() + "\"");
  out << text;
  if (!out.flush()) die("cannot write \"" + path.string() + "\"");
}

// Prints to stdout, or writes the file when --out was given.
void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_file(out_path, text);
  }
}

// Owned handles and strings, released on every path out of a command.
struct StringFree {
  void operator()(char* s) const { hgc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct GroupoidFree {
  void operator()(hgc_groupoid* g) const { hgc_groupoid_free(g); }
};
using OwnedGroupoid = std::unique_ptr<hgc_groupoid, GroupoidFree>;

struct SpaceFree {
  void operator()(hgc_space* x) const { hgc_space_free(x); }
};
using OwnedSpace = std::unique_ptr<hgc_space, SpaceFree>;

struct ArrowFree {
  void operator()(hgc_arrow* f) const { hgc_arrow_free(f); }
};
using OwnedArrow = std::unique_ptr<hgc_arrow, ArrowFree>;

OwnedGroupoid parse_groupoid(const std::string& path) {
  const std::string text = read_file(path);
  hgc_groupoid* g = nullptr;
  check(hgc_groupoid_parse(text.c_str(), &g));
  return OwnedGroupoid(g);
}

OwnedSpace parse_space(const hgc_groupoid* g, const std::string& path) {
  const std::string text = read_file(path);
  hgc_space* x = nullptr;
  check(hgc_space_parse(g, text.c_str(), &x));
  return OwnedSpace(x);
}

OwnedArrow parse_arrow(const std::string& path) {
  const std::string text = read_file(path);
  const std::string base_dir = fs::path(path).parent_path().string();
  hgc_arrow* f = nullptr;
  check(hgc_arrow_parse(text.c_str(), base_dir.empty() ? "." : base_dir.c_str(), &f));
  return OwnedArrow(f);
}

// ------------------------------------------------------------------
// Subcommand bodies.  Each prints its result and throws ExitWith.
// ------------------------------------------------------------------

[[noreturn]] void run_validate(const std::string& groupoid_path, const std::string& space_path) {
  const std::string gtext = read_file(groupoid_path);

  if (space_path.empty()) {
    char* report = nullptr;
    check(hgc_groupoid_check(gtext.c_str(), &report));
    const OwnedString owned(report);
    std::fputs(report, stdout);
    hgc_groupoid* g = nullptr;
    const hgc_status built = hgc_groupoid_parse(gtext.c_str(), &g);
    const OwnedGroupoid owned_groupoid(g);
    throw ExitWith{built == HGC_OK ? 0 : 2};
  }

  // The space report is only meaningful over a valid groupoid.
  hgc_groupoid* graw = nullptr;
  check(hgc_groupoid_parse(gtext.c_str(), &graw));
  const OwnedGroupoid g(graw);

  const std::string xtext = read_file(space_path);
  char* report = nullptr;
  check(hgc_space_check(g.get(), xtext.c_str(), &report));
  const OwnedString owned(report);
  std::fputs(report, stdout);

  hgc_space* x = nullptr;
  const hgc_status built = hgc_space_parse(g.get(), xtext.c_str(), &x);
  const OwnedSpace owned_space(x);
  throw ExitWith{built == HGC_OK ? 0 : 2};
}

[[noreturn]] void run_orbits(const std::string& groupoid_path, const std::string& left_path,
                             const std::string& right_path, const std::string& out_path) {
  const OwnedGroupoid g = parse_groupoid(groupoid_path);
  const OwnedSpace left = parse_space(g.get(), left_path);
  const OwnedSpace right =
      right_path.empty() ? parse_space(g.get(), left_path) : parse_space(g.get(), right_path);
  char* json = nullptr;
  check(hgc_orbits(left.get(), right.get(), &json));
  const OwnedString owned(json);
  deliver(json, out_path);
  throw ExitWith{0};
}

[[noreturn]] void run_hyper(const std::string& groupoid_path, const std::string& space_path,
                            const std::string& out_path) {
  const OwnedGroupoid g = parse_groupoid(groupoid_path);
  const OwnedSpace x = parse_space(g.get(), space_path);
  char* json = nullptr;
  check(hgc_hyper(x.get(), &json));
  const OwnedString owned(json);
  deliver(json, out_path);
  throw ExitWith{0};
}

[[noreturn]] void run_conv(const std::string& f_path, const std::string& g_path,
                           const std::string& out_path) {
  const OwnedArrow f = parse_arrow(f_path);
  const OwnedArrow g = parse_arrow(g_path);
  hgc_arrow* product = nullptr;
  check(hgc_convolve(f.get(), g.get(), &product));
  const OwnedArrow owned_product(product);
  char* json = nullptr;
  check(hgc_arrow_to_json(product, &json));
  const OwnedString owned(json);
  deliver(json, out_path);
  throw ExitWith{0};
}

[[noreturn]] void run_norm(const std::string& kind, const std::string& function_path) {
  const OwnedArrow f = parse_arrow(function_path);
  double value = 0.0;
  check(hgc_norm(f.get(), kind.c_str(), &value));
  std::printf("%.9f\n", value);
  throw ExitWith{0};
}

[[noreturn]] void run_unit(const std::string& groupoid_path, const std::string& space_path,
                           const std::string& out_path) {
  const OwnedGroupoid g = parse_groupoid(groupoid_path);
  const OwnedSpace x = parse_space(g.get(), space_path);
  int found = 0;
  char* json = nullptr;
  check(hgc_unit(x.get(), &found, &json));
  const OwnedString owned(json);
  if (found == 0) {
    std::fputs("none\n", stdout);
  } else {
    deliver(json, out_path);
  }
  throw ExitWith{0};
}

[[noreturn]] void run_rep(const std::string& function_path, const std::string& out_path) {
  const OwnedArrow f = parse_arrow(function_path);
  char* json = nullptr;
  check(hgc_rep_matrix(f.get(), &json));
  const OwnedString owned(json);
  deliver(json, out_path);
  throw ExitWith{0};
}

[[noreturn]] void run_axioms(std::uint64_t seed, int trials) {
  int ok = 0;
  char* transcript = nullptr;
  check(hgc_axioms(seed, trials, &ok, &transcript));
  const OwnedString owned(transcript);
  std::fputs(transcript, stdout);
  throw ExitWith{ok != 0 ? 0 : 2};
}

[[noreturn]] void run_example(const std::string& name, const std::string& out_dir, bool list) {
  if (list) {
    char* names = nullptr;
    check(hgc_example_names(&names));
    const OwnedString owned(names);
    std::fputs(names, stdout);
    throw ExitWith{0};
  }

  char* groupoid_json = nullptr;
  char* space_json = nullptr;
  char* table_json = nullptr;
  check(hgc_example(name.c_str(), &groupoid_json, &space_json, &table_json));
  const OwnedString g(groupoid_json), s(space_json), t(table_json);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) die("cannot create directory \"" + out_dir + "\": " + ec.message());

  const fs::path dir(out_dir);
  const fs::path files[3] = {dir / (name + ".groupoid.json"), dir / (name + ".space.json"),
                             dir / (name + ".structure.json")};
  const char* texts[3] = {groupoid_json, space_json, table_json};
  for (int i = 0; i < 3; ++i) {
    write_file(files[i], texts[i]);
    std::printf("%s\n", files[i].string().c_str());
  }
  throw ExitWith{0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convolution algebras of finite measured groupoid actions"};
  app.require_subcommand(1);

  std::string groupoid_path, space_path, left_path, right_path;
  std::string orbits_out, hyper_out, conv_out, unit_out, rep_out, example_out;
  std::string f_path, g_path, function_path, kind = "i", example_name;
  std::uint64_t seed = 0;
  int trials = 25;
  bool matrix_flag = false, list_flag = false;

  CLI::App* validate = app.add_subcommand("validate", "check every axiom of a groupoid or space file");
  validate->add_option("--groupoid", groupoid_path, "groupoid JSON file")->required();
  validate->add_option("--space", space_path, "measured G-space JSON file to check over the groupoid");

  CLI::App* orbits = app.add_subcommand("orbits", "orbits of the diagonal action on the fibered product");
  orbits->add_option("--groupoid", groupoid_path, "groupoid JSON file")->required();
  orbits->add_option("--left", left_path, "left space file")->required();
  orbits->add_option("--right", right_path, "right space file (default: the left space)");
  orbits->add_option("--out", orbits_out, "write JSON here instead of stdout");

  CLI::App* hyper = app.add_subcommand("hyper", "structure constants of the orbit basis of (X*X)/G");
  hyper->add_option("--groupoid", groupoid_path, "groupoid JSON file")->required();
  hyper->add_option("--space", space_path, "measured G-space file")->required();
  hyper->add_option("--out", hyper_out, "write JSON here instead of stdout");

  CLI::App* conv = app.add_subcommand("conv", "convolution of two function files");
  conv->add_option("f", f_path, "left factor (function JSON file)")->required();
  conv->add_option("g", g_path, "right factor (function JSON file)")->required();
  conv->add_option("--out", conv_out, "write JSON here instead of stdout");

  CLI::App* norm = app.add_subcommand("norm", "I-norm or reduced norm of a function");
  norm->add_option("--kind", kind, "i | reduced")
      ->check(CLI::IsMember({"i", "reduced"}))
      ->required();
  norm->add_option("--function", function_path, "function JSON file")->required();

  CLI::App* unit = app.add_subcommand("unit", "two-sided unit of the algebra on (X*X)/G, if any");
  unit->add_option("--groupoid", groupoid_path, "groupoid JSON file")->required();
  unit->add_option("--space", space_path, "measured G-space file")->required();
  unit->add_option("--out", unit_out, "write the unit here instead of stdout");

  CLI::App* rep = app.add_subcommand("rep", "regular representation of a function");
  rep->add_flag("--matrix", matrix_flag, "emit the weighted matrix (required)");
  rep->add_option("--function", function_path, "function JSON file")->required();
  rep->add_option("--out", rep_out, "write JSON here instead of stdout");

  CLI::App* axioms = app.add_subcommand("axioms", "run the seeded property suite");
  axioms->add_option("--trials", trials, "random instances per property (default 25)")
      ->check(CLI::NonNegativeNumber);
  axioms->add_option("--seed", seed, "64-bit seed (default 0)");

  CLI::App* example = app.add_subcommand("example", "write a shipped example's files");
  example->add_option("name", example_name, "one of the shipped example names");
  example->add_option("--out", example_out, "output directory (default .)");
  example->add_flag("--list", list_flag, "list shipped example names and exit");

  try {
    app.parse(argc, argv);

    if (validate->parsed()) run_validate(groupoid_path, space_path);
    if (orbits->parsed()) run_orbits(groupoid_path, left_path, right_path, orbits_out);
    if (hyper->parsed()) run_hyper(groupoid_path, space_path, hyper_out);
    if (conv->parsed()) run_conv(f_path, g_path, conv_out);
    if (norm->parsed()) run_norm(kind, function_path);
    if (unit->parsed()) run_unit(groupoid_path, space_path, unit_out);
    if (rep->parsed()) {
      if (!matrix_flag) throw CLI::RequiredError("rep --matrix");
      run_rep(function_path, rep_out);
    }
    if (axioms->parsed()) run_axioms(seed, trials);
    if (example->parsed()) {
      if (!list_flag && example_name.empty()) throw CLI::RequiredError("example NAME");
      run_example(example_name, example_out.empty() ? "." : example_out, list_flag);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 64;
  } catch (const ExitWith& e) {
    return e.code;
  }
}

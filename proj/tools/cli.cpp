#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "upsilon/algebra.hpp"
#include "upsilon/alt_definition.hpp"
#include "upsilon/io.hpp"
#include "upsilon/upsilon.hpp"

#ifndef UPSILON_EXAMPLES_DIR_DEFAULT
#define UPSILON_EXAMPLES_DIR_DEFAULT "data/examples"
#endif

namespace upsilon::cli {

namespace {

// Bad user input: reported on stderr with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

io::ComplexDocument load(const std::string& path) {
  io::ComplexDocument doc = io::parse_document(read_file(path));
  const auto report = validate(doc.complex);
  if (!report.admissible()) {
    throw io::DocumentError(io::DocumentError::Kind::Validation,
                            path + ": complex '" + doc.name + "' is not admissible:\n" +
                                report.summary());
  }
  return doc;
}

Rational parse_t(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw InputError("--t expects a rational p/q, got '" + text + "'");
  }
}

std::vector<int> parse_steps(const std::string& text) {
  std::vector<int> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      steps.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--steps expects comma-separated integers, got '" + text + "'");
    }
  }
  return steps;
}

// Deterministic rationals in (0, 2] with denominators up to 12.
std::vector<Rational> sample_ts(std::size_t count) {
  std::mt19937 rng(20160127);
  std::uniform_int_distribution<int> den_dist(1, 12);
  std::vector<Rational> ts;
  while (ts.size() < count) {
    const int q = den_dist(rng);
    const int p = std::uniform_int_distribution<int>(1, 2 * q)(rng);
    ts.emplace_back(p, q);
  }
  return ts;
}

std::vector<std::filesystem::path> example_files() {
  std::vector<std::filesystem::path> files;
  const std::filesystem::path dir = examples_dir();
  if (!std::filesystem::is_directory(dir)) {
    throw InputError("examples directory '" + dir.string() + "' not found");
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::string examples_dir() {
  if (const char* env = std::getenv("UPSILON_EXAMPLES_DIR"); env && *env) return env;
  return UPSILON_EXAMPLES_DIR_DEFAULT;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Upsilon, tau and nu^- computations for bifiltered knot complexes", "upsilon"};
  app.require_subcommand(1);

  std::string file;
  std::string file_b;
  std::string t_text;
  std::string format = "json";
  std::string steps_text;
  std::string name;
  std::size_t samples = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check every complex axiom");
  validate_cmd->add_option("file", file, "Complex document")->required();

  auto* upsilon_cmd = app.add_subcommand("upsilon", "Exact piecewise-linear Upsilon on [0,2]");
  upsilon_cmd->add_option("file", file, "Complex document")->required();
  upsilon_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* eval_cmd = app.add_subcommand("eval", "Upsilon at one rational t");
  eval_cmd->add_option("file", file, "Complex document")->required();
  eval_cmd->add_option("--t", t_text, "t as p/q")->required();

  auto* tau_cmd = app.add_subcommand("tau", "tau by slope and by region, cross-checked");
  tau_cmd->add_option("file", file, "Complex document")->required();

  auto* nu_minus_cmd = app.add_subcommand("nu-minus", "The invariant nu^-");
  nu_minus_cmd->add_option("file", file, "Complex document")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Genus lower bounds from Upsilon");
  bounds_cmd->add_option("file", file, "Complex document")->required();

  auto* sum_cmd = app.add_subcommand("sum", "Tensor product (connected sum) document");
  sum_cmd->add_option("fileA", file, "First complex")->required();
  sum_cmd->add_option("fileB", file_b, "Second complex")->required();

  auto* mirror_cmd = app.add_subcommand("mirror", "Dual complex (mirror) document");
  mirror_cmd->add_option("file", file, "Complex document")->required();

  auto* additivity_cmd = app.add_subcommand("check-additivity", "Upsilon(A⊗B) = Upsilon(A) + Upsilon(B)");
  additivity_cmd->add_option("fileA", file, "First complex")->required();
  additivity_cmd->add_option("fileB", file_b, "Second complex")->required();

  auto* alt_cmd = app.add_subcommand("alt-check", "Compare with the t-modified complex definition");
  alt_cmd->add_option("file", file, "Complex document")->required();
  alt_cmd->add_option("--t", t_text, "t as p/q in (0,2]")->required();
  alt_cmd->add_option("--samples", samples, "Additional sampled t values");

  auto* crossing_cmd = app.add_subcommand("crossing-check", "Crossing-change inequality on [0,1]");
  crossing_cmd->add_option("fileMinus", file, "Complex for K-")->required();
  crossing_cmd->add_option("filePlus", file_b, "Complex for K+")->required();

  auto* staircase_cmd = app.add_subcommand("staircase", "Emit a staircase complex document");
  staircase_cmd->add_option("--steps", steps_text, "Comma-separated step lengths")->required();
  staircase_cmd->add_option("--name", name, "Document name");

  auto* examples_cmd = app.add_subcommand("examples", "List bundled examples or print one");
  examples_cmd->add_option("name", name, "Example name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (validate_cmd->parsed()) {
      const auto doc = io::parse_document(read_file(file));
      const auto report = validate(doc.complex);
      out << report.summary() << '\n';
      return report.admissible() ? kOk : kCheckFailed;
    }
    if (upsilon_cmd->parsed()) {
      const auto doc = load(file);
      const PLFunction f = upsilon_pl(doc.complex);
      if (format == "csv") {
        out << io::emit_pl(f, io::PLFormat::Csv);
      } else {
        out << io::emit_result("upsilon", doc.name, io::emit_pl(f, io::PLFormat::Json));
      }
      return kOk;
    }
    if (eval_cmd->parsed()) {
      const auto doc = load(file);
      const Rational t = parse_t(t_text);
      if (t < Rational(0) || t > Rational(2)) throw InputError("--t must lie in [0, 2]");
      out << upsilon_at(doc.complex, t) << '\n';
      return kOk;
    }
    if (tau_cmd->parsed()) {
      out << tau(load(file).complex) << '\n';
      return kOk;
    }
    if (nu_minus_cmd->parsed()) {
      out << nu_minus(load(file).complex) << '\n';
      return kOk;
    }
    if (bounds_cmd->parsed()) {
      const auto doc = load(file);
      const PLFunction f = upsilon_pl(doc.complex);
      out << io::emit_result("genus_bounds", doc.name,
                             io::emit_bounds(genus_bounds(f, jump_spectrum(f))));
      return kOk;
    }
    if (sum_cmd->parsed()) {
      const auto a = load(file);
      const auto b = load(file_b);
      out << io::emit_complex(tensor(a.complex, b.complex), a.name + "#" + b.name);
      return kOk;
    }
    if (mirror_cmd->parsed()) {
      const auto doc = load(file);
      out << io::emit_complex(dual(doc.complex), "-" + doc.name);
      return kOk;
    }
    if (additivity_cmd->parsed()) {
      const auto a = load(file);
      const auto b = load(file_b);
      const PLFunction combined = upsilon_pl(tensor(a.complex, b.complex));
      const PLFunction summed = upsilon_pl(a.complex) + upsilon_pl(b.complex);
      const bool ok = combined == summed;
      out << (ok ? "additive" : "NOT additive") << '\n'
          << "tensor: " << io::emit_pl(combined, io::PLFormat::Json) << '\n'
          << "sum:    " << io::emit_pl(summed, io::PLFormat::Json) << '\n';
      return ok ? kOk : kCheckFailed;
    }
    if (alt_cmd->parsed()) {
      const auto doc = load(file);
      const Rational t = parse_t(t_text);
      if (!(Rational(0) < t && t <= Rational(2))) throw InputError("--t must lie in (0, 2]");
      std::vector<Rational> ts{t};
      for (const auto& s : sample_ts(samples)) ts.push_back(s);
      const UpsilonEvaluator evaluator(doc.complex);
      bool ok = true;
      for (const auto& s : ts) {
        const Rational direct = evaluator.upsilon(s);
        const Rational alt = upsilon_alt(doc.complex, s);
        const bool transformed = transform_check(doc.complex, s);
        const bool agree = direct == alt && transformed;
        ok = ok && agree;
        out << "t=" << s << " upsilon=" << direct << " alt=" << alt
            << " transform=" << (transformed ? "ok" : "FAIL") << (agree ? "" : "  MISMATCH") << '\n';
      }
      return ok ? kOk : kCheckFailed;
    }
    if (crossing_cmd->parsed()) {
      const bool ok = check_crossing_change(upsilon_pl(load(file).complex),
                                            upsilon_pl(load(file_b).complex));
      out << (ok ? "true" : "false") << '\n';
      return ok ? kOk : kCheckFailed;
    }
    if (staircase_cmd->parsed()) {
      const auto steps = parse_steps(steps_text);
      try {
        const Complex c = staircase(steps);
        out << io::emit_complex(c, name.empty() ? "staircase(" + steps_text + ")" : name);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      return kOk;
    }
    if (examples_cmd->parsed()) {
      const auto files = example_files();
      if (name.empty()) {
        for (const auto& f : files) out << f.stem().string() << '\n';
        return kOk;
      }
      for (const auto& f : files) {
        if (f.stem() == name) {
          out << read_file(f.string());
          return kOk;
        }
      }
      throw InputError("no bundled example named '" + name + "'");
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const io::DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kCheckFailed;
  }
  err << app.help();
  return kInputError;
}

}  // namespace upsilon::cli

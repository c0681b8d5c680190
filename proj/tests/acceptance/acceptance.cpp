// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "test_support.hpp"
#include "upsilon/algebra.hpp"
#include "upsilon/alt_definition.hpp"
#include "upsilon/io.hpp"
#include "upsilon/upsilon.hpp"

namespace {

using namespace upsilon;
using testing::R;

// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Cli {
  int code;
  std::string out;
};

Cli cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::string example_path(const std::string& stem) {
  return (std::filesystem::path(cli::examples_dir()) / (stem + ".json")).string();
}

std::vector<io::ComplexDocument> bundled() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(cli::examples_dir())) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<io::ComplexDocument> docs;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::ostringstream ss;
    ss << in.rdbuf();
    docs.push_back({io::parse_document(ss.str()).name, io::parse_complex(ss.str())});
  }
  return docs;
}

PLFunction pl_from_json(const nlohmann::json& vertices) {
  std::vector<Vertex> vs;
  for (const auto& v : vertices) {
    vs.push_back({Rational::parse(v["t"].get<std::string>()), Rational::parse(v["value"].get<std::string>())});
  }
  return PLFunction(std::move(vs));
}

std::string show(const PLFunction& f) { return io::emit_pl(f, io::PLFormat::Json); }

// Rationals k/den in [0, 2].
std::vector<Rational> grid(int den) {
  std::vector<Rational> ts;
  for (int k = 0; k <= 2 * den; ++k) ts.emplace_back(k, den);
  return ts;
}

void ac1(Check& c) {
  const Cli r = cli({"upsilon", example_path("t37")});
  c.expect(r.code == 0, "upsilon t37 exit code " + std::to_string(r.code));
  const PLFunction f = pl_from_json(nlohmann::json::parse(r.out)["payload"]["vertices"]);
  for (const auto& t : grid(60)) {
    if (t > R(1)) break;
    const Rational expected = t <= R(2, 3) ? R(-6) * t : R(-4);
    c.expect(f.evaluate(t) == expected, "Υ(" + t.str() + ") = " + f.evaluate(t).str());
  }
  const auto segs = f.segments();
  c.expect(segs.size() >= 2 && segs[0].from == R(0) && segs[0].to == R(2, 3) && segs[0].slope == R(-6),
           "first piece is -6t on [0,2/3]: " + show(f));
  c.expect(segs.size() >= 2 && segs[1].from == R(2, 3) && segs[1].to >= R(1) && segs[1].slope == R(0),
           "second piece is -4 through 1: " + show(f));
  const Cli e = cli({"eval", example_path("t37"), "--t", "4/5"});
  c.expect(e.code == 0 && e.out == "-4\n", "eval --t 4/5 gave '" + e.out + "'");
}

void ac2(Check& c) {
  const Cli r = cli({"upsilon", example_path("t23")});
  c.expect(r.code == 0, "upsilon t23 exit code");
  const PLFunction f = pl_from_json(nlohmann::json::parse(r.out)["payload"]["vertices"]);
  const auto segs = f.segments();
  c.expect(segs.front().from == R(0) && segs.front().to == R(1) && segs.front().slope == R(-1),
           "single piece -t on [0,1]: " + show(f));
  for (const auto& t : grid(60)) {
    if (t > R(1)) break;
    c.expect(f.evaluate(t) == -t, "Υ(" + t.str() + ") = " + f.evaluate(t).str());
    const Cli e = cli({"eval", example_path("t23"), "--t", t.str()});
    c.expect(e.out == (-t).str() + "\n", "eval --t " + t.str() + " gave '" + e.out + "'");
  }
}

void ac3(Check& c) {
  const Complex u = io::parse_complex([] {
    std::ifstream in(example_path("unknot"));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  c.expect(u == unknot(), "bundled unknot matches the builtin");
  c.expect(upsilon_pl(u) == PLFunction::constant(R(0)), "Υ ≡ 0: " + show(upsilon_pl(u)));
  for (const auto& t : grid(12)) c.expect(upsilon_at(u, t) == R(0), "Υ(" + t.str() + ") ≠ 0");
  c.expect(tau(u) == 0, "τ = " + std::to_string(tau(u)));
  c.expect(nu_minus(u) == 0, "ν⁻ = " + std::to_string(nu_minus(u)));
}

void ac4(Check& c) {
  const std::vector<std::pair<std::string, Complex>> knots{
      {"T(2,3)", testing::t23()}, {"T(2,5)", testing::t25()}, {"T(3,7)", testing::t37()}};
  for (const auto& [na, a] : knots) {
    for (const auto& [nb, b] : knots) {
      const PLFunction lhs = upsilon_pl(tensor(a, b));
      const PLFunction rhs = upsilon_pl(a) + upsilon_pl(b);
      c.expect(lhs == rhs, na + "#" + nb + ": " + show(lhs) + " vs " + show(rhs));
    }
  }
}

void ac5(Check& c) {
  for (const auto& doc : bundled()) {
    const PLFunction f = upsilon_pl(doc.complex);
    const Complex mirror = dual(doc.complex);
    c.expect(validate(mirror).admissible(), doc.name + ": dual is admissible");
    c.expect(upsilon_pl(mirror) == -f, doc.name + ": Υ(dual) = " + show(upsilon_pl(mirror)));
    const PLFunction zero = upsilon_pl(tensor(doc.complex, mirror));
    c.expect(zero == PLFunction::constant(R(0)), doc.name + ": Υ(c ⊗ dual c) = " + show(zero));
  }
}

void ac6(Check& c) {
  std::vector<std::pair<std::string, Complex>> corpus;
  const auto docs = bundled();
  for (const auto& d : docs) {
    corpus.emplace_back(d.name, d.complex);
    corpus.emplace_back("-" + d.name, dual(d.complex));
  }
  for (std::size_t a = 0; a < docs.size(); ++a) {
    for (std::size_t b = a; b < docs.size(); ++b) {
      if (docs[a].complex.size() * docs[b].complex.size() > 100) continue;
      corpus.emplace_back(docs[a].name + "#" + docs[b].name, tensor(docs[a].complex, docs[b].complex));
      corpus.emplace_back(docs[a].name + "#-" + docs[b].name, tensor(docs[a].complex, dual(docs[b].complex)));
    }
  }
  for (const auto& [name, cx] : corpus) {
    const int by_slope = tau_from_slope(upsilon_pl(cx));
    const int by_region = tau_from_region(cx);
    c.expect(by_slope == by_region,
             name + ": slope " + std::to_string(by_slope) + " vs region " + std::to_string(by_region));
  }
  c.expect(tau(testing::t37()) == 6, "τ(T(3,7))");
  c.expect(tau(testing::t25()) == 2, "τ(T(2,5))");
  c.expect(tau(testing::t23()) == 1, "τ(T(2,3))");
}

void ac7(Check& c) {
  const std::vector<Rational> ts{R(1, 3), R(1, 2), R(2, 3), R(4, 5), R(1), R(3, 2), R(2)};
  for (const auto& doc : bundled()) {
    for (const auto& t : ts) {
      const Rational direct = upsilon_at(doc.complex, t);
      const Rational alt = upsilon_alt(doc.complex, t);
      c.expect(direct == alt, doc.name + " t=" + t.str() + ": " + direct.str() + " vs " + alt.str());
      c.expect(transform_check(doc.complex, t), doc.name + " t=" + t.str() + ": transform_check");
    }
  }
}

const std::map<std::string, int> kKnownGenus{
    {"unknot", 0}, {"T(2,3)", 1}, {"T(2,5)", 2}, {"T(3,7)", 6}, {"T(2,3)#T(2,3)", 2}};

void ac8(Check& c) {
  for (const auto& doc : bundled()) {
    const UpsilonEvaluator ev(doc.complex);
    std::set<Rational> allowed;
    for (const auto& [i, j] : ev.lattice_points()) allowed.insert(R(i - j));
    const PLFunction f = ev.upsilon_pl();
    for (const auto& s : f.segments()) {
      c.expect(allowed.count(s.slope) > 0, doc.name + ": slope " + s.slope.str() + " is not i-j");
    }
    const auto genus = kKnownGenus.find(doc.name);
    c.expect(genus != kKnownGenus.end(), doc.name + ": genus known");
    for (const auto& jump : jump_spectrum(f)) {
      const std::int64_t p = jump.t.num();
      const std::int64_t q = jump.t.den();
      // Independent restatement of the divisibility: (t/2)|Δ| · (odd p ? 1/p : 2/p) ∈ ℤ.
      const Rational scaled = jump.t / R(2) * jump.delta.abs();
      const Rational unit = p % 2 != 0 ? R(p) : R(p, 2);
      c.expect((scaled / unit).is_integer(),
               doc.name + ": jump at " + jump.t.str() + " delta " + jump.delta.str());
      c.expect(satisfies_jump_divisibility(jump), doc.name + ": library divisibility at " + jump.t.str());
      if (genus != kKnownGenus.end()) {
        const std::int64_t bound = p % 2 != 0 ? genus->second : 2 * genus->second;
        c.expect(q <= bound, doc.name + ": breakpoint " + jump.t.str() + " exceeds the genus bound");
      }
    }
    if (genus != kKnownGenus.end()) {
      for (const auto& s : f.segments()) {
        c.expect(s.slope.abs() <= R(genus->second), doc.name + ": |slope| " + s.slope.str() + " > g3");
      }
    }
  }
}

void ac9(Check& c) {
  const PLFunction f = upsilon_pl(testing::t37());
  const BoundsReport b = genus_bounds(f, jump_spectrum(f));
  c.expect(b.g3 == 6, "g3 = " + std::to_string(b.g3));
  c.expect(b.g4 == 6, "g4 = " + std::to_string(b.g4));
  c.expect(b.gc == 6, "gc = " + std::to_string(b.gc));
}

void ac10(Check& c) {
  for (const auto& doc : bundled()) {
    for (const Complex& cx : {doc.complex, dual(doc.complex)}) {
      const int nm = nu_minus(cx);
      const UpsilonEvaluator ev(cx);
      for (const auto& t : grid(24)) {
        c.expect(-ev.upsilon(t) <= t * R(nm),
                 doc.name + " t=" + t.str() + ": -Υ = " + (-ev.upsilon(t)).str() + ", ν⁻ = " + std::to_string(nm));
      }
      const testing::BruteForceHomology brute(cx);
      c.expect(brute.region_threshold(false) == nm, doc.name + ": ν⁻ vs brute-force region search");
    }
  }
  c.expect(nu_minus(testing::t37()) == 6, "ν⁻(T(3,7)) = " + std::to_string(nu_minus(testing::t37())));
  c.expect(testing::BruteForceHomology(testing::t37()).region_threshold(false) == 6, "brute-force ν⁻(T(3,7))");
}

void ac11(Check& c) {
  c.expect(check_crossing_change(upsilon_pl(unknot()), upsilon_pl(testing::t23())),
           "Υ_T(2,3) ≤ Υ_unknot ≤ Υ_T(2,3) + t on [0,1]");
  const Cli r = cli({"crossing-check", example_path("unknot"), example_path("t23")});
  c.expect(r.code == 0 && r.out == "true\n", "crossing-check CLI gave '" + r.out + "'");
}

void ac12(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20240601);
  std::vector<Complex> stairs;
  std::vector<PLFunction> pls;
  for (int k = 0; k < 200; ++k) {
    const auto steps = testing::random_palindromic_steps(rng, 8);
    stairs.push_back(staircase(steps));
    const Complex& cx = stairs.back();
    const std::string tag = "staircase #" + std::to_string(k);

    const auto report = validate(cx);
    c.expect(report.admissible(), tag + ": " + report.summary());

    const UpsilonEvaluator ev(cx);
    pls.push_back(ev.upsilon_pl());
    for (int s = 0; s < 20; ++s) {
      const Rational t = testing::random_t(rng, true);
      const Rational pointwise = ev.upsilon(t);
      c.expect(pls.back().evaluate(t) == pointwise, tag + " t=" + t.str() + ": PL vs pointwise");
      c.expect(testing::staircase_upsilon_oracle(cx, t) == pointwise, tag + " t=" + t.str() + ": closed form");
    }
    for (int s = 0; s < 3; ++s) {
      const Rational t = testing::random_t(rng, false);
      c.expect(upsilon_alt(cx, t) == ev.upsilon(t), tag + " t=" + t.str() + ": alternative definition");
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, stairs.size() - 1);
  for (int k = 0; k < 200; ++k) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    const PLFunction lhs = upsilon_pl(tensor(stairs[a], stairs[b]));
    c.expect(lhs == pls[a] + pls[b], "additivity on pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "       property suite runtime " << seconds << " s\n";
  c.expect(seconds < 60.0, "runtime " + std::to_string(seconds) + " s exceeds 60 s");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"T(3,7) closed form and eval at 4/5", ac1},
      {"T(2,3) is -t on [0,1]", ac2},
      {"unknot: Υ ≡ 0, τ = 0, ν⁻ = 0", ac3},
      {"additivity over torus-knot pairs", ac4},
      {"negation under duals and Υ(c ⊗ dual c) ≡ 0", ac5},
      {"τ slope and region methods agree", ac6},
      {"alternative definition agrees", ac7},
      {"PL structure: slopes, jumps, breakpoint bounds", ac8},
      {"genus bounds for T(3,7)", ac9},
      {"ν⁻ bound and brute-force ν⁻", ac10},
      {"crossing-change inequality", ac11},
      {"randomized staircase property suite", ac12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    std::string error;
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && check.failed() == 0 && check.checks() > 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "AC" << (k + 1) << " " << criteria[k].first << " ("
              << check.checks() - check.failed() << "/" << check.checks() << " checks)\n";
    if (!error.empty()) std::cout << "       exception: " << error << '\n';
    for (const auto& f : check.failures()) std::cout << "       " << f << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}

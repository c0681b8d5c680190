#include "upsilon/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace upsilon {

namespace {

// Parity-correct U-power: M - 2k = g.
int upower_for(int maslov, int grading) { return (maslov - grading) / 2; }

bool same_parity(int a, int b) { return ((a - b) % 2) == 0; }

}  // namespace

Complex::Complex(std::vector<Generator> generators,
                 std::vector<std::vector<std::size_t>> differential)
    : generators_(std::move(generators)), differential_(std::move(differential)) {
  if (differential_.size() != generators_.size()) {
    throw ComplexError("differential has " + std::to_string(differential_.size()) +
                       " entries for " + std::to_string(generators_.size()) + " generators");
  }
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (!index_.emplace(generators_[k].id, k).second) {
      throw ComplexError("duplicate generator id '" + generators_[k].id + "'");
    }
  }
  for (std::size_t k = 0; k < differential_.size(); ++k) {
    auto& targets = differential_[k];
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
      throw ComplexError("repeated boundary term in ∂" + generators_[k].id);
    }
    if (!targets.empty() && targets.back() >= generators_.size()) {
      throw ComplexError("boundary of '" + generators_[k].id + "' references index " +
                         std::to_string(targets.back()));
    }
  }
}

Complex Complex::from_ids(std::vector<Generator> generators, const Arrows& arrows) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < generators.size(); ++k) index.emplace(generators[k].id, k);
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw ComplexError("unknown generator id '" + id + "'");
    return it->second;
  };
  std::vector<std::vector<std::size_t>> differential(generators.size());
  std::vector<bool> seen(generators.size(), false);
  for (const auto& [from, to] : arrows) {
    const std::size_t source = lookup(from);
    if (seen[source]) throw ComplexError("boundary of '" + from + "' listed twice");
    seen[source] = true;
    for (const auto& target : to) differential[source].push_back(lookup(target));
  }
  return Complex(std::move(generators), std::move(differential));
}

std::optional<std::size_t> Complex::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Complex::width() const {
  int w = 0;
  for (const auto& g : generators_) w = std::max(w, std::abs(g.alex - g.alg));
  return w;
}

std::vector<SliceElement> grading_slice(const Complex& c, int grading) {
  std::vector<SliceElement> slice;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Generator& g = c.generator(k);
    if (!same_parity(g.maslov, grading)) continue;
    const int u = upower_for(g.maslov, grading);
    slice.push_back({k, u, g.alg - u, g.alex - u});
  }
  return slice;
}

gf2::Matrix boundary_matrix(const Complex& c, int grading) {
  const auto sources = grading_slice(c, grading);
  const auto targets = grading_slice(c, grading - 1);
  std::vector<long> row_of(c.size(), -1);
  for (std::size_t r = 0; r < targets.size(); ++r) row_of[targets[r].gen] = static_cast<long>(r);

  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t col = 0; col < sources.size(); ++col) {
    const std::size_t x = sources[col].gen;
    for (std::size_t y : c.boundary(x)) {
      if (c.generator(y).maslov != c.generator(x).maslov - 1 || row_of[y] < 0) {
        throw std::logic_error("arrow " + c.generator(x).id + " -> " + c.generator(y).id +
                               " does not lower the Maslov grading by one");
      }
      entries.emplace_back(static_cast<std::size_t>(row_of[y]), col);
    }
  }
  return gf2::Matrix(targets.size(), sources.size(), std::move(entries));
}

bool ValidationReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "admissible";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) os << '\n';
    os << violations[k].detail;
  }
  return os.str();
}

ValidationReport validate(const Complex& c) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::string detail) {
    report.violations.push_back({kind, std::move(detail)});
  };

  for (std::size_t x = 0; x < c.size(); ++x) {
    const Generator& src = c.generator(x);
    for (std::size_t y : c.boundary(x)) {
      const Generator& dst = c.generator(y);
      if (dst.maslov != src.maslov - 1) {
        add(Violation::Kind::MaslovDrop, "differential does not lower Maslov grading by one: " +
                                             src.id + " -> " + dst.id);
      }
      if (dst.alg > src.alg || dst.alex > src.alex) {
        add(Violation::Kind::NotFiltered, "differential not filtered: " + src.id + " (" +
                                              std::to_string(src.alg) + "," +
                                              std::to_string(src.alex) + ") -> " + dst.id + " (" +
                                              std::to_string(dst.alg) + "," +
                                              std::to_string(dst.alex) + ")");
      }
    }
  }
  // Slices are only meaningful once every arrow has degree -1.
  if (report.has(Violation::Kind::MaslovDrop)) return report;

  // By U-equivariance two consecutive gradings cover every slice.
  std::vector<gf2::Matrix> d;
  for (int g = -1; g <= 2; ++g) d.push_back(boundary_matrix(c, g));
  auto d_at = [&](int g) -> const gf2::Matrix& { return d[static_cast<std::size_t>(g + 1)]; };

  for (int g = 1; g <= 2; ++g) {
    if (gf2::multiply(d_at(g - 1), d_at(g)).nonzeros() != 0) {
      add(Violation::Kind::BoundarySquared,
          "∂∘∂ ≠ 0 from grading " + std::to_string(g) + " to " + std::to_string(g - 2));
    }
  }
  if (report.has(Violation::Kind::BoundarySquared)) return report;

  for (int g = 0; g <= 1; ++g) {
    const std::size_t cycles = d_at(g).cols() - gf2::rank(d_at(g));
    const std::size_t boundaries = gf2::rank(d_at(g + 1));
    const std::size_t expected = (g % 2 == 0) ? 1 : 0;
    if (cycles - boundaries != expected) {
      add(Violation::Kind::Homology, "homology in grading " + std::to_string(g) + " has dimension " +
                                         std::to_string(cycles - boundaries) + ", expected " +
                                         std::to_string(expected));
    }
  }
  if (report.has(Violation::Kind::Homology)) return report;

  const GradingZeroHomology homology(c);
  std::vector<Rational> alg_levels;
  std::vector<Rational> alex_levels;
  for (const auto& e : homology.elements()) {
    alg_levels.emplace_back(e.alg);
    alex_levels.emplace_back(e.alex);
  }
  const auto min_alg = homology.least_generating_level(alg_levels);
  const auto min_alex = homology.least_generating_level(alex_levels);
  if (min_alg != Rational(0)) {
    add(Violation::Kind::AlgNormalization,
        "grading-0 generator has minimal algebraic level " + (min_alg ? min_alg->str() : "none") +
            ", expected 0");
  }
  if (min_alex != Rational(0)) {
    add(Violation::Kind::AlexNormalization,
        "grading-0 generator has minimal Alexander level " + (min_alex ? min_alex->str() : "none") +
            ", expected 0");
  }
  return report;
}

GradingZeroHomology::GradingZeroHomology(const Complex& c)
    : elements_(grading_slice(c, 0)),
      outgoing_(boundary_matrix(c, 0)),
      boundaries_(gf2::columns(boundary_matrix(c, 1))),
      boundary_basis_(elements_.size()) {
  for (const auto& b : boundaries_) boundary_basis_.insert(gf2::BitVector::from(b));
}

bool GradingZeroHomology::carries_generator(const std::vector<bool>& support) const {
  if (support.size() != elements_.size()) {
    throw std::invalid_argument("support mask does not match the grading-0 slice");
  }
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k]) cols.push_back(k);
  }
  std::vector<gf2::Vector> cycles;
  for (const auto& z : gf2::kernel_basis(outgoing_.select_columns(cols))) {
    std::vector<std::size_t> lifted;
    for (std::size_t p : z.support()) lifted.push_back(cols[p]);
    cycles.emplace_back(elements_.size(), std::move(lifted));
  }
  return gf2::quotient_dim(cycles, boundaries_) > 0;
}

std::optional<Rational> GradingZeroHomology::least_generating_level(
    std::span<const Rational> levels) const {
  if (levels.size() != elements_.size()) {
    throw std::invalid_argument("level list does not match the grading-0 slice");
  }
  std::vector<std::size_t> order(elements_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return levels[a] < levels[b]; });

  // Sweep upward through the levels, reducing each new element's boundary
  // against earlier ones. A column that reduces to zero closes a cycle; the
  // first cycle outside the boundary space fixes the answer.
  struct Pivot {
    gf2::BitVector image;
    gf2::BitVector combination;
  };
  std::vector<long> pivot_of(outgoing_.rows(), -1);
  std::vector<Pivot> pivots;
  for (std::size_t e : order) {
    gf2::BitVector image = gf2::BitVector::from(outgoing_.column_vector(e));
    gf2::BitVector combination(elements_.size());
    combination.set(e);
    for (auto low = image.lowest(); low; low = image.lowest()) {
      const long p = pivot_of[*low];
      if (p < 0) break;
      image ^= pivots[p].image;
      combination ^= pivots[p].combination;
    }
    if (auto low = image.lowest()) {
      pivot_of[*low] = static_cast<long>(pivots.size());
      pivots.push_back({std::move(image), std::move(combination)});
      continue;
    }
    if (!boundary_basis_.contains(std::move(combination))) return levels[e];
  }
  return std::nullopt;
}

Complex unknot() { return Complex({{"u0", 0, 0, 0}}, {{}}); }

Complex staircase(std::span<const int> steps) {
  if (steps.empty() || steps.size() % 2 != 0) {
    throw std::invalid_argument("staircase needs a nonempty, even-length step list");
  }
  int drop = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] <= 0) throw std::invalid_argument("staircase steps must be positive");
    if (k % 2 == 1) drop += steps[k];
  }

  std::vector<Generator> gens;
  std::vector<std::vector<std::size_t>> diff;
  int i = 0;
  int j = drop;
  gens.push_back({"x0", 0, i, j});
  diff.emplace_back();
  for (std::size_t k = 0; k < steps.size(); k += 2) {
    i += steps[k];
    const std::size_t white = gens.size();
    gens.push_back({"y" + std::to_string(k / 2), 1, i, j});
    diff.emplace_back();
    j -= steps[k + 1];
    gens.push_back({"x" + std::to_string(k / 2 + 1), 0, i, j});
    diff.emplace_back();
    diff[white] = {white - 1, white + 1};
  }
  return Complex(std::move(gens), std::move(diff));
}

}  // namespace upsilon

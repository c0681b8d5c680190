#include "upsilon/alt_definition.hpp"

#include <algorithm>
#include <stdexcept>

#include "upsilon/upsilon.hpp"

namespace upsilon {

namespace {

void require_t(const Rational& t) {
  if (!(Rational(0) < t && t <= Rational(2))) {
    throw std::out_of_range("t-modified complex needs 0 < t <= 2, got " + t.str());
  }
}

}  // namespace

Rational TComplex::exponent(std::size_t k, int grading) const {
  return generators.at(k).grt - Rational(grading);
}

Rational TComplex::level(std::size_t k, int grading) const {
  return generators.at(k).alg_prime - exponent(k, grading) / Rational(2);
}

gf2::Matrix TComplex::boundary(int grading) const {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t x = 0; x < generators.size(); ++x) {
    for (const auto& arrow : differential[x]) {
      // v^e x maps to v^{e+alpha} y, which must be y's element one grading down.
      if (exponent(x, grading) + arrow.alpha != exponent(arrow.target, grading - 1)) {
        throw std::logic_error("∂_t term does not land in the adjacent grading");
      }
      entries.emplace_back(arrow.target, x);
    }
  }
  return gf2::Matrix(generators.size(), generators.size(), std::move(entries));
}

TComplex build_tcomplex(const Complex& c, const Rational& t) {
  require_t(t);
  TComplex tc;
  tc.t = t;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Generator& g = c.generator(k);
    const Rational grt = Rational(g.maslov) - t * Rational(g.alex - g.alg);
    if (!(grt * Rational(t.den())).is_integer()) {
      throw std::logic_error("gr_t of " + g.id + " is not in (1/n)Z");
    }
    tc.generators.push_back({k, grt, Rational(g.alg)});
  }

  tc.differential.resize(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    const Generator& gx = c.generator(x);
    for (std::size_t y : c.boundary(x)) {
      const Generator& gy = c.generator(y);
      // The exponent is whatever makes v^alpha y sit one grading below x.
      const Rational alpha = tc.generators[y].grt - tc.generators[x].grt + Rational(1);
      if (alpha != t * Rational((gx.alex - gy.alex) - (gx.alg - gy.alg))) {
        throw std::logic_error("∂_t exponent mismatch on " + gx.id + " -> " + gy.id);
      }
      // Measured against U-normalized generators the exponent is
      // t·Δalex + (2 - t)·Δalg, which must be nonnegative; equivalently the
      // algebraic level does not rise along the arrow.
      if (alpha + Rational(2 * (gx.alg - gy.alg)) < Rational(0)) {
        throw std::logic_error("∂_t raises the algebraic level on " + gx.id + " -> " + gy.id);
      }
      tc.differential[x].push_back({y, alpha});
    }
  }

  if (gf2::multiply(tc.boundary(0), tc.boundary(1)).nonzeros() != 0) {
    throw std::logic_error("∂_t∘∂_t ≠ 0");
  }
  return tc;
}

Rational upsilon_alt(const Complex& c, const Rational& t) {
  const TComplex tc = build_tcomplex(c, t);
  const std::size_t n = tc.generators.size();
  const gf2::Matrix outgoing = tc.boundary(0);
  const std::vector<gf2::Vector> boundaries = gf2::columns(tc.boundary(1));

  std::vector<Rational> levels;
  for (std::size_t k = 0; k < n; ++k) levels.push_back(tc.level(k, 0));
  std::vector<Rational> candidates = levels;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& s : candidates) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k) {
      if (levels[k] <= s) support.push_back(k);
    }
    std::vector<gf2::Vector> cycles;
    for (const auto& z : gf2::kernel_basis(outgoing.select_columns(support))) {
      std::vector<std::size_t> lifted;
      for (std::size_t p : z.support()) lifted.push_back(support[p]);
      cycles.emplace_back(n, std::move(lifted));
    }
    if (gf2::quotient_dim(cycles, boundaries) > 0) return Rational(-2) * s;
  }
  throw std::logic_error("C' carries no grading-0 homology class");
}

bool transform_check(const Complex& c, const Rational& t) {
  const TComplex tc = build_tcomplex(c, t);
  const Rational half = t / Rational(2);
  const Rational slope = Rational(1) - Rational(2) / t;
  const Rational intercept = Rational(2) / t;

  auto forward = [&](const Rational& i, const Rational& j) {
    return std::pair{(Rational(1) - half) * i + half * j, -half * i + (Rational(1) + half) * j};
  };
  auto inverse = [&](const Rational& i, const Rational& j) {
    return std::pair{(Rational(1) + half) * i - half * j, half * i + (Rational(1) - half) * j};
  };
  auto on_line = [&](const std::pair<Rational, Rational>& p, const Rational& s) {
    return p.second == slope * p.first + intercept * s;
  };

  const auto elements = grading_slice(c, 0);
  std::vector<Rational> ft_levels;
  std::vector<Rational> prime_levels;
  for (const auto& e : elements) {
    const Rational i(e.alg);
    const Rational j(e.alex);
    const auto image = forward(i, j);
    if (inverse(image.first, image.second) != std::pair{i, j}) return false;
    const Rational ft = ft_level(e.alg, e.alex, t);
    if (image.first != ft) return false;
    // The same generator's grading-0 element of C'.
    if (tc.level(e.gen, 0) != ft) return false;
    if (!on_line({i, j}, ft)) return false;
    ft_levels.push_back(ft);
    prime_levels.push_back(tc.level(e.gen, 0));
  }

  std::vector<Rational> candidates = ft_levels;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& s : candidates) {
    // The vertical line alg' = s pulls back to y = (1 - 2/t)x + (2/t)s.
    for (int z : {0, 1}) {
      if (!on_line(inverse(s, Rational(z)), s)) return false;
    }
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if ((ft_levels[k] <= s) != (prime_levels[k] <= s)) return false;
    }
  }
  return true;
}

}  // namespace upsilon

#include "upsilon/algebra.hpp"

namespace upsilon {

Complex tensor(const Complex& a, const Complex& b) {
  const std::size_t nb = b.size();
  auto pair_index = [nb](std::size_t x, std::size_t y) { return x * nb + y; };

  std::vector<Generator> gens;
  std::vector<std::vector<std::size_t>> diff;
  gens.reserve(a.size() * nb);
  diff.reserve(a.size() * nb);
  for (std::size_t x = 0; x < a.size(); ++x) {
    const Generator& gx = a.generator(x);
    for (std::size_t y = 0; y < nb; ++y) {
      const Generator& gy = b.generator(y);
      gens.push_back({gx.id + "⊗" + gy.id, gx.maslov + gy.maslov, gx.alg + gy.alg, gx.alex + gy.alex});
      // The two Leibniz terms never coincide: one changes the first factor, the other the second.
      std::vector<std::size_t> terms;
      for (std::size_t xp : a.boundary(x)) terms.push_back(pair_index(xp, y));
      for (std::size_t yp : b.boundary(y)) terms.push_back(pair_index(x, yp));
      diff.push_back(std::move(terms));
    }
  }
  return Complex(std::move(gens), std::move(diff));
}

Complex dual(const Complex& c) {
  std::vector<Generator> gens;
  std::vector<std::vector<std::size_t>> diff(c.size());
  gens.reserve(c.size());
  for (const auto& g : c.generators()) gens.push_back({g.id + "*", -g.maslov, -g.alg, -g.alex});
  for (std::size_t y = 0; y < c.size(); ++y) {
    for (std::size_t x : c.boundary(y)) diff[x].push_back(y);
  }
  return Complex(std::move(gens), std::move(diff));
}

}  // namespace upsilon

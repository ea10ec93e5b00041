#include "charfield/oracles.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace charfield::oracle {

std::uint64_t totient_by_gcd(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

std::uint64_t index_subgroups_of_units(std::uint32_t n, std::uint32_t d) {
  if (n == 0 || d < 2) throw std::invalid_argument("index_subgroups_of_units needs n >= 1 and d >= 2");
  const std::uint64_t nn = n;
  std::vector<std::uint32_t> units;
  for (std::uint32_t k = 0; k < n; ++k)
    if (std::gcd(k, n) == 1) units.push_back(k);
  if (n == 1) units = {0};
  const std::uint32_t one = 1 % n;

  // Greedy generating set.
  std::vector<std::uint32_t> gens;
  std::vector<bool> in(n, false);
  in[one] = true;
  for (auto u : units) {
    if (in[u]) continue;
    gens.push_back(u);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < n; ++x)
      if (in[x]) queue.push_back(x);
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto g : gens) {
        const auto y = static_cast<std::uint32_t>(x * std::uint64_t{g} % nn);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
  }

  // Label the Cayley graph by each assignment of generator images in Z/d; consistent labelings are homomorphisms.
  std::set<std::vector<std::uint32_t>> kernels;
  std::vector<std::uint32_t> assign(gens.size(), 0);
  for (;;) {
    std::vector<int> phi(n, -1);
    phi[one] = 0;
    std::deque<std::uint32_t> queue{one};
    bool hom = true;
    while (!queue.empty() && hom) {
      const auto x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto y = static_cast<std::uint32_t>(x * std::uint64_t{gens[i]} % nn);
        const int v = static_cast<int>((phi[x] + assign[i]) % d);
        if (phi[y] < 0) {
          phi[y] = v;
          queue.push_back(y);
        } else if (phi[y] != v) {
          hom = false;
          break;
        }
      }
    }
    if (hom) {
      std::set<int> image;
      std::vector<std::uint32_t> kernel;
      for (auto u : units) {
        image.insert(phi[u]);
        if (phi[u] == 0) kernel.push_back(u);
      }
      if (image.size() == d) kernels.insert(kernel);
    }
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == d) assign[i++] = 0;
    if (i == assign.size()) break;
  }
  return kernels.size();
}

}  // namespace charfield::oracle

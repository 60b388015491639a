#include "affsel/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "affsel/errors.h"
#include "affsel/radio_network.h"
#include "affsel/rng.h"

namespace affsel {

namespace {

std::vector<Link> RandomNeighborhoods(std::size_t n, std::size_t max_degree, Rng& rng) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (max_degree < 1 || max_degree > n) throw DomainError("need 1 <= max_degree <= n");
  std::vector<Link> links;
  std::vector<NodeIndex> pool(n);
  for (NodeIndex w = 0; w < n; ++w) {
    const auto degree = static_cast<std::size_t>(rng.UniformInt(1, max_degree));
    std::iota(pool.begin(), pool.end(), NodeIndex{0});
    // Partial Fisher-Yates: the first `degree` entries are the sample.
    for (std::size_t k = 0; k < degree; ++k) {
      const auto pick = static_cast<std::size_t>(rng.UniformInt(k, n - 1));
      std::swap(pool[k], pool[pick]);
      links.push_back({pool[k], w});
    }
  }
  return links;
}

}  // namespace

Instance GenerateRnInstance(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  Rng rng(seed);
  return EncodeRadioNetwork(n, RandomNeighborhoods(n, max_degree, rng));
}

Instance GenerateRandomInstance(const RandomInstanceSpec& spec, std::uint64_t seed) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw DomainError("density outside [0,1]");
  if (!(spec.max_value > 0.0 && spec.max_value <= 1.0)) {
    throw DomainError("max_value outside (0,1]");
  }
  Rng rng(seed);
  LayerTopology topology(spec.n, RandomNeighborhoods(spec.n, spec.max_degree, rng));
  AffectanceMatrix::Builder builder(topology);
  const double quantum = spec.quantum_bits > 0 ? std::ldexp(1.0, -spec.quantum_bits) : 0.0;
  for (std::size_t id = 0; id < topology.link_count(); ++id) {
    for (NodeIndex u = 0; u < spec.n; ++u) {
      if (u == topology.link(id).transmitter) continue;
      if (!rng.Bernoulli(spec.density)) continue;
      double value = spec.max_value * (1.0 - rng.Uniform());  // (0, max_value]
      if (quantum > 0.0) value = std::min(1.0, std::ceil(value / quantum) * quantum);
      builder.SetById(u, id, value);
    }
  }
  return Instance(std::move(topology), std::move(builder).Build());
}

}  // namespace affsel

#include "affsel/radio_network.h"

namespace affsel {

Instance EncodeRadioNetwork(std::size_t n, std::vector<Link> links) {
  return EncodeRadioNetwork(LayerTopology(n, std::move(links)));
}

Instance EncodeRadioNetwork(const LayerTopology& topology) {
  AffectanceMatrix::Builder builder(topology);
  for (NodeIndex w = 0; w < topology.size(); ++w) {
    auto senders = topology.Senders(w);
    const std::size_t first = topology.FirstLinkOf(w);
    for (std::size_t k = 0; k < senders.size(); ++k) {
      for (NodeIndex u : senders) {
        if (u != senders[k]) builder.SetById(u, first + k, 1.0);
      }
    }
  }
  return Instance(topology, std::move(builder).Build());
}

}  // namespace affsel

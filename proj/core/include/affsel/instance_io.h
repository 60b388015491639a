#pragma once

#include <string>

#include "affsel/affectance_matrix.h"

namespace affsel {

// Instance file:
//   { "n": int, "links": [[v, w], ...], "affectance": [[u, v, w, value], ...] }
// with 1-based labels. Omitted triples are 0. Values must lie in [0, 1] and
// self-affectance must be 0; violations raise ParseError naming the entry.
Instance ParseInstance(const std::string& text);
Instance LoadInstance(const std::string& path);

// Deterministic text: links in (receiver, transmitter) order, one nonzero
// triple per line in (link, interferer) order, shortest round-trip doubles.
std::string FormatInstance(const Instance& instance);
void SaveInstance(const Instance& instance, const std::string& path);

}  // namespace affsel

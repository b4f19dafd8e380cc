#pragma once

#include <string>

#include "qps/frequency.hpp"
#include "qps/potential.hpp"

namespace qps {

// JSON encodings. Continued-fraction quotients are serialized as decimal
// strings so arbitrarily large entries survive the round trip.

std::string frequency_to_json(const Frequency& om);
Frequency frequency_from_json(const std::string& text);

std::string potential_to_json(const Potential& pot);
Potential potential_from_json(const std::string& text);

}  // namespace qps

#pragma once

#include <string>

namespace offres {

/// Shortest round-trip decimal representation, locale-independent.
std::string format_double(double value);

}  // namespace offres

#pragma once

// Small recursive-descent parser for polynomial literals such as
// "1 - t + q*t^2 + a*(q + q^2*t)" or "(1-t^6)/(1-t^2)". Used by the fixture
// registry, the CLI ring literals, and tests. Division must be exact.

#include <string>

#include "exactalg/laurent.hpp"

namespace dahazeta::exactalg {

LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace dahazeta::exactalg

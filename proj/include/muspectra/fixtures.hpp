#pragma once

#include <map>
#include <string>
#include <vector>

#include "muspectra/certificate.hpp"

namespace muspectra {

/// The published Petersen colorings: phi, psi, epsilon, sigma, the psi0..psi10
/// descent from 15 to 5 colors and the lambda0..lambda10 ascent from 4 to 14
/// colors. Each certificate carries its claimed f.
std::map<std::string, Certificate> fixtures();

/// Fixture names in publication order.
const std::vector<std::string>& fixture_names();

}  // namespace muspectra

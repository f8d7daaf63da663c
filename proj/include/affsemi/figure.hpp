// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "affsemi/certificate.hpp"

namespace affsemi {

/// Self-contained SVG 1.1 drawing of the square B = [L, R]^2, the diagonal,
/// the graph of each inverse map and the ping-pong intervals on the right
/// edge. Uses the sorted fixed-point certificate, or the two-generator test.
/// Throws NotCertified when neither applies. Coordinates are doubles and for
/// display only.
std::string plot_figure(const MapSystem& sys);

/// Same drawing from an existing interval certificate.
std::string plot_certificate(const MapSystem& sys, const FreenessCertificate& cert);

}  // namespace affsemi

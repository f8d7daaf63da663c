// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "affsemi/affine.hpp"

namespace affsemi {

/// Text form of a map system:
///
///     # comment
///     name: klarner
///     basis: 2, 3
///     2 ; 1
///     2 ; 1*sqrt(2)
///
/// `name:` and `basis:` are optional and must precede the maps; each map line
/// is `slope ; intercept` in the scalar grammar.
struct SystemFile {
  std::optional<std::string> name;
  MapSystem system;
};

/// ParseError carries "line L, column C"; BasisError for bad radicands.
SystemFile parse_system_file(std::string_view text);
inline MapSystem parse_system(std::string_view text) { return parse_system_file(text).system; }

/// Canonical text accepted by parse_system_file.
std::string print_system(const MapSystem& sys, const std::optional<std::string>& name = std::nullopt);

}  // namespace affsemi

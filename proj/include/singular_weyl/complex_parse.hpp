#pragma once

#include <string>

#include "singular_weyl/params.hpp"

namespace sw {

/// Parses "re+imi" style complex literals: "-0.25", "0.5i", "0+0.5i",
/// "1e-1-2i", "i", "-i". Preset names (schrodinger, heat) are accepted too.
/// Throws DomainError on anything else.
Complex parse_complex(const std::string& text);

/// Inverse of parse_complex for display, e.g. "0+0.5i".
std::string format_complex(Complex z);

}  // namespace sw

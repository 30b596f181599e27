#pragma once

#include <string>

#include "toggledyn/stones.hpp"

namespace toggledyn {

// Stones diagram as a bracketed ring and coins diagram as a row; stone and coin colors
// are the letters a, b, c, ... (stone s_i is the i-th letter).
std::string render_ascii(const Timeline& tl, long long t);
// One row per time in [t_begin, t_end], fixed palette.
std::string render_svg(const Timeline& tl, long long t_begin, long long t_end);

}  // namespace toggledyn

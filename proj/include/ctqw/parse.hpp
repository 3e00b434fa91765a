// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace ctqw {

/**
 * Parses a real literal with optional π and fraction:
 *   "0.5", "-1e-3", "1/2", "pi", "-pi/4", "3*pi/8", "2pi".
 * Throws std::invalid_argument otherwise.
 */
[[nodiscard]] double parse_real(std::string_view text);

/// Shortest decimal string that reads back to exactly `v`.
[[nodiscard]] std::string format_shortest(double v);

/// `v` with 17 significant digits.
[[nodiscard]] std::string format_17g(double v);

}  // namespace ctqw

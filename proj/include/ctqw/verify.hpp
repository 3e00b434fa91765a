// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ctqw {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // measured quantity vs threshold
    double seconds = 0.0;
};

/// Self-check suite behind `ctqw verify`: oracle agreement and global invariants.
/// Each check runs with a fixed RNG seed, so repeated runs agree.
[[nodiscard]] std::vector<CheckResult> run_verification(
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace ctqw

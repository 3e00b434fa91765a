// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctqw {

/// Unwritable or unreadable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Comma-separated output with a mandatory header row; cells are preformatted strings.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void write_row(const std::vector<std::string>& cells);
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace ctqw

// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/csv.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <numbers>
#include <stdexcept>

#include "ctqw/parse.hpp"

namespace ctqw {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_real(std::string_view text) {
    throw std::invalid_argument("cannot parse real value '" + std::string(text) + "'");
}

double parse_plain(std::string_view s, std::string_view whole) {
    s = trim(s);
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) bad_real(whole);
    return v;
}

}  // namespace

double parse_real(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) bad_real(text);
    double sign = 1.0;
    if (s.front() == '-' || s.front() == '+') {
        if (s.front() == '-') sign = -1.0;
        s.remove_prefix(1);
        s = trim(s);
    }

    std::string_view num = s;
    std::string_view den;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }

    double value = 0.0;
    num = trim(num);
    if (const auto p = num.find("pi"); p != std::string_view::npos) {
        if (p + 2 != num.size()) bad_real(text);
        std::string_view coef = trim(num.substr(0, p));
        if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
        value = (coef.empty() ? 1.0 : parse_plain(coef, text)) * std::numbers::pi;
    } else {
        // Leading sign already consumed, so a bare exponent sign is the only other one allowed.
        value = parse_plain(num, text);
    }
    if (!den.empty() || s.find('/') != std::string_view::npos) {
        const double d = parse_plain(den, text);
        if (d == 0.0) bad_real(text);
        value /= d;
    }
    return sign * value;
}

std::string format_shortest(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) throw std::runtime_error("format_shortest failed");
    return std::string(buf.data(), ptr);
}

std::string format_17g(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    if (ec != std::errc()) throw std::runtime_error("format_17g failed");
    return std::string(buf.data(), ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header) : path_(path) {
    out_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!out_) throw IoError("cannot open '" + path.string() + "' for writing");
    write_row(header);
}

void CsvWriter::write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw IoError("write failed on '" + path_.string() + "'");
}

void CsvWriter::close() {
    out_.close();
    if (out_.fail()) throw IoError("close failed on '" + path_.string() + "'");
}

}  // namespace ctqw

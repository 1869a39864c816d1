#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace dsp {

// Shortest decimal form that is still exact to 17 significant digits,
// so emitted datasets are byte-stable across runs.
std::string format_g17(double v);

std::string format_complex17(double re, double im);

// FNV-1a, used to stamp outputs with a scenario fingerprint.
std::uint64_t fnv1a64(const std::string& text);

std::string hex16(std::uint64_t v);

std::string read_text_file(const std::string& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

inline constexpr const char* kToolVersion = "dsp-soliton 1.0.0";

}  // namespace dsp

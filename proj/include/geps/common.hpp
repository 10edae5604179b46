#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace geps {

using Rng = std::mt19937_64;

// Bad user input, config or data content. The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem-level failure (unreadable / unwritable paths). Exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Derive an independent stream seed from a base seed (splitmix64 step).
uint64_t derive_seed(uint64_t base, uint64_t stream);

std::vector<std::string> split_ws(const std::string& line);
std::vector<std::string> split_char(const std::string& line, char sep);

// 6 significant digits, the embedding-file convention.
std::string format_g6(double v);
// Round-trip exact formatting for checkpoints.
std::string format_g17(double v);

std::string read_file(const std::string& path);
// Write via temp file + rename so readers never observe partial output.
void write_file_atomic(const std::string& path, const std::string& content);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

}  // namespace geps

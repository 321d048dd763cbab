#pragma once

#include <cstdint>
#include <string>

#include "qecb/channel.hpp"

namespace qecb {

/// Channel JSON schema:
///   {"d_in": int, "d_out": int, "kraus": [[[[re, im], ...] row, ...] matrix, ...]}
/// Round trip is bit-stable for finite doubles.
std::string channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const std::string& text);

QuantumChannel load_channel(const std::string& path);
void save_channel(const QuantumChannel& ch, const std::string& path);

/// FNV-1a over raw bytes, hex-encoded; used to tag CLI outputs with their
/// input files for reproducibility.
std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);
std::string file_hash(const std::string& path);

/// Write via temp file in the same directory followed by rename.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// "%.10g" formatting used by every CSV column.
std::string fmt_g10(double x);

}  // namespace qecb

#include "qecb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qecb {

using nlohmann::json;

std::string channel_to_json(const QuantumChannel& ch) {
  json j;
  j["d_in"] = ch.d_in;
  j["d_out"] = ch.d_out;
  json kraus = json::array();
  for (const auto& k : ch.kraus) {
    json mat = json::array();
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < k.cols(); ++c)
        row.push_back({k(r, c).real(), k(r, c).imag()});
      mat.push_back(std::move(row));
    }
    kraus.push_back(std::move(mat));
  }
  j["kraus"] = std::move(kraus);
  return j.dump();
}

QuantumChannel channel_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("d_in") || !j.contains("d_out") ||
      !j.contains("kraus"))
    throw std::invalid_argument("channel json: missing d_in/d_out/kraus");
  QuantumChannel ch;
  ch.d_in = j.at("d_in").get<int>();
  ch.d_out = j.at("d_out").get<int>();
  if (ch.d_in < 1 || ch.d_out < 1 || ch.d_in > kDimCap || ch.d_out > kDimCap)
    throw std::invalid_argument("channel json: dimension out of range");
  const json& kraus = j.at("kraus");
  if (!kraus.is_array() || kraus.empty())
    throw std::invalid_argument("channel json: kraus must be a nonempty array");
  for (const auto& mat : kraus) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != ch.d_out)
      throw std::invalid_argument("channel json: kraus matrix must have d_out rows");
    CMat k(ch.d_out, ch.d_in);
    for (int r = 0; r < ch.d_out; ++r) {
      const auto& row = mat.at(static_cast<std::size_t>(r));
      if (!row.is_array() || static_cast<int>(row.size()) != ch.d_in)
        throw std::invalid_argument("channel json: kraus row must have d_in entries");
      for (int c = 0; c < ch.d_in; ++c) {
        const auto& e = row.at(static_cast<std::size_t>(c));
        if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() ||
            !e.at(1).is_number())
          throw std::invalid_argument("channel json: entry must be [re, im]");
        k(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    if (!k.allFinite())
      throw std::invalid_argument("channel json: non-finite entry");
    ch.kraus.push_back(std::move(k));
  }
  return ch;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuantumChannel load_channel(const std::string& path) {
  return channel_from_json(read_file(path));
}

void save_channel(const QuantumChannel& ch, const std::string& path) {
  atomic_write(path, channel_to_json(ch) + "\n");
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string file_hash(const std::string& path) {
  return fnv1a_hex(read_file(path));
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + tmp);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + tmp + " -> " + path);
}

std::string fmt_g10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace qecb

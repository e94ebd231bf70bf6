#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace hive {

/** SHA-256 hex digest of a byte string. */
std::string sha256_hex(const std::string& data);

/**
 * Reproducibility envelope written into every CLI result: the command, the
 * full effective configuration (seeds included), a content hash of that
 * configuration, and timing. Re-running the recorded config reproduces
 * deterministic outputs bit-exactly.
 */
struct RunRecord {
  std::string command;
  nlohmann::json config;
  std::string input_hash;
  nlohmann::json outputs;
  double elapsed_ms = 0.0;

  static RunRecord start(std::string command, nlohmann::json config);
  nlohmann::json to_json() const;
};

}  // namespace hive

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pir/errors.hpp"

namespace pir {

/// Byte-exact frame: magic "PI", version 1, frame type, big-endian database
/// index (2 bytes) and payload length (4 bytes), then the payload. Query
/// payloads are one byte per query entry; answer payloads are raw field
/// symbols, one byte each for GF(256).
struct WireFrame {
  enum class Type : uint8_t { Query = 0, Answer = 1, Error = 2 };

  static constexpr uint8_t kMagic0 = 0x50;  // 'P'
  static constexpr uint8_t kMagic1 = 0x49;  // 'I'
  static constexpr uint8_t kVersion = 1;
  static constexpr size_t kHeaderSize = 10;

  Type type = Type::Query;
  uint16_t db_index = 0;
  std::vector<uint8_t> payload;

  std::vector<uint8_t> encode() const;
  static WireFrame decode(const std::vector<uint8_t>& bytes);

  static WireFrame make_error(uint16_t db_index, uint8_t code, const std::string& message);

  bool operator==(const WireFrame&) const = default;
};

}  // namespace pir

#include "pir/wire.hpp"

namespace pir {

std::vector<uint8_t> WireFrame::encode() const {
  std::vector<uint8_t> out;
  out.reserve(kHeaderSize + payload.size());
  out.push_back(kMagic0);
  out.push_back(kMagic1);
  out.push_back(kVersion);
  out.push_back(uint8_t(type));
  out.push_back(uint8_t(db_index >> 8));
  out.push_back(uint8_t(db_index & 0xff));
  uint32_t len = uint32_t(payload.size());
  out.push_back(uint8_t(len >> 24));
  out.push_back(uint8_t(len >> 16));
  out.push_back(uint8_t(len >> 8));
  out.push_back(uint8_t(len & 0xff));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

WireFrame WireFrame::decode(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < kHeaderSize) throw MalformedFrame("truncated header");
  if (bytes[0] != kMagic0 || bytes[1] != kMagic1) throw MalformedFrame("bad magic");
  if (bytes[2] != kVersion) throw MalformedFrame("unsupported version");
  if (bytes[3] > uint8_t(Type::Error)) throw MalformedFrame("unknown frame type");
  WireFrame frame;
  frame.type = Type(bytes[3]);
  frame.db_index = uint16_t(bytes[4]) << 8 | bytes[5];
  uint32_t len = uint32_t(bytes[6]) << 24 | uint32_t(bytes[7]) << 16 | uint32_t(bytes[8]) << 8 |
                 uint32_t(bytes[9]);
  if (bytes.size() != kHeaderSize + len) throw MalformedFrame("payload length mismatch");
  frame.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
  return frame;
}

WireFrame WireFrame::make_error(uint16_t db_index, uint8_t code, const std::string& message) {
  WireFrame frame;
  frame.type = Type::Error;
  frame.db_index = db_index;
  frame.payload.push_back(code);
  frame.payload.insert(frame.payload.end(), message.begin(), message.end());
  return frame;
}

}  // namespace pir

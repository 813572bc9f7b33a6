#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pir/scheme.hpp"
#include "pir/scheme_k2.hpp"
#include "pir/wire.hpp"

#include "json.hpp"

namespace pir {

/// Bytes per answer symbol on the wire: 1 for q <= 256, else 2 big-endian.
int symbol_width(uint32_t q);

std::vector<uint8_t> encode_symbols(const std::vector<Symbol>& symbols, uint32_t q);
std::vector<Symbol> decode_symbols(const std::vector<uint8_t>& payload, uint32_t q);

/// A stateless database holding one immutable shard. It sees only query
/// payloads, never the requested index.
class DatabaseNode {
 public:
  DatabaseNode(Shard shard, const LinearScheme& scheme)
      : shard_(std::move(shard)), linear_(&scheme) {}
  DatabaseNode(Shard shard, const SchemeK2& scheme) : shard_(std::move(shard)), k2_(&scheme) {}

  int db_index() const { return shard_.db_index(); }

  /// Query frame in, answer frame out; malformed input yields an error
  /// frame and leaves the node alive.
  WireFrame handle_frame(const WireFrame& frame) const;

 private:
  Shard shard_;
  const LinearScheme* linear_ = nullptr;
  const SchemeK2* k2_ = nullptr;
};

std::vector<DatabaseNode> make_nodes(const LinearScheme& scheme, const MessageSet& msgs);
std::vector<DatabaseNode> make_nodes(const SchemeK2& scheme, const MessageSet& msgs);

/// One full protocol run, with the exact frames that crossed the wire.
struct RetrievalTranscript {
  SystemParams params;
  std::string scheme;
  int k_star = 0;
  std::vector<int> key;         // keyed schemes
  int k2_strategy = -1;         // 0 = Sum, 1 = Direct
  std::vector<int> k2_labels;   // per-database group label
  std::vector<std::vector<uint8_t>> query_frames;
  std::vector<std::vector<uint8_t>> answer_frames;
  std::vector<Symbol> reconstructed;
  uint64_t uploaded_bytes = 0;
  uint64_t downloaded_bytes = 0;
  uint64_t downloaded_symbols = 0;

  nlohmann::json to_json() const;

  bool operator==(const RetrievalTranscript&) const = default;
};

/// Frame round-trip to database n: in-process or over a socket.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual WireFrame roundtrip(int n, const WireFrame& query) = 0;
};

class InProcessTransport : public Transport {
 public:
  explicit InProcessTransport(const std::vector<DatabaseNode>& nodes) : nodes_(&nodes) {}
  WireFrame roundtrip(int n, const WireFrame& query) override;

 private:
  const std::vector<DatabaseNode>* nodes_;
};

/// Serves one node over a loopback TCP socket, one frame at a time per
/// connection. The listening port is chosen by the OS.
class NodeServer {
 public:
  explicit NodeServer(const DatabaseNode& node);
  ~NodeServer();
  NodeServer(const NodeServer&) = delete;
  NodeServer& operator=(const NodeServer&) = delete;

  uint16_t port() const { return port_; }

 private:
  void serve();

  const DatabaseNode* node_;
  int listen_fd_ = -1;
  uint16_t port_ = 0;
  std::atomic<bool> stop_{false};
  std::thread thread_;
};

class SocketTransport : public Transport {
 public:
  explicit SocketTransport(std::vector<uint16_t> ports) : ports_(std::move(ports)) {}
  WireFrame roundtrip(int n, const WireFrame& query) override;

 private:
  std::vector<uint16_t> ports_;
};

/// Executes a full retrieval: sample the key, query all N databases,
/// reconstruct and account traffic. When expected is given, the
/// reconstruction is checked against the stored message and a mismatch is
/// surfaced loudly.
RetrievalTranscript retrieve(const LinearScheme& scheme, Transport& transport, int k_star,
                             Rng& rng, const MessageSet* expected = nullptr);

RetrievalTranscript retrieve(const SchemeK2& scheme, Transport& transport, int k_star, Rng& rng,
                             const MessageSet* expected = nullptr);

}  // namespace pir

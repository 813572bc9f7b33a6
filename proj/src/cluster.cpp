#include "pir/cluster.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

namespace pir {

int symbol_width(uint32_t q) { return q <= 256 ? 1 : 2; }

std::vector<uint8_t> encode_symbols(const std::vector<Symbol>& symbols, uint32_t q) {
  std::vector<uint8_t> out;
  int w = symbol_width(q);
  out.reserve(symbols.size() * size_t(w));
  for (Symbol s : symbols) {
    if (w == 2) out.push_back(uint8_t(s >> 8));
    out.push_back(uint8_t(s & 0xff));
  }
  return out;
}

std::vector<Symbol> decode_symbols(const std::vector<uint8_t>& payload, uint32_t q) {
  int w = symbol_width(q);
  if (payload.size() % size_t(w) != 0) throw MalformedFrame("answer payload size mismatch");
  std::vector<Symbol> out;
  out.reserve(payload.size() / size_t(w));
  for (size_t i = 0; i < payload.size(); i += size_t(w)) {
    Symbol s = w == 2 ? Symbol(uint16_t(payload[i]) << 8 | payload[i + 1]) : Symbol(payload[i]);
    out.push_back(s);
  }
  return out;
}

WireFrame DatabaseNode::handle_frame(const WireFrame& frame) const {
  try {
    if (frame.type != WireFrame::Type::Query)
      return WireFrame::make_error(uint16_t(db_index()), 1, "expected a query frame");
    if (frame.db_index != uint16_t(db_index()))
      return WireFrame::make_error(uint16_t(db_index()), 2, "frame addressed to another database");
    uint32_t q = shard_.params().q;
    std::vector<Symbol> symbols;
    if (linear_) {
      if (frame.payload.size() != size_t(shard_.params().k))
        return WireFrame::make_error(uint16_t(db_index()), 3, "bad query payload length");
      std::vector<int> query(frame.payload.begin(), frame.payload.end());
      symbols = linear_->answer(shard_, query);
    } else {
      if (frame.payload.size() != 1 || frame.payload[0] > uint8_t(QueryTagK2::SendNothing))
        return WireFrame::make_error(uint16_t(db_index()), 3, "bad query payload");
      symbols = k2_->answer(shard_, QueryTagK2(frame.payload[0]));
    }
    WireFrame answer;
    answer.type = WireFrame::Type::Answer;
    answer.db_index = uint16_t(db_index());
    answer.payload = encode_symbols(symbols, q);
    return answer;
  } catch (const Error& e) {
    return WireFrame::make_error(uint16_t(db_index()), 4, e.what());
  }
}

std::vector<DatabaseNode> make_nodes(const LinearScheme& scheme, const MessageSet& msgs) {
  std::vector<DatabaseNode> nodes;
  for (auto& shard : encode_storage(scheme.row_code(), msgs))
    nodes.emplace_back(std::move(shard), scheme);
  return nodes;
}

std::vector<DatabaseNode> make_nodes(const SchemeK2& scheme, const MessageSet& msgs) {
  std::vector<DatabaseNode> nodes;
  for (auto& shard : encode_storage(scheme.code(), msgs))
    nodes.emplace_back(std::move(shard), scheme);
  return nodes;
}

nlohmann::json RetrievalTranscript::to_json() const {
  nlohmann::json j;
  j["n"] = params.n;
  j["t"] = params.t;
  j["k"] = params.k;
  j["q"] = params.q;
  j["scheme"] = scheme;
  j["k_star"] = k_star;
  if (!key.empty()) j["key"] = key;
  if (k2_strategy >= 0) {
    j["k2_strategy"] = k2_strategy == 0 ? "sum" : "direct";
    j["k2_labels"] = k2_labels;
  }
  j["query_frames"] = query_frames;
  j["answer_frames"] = answer_frames;
  j["reconstructed"] = reconstructed;
  j["uploaded_bytes"] = uploaded_bytes;
  j["downloaded_bytes"] = downloaded_bytes;
  j["downloaded_symbols"] = downloaded_symbols;
  return j;
}

WireFrame InProcessTransport::roundtrip(int n, const WireFrame& query) {
  return (*nodes_)[size_t(n)].handle_frame(query);
}

namespace {

void write_all(int fd, const std::vector<uint8_t>& bytes) {
  size_t off = 0;
  while (off < bytes.size()) {
    ssize_t w = ::write(fd, bytes.data() + off, bytes.size() - off);
    if (w <= 0) throw NodeUnreachable("socket write failed");
    off += size_t(w);
  }
}

bool read_exact(int fd, uint8_t* buf, size_t len) {
  size_t off = 0;
  while (off < len) {
    ssize_t r = ::read(fd, buf + off, len - off);
    if (r == 0) return false;
    if (r < 0) throw NodeUnreachable("socket read failed");
    off += size_t(r);
  }
  return true;
}

std::optional<WireFrame> read_frame(int fd) {
  std::vector<uint8_t> bytes(WireFrame::kHeaderSize);
  if (!read_exact(fd, bytes.data(), bytes.size())) return std::nullopt;
  uint32_t len = uint32_t(bytes[6]) << 24 | uint32_t(bytes[7]) << 16 | uint32_t(bytes[8]) << 8 |
                 uint32_t(bytes[9]);
  bytes.resize(WireFrame::kHeaderSize + len);
  if (len > 0 && !read_exact(fd, bytes.data() + WireFrame::kHeaderSize, len))
    throw MalformedFrame("truncated frame body");
  return WireFrame::decode(bytes);
}

}  // namespace

NodeServer::NodeServer(const DatabaseNode& node) : node_(&node) {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw NodeUnreachable("socket() failed");
  int yes = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0 ||
      ::listen(listen_fd_, 16) < 0) {
    ::close(listen_fd_);
    throw NodeUnreachable("bind/listen failed");
  }
  socklen_t len = sizeof(addr);
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
  thread_ = std::thread([this] { serve(); });
}

NodeServer::~NodeServer() {
  stop_ = true;
  ::shutdown(listen_fd_, SHUT_RDWR);
  ::close(listen_fd_);
  if (thread_.joinable()) thread_.join();
}

void NodeServer::serve() {
  while (!stop_) {
    int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) break;
    try {
      while (true) {
        auto frame = read_frame(fd);
        if (!frame) break;
        write_all(fd, node_->handle_frame(*frame).encode());
      }
    } catch (const Error&) {
      // A malformed stream kills the connection, not the node.
      WireFrame err = WireFrame::make_error(uint16_t(node_->db_index()), 5, "malformed stream");
      try {
        write_all(fd, err.encode());
      } catch (const Error&) {
      }
    }
    ::close(fd);
  }
}

WireFrame SocketTransport::roundtrip(int n, const WireFrame& query) {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw NodeUnreachable("socket() failed");
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(ports_[size_t(n)]);
  if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0) {
    ::close(fd);
    throw NodeUnreachable("connect failed");
  }
  try {
    write_all(fd, query.encode());
    auto frame = read_frame(fd);
    ::close(fd);
    if (!frame) throw NodeUnreachable("connection closed before answer");
    return *frame;
  } catch (...) {
    ::close(fd);
    throw;
  }
}

namespace {

RetrievalTranscript finish(RetrievalTranscript t, const MessageSet* expected) {
  if (expected && expected->message(t.k_star) != t.reconstructed)
    throw ReconstructionMismatch("reconstructed message differs from the stored message");
  return t;
}

}  // namespace

RetrievalTranscript retrieve(const LinearScheme& scheme, Transport& transport, int k_star,
                             Rng& rng, const MessageSet* expected) {
  const SystemParams& p = scheme.params();
  RandomKey key = scheme.sample_key(rng);
  RetrievalTranscript t;
  t.params = p;
  t.scheme = scheme.name();
  t.k_star = k_star;
  t.key = key.f;
  std::vector<std::vector<Symbol>> answers(size_t(p.n));
  for (int n = 0; n < p.n; ++n) {
    WireFrame query;
    query.type = WireFrame::Type::Query;
    query.db_index = uint16_t(n);
    auto entries = scheme.make_query(k_star, key, n);
    query.payload.assign(entries.begin(), entries.end());
    WireFrame reply = transport.roundtrip(n, query);
    if (reply.type != WireFrame::Type::Answer)
      throw MalformedFrame("database returned an error frame");
    answers[size_t(n)] = decode_symbols(reply.payload, p.q);
    t.query_frames.push_back(query.encode());
    t.answer_frames.push_back(reply.encode());
    t.uploaded_bytes += query.payload.size();
    t.downloaded_bytes += reply.payload.size();
    t.downloaded_symbols += answers[size_t(n)].size();
  }
  t.reconstructed = scheme.reconstruct(answers, k_star, key);
  return finish(std::move(t), expected);
}

RetrievalTranscript retrieve(const SchemeK2& scheme, Transport& transport, int k_star, Rng& rng,
                             const MessageSet* expected) {
  const SystemParams& p = scheme.params();
  auto [partition, tags] = scheme.gen_queries(k_star, rng);
  RetrievalTranscript t;
  t.params = p;
  t.scheme = scheme.name();
  t.k_star = k_star;
  t.k2_strategy = partition.strategy == PartitionK2::Strategy::Sum ? 0 : 1;
  t.k2_labels = partition.labels;
  std::vector<std::vector<Symbol>> answers(size_t(p.n));
  for (int n = 0; n < p.n; ++n) {
    WireFrame query;
    query.type = WireFrame::Type::Query;
    query.db_index = uint16_t(n);
    query.payload = {uint8_t(tags[size_t(n)])};
    WireFrame reply = transport.roundtrip(n, query);
    if (reply.type != WireFrame::Type::Answer)
      throw MalformedFrame("database returned an error frame");
    answers[size_t(n)] = decode_symbols(reply.payload, p.q);
    t.query_frames.push_back(query.encode());
    t.answer_frames.push_back(reply.encode());
    t.uploaded_bytes += query.payload.size();
    t.downloaded_bytes += reply.payload.size();
    t.downloaded_symbols += answers[size_t(n)].size();
  }
  t.reconstructed = scheme.reconstruct(answers, partition, k_star);
  return finish(std::move(t), expected);
}

}  // namespace pir

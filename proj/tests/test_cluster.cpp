#include "doctest.h"

#include "pir/cluster.hpp"
#include "pir/scheme_a.hpp"
#include "pir/scheme_b.hpp"

using namespace pir;

TEST_CASE("wire frame round trip") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    WireFrame frame;
    frame.type = WireFrame::Type(rng.below(3));
    frame.db_index = uint16_t(rng.below(65536));
    frame.payload.resize(rng.below(40));
    for (auto& b : frame.payload) b = uint8_t(rng.below(256));
    CHECK(WireFrame::decode(frame.encode()) == frame);
  }
}

TEST_CASE("malformed frames are rejected") {
  WireFrame frame;
  frame.payload = {1, 2, 3};
  auto bytes = frame.encode();
  CHECK_THROWS_AS(WireFrame::decode({}), MalformedFrame);

  auto truncated = bytes;
  truncated.pop_back();
  CHECK_THROWS_AS(WireFrame::decode(truncated), MalformedFrame);

  auto bad_magic = bytes;
  bad_magic[0] = 0xff;
  CHECK_THROWS_AS(WireFrame::decode(bad_magic), MalformedFrame);

  auto bad_version = bytes;
  bad_version[2] = 9;
  CHECK_THROWS_AS(WireFrame::decode(bad_version), MalformedFrame);

  auto bad_type = bytes;
  bad_type[3] = 7;
  CHECK_THROWS_AS(WireFrame::decode(bad_type), MalformedFrame);

  auto trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS_AS(WireFrame::decode(trailing), MalformedFrame);
}

TEST_CASE("symbol wire width follows the field order") {
  CHECK(symbol_width(256) == 1);
  CHECK(symbol_width(251) == 1);
  CHECK(symbol_width(257) == 2);
  CHECK(symbol_width(65536) == 2);
  std::vector<Symbol> symbols = {0x1234, 0x00ff};
  CHECK(encode_symbols(symbols, 65536) == std::vector<uint8_t>{0x12, 0x34, 0x00, 0xff});
  CHECK(decode_symbols({0x12, 0x34, 0x00, 0xff}, 65536) == symbols);
  CHECK(decode_symbols({7, 8}, 256) == std::vector<Symbol>{7, 8});
  CHECK_THROWS_AS(decode_symbols({1, 2, 3}, 65536), MalformedFrame);
}

TEST_CASE("nodes answer well-formed queries and survive malformed ones") {
  SystemParams p = derive(3, 2, 3, 256, SchemeTag::A);
  SchemeA a(p);
  Rng rng(5);
  MessageSet msgs = MessageSet::random(p, rng);
  auto nodes = make_nodes(a, msgs);
  REQUIRE(nodes.size() == 3);

  WireFrame query;
  query.type = WireFrame::Type::Query;
  query.db_index = 1;
  query.payload = {0, 1, 2};
  WireFrame reply = nodes[1].handle_frame(query);
  CHECK(reply.type == WireFrame::Type::Answer);
  CHECK(reply.db_index == 1);
  auto shards = encode_storage(a.row_code(), msgs);
  CHECK(decode_symbols(reply.payload, p.q) == a.answer(shards[1], {0, 1, 2}));

  // wrong addressee
  CHECK(nodes[0].handle_frame(query).type == WireFrame::Type::Error);
  // wrong payload length
  WireFrame bad = query;
  bad.payload = {0, 1};
  CHECK(nodes[1].handle_frame(bad).type == WireFrame::Type::Error);
  // an answer frame is not a query
  WireFrame not_query = reply;
  CHECK(nodes[1].handle_frame(not_query).type == WireFrame::Type::Error);
  // node still alive afterwards
  CHECK(nodes[1].handle_frame(query) == reply);
}

TEST_CASE("retrieval over the in-process transport") {
  SystemParams p = derive(5, 3, 4, 256, SchemeTag::B);
  SchemeB b(p);
  Rng data_rng(6);
  MessageSet msgs = MessageSet::random(p, data_rng);
  auto nodes = make_nodes(b, msgs);
  InProcessTransport transport(nodes);
  Rng rng(7);
  RetrievalTranscript t = retrieve(b, transport, 2, rng, &msgs);
  CHECK(t.reconstructed == msgs.message(2));
  CHECK(t.k_star == 2);
  CHECK(t.scheme == "construction-b-high");
  CHECK(t.uploaded_bytes == uint64_t(p.n) * p.k);
  CHECK(t.downloaded_bytes == t.downloaded_symbols * uint64_t(symbol_width(p.q)));
  CHECK(t.query_frames.size() == 5);
  CHECK(t.answer_frames.size() == 5);

  nlohmann::json j = t.to_json();
  CHECK(j["n"] == 5);
  CHECK(j["scheme"] == "construction-b-high");
  CHECK(j["downloaded_symbols"] == t.downloaded_symbols);
}

TEST_CASE("identical seeds give identical transcripts") {
  SystemParams p = derive(3, 2, 3, 256, SchemeTag::A);
  SchemeA a(p);
  Rng data_rng(8);
  MessageSet msgs = MessageSet::random(p, data_rng);
  auto nodes = make_nodes(a, msgs);
  InProcessTransport transport(nodes);
  Rng r1(1001), r2(1001), r3(1002);
  RetrievalTranscript t1 = retrieve(a, transport, 0, r1, &msgs);
  RetrievalTranscript t2 = retrieve(a, transport, 0, r2, &msgs);
  RetrievalTranscript t3 = retrieve(a, transport, 0, r3, &msgs);
  CHECK(t1 == t2);
  // different seed, very likely a different key
  CHECK(t1.key != t3.key);
}

TEST_CASE("socket transport matches the in-process transport byte for byte") {
  SystemParams p = derive(3, 2, 3, 256, SchemeTag::A);
  SchemeA a(p);
  Rng data_rng(21);
  MessageSet msgs = MessageSet::random(p, data_rng);
  auto nodes = make_nodes(a, msgs);

  std::vector<std::unique_ptr<NodeServer>> servers;
  std::vector<uint16_t> ports;
  for (const auto& node : nodes) {
    servers.push_back(std::make_unique<NodeServer>(node));
    ports.push_back(servers.back()->port());
  }
  SocketTransport wire(ports);
  InProcessTransport local(nodes);

  for (int k_star = 0; k_star < 3; ++k_star) {
    Rng r1(500 + uint64_t(k_star)), r2(500 + uint64_t(k_star));
    RetrievalTranscript tw = retrieve(a, wire, k_star, r1, &msgs);
    RetrievalTranscript tl = retrieve(a, local, k_star, r2, &msgs);
    CHECK(tw == tl);
  }
}

TEST_CASE("k2 retrieval over both transports") {
  SystemParams p = derive(3, 2, 2, 256, SchemeTag::K2);
  SchemeK2 k2(p);
  Rng data_rng(33);
  MessageSet msgs = MessageSet::random(p, data_rng);
  auto nodes = make_nodes(k2, msgs);
  InProcessTransport local(nodes);

  std::vector<std::unique_ptr<NodeServer>> servers;
  std::vector<uint16_t> ports;
  for (const auto& node : nodes) {
    servers.push_back(std::make_unique<NodeServer>(node));
    ports.push_back(servers.back()->port());
  }
  SocketTransport wire(ports);

  for (int trial = 0; trial < 20; ++trial) {
    uint64_t seed = uint64_t(trial);
    Rng r1(seed), r2(seed);
    RetrievalTranscript tw = retrieve(k2, wire, trial % 2, r1, &msgs);
    RetrievalTranscript tl = retrieve(k2, local, trial % 2, r2, &msgs);
    CHECK(tw == tl);
    CHECK(tl.reconstructed == msgs.message(trial % 2));
    CHECK(tl.k2_strategy >= 0);
  }
}

TEST_CASE("reconstruction mismatch is surfaced") {
  SystemParams p = derive(3, 2, 3, 256, SchemeTag::A);
  SchemeA a(p);
  Rng data_rng(44);
  MessageSet stored = MessageSet::random(p, data_rng);
  MessageSet other = MessageSet::random(p, data_rng);
  auto nodes = make_nodes(a, stored);
  InProcessTransport transport(nodes);
  Rng rng(45);
  CHECK_THROWS_AS(retrieve(a, transport, 0, rng, &other), ReconstructionMismatch);
}

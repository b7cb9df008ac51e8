#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "lincert/instance.hpp"
#include "lincert/transcript.hpp"

namespace lincert {

/// Reliable ordered byte stream; TCP sockets and plain fd pairs both work.
class ByteStream {
public:
    virtual ~ByteStream() = default;
    virtual void write_all(const std::uint8_t* data, std::size_t n) = 0;
    /// Reads exactly n bytes; false on clean EOF at a frame boundary.
    virtual bool read_exact(std::uint8_t* data, std::size_t n) = 0;
};

class FdStream final : public ByteStream {
public:
    explicit FdStream(int fd, bool owned = true) : fd_(fd), owned_(owned) {}
    ~FdStream() override;
    void write_all(const std::uint8_t* data, std::size_t n) override;
    bool read_exact(std::uint8_t* data, std::size_t n) override;

private:
    int fd_;
    bool owned_;
};

/// Frame: length u32 LE (payload bytes), protocol id u8, tag u8, payload.
/// Payload: item count u32, items as u64 LE, rational count u32, rationals
/// as sign-magnitude length-prefixed pairs.  Unknown protocol ids and tags
/// are rejected before the payload is decoded.
void write_frame(ByteStream& s, const Message& m);
std::optional<Message> read_frame(ByteStream& s);  // nullopt on clean EOF

constexpr std::uint8_t kControlProtocol = 0xF0;
constexpr std::uint8_t kTagHello = 0x01;
constexpr std::uint8_t kTagHelloOk = 0x02;
constexpr std::uint8_t kTagError = 0x7F;

/// The server answers for one fixed primary input (field or rational mode).
struct ServedInput {
    std::optional<FMatrix> a;
    std::optional<QMatrix> aq;
};

/// Serves prover sessions over TCP, one session per connection, each on its
/// own worker thread.
class WireServer {
public:
    WireServer(const std::string& host, std::uint16_t port, ServedInput input);
    ~WireServer();
    std::uint16_t port() const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Runs the verifier locally against a remote prover.  The instance must
/// describe the same input the server holds; the hello exchange checks
/// protocol id, dimensions and modulus before any protocol message flows.
RunResult run_remote(const std::string& host, std::uint16_t port, const Instance& inst,
                     const VerifierOptions& vopt);

}  // namespace lincert

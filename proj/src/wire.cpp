#include "lincert/wire.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <cstring>
#include <mutex>
#include <thread>
#include <vector>

#include "lincert/errors.hpp"

namespace lincert {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
std::uint32_t get_u32(const std::uint8_t* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}
std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

void put_bigint(std::vector<std::uint8_t>& out, const BigInt& v) {
    BigInt mag = v < 0 ? BigInt(-v) : v;
    std::vector<std::uint8_t> bytes;
    while (mag > 0) {
        bytes.push_back(static_cast<std::uint8_t>(mag & 0xff));
        mag >>= 8;
    }
    out.push_back(v < 0 ? 1 : 0);
    put_u32(out, static_cast<std::uint32_t>(bytes.size()));
    out.insert(out.end(), bytes.begin(), bytes.end());
}

constexpr std::size_t kMaxFrame = 1u << 26;

// the protocols ping-pong tiny frames, so coalescing hurts badly
void set_nodelay(int fd) {
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

}  // namespace

FdStream::~FdStream() {
    if (owned_ && fd_ >= 0) ::close(fd_);
}

void FdStream::write_all(const std::uint8_t* data, std::size_t n) {
    std::size_t off = 0;
    while (off < n) {
        ssize_t w = ::write(fd_, data + off, n - off);
        if (w <= 0) throw IoError("stream write failed");
        off += static_cast<std::size_t>(w);
    }
}

bool FdStream::read_exact(std::uint8_t* data, std::size_t n) {
    std::size_t off = 0;
    while (off < n) {
        ssize_t r = ::read(fd_, data + off, n - off);
        if (r == 0) {
            if (off == 0) return false;
            throw IoError("stream closed mid-frame");
        }
        if (r < 0) throw IoError("stream read failed");
        off += static_cast<std::size_t>(r);
    }
    return true;
}

void write_frame(ByteStream& s, const Message& m) {
    std::vector<std::uint8_t> payload;
    put_u32(payload, static_cast<std::uint32_t>(m.items.size()));
    for (auto v : m.items) put_u64(payload, v);
    put_u32(payload, static_cast<std::uint32_t>(m.rationals.size()));
    for (const auto& q : m.rationals) {
        put_bigint(payload, q.num());
        put_bigint(payload, q.den());
    }
    std::vector<std::uint8_t> head;
    put_u32(head, static_cast<std::uint32_t>(payload.size()));
    head.push_back(m.protocol);
    head.push_back(m.tag);
    s.write_all(head.data(), head.size());
    s.write_all(payload.data(), payload.size());
}

std::optional<Message> read_frame(ByteStream& s) {
    std::uint8_t head[6];
    if (!s.read_exact(head, 6)) return std::nullopt;
    std::uint32_t len = get_u32(head);
    Message m;
    m.protocol = head[4];
    m.tag = head[5];
    // reject unknown ids before touching the payload
    if (!is_known_protocol(m.protocol) && m.protocol != kControlProtocol)
        throw ProtocolViolation("unknown protocol id on the wire");
    if (m.tag == 0 || m.tag > 0x7F) throw ProtocolViolation("unknown tag on the wire");
    if (len > kMaxFrame) throw ProtocolViolation("oversized frame");
    std::vector<std::uint8_t> payload(len);
    if (len && !s.read_exact(payload.data(), len)) throw IoError("stream closed mid-frame");
    std::size_t pos = 0;
    auto need = [&](std::size_t n) {
        if (pos + n > payload.size()) throw ProtocolViolation("frame length mismatch");
    };
    need(4);
    std::uint32_t ni = get_u32(payload.data() + pos);
    pos += 4;
    need(std::size_t(ni) * 8);
    m.items.resize(ni);
    for (std::uint32_t i = 0; i < ni; ++i) {
        m.items[i] = get_u64(payload.data() + pos);
        pos += 8;
    }
    need(4);
    std::uint32_t nr = get_u32(payload.data() + pos);
    pos += 4;
    for (std::uint32_t i = 0; i < nr; ++i) {
        BigInt parts[2];
        for (int k = 0; k < 2; ++k) {
            need(5);
            std::uint8_t neg = payload[pos++];
            if (neg > 1) throw ProtocolViolation("bad rational sign");
            std::uint32_t blen = get_u32(payload.data() + pos);
            pos += 4;
            need(blen);
            if (blen == 0 && neg) throw ProtocolViolation("negative zero on the wire");
            if (blen && payload[pos + blen - 1] == 0) throw ProtocolViolation("padded integer");
            BigInt v = 0;
            for (std::size_t b = blen; b-- > 0;) v = (v << 8) | payload[pos + b];
            pos += blen;
            parts[k] = neg ? BigInt(-v) : v;
        }
        if (parts[1] == 0) throw ProtocolViolation("zero denominator on the wire");
        m.rationals.emplace_back(std::move(parts[0]), std::move(parts[1]));
    }
    if (pos != payload.size()) throw ProtocolViolation("frame length mismatch");
    return m;
}

namespace {

// hello: [protocol, rows, cols, prime, side, row_variant, has_b, has_c]
// followed by inline b entries then c entries when present
Message make_hello(const Instance& inst) {
    Message h;
    h.protocol = kControlProtocol;
    h.tag = kTagHello;
    std::size_t m = inst.aq ? inst.aq->rows() : inst.a.rows();
    std::size_t n = inst.aq ? inst.aq->cols() : inst.a.cols();
    h.items = {static_cast<std::uint64_t>(inst.id), m, n, inst.a.field().modulus(),
               static_cast<std::uint64_t>(inst.side), inst.row_variant ? 1u : 0u,
               inst.b ? 1u : 0u, inst.c ? 1u : 0u};
    auto append = [&](const FMatrix& x) {
        h.items.push_back(x.rows());
        h.items.push_back(x.cols());
        h.items.insert(h.items.end(), x.data().begin(), x.data().end());
    };
    if (inst.b) append(*inst.b);
    if (inst.c) append(*inst.c);
    return h;
}

Instance parse_hello(const Message& h, const ServedInput& input) {
    if (h.items.size() < 8) throw ProtocolViolation("short hello");
    std::uint8_t proto = static_cast<std::uint8_t>(h.items[0]);
    if (!is_known_protocol(proto)) throw ProtocolViolation("unknown protocol in hello");
    std::size_t m = h.items[1], n = h.items[2];
    std::uint64_t prime = h.items[3];
    Side side = h.items[4] ? Side::Upper : Side::Lower;
    bool row_variant = h.items[5] != 0;
    bool has_b = h.items[6] != 0, has_c = h.items[7] != 0;

    Instance inst{static_cast<ProtocolId>(proto), FMatrix(PrimeField(prime), 0, 0)};
    inst.side = side;
    inst.row_variant = row_variant;
    if (static_cast<ProtocolId>(proto) == ProtocolId::Signature) {
        if (!input.aq) throw ProtocolViolation("server has no rational input");
        if (m != input.aq->rows() || n != input.aq->cols())
            throw ProtocolViolation("dimension mismatch in hello");
        inst.aq = input.aq;
    } else {
        if (!input.a) throw ProtocolViolation("server has no field input");
        if (m != input.a->rows() || n != input.a->cols() ||
            prime != input.a->field().modulus())
            throw ProtocolViolation("input mismatch in hello");
        inst.a = *input.a;
    }
    std::size_t pos = 8;
    auto read_matrix = [&]() {
        if (pos + 2 > h.items.size()) throw ProtocolViolation("short hello matrix");
        std::size_t rm = h.items[pos], rn = h.items[pos + 1];
        pos += 2;
        if (pos + rm * rn > h.items.size()) throw ProtocolViolation("short hello matrix");
        FMatrix x(PrimeField(prime), rm, rn);
        for (std::size_t i = 0; i < rm; ++i)
            for (std::size_t j = 0; j < rn; ++j)
                x.set(i, j, x.field().reduce_u64(h.items[pos + i * rn + j]));
        pos += rm * rn;
        return x;
    };
    if (has_b) inst.b = read_matrix();
    if (has_c) inst.c = read_matrix();
    return inst;
}

void serve_connection(int fd, const ServedInput& input) {
    FdStream stream(fd);
    try {
        auto hello = read_frame(stream);
        if (!hello || hello->protocol != kControlProtocol || hello->tag != kTagHello)
            throw ProtocolViolation("expected hello");
        Instance inst = parse_hello(*hello, input);
        auto prover = make_prover(inst);
        Message ok;
        ok.protocol = kControlProtocol;
        ok.tag = kTagHelloOk;
        write_frame(stream, ok);
        auto out = prover->step(std::nullopt);
        if (!out) throw ProtocolViolation("prover failed to open");
        write_frame(stream, *out);
        while (!prover->finished()) {
            auto in = read_frame(stream);
            if (!in) return;  // verifier is done or gone
            out = prover->step(in);
            if (!out) return;
            write_frame(stream, *out);
        }
    } catch (const Error& e) {
        try {
            Message err;
            err.protocol = kControlProtocol;
            err.tag = kTagError;
            const char* what = e.what();
            for (const char* p = what; *p; ++p) err.items.push_back(static_cast<std::uint8_t>(*p));
            write_frame(stream, err);
        } catch (...) {
        }
    }
}

}  // namespace

struct WireServer::Impl {
    int listen_fd = -1;
    std::uint16_t port = 0;
    ServedInput input;
    std::thread acceptor;
    std::mutex mu;
    std::vector<std::thread> workers;
    std::atomic<bool> stopping{false};

    void run() {
        for (;;) {
            int fd = ::accept(listen_fd, nullptr, nullptr);
            if (fd < 0) {
                if (stopping) return;
                continue;
            }
            set_nodelay(fd);
            std::lock_guard<std::mutex> lock(mu);
            workers.emplace_back([this, fd] { serve_connection(fd, input); });
        }
    }
};

WireServer::WireServer(const std::string& host, std::uint16_t port, ServedInput input)
    : impl_(std::make_unique<Impl>()) {
    impl_->input = std::move(input);
    impl_->listen_fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (impl_->listen_fd < 0) throw BindError("socket() failed");
    int one = 1;
    ::setsockopt(impl_->listen_fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    std::string h = host == "localhost" ? "127.0.0.1" : host;
    if (::inet_pton(AF_INET, h.c_str(), &addr.sin_addr) != 1)
        throw BindError("bad listen address " + host);
    if (::bind(impl_->listen_fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0)
        throw BindError("bind failed on " + host);
    if (::listen(impl_->listen_fd, 16) != 0) throw BindError("listen failed");
    socklen_t len = sizeof(addr);
    ::getsockname(impl_->listen_fd, reinterpret_cast<sockaddr*>(&addr), &len);
    impl_->port = ntohs(addr.sin_port);
    impl_->acceptor = std::thread([this] { impl_->run(); });
}

WireServer::~WireServer() { stop(); }

std::uint16_t WireServer::port() const { return impl_->port; }

void WireServer::stop() {
    if (!impl_ || impl_->stopping.exchange(true)) return;
    ::shutdown(impl_->listen_fd, SHUT_RDWR);
    ::close(impl_->listen_fd);
    if (impl_->acceptor.joinable()) impl_->acceptor.join();
    std::lock_guard<std::mutex> lock(impl_->mu);
    for (auto& w : impl_->workers)
        if (w.joinable()) w.join();
    impl_->workers.clear();
}

RunResult run_remote(const std::string& host, std::uint16_t port, const Instance& inst,
                     const VerifierOptions& vopt) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw IoError("socket() failed");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    std::string h = host == "localhost" ? "127.0.0.1" : host;
    if (::inet_pton(AF_INET, h.c_str(), &addr.sin_addr) != 1) {
        ::close(fd);
        throw IoError("bad host " + host);
    }
    if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        ::close(fd);
        throw IoError("connect failed");
    }
    set_nodelay(fd);
    FdStream stream(fd);
    write_frame(stream, make_hello(inst));
    auto reply = read_frame(stream);
    if (!reply || reply->protocol != kControlProtocol || reply->tag != kTagHelloOk) {
        std::string detail;
        if (reply && reply->tag == kTagError)
            for (auto c : reply->items) detail.push_back(static_cast<char>(c));
        throw ProtocolViolation("server refused the session: " + detail);
    }

    auto verifier = make_verifier(inst, vopt);
    RunResult res;
    auto inbound = read_frame(stream);
    for (;;) {
        if (!inbound) throw IoError("prover hung up");
        res.transcript.push_back(*inbound);
        res.prover_messages.push_back(*inbound);
        auto out = verifier->step(inbound);
        if (verifier->finished()) {
            res.verdict = *verifier->verdict();
            res.stats = verifier->stats();
            return res;
        }
        if (!out) throw ProtocolViolation("verifier stalled");
        res.transcript.push_back(*out);
        write_frame(stream, *out);
        inbound = read_frame(stream);
    }
}

}  // namespace lincert

#include "lincert/certificate_file.hpp"

#include <cstring>

#include "lincert/errors.hpp"
#include "lincert/sponge.hpp"

namespace lincert {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

struct Reader {
    const std::vector<std::uint8_t>& b;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos + 1 > b.size()) throw BadCertificate("truncated");
        return b[pos++];
    }
    std::uint32_t u32() {
        if (pos + 4 > b.size()) throw BadCertificate("truncated");
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[pos++]) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        if (pos + 8 > b.size()) throw BadCertificate("truncated");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[pos++]) << (8 * i);
        return v;
    }
    void bytes(std::uint8_t* dst, std::size_t n) {
        if (pos + n > b.size()) throw BadCertificate("truncated");
        std::memcpy(dst, b.data() + pos, n);
        pos += n;
    }
};

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

BigInt get_bigint(Reader& r) {
    std::uint8_t neg = r.u8();
    if (neg > 1) throw BadCertificate("bad sign byte");
    std::uint32_t len = r.u32();
    if (len > (1u << 20)) throw BadCertificate("oversized integer");
    // canonical form only: minimal magnitude, and zero is never negative
    if (len == 0 && neg) throw BadCertificate("negative zero");
    BigInt v = 0;
    std::vector<std::uint8_t> buf(len);
    r.bytes(buf.data(), len);
    if (len && buf[len - 1] == 0) throw BadCertificate("padded integer");
    for (std::size_t i = len; i-- > 0;) v = (v << 8) | buf[i];
    return neg ? BigInt(-v) : v;
}

constexpr std::size_t kMaxItems = 1u << 24;

}  // namespace

std::vector<std::uint8_t> CertificateFile::serialize() const {
    std::vector<std::uint8_t> out;
    out.push_back('L');
    out.push_back('C');
    out.push_back('R');
    out.push_back('T');
    out.push_back(version);
    out.push_back(protocol);
    out.push_back(hash_alg);
    put_u64(out, prime);
    put_u32(out, rows);
    put_u32(out, cols);
    out.insert(out.end(), input_digest.begin(), input_digest.end());
    put_u32(out, static_cast<std::uint32_t>(messages.size()));
    for (const auto& m : messages) {
        out.push_back(m.tag);
        put_u32(out, static_cast<std::uint32_t>(m.items.size()));
        for (auto v : m.items) put_u64(out, v);
        put_u32(out, static_cast<std::uint32_t>(m.rationals.size()));
        for (const auto& q : m.rationals) {
            put_bigint(out, q.num());
            put_bigint(out, q.den());
        }
    }
    return out;
}

CertificateFile CertificateFile::deserialize(const std::vector<std::uint8_t>& bytes) {
    Reader r{bytes};
    char magic[4];
    r.bytes(reinterpret_cast<std::uint8_t*>(magic), 4);
    if (std::memcmp(magic, "LCRT", 4) != 0) throw BadCertificate("bad magic");
    CertificateFile c;
    c.version = r.u8();
    if (c.version != kVersion) throw BadCertificate("unsupported version");
    c.protocol = r.u8();
    if (!is_known_protocol(c.protocol)) throw BadCertificate("unknown protocol id");
    c.hash_alg = r.u8();
    if (c.hash_alg != Sponge::kHashAlgSha256) throw BadCertificate("unknown hash algorithm");
    c.prime = r.u64();
    c.rows = r.u32();
    c.cols = r.u32();
    r.bytes(c.input_digest.data(), 32);
    std::uint32_t count = r.u32();
    if (count > 1u << 20) throw BadCertificate("oversized message count");
    for (std::uint32_t i = 0; i < count; ++i) {
        Message m;
        m.protocol = c.protocol;
        m.tag = r.u8();
        std::uint32_t ni = r.u32();
        if (ni > kMaxItems) throw BadCertificate("oversized payload");
        m.items.resize(ni);
        for (auto& v : m.items) v = r.u64();
        std::uint32_t nr = r.u32();
        if (nr > kMaxItems) throw BadCertificate("oversized payload");
        for (std::uint32_t k = 0; k < nr; ++k) {
            BigInt num = get_bigint(r);
            BigInt den = get_bigint(r);
            if (den == 0) throw BadCertificate("zero denominator");
            m.rationals.emplace_back(std::move(num), std::move(den));
        }
        c.messages.push_back(std::move(m));
    }
    if (r.pos != bytes.size()) throw BadCertificate("trailing bytes");
    return c;
}

CertificateFile fiat_shamir_prove(const Instance& inst, const ProverOptions& popt) {
    auto digest = inst.digest();
    VerifierOptions vopt;
    vopt.source = std::make_shared<SpongeChallengeSource>(digest);
    auto prover = make_prover(inst, popt);
    auto verifier = make_verifier(inst, vopt);
    RunResult res = run_interactive(*prover, *verifier);
    if (!res.verdict.accepted)
        throw Error(std::string("honest run rejected: ") + reason_name(res.verdict.reason));
    CertificateFile cert;
    cert.protocol = static_cast<std::uint8_t>(inst.id);
    cert.prime = inst.a.field().modulus();
    cert.rows = static_cast<std::uint32_t>(inst.aq ? inst.aq->rows() : inst.a.rows());
    cert.cols = static_cast<std::uint32_t>(inst.aq ? inst.aq->cols() : inst.a.cols());
    cert.input_digest = digest;
    cert.messages = std::move(res.prover_messages);
    return cert;
}

Verdict fiat_shamir_verify(const CertificateFile& cert, const Instance& inst) {
    if (cert.protocol != static_cast<std::uint8_t>(inst.id)) throw DigestMismatch();
    if (cert.input_digest != inst.digest()) throw DigestMismatch();
    if (cert.prime != inst.a.field().modulus()) throw DigestMismatch();
    std::uint32_t rows = static_cast<std::uint32_t>(inst.aq ? inst.aq->rows() : inst.a.rows());
    std::uint32_t cols = static_cast<std::uint32_t>(inst.aq ? inst.aq->cols() : inst.a.cols());
    if (cert.rows != rows || cert.cols != cols) throw DigestMismatch();
    VerifierOptions vopt;
    vopt.source = std::make_shared<SpongeChallengeSource>(cert.input_digest);
    auto verifier = make_verifier(inst, vopt);
    try {
        std::size_t idx = 0;
        std::optional<Message> inbound;
        if (idx < cert.messages.size()) inbound = cert.messages[idx++];
        for (;;) {
            verifier->step(inbound);
            if (verifier->finished()) {
                if (idx != cert.messages.size())
                    return Verdict::reject(Reason::ProtocolViolation, 0);  // trailing messages
                return *verifier->verdict();
            }
            if (idx >= cert.messages.size())
                return Verdict::reject(Reason::ProtocolViolation, 0);  // truncated
            inbound = cert.messages[idx++];
        }
    } catch (const ProtocolViolation&) {
        return Verdict::reject(Reason::ProtocolViolation, 0);
    } catch (const Error&) {
        return Verdict::reject(Reason::ProtocolViolation, 0);
    }
}

}  // namespace lincert

#include "lincert/instance.hpp"

#include "lincert/errors.hpp"
#include "lincert/sponge.hpp"
#include "protocols/factories.hpp"

namespace lincert {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_fmatrix(std::vector<std::uint8_t>& out, const FMatrix& m) {
    put_u32(out, static_cast<std::uint32_t>(m.rows()));
    put_u32(out, static_cast<std::uint32_t>(m.cols()));
    for (auto v : m.data()) put_u64(out, v);
}
void put_string(std::vector<std::uint8_t>& out, const std::string& s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

std::array<std::uint8_t, 32> Instance::digest() const {
    std::vector<std::uint8_t> buf;
    put_string(buf, "lincert-input-v1");
    buf.push_back(static_cast<std::uint8_t>(id));
    buf.push_back(static_cast<std::uint8_t>(side));
    buf.push_back(row_variant ? 1 : 0);
    put_u64(buf, a.field().modulus());
    put_fmatrix(buf, a);
    buf.push_back(b ? 1 : 0);
    if (b) put_fmatrix(buf, *b);
    buf.push_back(c ? 1 : 0);
    if (c) put_fmatrix(buf, *c);
    buf.push_back(aq ? 1 : 0);
    if (aq) {
        put_u32(buf, static_cast<std::uint32_t>(aq->rows()));
        put_u32(buf, static_cast<std::uint32_t>(aq->cols()));
        for (std::size_t i = 0; i < aq->rows(); ++i)
            for (std::size_t j = 0; j < aq->cols(); ++j) put_string(buf, aq->at(i, j).str());
    }
    return sha256(buf);
}

std::shared_ptr<ChallengeSource> VerifierOptions::make_source() const {
    if (source) return source;
    return std::make_shared<RngChallengeSource>(seed);
}

std::uint64_t min_sample_size(ProtocolId id, std::size_t m, std::size_t n) {
    switch (id) {
        case ProtocolId::TriEquivConst:
            // soundness 1 - 2(n-1)/|S| must be positive
            return n >= 1 ? 2 * (n - 1) + 1 : 2;
        case ProtocolId::CrpConst:
            return std::min(m, n) >= 1 ? 2 * std::min(m, n) - 1 : 2;
        case ProtocolId::Grp:
        case ProtocolId::Ldup:
        case ProtocolId::Determinant:
        case ProtocolId::RpmInvertible:
        case ProtocolId::RpmFull:
        case ProtocolId::Signature:
            // the (1 - 1/|S|)^{2n} bound is kept meaningful
            return 2 * std::max<std::size_t>(1, std::min(m, n));
        default:
            return 2;
    }
}

std::unique_ptr<Session> make_prover(const Instance& inst, const ProverOptions& opt) {
    switch (inst.id) {
        case ProtocolId::Freivalds: return detail::freivalds_prover(inst);
        case ProtocolId::RankUpper: return detail::rank_upper_prover(inst, opt);
        case ProtocolId::RankLower: return detail::rank_lower_prover(inst, opt);
        case ProtocolId::TriEquiv: return detail::tri_equiv_prover(inst);
        case ProtocolId::Grp: return detail::grp_prover(inst);
        case ProtocolId::Ldup:
        case ProtocolId::Determinant: return detail::ldup_prover(inst, opt);
        case ProtocolId::CrpNoninteractive:
        case ProtocolId::RpmNoninteractive: return detail::noninteractive_prover(inst);
        case ProtocolId::CrpInteractive: return detail::crp_interactive_prover(inst, opt);
        case ProtocolId::RpmInvertible: return detail::rpm_invertible_prover(inst);
        case ProtocolId::RpmFull: return detail::rpm_full_prover(inst);
        case ProtocolId::TriEquivConst: return detail::tri_equiv_const_prover(inst);
        case ProtocolId::CrpConst: return detail::crp_const_prover(inst, opt);
        case ProtocolId::Signature: return detail::signature_prover(inst, opt);
    }
    throw ProtocolViolation("unknown protocol id");
}

std::unique_ptr<Session> make_verifier(const Instance& inst, const VerifierOptions& opt) {
    detail::VerifierCtx ctx{opt.make_source(), opt.set, opt.expected_det, opt.expected_rank};
    std::uint64_t need = min_sample_size(inst.id, inst.a.rows(), inst.a.cols());
    if (opt.set.size(inst.a.field()) < need)
        throw SecurityLevelTooLow("sample set too small for this protocol size");
    switch (inst.id) {
        case ProtocolId::Freivalds: return detail::freivalds_verifier(inst, std::move(ctx));
        case ProtocolId::RankUpper: return detail::rank_upper_verifier(inst, std::move(ctx));
        case ProtocolId::RankLower: return detail::rank_lower_verifier(inst, std::move(ctx));
        case ProtocolId::TriEquiv: return detail::tri_equiv_verifier(inst, std::move(ctx));
        case ProtocolId::Grp: return detail::grp_verifier(inst, std::move(ctx));
        case ProtocolId::Ldup:
        case ProtocolId::Determinant: return detail::ldup_verifier(inst, std::move(ctx));
        case ProtocolId::CrpNoninteractive:
        case ProtocolId::RpmNoninteractive: return detail::noninteractive_verifier(inst, std::move(ctx));
        case ProtocolId::CrpInteractive: return detail::crp_interactive_verifier(inst, std::move(ctx));
        case ProtocolId::RpmInvertible: return detail::rpm_invertible_verifier(inst, std::move(ctx));
        case ProtocolId::RpmFull: return detail::rpm_full_verifier(inst, std::move(ctx));
        case ProtocolId::TriEquivConst: return detail::tri_equiv_const_verifier(inst, std::move(ctx));
        case ProtocolId::CrpConst: return detail::crp_const_verifier(inst, std::move(ctx));
        case ProtocolId::Signature: return detail::signature_verifier(inst, std::move(ctx));
    }
    throw ProtocolViolation("unknown protocol id");
}

ProtocolPair make_pair(const Instance& inst, const VerifierOptions& vopt,
                       const ProverOptions& popt) {
    return ProtocolPair{make_prover(inst, popt), make_verifier(inst, vopt)};
}

}  // namespace lincert

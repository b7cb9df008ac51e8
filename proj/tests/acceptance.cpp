// Acceptance suite: each numbered criterion prints one pass/fail line and
// the binary exits nonzero if any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lincert/adversary.hpp"
#include "lincert/certificate_file.hpp"
#include "lincert/oracle.hpp"
#include "lincert/wire.hpp"
#include "support.hpp"

using namespace lincert;
using namespace lincert_test;

namespace {

int g_failures = 0;

void report(int number, const char* what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

struct HonestInstance {
    Instance inst;
    ProverOptions popt;
    std::size_t m, n, r;
};

// one honest random instance per protocol, sizes <= 16
HonestInstance draw_instance(ProtocolId id, const PrimeField& f, RandomSource& rng) {
    auto dim = [&](std::size_t lo, std::size_t hi) { return lo + rng.uniform_below(hi - lo + 1); };
    switch (id) {
        case ProtocolId::Freivalds: {
            std::size_t n = dim(1, 16);
            FMatrix a = FMatrix::random(f, n, n, rng), b = FMatrix::random(f, n, n, rng);
            Instance inst{id, a};
            inst.b = b;
            inst.c = a.mul(b);
            return {inst, {}, n, n, n};
        }
        case ProtocolId::RankUpper:
        case ProtocolId::RankLower:
        case ProtocolId::CrpInteractive: {
            std::size_t m = dim(1, 16), n = dim(1, 16);
            std::size_t r = rng.uniform_below(std::min(m, n) + 1);
            Instance inst{id, FMatrix::random_rank(f, m, n, r, rng)};
            return {inst, {}, m, n, r};
        }
        case ProtocolId::CrpConst: {
            std::size_t m = dim(1, 16), n = dim(1, 16);
            std::size_t r = 1 + rng.uniform_below(std::min(m, n));
            Instance inst{id, FMatrix::random_rank(f, m, n, r, rng)};
            return {inst, {}, m, n, r};
        }
        case ProtocolId::RpmFull: {
            std::size_t m = dim(1, 16), n = dim(1, 16);
            std::size_t r = rng.uniform_below(std::min(m, n) + 1);
            Instance inst{id, FMatrix::random_rank(f, m, n, r, rng)};
            return {inst, {}, m, n, r};
        }
        case ProtocolId::TriEquiv:
        case ProtocolId::TriEquivConst: {
            std::size_t n = dim(1, 16), m = dim(n, 16);
            FMatrix a = FMatrix::random_rank(f, m, n, n, rng);
            FMatrix t(f, n, n);
            bool upper = rng.uniform_below(2) == 1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    auto v = j == i ? 1 + rng.uniform_below(f.modulus() - 1)
                                    : rng.uniform_below(f.modulus());
                    if (upper)
                        t.set(j, i, v);
                    else
                        t.set(i, j, v);
                }
            Instance inst{id, a};
            inst.b = a.mul(t);
            inst.side = upper ? Side::Upper : Side::Lower;
            return {inst, {}, m, n, n};
        }
        case ProtocolId::Grp: {
            std::size_t n = dim(1, 16);
            Instance inst{id, FMatrix::random_grp(f, n, rng)};
            return {inst, {}, n, n, n};
        }
        case ProtocolId::Ldup:
        case ProtocolId::Determinant:
        case ProtocolId::RpmInvertible: {
            std::size_t n = dim(1, 16);
            Instance inst{id, FMatrix::random_nonsingular(f, n, rng)};
            return {inst, {}, n, n, n};
        }
        case ProtocolId::Signature: {
            std::size_t n = dim(1, 10);
            Instance inst{id, FMatrix(PrimeField(), 0, 0)};
            inst.aq = random_symmetric_q(n, -5, 5, rng);
            return {inst, {}, n, n, n};
        }
        default: {
            std::size_t m = dim(1, 16), n = dim(1, 16);
            std::size_t r = rng.uniform_below(std::min(m, n) + 1);
            Instance inst{id, FMatrix::random_rank(f, m, n, r, rng)};
            return {inst, {}, m, n, r};
        }
    }
}

// -- criteria 1..3: completeness plus exact communication and product counts

struct BudgetCheck {
    bool ok = true;
    std::string detail;
};

void check_budget(ProtocolId id, const HonestInstance& hi, const Stats& s, BudgetCheck& out) {
    const std::size_t m = hi.m, n = hi.n, r = hi.r;
    auto exact = [&](std::uint64_t want, const char* label) {
        if (s.total_elements() != want && out.ok) {
            out.ok = false;
            out.detail = std::string(label) + ": got " + std::to_string(s.total_elements()) +
                         " want " + std::to_string(want);
        }
    };
    auto at_most = [&](std::uint64_t cap, const char* label) {
        if (s.total_elements() > cap && out.ok) {
            out.ok = false;
            out.detail = std::string(label) + ": got " + std::to_string(s.total_elements()) +
                         " cap " + std::to_string(cap);
        }
    };
    switch (id) {
        case ProtocolId::TriEquiv: exact(2 * n, "tri-equiv 2n"); break;
        case ProtocolId::Grp: exact(6 * n, "grp 6n"); break;
        case ProtocolId::Ldup:
        case ProtocolId::Determinant: at_most(8 * n, "ldup 8n"); break;
        case ProtocolId::RankUpper: exact(m + n, "rank-upper m+n"); break;
        case ProtocolId::RankLower: exact(m + 2 * r, "rank-lower m+2r"); break;
        case ProtocolId::CrpInteractive:
            exact(r == 0 ? m + n : m + n + 4 * r, "crp m+n+4r");
            break;
        case ProtocolId::RpmInvertible: at_most(10 * n, "rpm-inv 10n"); break;
        case ProtocolId::RpmFull:
            at_most(m + n + std::min(m, n) + 17 * r, "rpm m+n+min+17r");
            break;
        case ProtocolId::TriEquivConst: exact(3 * n + 1, "tri-equiv-const 3n+1"); break;
        case ProtocolId::CrpConst:
            exact(m + n + 5 * r + 1, "crp-const m+n+5r+1");
            if (s.rounds != 3 && out.ok) {
                out.ok = false;
                out.detail = "crp-const rounds: got " + std::to_string(s.rounds);
            }
            break;
        default: break;
    }
}

void check_mu(ProtocolId id, const Stats& s, BudgetCheck& out) {
    auto exact = [&](std::uint64_t want, const char* label) {
        if (s.mu_count != want && out.ok) {
            out.ok = false;
            out.detail = std::string(label) + ": mu " + std::to_string(s.mu_count);
        }
    };
    auto at_most = [&](std::uint64_t cap, const char* label) {
        if (s.mu_count > cap && out.ok) {
            out.ok = false;
            out.detail = std::string(label) + ": mu " + std::to_string(s.mu_count);
        }
    };
    switch (id) {
        case ProtocolId::Grp: exact(1, "grp"); break;
        case ProtocolId::Ldup: exact(1, "ldup"); break;
        case ProtocolId::Freivalds: exact(3, "freivalds"); break;
        case ProtocolId::RankUpper: exact(2, "rank-upper"); break;
        case ProtocolId::RankLower: exact(1, "rank-lower"); break;
        case ProtocolId::CrpInteractive: at_most(2, "crp"); break;
        case ProtocolId::RpmFull: at_most(4, "rpm"); break;
        default: break;
    }
}

void criteria_1_2_3() {
    const ProtocolId interactive[] = {
        ProtocolId::Freivalds,     ProtocolId::RankUpper,  ProtocolId::RankLower,
        ProtocolId::TriEquiv,      ProtocolId::Grp,        ProtocolId::Ldup,
        ProtocolId::Determinant,   ProtocolId::CrpInteractive,
        ProtocolId::RpmInvertible, ProtocolId::RpmFull,    ProtocolId::TriEquivConst,
        ProtocolId::CrpConst,      ProtocolId::Signature,
    };
    const PrimeField fields[2] = {PrimeField(101), PrimeField(2147483647ull)};
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t rejections = 0;
    std::string reject_detail;
    BudgetCheck budget, mu;
    RandomSource rng(20260809);
    for (ProtocolId id : interactive) {
        for (int t = 0; t < 1000; ++t) {
            const PrimeField& f = fields[t & 1];
            HonestInstance hi = draw_instance(id, f, rng);
            auto res = run_pair(hi.inst, rng.next_u64(), hi.popt);
            if (!res.verdict.accepted) {
                ++rejections;
                if (reject_detail.empty())
                    reject_detail = std::string(protocol_name(id)) + " rejected: " +
                                    reason_name(res.verdict.reason);
            }
            check_budget(id, hi, res.stats, budget);
            check_mu(id, res.stats, mu);
        }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    bool in_time = elapsed < 120;
    report(1, "perfect completeness, 13 protocols x 1000 honest instances",
           rejections == 0 && in_time,
           rejections ? reject_detail : (std::to_string(elapsed) + "s"));
    report(2, "exact communication budgets on every honest run", budget.ok, budget.detail);
    report(3, "verifier matrix-vector product counts", mu.ok, mu.detail);
}

// -- criterion 4: certified quantities match the brute-force oracle

void criterion_4() {
    PrimeField f101(101), fbig(2147483647ull);
    RandomSource rng(44001);
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& d) {
        if (ok) {
            ok = false;
            detail = d;
        }
    };

    for (int t = 0; t < 500 && ok; ++t) {
        const PrimeField& f = (t & 1) ? fbig : f101;
        std::size_t m = 1 + rng.uniform_below(12), n = 1 + rng.uniform_below(12);
        std::size_t r = rng.uniform_below(std::min(m, n) + 1);
        FMatrix a = FMatrix::random_rank(f, m, n, r, rng);

        // rank and column profile through the interactive certificate
        Instance ci{ProtocolId::CrpInteractive, a};
        auto cres = run_pair(ci, rng.next_u64());
        if (!cres.verdict.accepted || *cres.verdict.outputs.rank != oracle::rank(a) ||
            *cres.verdict.outputs.col_profile != oracle::crp(a))
            fail("crp/rank disagreement");

        // row profile through the non-interactive row variant
        Instance ri{ProtocolId::CrpNoninteractive, a};
        ri.row_variant = true;
        auto rres = run_pair(ri, rng.next_u64());
        if (!rres.verdict.accepted || *rres.verdict.outputs.row_profile != oracle::rrp(a))
            fail("rrp disagreement");

        // profile matrix through the general certificate
        Instance pi{ProtocolId::RpmFull, a};
        auto pres = run_pair(pi, rng.next_u64());
        FMatrix got(f, m, n);
        if (pres.verdict.accepted)
            for (auto [i, j] : *pres.verdict.outputs.rpm_ones) got.set(i, j, 1);
        if (!pres.verdict.accepted || !(got == oracle::rpm(a))) fail("rpm disagreement");
    }

    for (int t = 0; t < 500 && ok; ++t) {
        const PrimeField& f = (t & 1) ? fbig : f101;
        std::size_t n = 1 + rng.uniform_below(12);
        FMatrix a = FMatrix::random_nonsingular(f, n, rng);
        Instance di{ProtocolId::Determinant, a};
        auto dres = run_pair(di, rng.next_u64());
        if (!dres.verdict.accepted || *dres.verdict.outputs.det != oracle::det(a))
            fail("determinant disagreement");
    }

    for (int t = 0; t < 500 && ok; ++t) {
        std::size_t n = 1 + rng.uniform_below(8);
        QMatrix a = random_symmetric_q(n, -5, 5, rng);
        Instance si{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
        si.aq = a;
        auto sres = run_pair(si, rng.next_u64());
        if (!sres.verdict.accepted || *sres.verdict.outputs.signature != oracle::signature(a))
            fail("signature disagreement");
    }

    // exhaustive profile matrices over the two smallest fields
    for (std::uint64_t p : {2ull, 3ull}) {
        PrimeField f(p);
        for (std::size_t cols : {2u, 3u}) {
            std::size_t total = 1;
            for (std::size_t e = 0; e < 2 * cols; ++e) total *= p;
            for (std::size_t code = 0; code < total && ok; ++code) {
                FMatrix a(f, 2, cols);
                std::size_t c = code;
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < cols; ++j) {
                        a.set(i, j, c % p);
                        c /= p;
                    }
                Instance inst{ProtocolId::RpmNoninteractive, a};
                auto res = run_pair(inst, 5000 + code);
                FMatrix got(f, 2, cols);
                if (res.verdict.accepted)
                    for (auto [i, j] : *res.verdict.outputs.rpm_ones) got.set(i, j, 1);
                if (!res.verdict.accepted || !(got == oracle::rpm(a)))
                    fail("exhaustive rpm disagreement at p=" + std::to_string(p));
            }
        }
    }
    report(4, "certified quantities equal the reference oracle", ok, detail);
}

// -- criterion 5: soundness statistics against the listed adversaries

void criterion_5() {
    PrimeField f101(101);
    bool ok = true;
    std::string detail;
    const ProtocolId targets[] = {
        ProtocolId::Freivalds,     ProtocolId::RankUpper, ProtocolId::RankLower,
        ProtocolId::TriEquiv,      ProtocolId::Grp,       ProtocolId::Ldup,
        ProtocolId::Determinant,   ProtocolId::CrpInteractive,
        ProtocolId::RpmInvertible, ProtocolId::RpmFull,   ProtocolId::TriEquivConst,
        ProtocolId::CrpConst,
    };
    for (ProtocolId id : targets) {
        for (const auto& s : adversary::standard_strategies(id, f101, 555)) {
            auto rep = adversary::run_trials(s, 1000, 777);
            std::printf("    %-16s %-22s rate=%.4f bound=%.4f trials=%llu%s\n",
                        rep.protocol.c_str(), rep.adversary.c_str(), rep.rate, rep.bound,
                        static_cast<unsigned long long>(rep.trials),
                        rep.expect_accept ? " (must accept)" : "");
            if (!rep.within_bound() && ok) {
                ok = false;
                detail = rep.protocol + "/" + rep.adversary;
            }
        }
    }
    report(5, "empirical detection rates meet the theorems' bounds", ok, detail);
}

// -- criterion 6: the non-interactive transform

void criterion_6() {
    PrimeField f101(101);
    RandomSource rng(66001);
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& d) {
        if (ok) {
            ok = false;
            detail = d;
        }
    };

    const ProtocolId all[] = {
        ProtocolId::Freivalds,      ProtocolId::CrpNoninteractive, ProtocolId::RpmNoninteractive,
        ProtocolId::TriEquiv,       ProtocolId::Grp,               ProtocolId::Ldup,
        ProtocolId::RankUpper,      ProtocolId::RankLower,         ProtocolId::CrpInteractive,
        ProtocolId::RpmInvertible,  ProtocolId::RpmFull,           ProtocolId::Signature,
        ProtocolId::TriEquivConst,  ProtocolId::CrpConst,          ProtocolId::Determinant,
    };
    std::vector<std::vector<std::uint8_t>> serialized;
    std::vector<Instance> instances;
    for (ProtocolId id : all) {
        for (int t = 0; t < 7; ++t) {
            HonestInstance hi = draw_instance(id, f101, rng);
            auto cert = fiat_shamir_prove(hi.inst, hi.popt);
            if (!fiat_shamir_verify(cert, hi.inst).accepted) fail("round trip failed");
            auto again = fiat_shamir_prove(hi.inst, hi.popt);
            if (cert.serialize() != again.serialize()) fail("prove not byte-deterministic");
            serialized.push_back(cert.serialize());
            instances.push_back(hi.inst);
        }
    }

    // one hundred random single-byte mutations across random certificates
    RandomSource pick(66002);
    int rejected = 0;
    for (int t = 0; t < 100; ++t) {
        std::size_t which = pick.uniform_below(serialized.size());
        auto bytes = serialized[which];
        std::size_t pos = pick.uniform_below(bytes.size());
        bytes[pos] ^= static_cast<std::uint8_t>(1 + pick.uniform_below(255));
        try {
            auto cert = CertificateFile::deserialize(bytes);
            if (!fiat_shamir_verify(cert, instances[which]).accepted) ++rejected;
        } catch (const Error&) {
            ++rejected;
        }
    }
    if (rejected != 100)
        fail("only " + std::to_string(rejected) + "/100 mutations rejected");
    report(6, "non-interactive round trips, determinism, mutation rejection", ok, detail);
}

// -- criterion 7: wire transparency

void criterion_7() {
    PrimeField f101(101);
    RandomSource rng(77001);
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& d) {
        if (ok) {
            ok = false;
            detail = d;
        }
    };
    const ProtocolId all[] = {
        ProtocolId::Freivalds,      ProtocolId::CrpNoninteractive, ProtocolId::RpmNoninteractive,
        ProtocolId::TriEquiv,       ProtocolId::Grp,               ProtocolId::Ldup,
        ProtocolId::RankUpper,      ProtocolId::RankLower,         ProtocolId::CrpInteractive,
        ProtocolId::RpmInvertible,  ProtocolId::RpmFull,           ProtocolId::Signature,
        ProtocolId::TriEquivConst,  ProtocolId::CrpConst,          ProtocolId::Determinant,
    };
    for (ProtocolId id : all) {
        for (int t = 0; t < 50 && ok; ++t) {
            HonestInstance hi = draw_instance(id, f101, rng);
            ServedInput served;
            if (hi.inst.aq)
                served.aq = hi.inst.aq;
            else
                served.a = hi.inst.a;
            WireServer server("127.0.0.1", 0, std::move(served));
            VerifierOptions vopt;
            vopt.seed = rng.next_u64();
            RunResult remote, local;
            try {
                remote = run_remote("127.0.0.1", server.port(), hi.inst, vopt);
            } catch (const Error& e) {
                fail(std::string(protocol_name(id)) + " wire error: " + e.what());
                server.stop();
                break;
            }
            auto pair = make_pair(hi.inst, vopt, hi.popt);
            local = run_interactive(*pair.prover, *pair.verifier);
            server.stop();
            if (remote.verdict.accepted != local.verdict.accepted)
                fail(std::string(protocol_name(id)) + " verdict mismatch");
            if (remote.transcript.size() != local.transcript.size()) {
                fail(std::string(protocol_name(id)) + " transcript size mismatch");
                continue;
            }
            for (std::size_t i = 0; i < local.transcript.size(); ++i) {
                if (remote.transcript[i].tag != local.transcript[i].tag ||
                    remote.transcript[i].items != local.transcript[i].items) {
                    fail(std::string(protocol_name(id)) + " transcript mismatch");
                    break;
                }
            }
        }
    }
    report(7, "wire runs match in-process runs per seed", ok, detail);
}

}  // namespace

int main() {
    criteria_1_2_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (g_failures) {
        std::printf("%d criterion group(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}

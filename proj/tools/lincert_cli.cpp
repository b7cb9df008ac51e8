// Command-line front end: certify runs both endpoints in-process, prove and
// verify split them across TCP, fs-prove/fs-verify handle non-interactive
// certificates, oracle exposes the brute-force ground truth, and soundness
// prints detection-rate tables for the built-in dishonest provers.
//
// Exit codes: 0 accept, 1 reject, 2 usage or input error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "lincert/adversary.hpp"
#include "lincert/certificate_file.hpp"
#include "lincert/matrix_io.hpp"
#include "lincert/oracle.hpp"
#include "lincert/wire.hpp"

using namespace lincert;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LINCERT_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

Instance build_instance(const std::string& protocol, const std::string& matrix_path,
                        const std::string& second_path, bool rows, bool upper) {
    auto id = protocol_from_name(protocol);
    if (!id) throw UsageError("unknown protocol '" + protocol + "'");
    LoadedMatrix loaded = load_matrix(matrix_path);
    Instance inst{*id, FMatrix(PrimeField(), 0, 0)};
    inst.row_variant = rows;
    inst.side = upper ? Side::Upper : Side::Lower;
    if (*id == ProtocolId::Signature) {
        if (!loaded.rational_matrix) throw UsageError("the signature protocol needs a Q-mode matrix");
        inst.aq = std::move(loaded.rational_matrix);
        return inst;
    }
    if (!loaded.field_matrix) throw UsageError("this protocol needs a prime-field matrix");
    inst.a = std::move(*loaded.field_matrix);
    if (*id == ProtocolId::TriEquiv || *id == ProtocolId::TriEquivConst ||
        *id == ProtocolId::Freivalds) {
        if (second_path.empty()) throw UsageError("this protocol needs --second <matrix>");
        auto b = load_matrix(second_path);
        if (!b.field_matrix) throw UsageError("--second must be a prime-field matrix");
        inst.b = std::move(*b.field_matrix);
        if (*id == ProtocolId::Freivalds) inst.c = inst.a.mul(*inst.b);
    }
    return inst;
}

void print_outputs(const Outputs& o) {
    if (o.det) std::cout << " det=" << *o.det;
    if (o.rank) std::cout << " rank=" << *o.rank;
    auto print_profile = [](const char* label, const std::vector<std::uint32_t>& v) {
        std::cout << " " << label << "=(";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i] + 1;
        std::cout << ")";
    };
    if (o.col_profile) print_profile("crp", *o.col_profile);
    if (o.row_profile) print_profile("rrp", *o.row_profile);
    if (o.rpm_ones) {
        std::cout << " rpm-ones=[";
        for (std::size_t i = 0; i < o.rpm_ones->size(); ++i)
            std::cout << (i ? " " : "") << "(" << (*o.rpm_ones)[i].first + 1 << ","
                      << (*o.rpm_ones)[i].second + 1 << ")";
        std::cout << "]";
    }
    if (o.signature) {
        auto [p, n, z] = *o.signature;
        std::cout << " signature=(" << p << "," << n << "," << z << ")";
    }
    if (o.grp) std::cout << " grp=yes";
    if (o.equivalent) std::cout << " equivalent=yes";
}

int report_verdict(const Verdict& v, const Stats& s) {
    std::cout << (v.accepted ? "accept" : "reject");
    if (!v.accepted) std::cout << " reason=" << reason_name(v.reason);
    print_outputs(v.outputs);
    std::cout << " sent=" << s.elements_sent << " received=" << s.elements_received
              << " rounds=" << s.rounds << " matvec=" << s.mu_count << "\n";
    return v.accepted ? 0 : 1;
}

int cmd_certify(const std::string& protocol, const std::string& matrix,
                const std::string& second, bool rows, bool upper, std::uint64_t seed,
                bool precheck) {
    Instance inst = build_instance(protocol, matrix, second, rows, upper);
    VerifierOptions vopt;
    vopt.seed = seed;
    if (inst.id == ProtocolId::Grp && precheck) {
        // optional nonsingularity pre-check: a full-support lower-bound run
        Instance pre{ProtocolId::RankLower, inst.a};
        ProverOptions popt;
        std::vector<std::uint32_t> all(inst.a.cols());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<std::uint32_t>(j);
        popt.rank_lower_cols = all;
        auto pair = make_pair(pre, vopt, popt);
        auto res = run_interactive(*pair.prover, *pair.verifier);
        std::cout << "nonsingularity pre-check: ";
        int rc = report_verdict(res.verdict, res.stats);
        if (rc != 0) return rc;
        vopt.seed = seed + 1;
    }
    auto pair = make_pair(inst, vopt);
    auto res = run_interactive(*pair.prover, *pair.verifier);
    return report_verdict(res.verdict, res.stats);
}

int cmd_prove(const std::string& listen, const std::string& matrix) {
    auto colon = listen.rfind(':');
    if (colon == std::string::npos) throw UsageError("--listen wants host:port");
    std::string host = listen.substr(0, colon);
    std::uint16_t port = static_cast<std::uint16_t>(std::stoi(listen.substr(colon + 1)));
    LoadedMatrix loaded = load_matrix(matrix);
    ServedInput served;
    if (loaded.field_matrix)
        served.a = std::move(*loaded.field_matrix);
    else
        served.aq = std::move(*loaded.rational_matrix);
    WireServer server(host, port, std::move(served));
    std::cout << "serving prover sessions on " << host << ":" << server.port() << "\n";
    for (;;) std::this_thread::sleep_for(std::chrono::seconds(3600));
    return 0;
}

int cmd_verify(const std::string& connect, const std::string& protocol,
               const std::string& matrix, const std::string& second, bool rows, bool upper,
               std::uint64_t seed) {
    auto colon = connect.rfind(':');
    if (colon == std::string::npos) throw UsageError("--connect wants host:port");
    std::string host = connect.substr(0, colon);
    std::uint16_t port = static_cast<std::uint16_t>(std::stoi(connect.substr(colon + 1)));
    Instance inst = build_instance(protocol, matrix, second, rows, upper);
    VerifierOptions vopt;
    vopt.seed = seed;
    RunResult res = run_remote(host, port, inst, vopt);
    return report_verdict(res.verdict, res.stats);
}

int cmd_fs_prove(const std::string& protocol, const std::string& matrix,
                 const std::string& second, bool rows, bool upper, const std::string& out_path) {
    Instance inst = build_instance(protocol, matrix, second, rows, upper);
    auto cert = fiat_shamir_prove(inst);
    auto bytes = cert.serialize();
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + out_path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    std::cout << "wrote " << bytes.size() << " bytes, " << cert.messages.size()
              << " prover messages\n";
    return 0;
}

int cmd_fs_verify(const std::string& cert_path, const std::string& protocol,
                  const std::string& matrix, const std::string& second, bool rows, bool upper) {
    Instance inst = build_instance(protocol, matrix, second, rows, upper);
    std::ifstream in(cert_path, std::ios::binary);
    if (!in) throw IoError("cannot read " + cert_path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    auto cert = CertificateFile::deserialize(bytes);
    Verdict v = fiat_shamir_verify(cert, inst);
    std::cout << (v.accepted ? "accept" : "reject");
    if (!v.accepted) std::cout << " reason=" << reason_name(v.reason);
    print_outputs(v.outputs);
    std::cout << "\n";
    return v.accepted ? 0 : 1;
}

int cmd_oracle(const std::string& quantity, const std::string& matrix) {
    LoadedMatrix loaded = load_matrix(matrix);
    if (quantity == "signature") {
        if (!loaded.rational_matrix) throw UsageError("signature wants a Q-mode matrix");
        auto [p, n, z] = oracle::signature(*loaded.rational_matrix);
        std::cout << "(" << p << "," << n << "," << z << ")\n";
        return 0;
    }
    if (!loaded.field_matrix) throw UsageError("this quantity wants a prime-field matrix");
    const FMatrix& a = *loaded.field_matrix;
    if (quantity == "rank") {
        std::cout << oracle::rank(a) << "\n";
    } else if (quantity == "crp" || quantity == "rrp") {
        auto prof = quantity == "crp" ? oracle::crp(a) : oracle::rrp(a);
        for (std::size_t i = 0; i < prof.size(); ++i) std::cout << (i ? " " : "") << prof[i] + 1;
        std::cout << "\n";
    } else if (quantity == "rpm") {
        FMatrix r = oracle::rpm(a);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::cout << (j ? " " : "") << r.at(i, j);
            std::cout << "\n";
        }
    } else if (quantity == "det") {
        std::cout << oracle::det(a) << "\n";
    } else if (quantity == "grp") {
        std::cout << (oracle::grp(a) ? "yes" : "no") << "\n";
    } else {
        throw UsageError("unknown quantity '" + quantity + "'");
    }
    return 0;
}

int cmd_soundness(const std::string& protocol, std::uint64_t trials, std::uint64_t seed) {
    PrimeField f101(101);
    std::vector<ProtocolId> targets;
    if (protocol == "all") {
        targets = {ProtocolId::Freivalds,     ProtocolId::RankUpper,  ProtocolId::RankLower,
                   ProtocolId::TriEquiv,      ProtocolId::Grp,        ProtocolId::Ldup,
                   ProtocolId::Determinant,   ProtocolId::CrpInteractive,
                   ProtocolId::RpmInvertible, ProtocolId::RpmFull,    ProtocolId::TriEquivConst,
                   ProtocolId::CrpConst};
    } else {
        auto id = protocol_from_name(protocol);
        if (!id) throw UsageError("unknown protocol '" + protocol + "'");
        targets.push_back(*id);
    }
    std::printf("%-16s %-22s %8s %8s %8s %6s\n", "protocol", "adversary", "rate", "bound",
                "trials", "ok");
    bool all_ok = true;
    for (ProtocolId id : targets) {
        for (const auto& s : adversary::standard_strategies(id, f101, seed)) {
            auto rep = adversary::run_trials(s, trials, seed + 1);
            bool ok = rep.within_bound();
            all_ok &= ok;
            std::printf("%-16s %-22s %8.4f %8.4f %8llu %6s\n", rep.protocol.c_str(),
                        rep.adversary.c_str(), rep.rate, rep.bound,
                        static_cast<unsigned long long>(rep.trials),
                        ok ? (rep.expect_accept ? "pass*" : "pass") : "FAIL");
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interactive certificates for exact linear algebra over prime fields"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();

    std::string protocol, matrix, second, addr, cert_path = "certificate.lcrt", quantity;
    bool rows = false, upper = false, no_precheck = false;
    std::uint64_t trials = 1000;

    auto* certify = app.add_subcommand("certify", "run both endpoints in-process");
    certify->add_option("protocol", protocol)->required();
    certify->add_option("matrix", matrix)->required();
    certify->add_option("--second", second, "second input matrix (equivalence, product)");
    certify->add_flag("--rows", rows, "row-profile flavor of the echelon certificate");
    certify->add_flag("--upper", upper, "upper-triangular flavor of equivalence");
    certify->add_flag("--no-precheck", no_precheck, "skip the nonsingularity pre-check");
    certify->add_option("--seed", seed);

    auto* prove = app.add_subcommand("prove", "serve prover sessions over TCP");
    std::string listen = "127.0.0.1:7411";
    prove->add_option("--listen", listen, "host:port")->required();
    prove->add_option("matrix", matrix)->required();

    auto* verify = app.add_subcommand("verify", "verify against a remote prover");
    verify->add_option("--connect", addr, "host:port")->required();
    verify->add_option("protocol", protocol)->required();
    verify->add_option("matrix", matrix)->required();
    verify->add_option("--second", second);
    verify->add_flag("--rows", rows);
    verify->add_flag("--upper", upper);
    verify->add_option("--seed", seed);

    auto* fsp = app.add_subcommand("fs-prove", "write a non-interactive certificate");
    fsp->add_option("protocol", protocol)->required();
    fsp->add_option("matrix", matrix)->required();
    fsp->add_option("--second", second);
    fsp->add_flag("--rows", rows);
    fsp->add_flag("--upper", upper);
    fsp->add_option("-o,--out", cert_path);

    auto* fsv = app.add_subcommand("fs-verify", "check a non-interactive certificate");
    fsv->add_option("certificate", cert_path)->required();
    fsv->add_option("protocol", protocol)->required();
    fsv->add_option("matrix", matrix)->required();
    fsv->add_option("--second", second);
    fsv->add_flag("--rows", rows);
    fsv->add_flag("--upper", upper);

    auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
    orc->add_option("quantity", quantity, "rank|crp|rrp|rpm|det|grp|signature")->required();
    orc->add_option("matrix", matrix)->required();

    auto* snd = app.add_subcommand("soundness", "detection-rate table for dishonest provers");
    std::string target = "all";
    snd->add_option("protocol", target);
    snd->add_option("--trials", trials);
    snd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
        if (*certify) return cmd_certify(protocol, matrix, second, rows, upper, seed, !no_precheck);
        if (*prove) return cmd_prove(listen, matrix);
        if (*verify) return cmd_verify(addr, protocol, matrix, second, rows, upper, seed);
        if (*fsp) return cmd_fs_prove(protocol, matrix, second, rows, upper, cert_path);
        if (*fsv) return cmd_fs_verify(cert_path, protocol, matrix, second, rows, upper);
        if (*orc) return cmd_oracle(quantity, matrix);
        if (*snd) return cmd_soundness(target, trials, seed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lincert/adversary.hpp"
#include "lincert/certificate_file.hpp"
#include "lincert/matrix_io.hpp"
#include "lincert/oracle.hpp"
#include "lincert/wire.hpp"

namespace py = pybind11;
using namespace lincert;

namespace {

FMatrix matrix_from_rows(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    PrimeField f(p);
    std::size_t m = rows.size();
    std::size_t n = m ? rows[0].size() : 0;
    FMatrix a(f, m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, f.reduce_i64(rows[i][j]));
    }
    return a;
}

QMatrix qmatrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    std::size_t m = rows.size();
    std::size_t n = m ? rows[0].size() : 0;
    QMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, Rational::parse(rows[i][j]));
    }
    return a;
}

std::vector<std::vector<std::uint64_t>> matrix_rows(const FMatrix& a) {
    std::vector<std::vector<std::uint64_t>> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out[i].resize(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a.at(i, j);
    }
    return out;
}

py::dict verdict_dict(const Verdict& v, const Stats* s) {
    py::dict d;
    d["accepted"] = v.accepted;
    d["reason"] = std::string(reason_name(v.reason));
    if (s) {
        d["elements_sent"] = s->elements_sent;
        d["elements_received"] = s->elements_received;
        d["rounds"] = s->rounds;
        d["matvec_count"] = s->mu_count;
    }
    const Outputs& o = v.outputs;
    if (o.det) d["det"] = *o.det;
    if (o.rank) d["rank"] = *o.rank;
    if (o.col_profile) d["col_profile"] = *o.col_profile;
    if (o.row_profile) d["row_profile"] = *o.row_profile;
    if (o.rpm_ones) d["rpm_ones"] = *o.rpm_ones;
    if (o.signature) {
        auto [p, n, z] = *o.signature;
        d["signature"] = py::make_tuple(p, n, z);
    }
    if (o.grp) d["grp"] = true;
    if (o.equivalent) d["equivalent"] = true;
    return d;
}

Instance instance_for(const std::string& protocol, const FMatrix& a,
                      const std::optional<FMatrix>& b, const std::optional<FMatrix>& c,
                      bool rows, bool upper) {
    auto id = protocol_from_name(protocol);
    if (!id) throw UsageError("unknown protocol '" + protocol + "'");
    Instance inst{*id, a};
    inst.b = b;
    inst.c = c;
    inst.row_variant = rows;
    inst.side = upper ? Side::Upper : Side::Lower;
    return inst;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "interactive certificates for exact linear algebra over prime fields";

    py::register_exception<Error>(m, "LincertError");

    py::class_<FMatrix>(m, "Matrix")
        .def(py::init(&matrix_from_rows), py::arg("p"), py::arg("rows"))
        .def_property_readonly("shape",
                               [](const FMatrix& a) { return py::make_tuple(a.rows(), a.cols()); })
        .def_property_readonly("modulus", [](const FMatrix& a) { return a.field().modulus(); })
        .def("rows", &matrix_rows)
        .def("__eq__", [](const FMatrix& a, const FMatrix& b) { return a == b; });

    py::class_<QMatrix>(m, "RationalMatrix")
        .def(py::init(&qmatrix_from_rows), py::arg("rows"))
        .def_property_readonly("shape",
                               [](const QMatrix& a) { return py::make_tuple(a.rows(), a.cols()); });

    m.def(
        "random_matrix",
        [](std::uint64_t p, std::size_t mrows, std::size_t ncols, std::size_t rank,
           std::uint64_t seed) {
            RandomSource rng(seed);
            return FMatrix::random_rank(PrimeField(p), mrows, ncols, rank, rng);
        },
        py::arg("p"), py::arg("rows"), py::arg("cols"), py::arg("rank"), py::arg("seed") = 1);
    m.def(
        "random_nonsingular",
        [](std::uint64_t p, std::size_t n, std::uint64_t seed) {
            RandomSource rng(seed);
            return FMatrix::random_nonsingular(PrimeField(p), n, rng);
        },
        py::arg("p"), py::arg("n"), py::arg("seed") = 1);

    m.def(
        "certify",
        [](const std::string& protocol, const FMatrix& a, const std::optional<FMatrix>& b,
           const std::optional<FMatrix>& c, bool rows, bool upper, std::uint64_t seed) {
            Instance inst = instance_for(protocol, a, b, c, rows, upper);
            VerifierOptions vopt;
            vopt.seed = seed;
            auto pair = make_pair(inst, vopt);
            RunResult res = run_interactive(*pair.prover, *pair.verifier);
            return verdict_dict(res.verdict, &res.stats);
        },
        py::arg("protocol"), py::arg("a"), py::arg("b") = std::nullopt,
        py::arg("c") = std::nullopt, py::arg("rows") = false, py::arg("upper") = false,
        py::arg("seed") = 1);

    m.def(
        "certify_signature",
        [](const QMatrix& a, std::uint64_t seed) {
            Instance inst{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
            inst.aq = a;
            VerifierOptions vopt;
            vopt.seed = seed;
            auto pair = make_pair(inst, vopt);
            RunResult res = run_interactive(*pair.prover, *pair.verifier);
            return verdict_dict(res.verdict, &res.stats);
        },
        py::arg("a"), py::arg("seed") = 1);

    m.def(
        "fs_prove",
        [](const std::string& protocol, const FMatrix& a, const std::optional<FMatrix>& b,
           const std::optional<FMatrix>& c, bool rows, bool upper) {
            Instance inst = instance_for(protocol, a, b, c, rows, upper);
            auto bytes = fiat_shamir_prove(inst).serialize();
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("protocol"), py::arg("a"), py::arg("b") = std::nullopt,
        py::arg("c") = std::nullopt, py::arg("rows") = false, py::arg("upper") = false);

    m.def(
        "fs_verify",
        [](py::bytes blob, const std::string& protocol, const FMatrix& a,
           const std::optional<FMatrix>& b, const std::optional<FMatrix>& c, bool rows,
           bool upper) {
            std::string s = blob;
            std::vector<std::uint8_t> bytes(s.begin(), s.end());
            Instance inst = instance_for(protocol, a, b, c, rows, upper);
            Verdict v = fiat_shamir_verify(CertificateFile::deserialize(bytes), inst);
            return verdict_dict(v, nullptr);
        },
        py::arg("certificate"), py::arg("protocol"), py::arg("a"), py::arg("b") = std::nullopt,
        py::arg("c") = std::nullopt, py::arg("rows") = false, py::arg("upper") = false);

    auto oracle_mod = m.def_submodule("oracle", "brute-force ground truth");
    oracle_mod.def("rank", [](const FMatrix& a) { return oracle::rank(a); });
    oracle_mod.def("crp", [](const FMatrix& a) { return oracle::crp(a); });
    oracle_mod.def("rrp", [](const FMatrix& a) { return oracle::rrp(a); });
    oracle_mod.def("rpm", [](const FMatrix& a) { return matrix_rows(oracle::rpm(a)); });
    oracle_mod.def("det", [](const FMatrix& a) { return oracle::det(a); });
    oracle_mod.def("grp", [](const FMatrix& a) { return oracle::grp(a); });
    oracle_mod.def("signature", [](const QMatrix& a) {
        auto [p, n, z] = oracle::signature(a);
        return py::make_tuple(p, n, z);
    });

    m.def(
        "soundness_table",
        [](const std::string& protocol, std::uint64_t trials, std::uint64_t seed) {
            auto id = protocol_from_name(protocol);
            if (!id) throw UsageError("unknown protocol '" + protocol + "'");
            py::list out;
            for (const auto& s : adversary::standard_strategies(*id, PrimeField(101), seed)) {
                auto rep = adversary::run_trials(s, trials, seed + 1);
                py::dict d;
                d["protocol"] = rep.protocol;
                d["adversary"] = rep.adversary;
                d["trials"] = rep.trials;
                d["detections"] = rep.detections;
                d["rate"] = rep.rate;
                d["bound"] = rep.bound;
                d["within_bound"] = rep.within_bound();
                d["expect_accept"] = rep.expect_accept;
                out.append(d);
            }
            return out;
        },
        py::arg("protocol"), py::arg("trials") = 400, py::arg("seed") = 1);

    m.attr("protocols") = std::vector<std::string>{
        "freivalds", "crp-ni", "rpm-ni", "tri-equiv", "grp", "ldup", "rank-upper", "rank-lower",
        "crp", "rpm-inv", "rpm", "signature", "tri-equiv-const", "crp-const", "det"};
}

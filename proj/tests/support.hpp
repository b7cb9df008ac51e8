#pragma once

// Shared instance generators for the test suites.

#include <cstdint>

#include "lincert/instance.hpp"
#include "lincert/linalg.hpp"
#include "lincert/matrix.hpp"
#include "lincert/oracle.hpp"
#include "lincert/transcript.hpp"

namespace lincert_test {

using namespace lincert;

inline FMatrix random_symmetric_int(std::size_t n, int lo, int hi, RandomSource& rng,
                                    const PrimeField& f) {
    FMatrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::int64_t v = lo + static_cast<std::int64_t>(rng.uniform_below(hi - lo + 1));
            a.set(i, j, f.reduce_i64(v));
            a.set(j, i, f.reduce_i64(v));
        }
    return a;
}

inline QMatrix random_symmetric_q(std::size_t n, int lo, int hi, RandomSource& rng) {
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::int64_t v = lo + static_cast<std::int64_t>(rng.uniform_below(hi - lo + 1));
            a.set(i, j, Rational(BigInt(v)));
            a.set(j, i, Rational(BigInt(v)));
        }
    return a;
}

inline RunResult run_pair(const Instance& inst, std::uint64_t seed,
                          const ProverOptions& popt = {}) {
    VerifierOptions vopt;
    vopt.seed = seed;
    auto pair = make_pair(inst, vopt, popt);
    return run_interactive(*pair.prover, *pair.verifier);
}

inline FMatrix from_rows(const PrimeField& f, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t m = rows.size(), n = rows.begin()->size();
    FMatrix a(f, m, n);
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) a.set(i, j++, f.reduce_i64(v));
        ++i;
    }
    return a;
}

}  // namespace lincert_test

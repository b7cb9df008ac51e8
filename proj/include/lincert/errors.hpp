#pragma once

#include <stdexcept>
#include <string>

namespace lincert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in prime field or rationals") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "matrix is singular") : Error(what) {}
};

struct PivotFailure : Error {
    explicit PivotFailure(const std::string& what) : Error(what) {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("matrix is not symmetric") {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error(what) {}
};

struct Exhausted : Error {
    explicit Exhausted(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct ZeroEvaluationPoint : Error {
    ZeroEvaluationPoint() : Error("Laurent evaluation at zero") {}
};

struct SecurityLevelTooLow : Error {
    explicit SecurityLevelTooLow(const std::string& what) : Error(what) {}
};

struct ProtocolViolation : Error {
    explicit ProtocolViolation(const std::string& what) : Error(what) {}
};

struct Deadlock : Error {
    Deadlock() : Error("both sessions idle before a verdict") {}
};

struct BadCertificate : Error {
    explicit BadCertificate(const std::string& what) : Error(what) {}
};

struct DigestMismatch : Error {
    DigestMismatch() : Error("certificate input digest differs from the supplied inputs") {}
};

struct BadPrime : Error {
    explicit BadPrime(const std::string& what) : Error(what) {}
};

struct BindError : Error {
    explicit BindError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace lincert

#include "lincert/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "lincert/errors.hpp"

namespace lincert {

LoadedMatrix parse_matrix(std::istream& in) {
    std::string word, version;
    std::size_t m = 0, n = 0;
    std::string mode;
    if (!(in >> word >> version >> m >> n >> mode) || word != "lincert-matrix" || version != "v1")
        throw IoError("bad matrix header; expected 'lincert-matrix v1 <m> <n> <p|Q>'");
    LoadedMatrix out;
    if (mode == "Q") {
        QMatrix q(m, n);
        std::string tok;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!(in >> tok)) throw IoError("matrix body is short");
                q.set(i, j, Rational::parse(tok));
            }
        out.rational_matrix = std::move(q);
    } else {
        std::uint64_t p = 0;
        try {
            p = std::stoull(mode);
        } catch (...) {
            throw IoError("matrix mode must be a prime or 'Q'");
        }
        PrimeField f(p);
        FMatrix a(f, m, n);
        long long v = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!(in >> v)) throw IoError("matrix body is short");
                a.set(i, j, f.reduce_i64(v));
            }
        out.field_matrix = std::move(a);
    }
    return out;
}

LoadedMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_matrix(in);
}

void save_matrix(const std::string& path, const FMatrix& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "lincert-matrix v1 " << m.rows() << " " << m.cols() << " " << m.field().modulus()
        << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << "\n";
    }
}

void save_matrix(const std::string& path, const QMatrix& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "lincert-matrix v1 " << m.rows() << " " << m.cols() << " Q\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).str();
        out << "\n";
    }
}

}  // namespace lincert

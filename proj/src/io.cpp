#include "meo/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include <json.hpp>

namespace meo::io {

namespace {

Hermitian parse_matrix(const nlohmann::json& j, int dim, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw DomainError(std::string(name) + ": expected " + std::to_string(dim) + " rows");
    Hermitian m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw DomainError(std::string(name) + ": row " + std::to_string(i) +
                              " must have " + std::to_string(dim) + " entries");
        for (int k = 0; k < dim; ++k) {
            const auto& entry = row.at(k);
            if (!entry.is_array() || entry.size() != 2)
                throw DomainError(std::string(name) + ": entries must be [re, im] pairs");
            m(i, k) = std::complex<double>(entry.at(0).get<double>(),
                                           entry.at(1).get<double>());
        }
    }
    return m;
}

nlohmann::json matrix_to_json(const Hermitian& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            row.push_back({m(i, k).real(), m(i, k).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("malformed JSON in " + path + ": " + e.what());
    }
    try {
        StateFile sf;
        sf.schema_version = j.at("schema_version").get<int>();
        if (sf.schema_version != 1)
            throw DomainError("unsupported schema_version (expected 1)");
        const int dim = j.at("dim").get<int>();
        if (dim < 1)
            throw DomainError("dim must be at least 1");
        sf.rho = parse_matrix(j.at("rho"), dim, "rho");
        sf.sigma = parse_matrix(j.at("sigma"), dim, "sigma");
        return sf;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("invalid state file " + path + ": " + e.what());
    }
}

void write_state_file(const std::string& path, const Hermitian& rho, const Hermitian& sigma) {
    if (rho.rows() != sigma.rows())
        throw ShapeError("rho and sigma must have the same dimension");
    nlohmann::json j;
    j["schema_version"] = 1;
    j["dim"] = static_cast<int>(rho.rows());
    j["rho"] = matrix_to_json(rho);
    j["sigma"] = matrix_to_json(sigma);
    write_file_atomic(path, j.dump(2) + "\n");
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw DomainError("cannot open output file: " + tmp.string());
        out << contents;
        if (!out.flush())
            throw DomainError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw DomainError("rename failed: " + ec.message());
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace meo::io

#include "qcoh/state_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcoh {

namespace {

using nlohmann::json;

DensityMatrix parse_state(const json& doc) {
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix"))
        throw std::runtime_error(
            "state file: expected an object with \"dims\" and \"matrix\"");

    std::vector<int> dims;
    for (const auto& d : doc.at("dims")) {
        if (!d.is_number_integer())
            throw std::runtime_error("state file: dims must be integers");
        dims.push_back(d.get<int>());
    }
    if (dims.empty()) throw std::runtime_error("state file: dims is empty");

    long long side = 1;
    for (int d : dims) side *= d;

    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || static_cast<long long>(rows.size()) != side)
        throw std::runtime_error(
            "state file: matrix row count does not match the dims product");
    ComplexMatrix m(side, side);
    for (long long i = 0; i < side; ++i) {
        const auto& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<long long>(row.size()) != side)
            throw std::runtime_error("state file: matrix is not square");
        for (long long j = 0; j < side; ++j) {
            const auto& entry = row.at(static_cast<std::size_t>(j));
            if (!entry.is_array() || entry.size() != 2 ||
                !entry.at(0).is_number() || !entry.at(1).is_number())
                throw std::runtime_error(
                    "state file: every entry must be a [re, im] pair");
            m(i, j) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    }
    return DensityMatrix(std::move(dims), std::move(m));
}

}  // namespace

DensityMatrix load_state(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("state file: invalid JSON: ") + e.what());
    }
    return parse_state(doc);
}

DensityMatrix load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    return load_state(in);
}

std::string state_to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (int i = 0; i < rho.side(); ++i) {
        json row = json::array();
        for (int j = 0; j < rho.side(); ++j)
            row.push_back({rho.mat()(i, j).real(), rho.mat()(i, j).imag()});
        rows.push_back(std::move(row));
    }
    json doc;
    doc["dims"] = rho.dims();
    doc["matrix"] = std::move(rows);
    return doc.dump();
}

void save_state_file(const std::string& path, const DensityMatrix& rho) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << state_to_json(rho) << "\n";
}

}  // namespace qcoh

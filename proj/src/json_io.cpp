#include "quasiq/json_io.hpp"

#include <fstream>
#include <sstream>

namespace quasiq {

namespace {

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex entry must be a [re, im] number pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

std::vector<int> dims_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_array())
        throw ParseError("expected an object with a \"dims\" array");
    std::vector<int> dims;
    for (const Json& d : j["dims"]) {
        if (!d.is_number_integer())
            throw ParseError("\"dims\" entries must be integers");
        dims.push_back(d.get<int>());
    }
    return dims;
}

} // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (long r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a non-empty list of rows");
    const std::size_t nrows = j.size();
    std::size_t ncols = 0;
    ComplexMatrix m;
    for (std::size_t r = 0; r < nrows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.empty())
            throw ParseError("matrix rows must be non-empty lists");
        if (r == 0) {
            ncols = row.size();
            m.resize(static_cast<long>(nrows), static_cast<long>(ncols));
        } else if (row.size() != ncols) {
            throw ParseError("matrix rows have inconsistent lengths");
        }
        for (std::size_t c = 0; c < ncols; ++c)
            m(static_cast<long>(r), static_cast<long>(c)) = complex_from_json(row[c]);
    }
    return m;
}

Json vector_to_json(const Eigen::VectorXcd& v) {
    Json out = Json::array();
    for (long i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

Eigen::VectorXcd vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("vector must be a non-empty list of [re, im] pairs");
    Eigen::VectorXcd v(static_cast<long>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<long>(i)) = complex_from_json(j[i]);
    return v;
}

Json state_to_json(const DensityMatrix& rho) {
    return Json{{"dims", rho.dims()}, {"rows", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const Json& j, const Tolerances& tol, bool validate) {
    const std::vector<int> dims = dims_from_json(j);
    if (!j.contains("rows"))
        throw ParseError("state object is missing \"rows\"");
    ComplexMatrix m = matrix_from_json(j["rows"]);
    if (m.rows() != m.cols())
        throw ParseError("state matrix is not square");
    if (validate) return validate_density(m, dims, tol);
    return DensityMatrix::unchecked(dims, std::move(m));
}

Json report_to_json(const MeasureReport& r) {
    return Json{{"gross", r.gross},
                {"unflip_term", r.unflip_term},
                {"offset", r.offset},
                {"f", r.f},
                {"eq", r.eq},
                {"purity", r.purity},
                {"mixedness", r.mixedness},
                {"picture", picture_name(r.picture)}};
}

Json unitary_to_json(const LocalUnitary& u) {
    Json factors = Json::array();
    for (const ComplexMatrix& f : u.factors()) factors.push_back(matrix_to_json(f));
    return Json{{"dims", u.dims()}, {"factors", std::move(factors)}};
}

LocalUnitary unitary_from_json(const Json& j) {
    const std::vector<int> dims = dims_from_json(j);
    if (!j.contains("factors") || !j["factors"].is_array())
        throw ParseError("unitary object is missing a \"factors\" list");
    std::vector<ComplexMatrix> factors;
    for (const Json& f : j["factors"]) factors.push_back(matrix_from_json(f));
    return LocalUnitary(dims, std::move(factors));
}

Json channel_to_json(const LocalKrausChannel& ch) {
    Json factors = Json::array();
    for (const auto& list : ch.factors()) {
        Json kraus = Json::array();
        for (const ComplexMatrix& l : list) kraus.push_back(matrix_to_json(l));
        factors.push_back(Json{{"kraus", std::move(kraus)}});
    }
    return Json{{"dims", ch.dims()}, {"factors", std::move(factors)}};
}

LocalKrausChannel channel_from_json(const Json& j) {
    const std::vector<int> dims = dims_from_json(j);
    if (!j.contains("factors") || !j["factors"].is_array())
        throw ParseError("channel object is missing a \"factors\" list");
    std::vector<std::vector<ComplexMatrix>> factors;
    for (const Json& f : j["factors"]) {
        if (!f.is_object() || !f.contains("kraus") || !f["kraus"].is_array())
            throw ParseError("channel factors must be objects with a \"kraus\" list");
        std::vector<ComplexMatrix> kraus;
        for (const Json& l : f["kraus"]) kraus.push_back(matrix_from_json(l));
        factors.push_back(std::move(kraus));
    }
    return LocalKrausChannel(dims, std::move(factors));
}

Json ensemble_to_json(const SeparableEnsemble& e) {
    Json factors = Json::array();
    for (const auto& term : e.factors) {
        Json row = Json::array();
        for (const Eigen::VectorXcd& v : term) row.push_back(vector_to_json(v));
        factors.push_back(std::move(row));
    }
    return Json{{"dims", e.dims}, {"weights", e.weights}, {"factors", std::move(factors)}};
}

SeparableEnsemble ensemble_from_json(const Json& j) {
    SeparableEnsemble e;
    e.dims = dims_from_json(j);
    if (!j.contains("weights") || !j["weights"].is_array())
        throw ParseError("ensemble object is missing a \"weights\" list");
    for (const Json& w : j["weights"]) {
        if (!w.is_number()) throw ParseError("ensemble weights must be numbers");
        e.weights.push_back(w.get<double>());
    }
    if (!j.contains("factors") || !j["factors"].is_array())
        throw ParseError("ensemble object is missing a \"factors\" list");
    for (const Json& term : j["factors"]) {
        if (!term.is_array() || term.size() != e.dims.size())
            throw ParseError("ensemble term must list one vector per subsystem");
        std::vector<Eigen::VectorXcd> row;
        for (const Json& v : term) row.push_back(vector_from_json(v));
        e.factors.push_back(std::move(row));
    }
    if (e.factors.size() != e.weights.size())
        throw ParseError("ensemble weight and term counts differ");
    return e;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& err) {
        throw ParseError(path + ": " + err.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace quasiq

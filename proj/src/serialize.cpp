#include "kz/serialize.hpp"

#include <sstream>

namespace kz {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json matrix_to_json(const MatrixR& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixR matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw input_error("expected a matrix as an array of rows");
    const std::size_t rows = j.size(), cols = j[0].size();
    MatrixR m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw input_error("ragged matrix rows in document");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_string()) throw input_error("matrix entries must be \"p/q\" strings");
            m(i, c) = Rational::parse(j[i][c].get<std::string>());
        }
    }
    return m;
}

std::vector<Rational> points_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("\"points\" must be a non-empty array");
    std::vector<Rational> pts;
    for (const auto& p : j) {
        if (!p.is_string()) throw input_error("points must be \"p/q\" strings");
        pts.push_back(Rational::parse(p.get<std::string>()));
    }
    return pts;
}

const json& require_field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw input_error(std::string("document is missing \"") + name + "\"");
    return *it;
}

int rho_from_json(const json& j) {
    const json& r = require_field(j, "rho");
    if (!r.is_number_integer()) throw input_error("\"rho\" must be the integer +1 or -1");
    const int rho = r.get<int>();
    if (rho != 1 && rho != -1) throw input_error("\"rho\" must be +1 or -1");
    return rho;
}

} // namespace

MatrixF SolutionDocument::matrix() const {
    PartialFractionSolution pf{points, residues, poly_part};
    return to_matrix(pf);
}

SolutionDocument make_document(const FundamentalSolution& sol, const KZSystem& sys) {
    PartialFractionSolution merged = merge_columns(sol);
    SolutionDocument doc;
    doc.n = sys.n;
    doc.rho = sol.rho;
    doc.points = merged.points;
    doc.residues = std::move(merged.residues);
    doc.poly_part = std::move(merged.poly_part);
    return doc;
}

SolutionDocument make_document(const PartialFractionSolution& sol, const KZSystem& sys) {
    SolutionDocument doc;
    doc.n = sys.n;
    doc.rho = sys.rho;
    doc.points = sol.points;
    doc.residues = sol.residues;
    doc.poly_part = sol.poly_part;
    return doc;
}

SolutionDocument make_document(const MatrixF& w, const KZSystem& sys) {
    auto pf = to_partial_fractions(w, sys.points);
    if (!pf) throw internal_error("solution matrix is not partial-fraction representable");
    SolutionDocument doc;
    doc.n = sys.n;
    doc.rho = sys.rho;
    doc.points = pf->points;
    doc.residues = std::move(pf->residues);
    doc.poly_part = std::move(pf->poly_part);
    return doc;
}

ordered_json to_json(const SolutionDocument& doc) {
    ordered_json j;
    j["schema"] = kSchemaId;
    j["n"] = doc.n;
    j["rho"] = doc.rho;
    ordered_json pts = ordered_json::array();
    for (const auto& p : doc.points) pts.push_back(p.to_string());
    j["points"] = std::move(pts);
    ordered_json res = ordered_json::array();
    for (const auto& l : doc.residues) res.push_back(matrix_to_json(l));
    j["residues"] = std::move(res);
    ordered_json poly = ordered_json::array();
    for (const auto& q : doc.poly_part) poly.push_back(matrix_to_json(q));
    j["poly_part"] = std::move(poly);
    return j;
}

SolutionDocument solution_from_json(const json& j) {
    if (!j.is_object()) throw input_error("solution document must be a JSON object");
    const json& schema = require_field(j, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kSchemaId)
        throw input_error(std::string("unsupported schema, expected \"") + kSchemaId + "\"");
    SolutionDocument doc;
    const json& n = require_field(j, "n");
    if (!n.is_number_integer()) throw input_error("\"n\" must be an integer");
    doc.n = n.get<int>();
    doc.rho = rho_from_json(j);
    doc.points = points_from_json(require_field(j, "points"));
    for (const auto& l : require_field(j, "residues")) doc.residues.push_back(matrix_from_json(l));
    for (const auto& q : require_field(j, "poly_part")) doc.poly_part.push_back(matrix_from_json(q));

    if (doc.residues.size() != doc.points.size())
        throw input_error("document has " + std::to_string(doc.residues.size()) +
                          " residues for " + std::to_string(doc.points.size()) + " points");
    const std::size_t un = static_cast<std::size_t>(doc.n);
    for (const auto& l : doc.residues)
        if (l.rows() != un) throw input_error("residue row count differs from n");
    for (const auto& q : doc.poly_part)
        if (q.rows() != un) throw input_error("poly_part row count differs from n");
    doc.system(); // validates n, distinctness, rho
    return doc;
}

KZSystem system_from_json(const json& j) {
    if (!j.is_object()) throw input_error("system document must be a JSON object");
    const json& n = require_field(j, "n");
    if (!n.is_number_integer()) throw input_error("\"n\" must be an integer");
    return KZSystem(n.get<int>(), points_from_json(require_field(j, "points")), rho_from_json(j));
}

ordered_json to_json(const VerificationReport& rep) {
    ordered_json j;
    j["schema"] = kSchemaId;
    j["ode_residual_zero"] = rep.ode_residual_zero;
    j["det_nonzero"] = rep.det_nonzero;
    j["pole_orders_ok"] = rep.pole_orders_ok;
    j["moments_ok"] = rep.moments_ok;
    ordered_json details = ordered_json::array();
    for (const auto& f : rep.details) {
        ordered_json d;
        d["what"] = f.what;
        if (f.row >= 0) d["entry"] = {f.row, f.col};
        ordered_json num = ordered_json::array(), den = ordered_json::array();
        for (const auto& c : f.residual.num().coeffs()) num.push_back(c.to_string());
        for (const auto& c : f.residual.den().coeffs()) den.push_back(c.to_string());
        d["residual_num"] = std::move(num);
        d["residual_den"] = std::move(den);
        details.push_back(std::move(d));
    }
    j["details"] = std::move(details);
    return j;
}

ordered_json to_json(const GateVerdict& verdict) {
    ordered_json j;
    j["schema"] = kSchemaId;
    j["m1"] = verdict.m1;
    j["m2"] = verdict.m2;
    j["lambda_squared"] = verdict.lambda_squared.get_str();
    j["verdict"] = verdict.verdict == GateVerdict::Kind::no_rational_fundamental
                       ? "no_rational_fundamental"
                       : "inconclusive";
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string to_text(const MatrixF& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < w.cols(); ++j) {
            if (j) os << "   ";
            os << w(i, j).to_string();
        }
        os << "\n";
    }
    return os.str();
}

std::string to_text(const VerificationReport& rep) {
    std::ostringstream os;
    auto line = [&](const char* name, bool ok) { os << name << ": " << (ok ? "ok" : "FAIL") << "\n"; };
    line("ode_residual_zero", rep.ode_residual_zero);
    line("det_nonzero", rep.det_nonzero);
    line("pole_orders_ok", rep.pole_orders_ok);
    line("moments_ok", rep.moments_ok);
    for (const auto& f : rep.details) {
        os << "  " << f.what;
        if (f.row >= 0) os << " at entry (" << f.row + 1 << "," << f.col + 1 << ")";
        if (!f.residual.is_zero()) os << ": " << f.residual.to_string();
        os << "\n";
    }
    return os.str();
}

std::string to_text(const GateVerdict& verdict) {
    std::ostringstream os;
    os << "m1 = " << verdict.m1 << ", m2 = " << verdict.m2
       << ", lambda^2 = " << verdict.lambda_squared.get_str() << "\n";
    os << (verdict.verdict == GateVerdict::Kind::no_rational_fundamental
               ? "no rational fundamental solution exists"
               : "inconclusive: residue eigenvalues at infinity are integers")
       << "\n";
    return os.str();
}

} // namespace kz

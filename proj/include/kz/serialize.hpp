#pragma once

/**
 * JSON wire formats. Every scalar travels as a "p/q" string, documents
 * carry a top-level schema tag, and key order is fixed so identical
 * inputs serialize byte-identically.
 */

#include <string>

#include "json.hpp"

#include "kz/verifier.hpp"

namespace kz {

inline constexpr const char* kSchemaId = "kz-rational/1";

// On-disk form of a solution: matrix-valued residues per pole plus the
// matrix polynomial part, for either sign of rho.
struct SolutionDocument {
    int n = 0;
    int rho = -1;
    std::vector<Rational> points;
    std::vector<MatrixR> residues;
    std::vector<MatrixR> poly_part;

    KZSystem system() const { return KZSystem(n, points, rho); }
    MatrixF matrix() const;
};

SolutionDocument make_document(const FundamentalSolution& sol, const KZSystem& sys);
SolutionDocument make_document(const MatrixF& w, const KZSystem& sys);
// Single solution column; residues serialize as n x 1 matrices.
SolutionDocument make_document(const PartialFractionSolution& sol, const KZSystem& sys);

nlohmann::ordered_json to_json(const SolutionDocument& doc);
SolutionDocument solution_from_json(const nlohmann::json& j);

KZSystem system_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const VerificationReport& rep);
nlohmann::ordered_json to_json(const GateVerdict& verdict);

// Canonical dump: 2-space indentation, trailing newline.
std::string dump(const nlohmann::ordered_json& j);

std::string to_text(const MatrixF& w);
std::string to_text(const VerificationReport& rep);
std::string to_text(const GateVerdict& verdict);

} // namespace kz

#include "ghgeom/common.hpp"

namespace ghgeom {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
        case ErrorKind::NegativeDistance: return "NegativeDistance";
        case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorKind::TriangleViolation: return "TriangleViolation";
        case ErrorKind::DuplicatePoint: return "DuplicatePoint";
        case ErrorKind::EmptySpace: return "EmptySpace";
        case ErrorKind::DifferentAmbient: return "DifferentAmbient";
        case ErrorKind::EmptyTarget: return "EmptyTarget";
        case ErrorKind::CoverageViolation: return "CoverageViolation";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::Cycle: return "Cycle";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NonpositiveLength: return "NonpositiveLength";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.size())
            throw Error(ErrorKind::ValidationError, "matrix is not square", {i});
        for (int j = 0; j < m.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<double>> Matrix::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (int i = 0; i < n_; ++i) {
        out[i].assign(a_.begin() + static_cast<size_t>(i) * n_,
                      a_.begin() + static_cast<size_t>(i + 1) * n_);
    }
    return out;
}

}  // namespace ghgeom

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghgeom {

inline constexpr double kDefaultEps = 1e-9;

enum class ErrorKind {
    AsymmetricMatrix,
    NegativeDistance,
    NonzeroDiagonal,
    TriangleViolation,
    DuplicatePoint,
    EmptySpace,
    DifferentAmbient,
    EmptyTarget,
    CoverageViolation,
    BudgetExceeded,
    IndexOutOfRange,
    Cycle,
    Disconnected,
    NonpositiveLength,
    BadParams,
    OutOfRange,
    ParseError,
    ValidationError,
    UsageError,
};

const char* to_string(ErrorKind kind);

/// Toolkit-wide exception. `where` carries offending indices (e.g. the
/// triple of a triangle violation) so callers can surface exact locations.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, std::vector<int> where = {})
        : std::runtime_error(std::move(message)), kind_(kind), where_(std::move(where)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<int>& where() const noexcept { return where_; }

private:
    ErrorKind kind_;
    std::vector<int> where_;
};

/// Absolute-tolerance comparator. Every fuzzy comparison in the toolkit
/// goes through one of these so eps is applied uniformly.
struct Tol {
    double eps = kDefaultEps;

    bool eq(double a, double b) const { return a >= b - eps && a <= b + eps; }
    bool lt(double a, double b) const { return a < b - eps; }
    bool le(double a, double b) const { return a <= b + eps; }
    bool gt(double a, double b) const { return a > b + eps; }
    bool ge(double a, double b) const { return a >= b - eps; }
    bool zero(double a) const { return eq(a, 0.0); }
};

/// Dense square matrix of doubles, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<size_t>(n) * n, fill) {}

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }
    std::vector<std::vector<double>> rows() const;

    bool operator==(const Matrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// Disjoint-set forest with union by size and path compression.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false if x and y were already in the same set.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        return true;
    }

    int component_count() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

/// splitmix64; used to derive independent per-suite seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace ghgeom

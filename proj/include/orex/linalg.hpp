#pragma once

#include "orex/scalar.hpp"

#include <optional>
#include <vector>

namespace orex {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

// Dense exact linear algebra over Scalar. Pivoting is deterministic: columns
// are scanned left to right and the first row with a nonzero entry wins, so
// identical inputs always produce identical outputs.

// Reduces m to reduced row echelon form in place and returns its rank.
unsigned rref_in_place(Mat& m);

// One solution of A x = b (free variables set to zero), or nullopt when the
// system is inconsistent. A is row-major with rows of equal length.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Incrementally maintained row space, used to extract bases and test
// membership without re-eliminating from scratch.
class RowSpace {
public:
    // Inserts v; returns true when v was independent of the current span.
    bool insert(Vec v);
    bool contains(Vec v) const;
    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

private:
    // Rows kept reduced: each has a unique pivot column with entry 1.
    Vec reduce(Vec v) const;
    Mat rows_;
    std::vector<size_t> pivots_;
};

}  // namespace orex

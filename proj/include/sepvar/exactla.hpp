#ifndef SEPVAR_EXACTLA_HPP
#define SEPVAR_EXACTLA_HPP

#include <vector>

#include "sepvar/rational.hpp"

namespace sepvar {

// Sparse integer row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Int>>;

// Rank by exact fraction-free elimination on sparse integer rows.  Rows are
// combined as p*row_i - c*row_pivot and renormalized by their integer
// content, so all arithmetic stays in Z.  Pivot choice is deterministic:
// shortest row first, ties by current position.
int sparse_rank(std::vector<SparseRow> rows);

// Dense rational matrix utilities for small systems.
using QMatrix = std::vector<std::vector<Rat>>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMatrix& m);

// Basis of { v : A v = 0 } for the dense matrix A (rows x cols), one vector
// per free column, entries exact.
std::vector<std::vector<Rat>> nullspace(const QMatrix& a);

// Incremental linear-independence filter over sparse rational coordinate
// vectors (used for closing a module under lowering operators).  Keeps an
// internal row-echelon basis; add() returns true when the vector enlarges
// the span.
class IncrementalSpan {
  public:
    // Coordinates are (key, value) pairs sorted by key, keys are ints.
    bool add(std::vector<std::pair<int, Rat>> vec);
    int dimension() const { return static_cast<int>(rows_.size()); }

  private:
    // Echelon rows, each normalized with leading coefficient 1, kept sorted
    // by leading key.
    std::vector<std::vector<std::pair<int, Rat>>> rows_;
};

}  // namespace sepvar

#endif

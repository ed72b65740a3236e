#pragma once

#include <vector>

#include "fibperm/rational_gf.hpp"

namespace fibperm {

/// Square matrix over the rational-function field, sized for the determinant
/// formulas in this library (dimension at most about a dozen).
class GFMatrix {
public:
    explicit GFMatrix(int dim); // zero-filled

    int dim() const { return dim_; }
    RationalGF& at(int i, int j);
    const RationalGF& at(int i, int j) const;

    /// Exact determinant by cofactor expansion along the first column, which
    /// is where the matrices built here keep their few nonzero entries.
    RationalGF det() const;

private:
    int dim_;
    std::vector<RationalGF> a_;
};

} // namespace fibperm

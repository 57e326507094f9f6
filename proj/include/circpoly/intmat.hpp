#pragma once

#include <vector>

#include "circpoly/numeric.hpp"

namespace circpoly {

using IntMat = std::vector<std::vector<Int>>;  // row-major
using RatMat = std::vector<std::vector<Rat>>;

// Column-style Hermite normal form of the lattice spanned by the columns of m;
// zero columns are dropped, pivots are positive, entries left of a pivot are
// reduced into [0, pivot). Two column sets span the same lattice iff their
// HNFs are identical.
IntMat hermite_normal_form(const IntMat& m);

int rank(const RatMat& m);
int rank(const IntMat& m);

IntMat matmul(const IntMat& x, const IntMat& y);

}  // namespace circpoly

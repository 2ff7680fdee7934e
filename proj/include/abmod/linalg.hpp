#pragma once
#include <abmod/ratfunc.hpp>
#include <vector>

namespace abmod {

using KVec = std::vector<RatFunc>;

bool is_zero_vec(const KVec& v);
KVec add_scaled(const KVec& a, const KVec& b, const RatFunc& s);  // a + s*b

/// Reduced row echelon form in place; zero rows removed, pivots normalized to 1,
/// rows sorted by pivot column. Returns the pivot columns. Columns are swept in
/// index order, so the result is the canonical RREF of the row space.
std::vector<int> rref(std::vector<KVec>& rows);

/// Eliminates v against echelon rows (pivot columns given); returns the residue.
KVec reduce_against(const std::vector<KVec>& rows, const std::vector<int>& pivots, KVec v);

/// Basis of {x : A x = 0} for a dense rows-by-cols matrix, as canonical RREF rows.
std::vector<KVec> kernel_basis(std::vector<KVec> A, int ncols);

}  // namespace abmod

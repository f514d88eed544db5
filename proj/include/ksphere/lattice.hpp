#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ksphere {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Hermite normal form of the integer lattice spanned by the rows of
/// `generators`: echelon rows with positive pivots, entries above each pivot
/// reduced into [0, pivot), zero rows dropped. Two generating sets span the
/// same lattice exactly when their forms coincide.
IntMatrix hermite_normal_form(IntMatrix generators);

std::size_t lattice_rank(const IntMatrix& generators);

bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// True when the rows are linearly independent over Z.
bool integrally_independent(const IntMatrix& rows);

} // namespace ksphere

#pragma once

#include "ksphere/group.hpp"

#include <cstddef>
#include <vector>

namespace ksphere {

/// Order of the group a family spec describes, without building it.
/// Permutation-generator specs are built to find out.
std::size_t spec_order(const GroupSpec& spec);

/// One representative of every abelian group of order <= max_order, as a
/// direct product of cyclic groups in invariant-factor form.
std::vector<GroupSpec> abelian_groups(std::size_t max_order);

/// The built-in groups used by the verification sweeps: cyclic, dihedral,
/// quaternion, symmetric, alternating, every abelian invariant-factor type,
/// and a handful of non-abelian direct products. Sorted by order, then label.
std::vector<GroupSpec> builtin_groups(std::size_t max_order);

} // namespace ksphere

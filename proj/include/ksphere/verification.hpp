#pragma once

#include "ksphere/ktheory.hpp"
#include "ksphere/setting.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ksphere {

enum class Status { pass, fail, info };
std::string to_string(Status s);

struct CheckRecord {
  std::string check;
  std::string group;
  std::string lambda; // "-" for group-level checks
  Status status = Status::pass;
  std::string details;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};
using Report = std::vector<CheckRecord>;

bool all_passed(const Report& r); // info counts as passing

// Group-level checks --------------------------------------------------------

CheckRecord check_group(const GroupTable& g, const std::string& label);
/// Class count, sum of squared degrees, exact row and column orthogonality.
CheckRecord check_table(const CharacterTable& t, const std::string& label);

// Checks on (G, lambda) -----------------------------------------------------

CheckRecord check_frobenius_reciprocity(const IndexTwoSetting& s);
CheckRecord check_projection_formula(const IndexTwoSetting& s);
/// res_H ind_H^G chi = chi + b.chi for every chi in Irr(H).
CheckRecord check_mackey_restriction(const IndexTwoSetting& s);
/// Multiplicities of res_H phi are constant on twist orbits.
CheckRecord check_orbit_multiplicities(const IndexTwoSetting& s);
/// Twist, orbits and the whole S^{1+lambda} presentation agree for every b.
CheckRecord check_b_independence(const IndexTwoSetting& s);
/// If some b outside H centralizes H, the rank must be zero.
CheckRecord check_central_outside_element(const IndexTwoSetting& s);
CheckRecord check_ideal_lattice(const IndexTwoSetting& s);
CheckRecord check_ideal_lattice(const IndexTwoSetting& s, const IdealPresentation& p);
/// Rank against the class-counting oracle (twist-fixed irreducibles of H
/// equal b-stable classes of H), integral independence of the basis, and
/// action(trivial) = I plus multiplicativity over all pairs of irreducibles.
CheckRecord check_presentation(const IndexTwoSetting& s);
CheckRecord check_presentation(const IndexTwoSetting& s, const KGroupPresentation& p);
/// Identity, additivity and multiplicativity of the action on `samples`
/// random virtual characters, and vanishing of random ring products.
CheckRecord check_module_structure(const IndexTwoSetting& s, std::size_t samples = 100,
                                   std::uint64_t seed = 1);

struct VerifyOptions {
  std::size_t module_samples = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0; // 0: hardware concurrency
};

/// Every (G, lambda) check above.
Report verify_setting(const IndexTwoSetting& s, const VerifyOptions& opt = {});

/// Group-level checks, then every check for each lambda in `lambdas`
/// (all surjections onto {+1,-1} when empty).
Report verify_group(const GroupTable& g, const std::string& label,
                    std::vector<SignHomomorphism> lambdas = {},
                    const VerifyOptions& opt = {});

/// verify_group over builtin_groups(max_order); groups run concurrently and
/// records are merged in catalogue order.
Report verify_catalogue(std::size_t max_order, const VerifyOptions& opt = {});

/// Exhaustive check: some element of G \ H commutes with all of H.
bool has_central_outside_element(const IndexTwoSetting& s);

/// Number of classes of H mapped to themselves by conjugation with b.
std::size_t stable_kernel_classes(const IndexTwoSetting& s, Element b);

} // namespace ksphere

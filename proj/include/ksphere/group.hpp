#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ksphere {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 1024;

// ---------------------------------------------------------------------------
// Group specifications
// ---------------------------------------------------------------------------

struct GroupSpec;

namespace spec {
struct Cyclic { unsigned n; };
struct Dihedral { unsigned n; }; // order 2n
struct Quaternion {};            // order 8
struct Symmetric { unsigned n; };
struct Alternating { unsigned n; };
struct DirectProduct {
  std::shared_ptr<const GroupSpec> left;
  std::shared_ptr<const GroupSpec> right;
};
struct Generators {
  unsigned degree;
  std::vector<Permutation> generators;
};
} // namespace spec

struct GroupSpec {
  std::variant<spec::Cyclic, spec::Dihedral, spec::Quaternion, spec::Symmetric,
               spec::Alternating, spec::DirectProduct, spec::Generators>
      kind;

  static GroupSpec cyclic(unsigned n) { return {spec::Cyclic{n}}; }
  static GroupSpec dihedral(unsigned n) { return {spec::Dihedral{n}}; }
  static GroupSpec quaternion() { return {spec::Quaternion{}}; }
  static GroupSpec symmetric(unsigned n) { return {spec::Symmetric{n}}; }
  static GroupSpec alternating(unsigned n) { return {spec::Alternating{n}}; }
  static GroupSpec product(GroupSpec a, GroupSpec b);
  static GroupSpec permutations(unsigned degree, std::vector<Permutation> gens) {
    return {spec::Generators{degree, std::move(gens)}};
  }

  /// Short name such as "S3", "D4", "C2xC4".
  std::string label() const;
};

// ---------------------------------------------------------------------------
// Group tables
// ---------------------------------------------------------------------------

/// A finite group as a full multiplication table. Element 0 is the identity.
struct GroupTable {
  std::size_t order = 0;
  std::vector<Element> product; // row-major order x order
  Element identity = 0;
  std::vector<Element> inverse;
  std::vector<std::string> element_labels;
  /// Generators the elements were enumerated from, in spec order.
  std::vector<Element> generators;
  std::vector<std::string> generator_names;

  Element mul(Element a, Element b) const { return product[a * order + b]; }
  Element inv(Element a) const { return inverse[a]; }
  /// g^-1 h g
  Element conjugate(Element h, Element g) const {
    return mul(mul(inverse[g], h), g);
  }
  Element power(Element a, std::uint64_t k) const;
  std::size_t element_order(Element a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

/// Exhaustive associativity, identity, inverse and Latin-square checks.
/// Returns an empty string when all hold, otherwise a description of the
/// first violation.
std::string check_group_axioms(const GroupTable& g);

/// Build a group from its spec by breadth-first closure over the generators.
/// Throws InputError for invalid permutations, unsupported parameters, or an
/// order above `order_cap`.
GroupTable build_group(const GroupSpec& spec,
                       std::size_t order_cap = kDefaultOrderCap);

/// Closure of the given permutations on `degree` points, without family
/// handling. Generator names default to g0, g1, ...
GroupTable group_from_permutations(unsigned degree,
                                   const std::vector<Permutation>& generators,
                                   std::vector<std::string> names = {},
                                   std::size_t order_cap = kDefaultOrderCap);

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

struct ConjugacyClasses {
  std::vector<std::vector<Element>> classes; // each ascending
  std::vector<std::size_t> class_of;
  std::vector<Element> representatives;      // minimal index per class
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> element_orders;   // order of each representative

  std::size_t count() const { return classes.size(); }
  friend bool operator==(const ConjugacyClasses&,
                         const ConjugacyClasses&) = default;
};

/// Classes ordered by (representative order, class size, minimal element).
ConjugacyClasses conjugacy_classes(const GroupTable& g);

// ---------------------------------------------------------------------------
// Sign homomorphisms and the kernel
// ---------------------------------------------------------------------------

/// A surjection G -> {+1, -1}.
class SignHomomorphism {
public:
  /// Validates multiplicativity and surjectivity; throws InputError.
  SignHomomorphism(const GroupTable& g, std::vector<int> values);

  /// Extends signs on g.generators multiplicatively and validates.
  static SignHomomorphism from_generator_signs(const GroupTable& g,
                                               const std::vector<int>& signs);

  int operator()(Element x) const { return values_[x]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const SignHomomorphism&,
                         const SignHomomorphism&) = default;

private:
  std::vector<int> values_;
};

/// Every surjective homomorphism G -> {+1,-1}, ordered by the sign pattern
/// on the generators (lexicographic with +1 before -1).
std::vector<SignHomomorphism> all_sign_homomorphisms(const GroupTable& g);

struct SubgroupEmbedding {
  GroupTable subgroup;
  std::vector<Element> inclusion; // subgroup index -> ambient index
  std::vector<std::int64_t> preimage; // ambient index -> subgroup index or -1

  bool contains(Element ambient) const { return preimage[ambient] >= 0; }
};

/// Subgroup from a set of ambient elements, re-indexed by ascending ambient
/// index. Throws InputError if the set is not a subgroup.
SubgroupEmbedding subgroup_embedding(const GroupTable& g,
                                     std::vector<Element> elements);

/// H = ker(lambda) with its inclusion into G.
SubgroupEmbedding kernel_embedding(const GroupTable& g,
                                   const SignHomomorphism& lambda);

/// Elements with lambda = -1, ascending; the first is the canonical b.
std::vector<Element> coset_representatives(const GroupTable& g,
                                           const SignHomomorphism& lambda);

/// Sign conventions understood for a spec, e.g. "sign" for symmetric groups.
std::vector<std::string> sign_conventions(const GroupSpec& spec);

/// Resolve a named convention for a group built from `spec`.
/// Throws InputError for unknown names.
SignHomomorphism sign_convention(const GroupSpec& spec, const GroupTable& g,
                                 const std::string& name);

/// Short description of the values of lambda on the generators, e.g.
/// "signs[+1,-1]".
std::string describe_signs(const GroupTable& g, const SignHomomorphism& lambda);

} // namespace ksphere

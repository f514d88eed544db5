#pragma once

#include "ksphere/cyclotomic.hpp"
#include "ksphere/group.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ksphere {

using GroupPtr = std::shared_ptr<const GroupTable>;

/// A group with its conjugacy classes and the cyclotomic modulus in which
/// class-function values are expressed.
struct ClassSpace {
  GroupPtr group;
  ConjugacyClasses classes;
  unsigned modulus = 1;
  std::vector<std::size_t> inverse_class; // class of g^-1 for g in class i

  std::size_t class_count() const { return classes.count(); }
};
using ClassSpacePtr = std::shared_ptr<const ClassSpace>;

/// `modulus` 0 means the exponent of the group; otherwise it must be a
/// multiple of the exponent.
ClassSpacePtr make_class_space(GroupPtr group, unsigned modulus = 0);

struct ClassFunction {
  ClassSpacePtr space;
  std::vector<Cyclotomic> values; // one per class

  const Cyclotomic& operator[](std::size_t cls) const { return values[cls]; }
  Cyclotomic& operator[](std::size_t cls) { return values[cls]; }

  static ClassFunction constant(ClassSpacePtr space, std::int64_t v);

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.space == b.space && a.values == b.values;
  }
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(std::int64_t s, const ClassFunction& a);
/// Pointwise product (tensor product for characters).
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

/// |G|^-1 sum_g a(g) conj(b(g)); throws InputError for different spaces.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// The irreducible characters of a group, in canonical order: ascending
/// degree, then value vectors compared class by class, each value by its
/// coefficient vector, larger first (so the trivial character leads).
class CharacterTable {
public:
  /// Wraps rows as given. No orthogonality validation happens here, so
  /// corrupted tables can be built for negative tests.
  CharacterTable(ClassSpacePtr space, std::vector<ClassFunction> irreducibles);

  const ClassSpacePtr& space() const { return space_; }
  const GroupTable& group() const { return *space_->group; }
  const ConjugacyClasses& classes() const { return space_->classes; }
  unsigned modulus() const { return space_->modulus; }

  std::size_t size() const { return irr_.size(); }
  const ClassFunction& irreducible(std::size_t i) const { return irr_[i]; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  /// Integer multiplicities of every irreducible in f. Throws InternalError
  /// if any multiplicity is not a rational integer.
  std::vector<std::int64_t> decompose(const ClassFunction& f) const;

  /// Index of the irreducible equal to f, if any.
  std::optional<std::size_t> find(const ClassFunction& f) const;

  /// Decomposition of chi_i (x) chi_j, computed on first use and cached.
  const std::vector<std::int64_t>& product(std::size_t i, std::size_t j) const;

private:
  struct ProductCache;

  ClassSpacePtr space_;
  std::vector<ClassFunction> irr_;
  std::vector<std::int64_t> degrees_;
  // conj(chi_i(class l)) as sparse exponent terms
  std::vector<std::vector<std::vector<CyclotomicRing::Term>>> conj_terms_;
  std::shared_ptr<ProductCache> products_;
};
using TablePtr = std::shared_ptr<const CharacterTable>;

/// Exact character table by the Burnside-Dixon method.
TablePtr character_table(GroupPtr group, unsigned modulus = 0);

/// An element of the representation ring: integer coordinates over the
/// irreducibles of `table`.
struct VirtualCharacter {
  TablePtr table;
  std::vector<std::int64_t> coefficients;

  static VirtualCharacter zero(TablePtr t);
  static VirtualCharacter irreducible(TablePtr t, std::size_t i);
  static VirtualCharacter trivial(TablePtr t);
  static VirtualCharacter regular(TablePtr t);
  /// Decomposes f over the table's irreducibles.
  static VirtualCharacter from_class_function(TablePtr t, const ClassFunction& f);

  ClassFunction values() const;
  std::int64_t degree() const;
  bool is_zero() const;

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.table == b.table && a.coefficients == b.coefficients;
  }
};

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter operator*(std::int64_t s, const VirtualCharacter& a);
/// Tensor product, re-decomposed over the irreducibles.
VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b);

/// For each class of the subgroup, the ambient class containing it.
std::vector<std::size_t> class_fusion(const SubgroupEmbedding& emb,
                                      const ClassSpace& sub,
                                      const ClassSpace& ambient);

/// res_H phi, decomposed over `sub_table` (which must describe emb.subgroup).
VirtualCharacter restrict(const VirtualCharacter& phi, const SubgroupEmbedding& emb,
                          const TablePtr& sub_table);

/// ind_H^G chi computed through the class fusion, decomposed over `ambient_table`.
VirtualCharacter induce(const VirtualCharacter& chi, const SubgroupEmbedding& emb,
                        const TablePtr& ambient_table);

/// The character h -> chi(g^-1 h g) of the subgroup, for g in the ambient
/// group. Throws InputError if g is out of range or does not normalize H.
VirtualCharacter conjugate_twist(const VirtualCharacter& chi, const GroupTable& ambient,
                                 const SubgroupEmbedding& emb, Element g);

} // namespace ksphere

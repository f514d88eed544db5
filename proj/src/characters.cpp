#include "ksphere/characters.hpp"

#include "ksphere/errors.hpp"

namespace ksphere {

ClassSpacePtr make_class_space(GroupPtr group, unsigned modulus) {
  if (!group) throw InputError("null group");
  auto space = std::make_shared<ClassSpace>();
  space->group = group;
  space->classes = conjugacy_classes(*group);
  auto e = static_cast<unsigned>(group->exponent());
  if (modulus == 0) modulus = e;
  if (modulus % e != 0)
    throw InputError("cyclotomic modulus " + std::to_string(modulus) +
                     " is not a multiple of the group exponent " + std::to_string(e));
  space->modulus = modulus;
  const auto& cc = space->classes;
  for (std::size_t l = 0; l < cc.count(); ++l)
    space->inverse_class.push_back(cc.class_of[group->inv(cc.representatives[l])]);
  return space;
}

ClassFunction ClassFunction::constant(ClassSpacePtr space, std::int64_t v) {
  auto k = space->class_count();
  auto m = space->modulus;
  return {std::move(space), std::vector<Cyclotomic>(k, Cyclotomic::integer(m, v))};
}

namespace {

void require_same_space(const ClassFunction& a, const ClassFunction& b) {
  if (a.space != b.space) throw InputError("class functions live on different groups");
}

void require_same_table(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.table != b.table) throw InputError("virtual characters live on different tables");
}

// Bring a value from another class space into modulus m.
Cyclotomic to_modulus(const Cyclotomic& v, unsigned m) {
  if (v.modulus() == m) return v;
  if (m % v.modulus() != 0)
    throw InputError("cannot express values of modulus " + std::to_string(v.modulus()) +
                     " in modulus " + std::to_string(m));
  return v.embed(m);
}

} // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_space(a, b);
  ClassFunction r = a;
  for (std::size_t l = 0; l < r.values.size(); ++l) r.values[l] = a.values[l] + b.values[l];
  return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  require_same_space(a, b);
  ClassFunction r = a;
  for (std::size_t l = 0; l < r.values.size(); ++l) r.values[l] = a.values[l] - b.values[l];
  return r;
}

ClassFunction operator*(std::int64_t s, const ClassFunction& a) {
  ClassFunction r = a;
  for (auto& v : r.values) v = s * v;
  return r;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_space(a, b);
  ClassFunction r = a;
  for (std::size_t l = 0; l < r.values.size(); ++l) r.values[l] = a.values[l] * b.values[l];
  return r;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_space(a, b);
  const auto& cc = a.space->classes;
  Cyclotomic sum = Cyclotomic::integer(a.space->modulus, 0);
  for (std::size_t l = 0; l < cc.count(); ++l)
    sum += static_cast<std::int64_t>(cc.class_sizes[l]) * (a.values[l] * b.values[l].conj());
  return sum.divided_by(static_cast<std::int64_t>(a.space->group->order));
}

// ---------------------------------------------------------------------------

VirtualCharacter VirtualCharacter::zero(TablePtr t) {
  auto n = t->size();
  return {std::move(t), std::vector<std::int64_t>(n, 0)};
}

VirtualCharacter VirtualCharacter::irreducible(TablePtr t, std::size_t i) {
  if (i >= t->size()) throw InputError("irreducible index out of range");
  auto v = zero(std::move(t));
  v.coefficients[i] = 1;
  return v;
}

VirtualCharacter VirtualCharacter::trivial(TablePtr t) {
  auto one = ClassFunction::constant(t->space(), 1);
  auto i = t->find(one);
  if (!i) throw InternalError("table has no trivial character");
  return irreducible(std::move(t), *i);
}

VirtualCharacter VirtualCharacter::regular(TablePtr t) {
  auto d = t->degrees();
  return {std::move(t), std::move(d)};
}

VirtualCharacter VirtualCharacter::from_class_function(TablePtr t, const ClassFunction& f) {
  auto c = t->decompose(f);
  return {std::move(t), std::move(c)};
}

ClassFunction VirtualCharacter::values() const {
  const auto& space = table->space();
  const auto k = space->class_count();
  const auto m = space->modulus;
  const auto phi = cyclotomic_ring(m).degree();
  ClassFunction f{space, {}};
  f.values.reserve(k);
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<std::int64_t> acc(phi, 0);
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      if (coefficients[i] == 0) continue;
      const auto& c = table->irreducible(i).values[l].coefficients();
      for (unsigned r = 0; r < phi; ++r)
        if (c[r] != 0) acc[r] = checked_add(acc[r], checked_mul(coefficients[i], c[r]));
    }
    f.values.emplace_back(m, std::move(acc));
  }
  return f;
}

std::int64_t VirtualCharacter::degree() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    d = checked_add(d, checked_mul(coefficients[i], table->degrees()[i]));
  return d;
}

bool VirtualCharacter::is_zero() const {
  for (auto c : coefficients)
    if (c != 0) return false;
  return true;
}

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_same_table(a, b);
  VirtualCharacter r = a;
  for (std::size_t i = 0; i < r.coefficients.size(); ++i)
    r.coefficients[i] = checked_add(a.coefficients[i], b.coefficients[i]);
  return r;
}

VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
  return a + (-1) * b;
}

VirtualCharacter operator*(std::int64_t s, const VirtualCharacter& a) {
  VirtualCharacter r = a;
  for (auto& c : r.coefficients) c = checked_mul(s, c);
  return r;
}

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_same_table(a, b);
  const auto& t = *a.table;
  std::vector<std::size_t> sa, sb;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (a.coefficients[i] != 0) sa.push_back(i);
    if (b.coefficients[i] != 0) sb.push_back(i);
  }
  if (sa.size() * sb.size() > t.size())
    return VirtualCharacter::from_class_function(a.table, a.values() * b.values());
  auto r = VirtualCharacter::zero(a.table);
  for (auto i : sa)
    for (auto j : sb) {
      auto c = checked_mul(a.coefficients[i], b.coefficients[j]);
      const auto& p = t.product(i, j);
      for (std::size_t q = 0; q < p.size(); ++q)
        if (p[q] != 0) r.coefficients[q] = checked_add(r.coefficients[q], checked_mul(c, p[q]));
    }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> class_fusion(const SubgroupEmbedding& emb, const ClassSpace& sub,
                                      const ClassSpace& ambient) {
  if (emb.preimage.size() != ambient.group->order)
    throw InputError("embedding does not target the ambient group");
  std::vector<std::size_t> out;
  for (auto rep : sub.classes.representatives)
    out.push_back(ambient.classes.class_of[emb.inclusion[rep]]);
  return out;
}

VirtualCharacter restrict(const VirtualCharacter& phi, const SubgroupEmbedding& emb,
                          const TablePtr& sub_table) {
  const auto& ambient = *phi.table->space();
  const auto& sub = *sub_table->space();
  if (sub.group->order != emb.subgroup.order)
    throw InputError("subgroup table does not match the embedding");
  auto fusion = class_fusion(emb, sub, ambient);
  auto values = phi.values();
  ClassFunction res{sub_table->space(), {}};
  for (auto cls : fusion) res.values.push_back(to_modulus(values.values[cls], sub.modulus));
  return VirtualCharacter::from_class_function(sub_table, res);
}

VirtualCharacter induce(const VirtualCharacter& chi, const SubgroupEmbedding& emb,
                        const TablePtr& ambient_table) {
  const auto& g = ambient_table->group();
  const auto& ambient = *ambient_table->space();
  const auto& sub = *chi.table->space();
  if (emb.preimage.size() != g.order || sub.group->order != emb.subgroup.order)
    throw InputError("embedding does not match the tables");

  // ind chi(L) = |G| / (|H| |L|) * sum over H-classes l inside L of |l| chi(l)
  auto fusion = class_fusion(emb, sub, ambient);
  auto values = chi.values();
  ClassFunction ind = ClassFunction::constant(ambient_table->space(), 0);
  for (std::size_t l = 0; l < fusion.size(); ++l)
    ind.values[fusion[l]] += static_cast<std::int64_t>(sub.classes.class_sizes[l]) *
                             to_modulus(values.values[l], ambient.modulus);
  const auto g_order = static_cast<std::int64_t>(g.order);
  const auto h_order = static_cast<std::int64_t>(emb.subgroup.order);
  for (std::size_t c = 0; c < ind.values.size(); ++c)
    ind.values[c] = (g_order * ind.values[c])
                        .divided_by(checked_mul(h_order, static_cast<std::int64_t>(
                                                             ambient.classes.class_sizes[c])));
  return VirtualCharacter::from_class_function(ambient_table, ind);
}

VirtualCharacter conjugate_twist(const VirtualCharacter& chi, const GroupTable& ambient,
                                 const SubgroupEmbedding& emb, Element g) {
  if (g >= ambient.order) throw InputError("twisting element is not in the ambient group");
  if (emb.preimage.size() != ambient.order) throw InputError("embedding does not match the group");
  const auto& sub = *chi.table->space();
  std::vector<Element> image(emb.inclusion.size());
  for (std::size_t h = 0; h < emb.inclusion.size(); ++h) {
    auto y = ambient.conjugate(emb.inclusion[h], g);
    if (!emb.contains(y)) throw InputError("twisting element does not normalize the subgroup");
    image[h] = static_cast<Element>(emb.preimage[y]);
  }
  auto values = chi.values();
  ClassFunction twisted{chi.table->space(), {}};
  for (auto rep : sub.classes.representatives)
    twisted.values.push_back(values.values[sub.classes.class_of[image[rep]]]);
  return VirtualCharacter::from_class_function(chi.table, twisted);
}

} // namespace ksphere

#include "ksphere/characters.hpp"

#include "ksphere/errors.hpp"
#include "prime_field.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace ksphere {

using detail::ModMatrix;
using detail::PrimeField;
using detail::Residue;

struct CharacterTable::ProductCache {
  std::mutex mutex;
  std::vector<std::vector<std::int64_t>> entries; // upper triangle, row-major
};

CharacterTable::CharacterTable(ClassSpacePtr space, std::vector<ClassFunction> irreducibles)
    : space_(std::move(space)), irr_(std::move(irreducibles)),
      products_(std::make_shared<ProductCache>()) {
  const auto k = space_->class_count();
  const auto m = space_->modulus;
  for (const auto& chi : irr_) {
    if (chi.space != space_ || chi.values.size() != k)
      throw InputError("irreducible does not live on the table's class space");
    auto d = chi.values[0].as_integer();
    if (!d || *d <= 0) throw InputError("character degree must be a positive integer");
    degrees_.push_back(*d);
    std::vector<std::vector<CyclotomicRing::Term>> row(k);
    for (std::size_t l = 0; l < k; ++l) {
      const auto& v = chi.values[l];
      if (v.denominator() != 1 || v.modulus() != m)
        throw InputError("character values must be cyclotomic integers in the table modulus");
      const auto& c = v.coefficients();
      for (unsigned r = 0; r < c.size(); ++r)
        if (c[r] != 0) row[l].push_back({(m - r) % m, c[r]});
    }
    conj_terms_.push_back(std::move(row));
  }
}

std::vector<std::int64_t> CharacterTable::decompose(const ClassFunction& f) const {
  if (f.space != space_) throw InputError("class function lives on a different group");
  const auto& cc = space_->classes;
  const auto k = cc.count();
  const auto m = space_->modulus;
  const auto& ring = cyclotomic_ring(m);

  std::int64_t common = 1;
  for (const auto& v : f.values) {
    if (v.modulus() != m) throw InputError("class function value in the wrong modulus");
    common = std::lcm(common, v.denominator());
  }
  const auto order = static_cast<std::int64_t>(space_->group->order);
  const auto divisor = checked_mul(order, common);

  std::vector<std::int64_t> result(irr_.size());
  std::vector<std::int64_t> acc(m);
  for (std::size_t i = 0; i < irr_.size(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t l = 0; l < k; ++l) {
      const auto& v = f.values[l];
      auto scale = checked_mul(static_cast<std::int64_t>(cc.class_sizes[l]),
                               common / v.denominator());
      const auto& c = v.coefficients();
      for (unsigned r = 0; r < c.size(); ++r) {
        if (c[r] == 0) continue;
        auto a = checked_mul(scale, c[r]);
        for (const auto& t : conj_terms_[i][l]) {
          auto& slot = acc[(r + t.index) % m];
          slot = checked_add(slot, checked_mul(a, t.coefficient));
        }
      }
    }
    auto reduced = ring.reduce(acc);
    for (std::size_t r = 1; r < reduced.size(); ++r)
      if (reduced[r] != 0)
        throw InternalError("irrational multiplicity for irreducible " + std::to_string(i));
    if (reduced[0] % divisor != 0)
      throw InternalError("non-integral multiplicity for irreducible " + std::to_string(i));
    result[i] = reduced[0] / divisor;
  }
  return result;
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irr_.size(); ++i)
    if (irr_[i].values == f.values) return i;
  return std::nullopt;
}

const std::vector<std::int64_t>& CharacterTable::product(std::size_t i, std::size_t j) const {
  const auto n = irr_.size();
  if (i >= n || j >= n) throw InputError("irreducible index out of range");
  if (i > j) std::swap(i, j);
  std::lock_guard lock(products_->mutex);
  auto& entries = products_->entries;
  if (entries.empty()) entries.resize(n * (n + 1) / 2);
  auto& slot = entries[i * n - i * (i - 1) / 2 + (j - i)];
  if (slot.empty()) {
    auto f = irr_[i] * irr_[j];
    std::optional<std::size_t> hit;
    if (degrees_[i] == 1 || degrees_[j] == 1) hit = find(f);
    if (hit) {
      slot.assign(n, 0);
      slot[*hit] = 1;
    } else {
      slot = decompose(f);
    }
  }
  return slot;
}

// ---------------------------------------------------------------------------
// Burnside-Dixon
// ---------------------------------------------------------------------------

namespace {

struct Subspace {
  std::vector<std::vector<Residue>> rows; // reduced row echelon form
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<std::vector<Residue>> rows, const PrimeField& f) {
  Subspace s;
  if (rows.empty()) return s;
  const auto cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    auto inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      auto factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    s.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  s.rows = std::move(rows);
  return s;
}

// (A_j)[k][l] = #{x in C_j : x^-1 z_l in C_k}; the central character vector
// (|C_l| chi(z_l) / chi(1))_l is a right eigenvector with eigenvalue omega_j.
ModMatrix class_matrix(const GroupTable& g, const ConjugacyClasses& cc, std::size_t j,
                       const PrimeField& f) {
  const auto k = cc.count();
  std::vector<std::vector<std::uint64_t>> counts(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t l = 0; l < k; ++l) {
    auto z = cc.representatives[l];
    for (auto x : cc.classes[j]) ++counts[cc.class_of[g.mul(g.inv(x), z)]][l];
  }
  ModMatrix a(k, std::vector<Residue>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a[r][c] = counts[r][c] % f.prime();
  return a;
}

// Split each subspace into common eigenspaces of the class matrices until
// every piece is one-dimensional.
std::vector<std::vector<Residue>> central_characters(const GroupTable& g,
                                                     const ConjugacyClasses& cc,
                                                     const PrimeField& f) {
  const auto k = cc.count();
  std::vector<std::vector<Residue>> done;
  std::vector<Subspace> pending;
  {
    std::vector<std::vector<Residue>> id(k, std::vector<Residue>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    auto full = echelon(std::move(id), f);
    if (k == 1) done.push_back(full.rows[0]);
    else pending.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < k && !pending.empty(); ++j) {
    auto a = class_matrix(g, cc, j, f);
    std::vector<Subspace> next;
    for (auto& w : pending) {
      const auto d = w.rows.size();
      // restriction: A w_i = sum_r R[r][i] w_r, read off at pivots
      ModMatrix restricted(d, std::vector<Residue>(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t r = 0; r < d; ++r) {
          auto row = w.pivots[r];
          Residue s = 0;
          for (std::size_t c = 0; c < k; ++c)
            if (w.rows[i][c] != 0) s = f.add(s, f.mul(a[row][c], w.rows[i][c]));
          restricted[r][i] = s;
        }
      }
      auto eigen = detail::roots(detail::characteristic_polynomial(restricted, f), f);
      if (eigen.size() <= 1) {
        next.push_back(std::move(w));
        continue;
      }
      std::size_t total = 0;
      for (auto t : eigen) {
        auto shifted = restricted;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], t);
        std::vector<std::vector<Residue>> vecs;
        for (const auto& coeffs : detail::nullspace(shifted, f)) {
          std::vector<Residue> v(k, 0);
          for (std::size_t r = 0; r < d; ++r)
            if (coeffs[r] != 0)
              for (std::size_t c = 0; c < k; ++c)
                v[c] = f.add(v[c], f.mul(coeffs[r], w.rows[r][c]));
          vecs.push_back(std::move(v));
        }
        auto piece = echelon(std::move(vecs), f);
        total += piece.rows.size();
        if (piece.rows.size() == 1) done.push_back(piece.rows[0]);
        else next.push_back(std::move(piece));
      }
      if (total != d)
        throw InternalError("class matrix is not diagonalizable modulo " +
                            std::to_string(f.prime()));
    }
    pending = std::move(next);
  }
  if (!pending.empty())
    throw InternalError("class sums failed to separate the irreducible characters");
  return done;
}

// Keys are the values in Q(z_e), e the exponent of the group, so the order
// does not depend on the modulus the table is expressed in.
bool canonical_less(const std::vector<Cyclotomic>& a, std::int64_t da,
                    const std::vector<Cyclotomic>& b, std::int64_t db) {
  if (da != db) return da < db;
  for (std::size_t l = 0; l < a.size(); ++l) {
    const auto& x = a[l].coefficients();
    const auto& y = b[l].coefficients();
    if (x != y) return x > y;
  }
  return false;
}

} // namespace

TablePtr character_table(GroupPtr group, unsigned modulus) {
  auto space = make_class_space(group, modulus);
  const auto& g = *group;
  const auto& cc = space->classes;
  const auto k = cc.count();
  const auto n = g.order;
  const auto e = g.exponent();
  const auto big_m = space->modulus;

  PrimeField f(detail::dixon_prime(e, n));
  const Residue z = f.pow(f.primitive_root(), (f.prime() - 1) / e);

  // power_classes[l][i] = class of rep_l^i
  std::vector<std::vector<std::size_t>> power_classes(k);
  for (std::size_t l = 0; l < k; ++l) {
    Element x = g.identity;
    for (std::size_t i = 0; i < cc.element_orders[l]; ++i) {
      power_classes[l].push_back(cc.class_of[x]);
      x = g.mul(x, cc.representatives[l]);
    }
  }

  std::vector<ClassFunction> rows;
  std::vector<std::vector<Cyclotomic>> keys;
  std::vector<std::int64_t> degrees;
  for (auto omega : central_characters(g, cc, f)) {
    if (omega[0] == 0) throw InternalError("central character vanishes at the identity");
    auto norm = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, norm);

    // d^2 = |G| / sum_l omega_l omega_{l*} / |C_l|
    Residue s = 0;
    for (std::size_t l = 0; l < k; ++l)
      s = f.add(s, f.mul(f.mul(omega[l], omega[space->inverse_class[l]]),
                         f.inv(cc.class_sizes[l] % f.prime())));
    auto d2 = f.mul(n % f.prime(), f.inv(s));
    std::int64_t degree = 0;
    for (std::int64_t d = 1; static_cast<std::size_t>(d * d) <= n; ++d)
      if (f.mul(d, d) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalError("could not recover a character degree");

    std::vector<Residue> chi(k);
    for (std::size_t l = 0; l < k; ++l)
      chi[l] = f.mul(f.mul(degree, omega[l]), f.inv(cc.class_sizes[l] % f.prime()));

    // Lift: eigenvalue multiplicities of rep_l from chi on its powers.
    ClassFunction row{space, std::vector<Cyclotomic>(k)};
    std::vector<Cyclotomic> key(k);
    for (std::size_t l = 0; l < k; ++l) {
      const auto o = cc.element_orders[l];
      const auto z_o = f.pow(z, e / o);
      const auto inv_o = f.inv(o % f.prime());
      std::vector<std::int64_t> by_exponent(big_m, 0);
      std::vector<std::int64_t> by_own_exponent(e, 0);
      std::int64_t total = 0;
      for (std::size_t t = 0; t < o; ++t) {
        Residue acc = 0;
        for (std::size_t i = 0; i < o; ++i) {
          auto root = f.pow(z_o, (o - (i * t) % o) % o);
          acc = f.add(acc, f.mul(chi[power_classes[l][i]], root));
        }
        auto mult = f.mul(acc, inv_o);
        if (mult > static_cast<Residue>(degree))
          throw InternalError("eigenvalue multiplicity out of range");
        by_exponent[t * (big_m / o)] = static_cast<std::int64_t>(mult);
        by_own_exponent[t * (e / o)] = static_cast<std::int64_t>(mult);
        total += static_cast<std::int64_t>(mult);
      }
      if (total != degree) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      row.values[l] = Cyclotomic::from_exponents(big_m, by_exponent);
      key[l] = Cyclotomic::from_exponents(static_cast<unsigned>(e), by_own_exponent);
    }
    rows.push_back(std::move(row));
    keys.push_back(std::move(key));
    degrees.push_back(degree);
  }
  if (rows.size() != k) throw InternalError("wrong number of irreducible characters");

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(keys[a], degrees[a], keys[b], degrees[b]);
  });
  std::vector<ClassFunction> sorted;
  for (auto i : order) sorted.push_back(std::move(rows[i]));
  return std::make_shared<const CharacterTable>(space, std::move(sorted));
}

} // namespace ksphere

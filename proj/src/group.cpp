#include "ksphere/group.hpp"

#include "ksphere/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ksphere {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// (a*b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

Permutation identity_permutation(unsigned degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

int parity(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

struct FamilyGenerators {
  unsigned degree = 1;
  std::vector<Permutation> perms;
  std::vector<std::string> names;
};

// Regular representation of <a, x | a^m, x^2 or a^{m/2}, x a x^-1 = a^-1>
// on points k + m*e standing for a^k x^e, via left multiplication.
FamilyGenerators metacyclic_regular(unsigned m, bool dicyclic,
                                    std::string a_name, std::string x_name) {
  FamilyGenerators f;
  f.degree = 2 * m;
  Permutation a(2 * m), x(2 * m);
  for (unsigned e = 0; e < 2; ++e) {
    for (unsigned k = 0; k < m; ++k) {
      a[k + m * e] = (k + 1) % m + m * e;
      unsigned neg = (m - k) % m;
      if (e == 0) {
        x[k + m * e] = neg + m;
      } else {
        unsigned shift = dicyclic ? m / 2 : 0;
        x[k + m * e] = (neg + shift) % m;
      }
    }
  }
  f.perms = {a, x};
  f.names = {std::move(a_name), std::move(x_name)};
  return f;
}

void validate_permutation(const Permutation& p, unsigned degree) {
  if (p.size() != degree) {
    throw InputError("permutation has length " + std::to_string(p.size()) +
                     ", expected degree " + std::to_string(degree));
  }
  std::vector<bool> hit(degree, false);
  for (auto v : p) {
    if (v >= degree || hit[v]) {
      throw InputError("generator is not a bijection on {0.." +
                       std::to_string(degree - 1) + "}");
    }
    hit[v] = true;
  }
}

FamilyGenerators family_generators(const GroupSpec& spec) {
  return std::visit(
      [](const auto& k) -> FamilyGenerators {
        using K = std::decay_t<decltype(k)>;
        FamilyGenerators f;
        if constexpr (std::is_same_v<K, spec::Cyclic>) {
          if (k.n < 1) throw InputError("cyclic group needs n >= 1");
          f.degree = k.n;
          Permutation a(k.n);
          for (unsigned i = 0; i < k.n; ++i) a[i] = (i + 1) % k.n;
          f.perms = {a};
          f.names = {"a"};
        } else if constexpr (std::is_same_v<K, spec::Dihedral>) {
          if (k.n < 1) throw InputError("dihedral group needs n >= 1");
          f = metacyclic_regular(k.n, false, "r", "s");
        } else if constexpr (std::is_same_v<K, spec::Quaternion>) {
          f = metacyclic_regular(4, true, "i", "j");
        } else if constexpr (std::is_same_v<K, spec::Symmetric>) {
          if (k.n < 1 || k.n > 6)
            throw InputError("symmetric group supported for 1 <= n <= 6");
          f.degree = k.n;
          if (k.n >= 2) {
            Permutation t = identity_permutation(k.n);
            std::swap(t[0], t[1]);
            f.perms.push_back(t);
            f.names.push_back("t");
          }
          if (k.n >= 3) {
            Permutation c(k.n);
            for (unsigned i = 0; i < k.n; ++i) c[i] = (i + 1) % k.n;
            f.perms.push_back(c);
            f.names.push_back("c");
          }
        } else if constexpr (std::is_same_v<K, spec::Alternating>) {
          if (k.n < 1 || k.n > 6)
            throw InputError("alternating group supported for 1 <= n <= 6");
          f.degree = k.n;
          for (unsigned j = 2; j < k.n; ++j) {
            Permutation c = identity_permutation(k.n);
            c[0] = 1;
            c[1] = j;
            c[j] = 0;
            f.perms.push_back(c);
            f.names.push_back("c" + std::to_string(j));
          }
        } else if constexpr (std::is_same_v<K, spec::DirectProduct>) {
          if (!k.left || !k.right)
            throw InputError("direct product needs two factors");
          auto l = family_generators(*k.left);
          auto r = family_generators(*k.right);
          f.degree = l.degree + r.degree;
          for (const auto& p : l.perms) {
            Permutation q = identity_permutation(f.degree);
            for (unsigned i = 0; i < l.degree; ++i) q[i] = p[i];
            f.perms.push_back(q);
          }
          for (const auto& p : r.perms) {
            Permutation q = identity_permutation(f.degree);
            for (unsigned i = 0; i < r.degree; ++i)
              q[l.degree + i] = l.degree + p[i];
            f.perms.push_back(q);
          }
          for (std::size_t i = 0; i < f.perms.size(); ++i)
            f.names.push_back("g" + std::to_string(i));
        } else {
          if (k.degree < 1) throw InputError("permutation degree must be >= 1");
          for (const auto& p : k.generators) validate_permutation(p, k.degree);
          f.degree = k.degree;
          f.perms = k.generators;
          for (std::size_t i = 0; i < f.perms.size(); ++i)
            f.names.push_back("g" + std::to_string(i));
        }
        return f;
      },
      spec.kind);
}

std::string word_label(const std::vector<std::size_t>& word,
                       const std::vector<std::string>& names) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += ' ';
    out += names[word[i]];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<int> signs_for_convention(const GroupSpec& spec,
                                      const std::string& name) {
  auto unknown = [&]() -> InputError {
    std::string known;
    for (const auto& c : sign_conventions(spec)) known += (known.empty() ? "" : ", ") + c;
    return InputError("unknown lambda convention '" + name + "' for " +
                      spec.label() + " (known: " +
                      (known.empty() ? "none" : known) + ")");
  };
  return std::visit(
      [&](const auto& k) -> std::vector<int> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, spec::Cyclic>) {
          if (name == "onto-pm1") return {-1};
        } else if constexpr (std::is_same_v<K, spec::Dihedral>) {
          if (name == "reflection-sign") return {+1, -1};
        } else if constexpr (std::is_same_v<K, spec::Quaternion>) {
          if (name == "i-kernel") return {+1, -1};
          if (name == "j-kernel") return {-1, +1};
          if (name == "k-kernel") return {-1, -1};
        } else if constexpr (std::is_same_v<K, spec::DirectProduct>) {
          auto nl = family_generators(*k.left).perms.size();
          auto nr = family_generators(*k.right).perms.size();
          if (name.starts_with("left:")) {
            auto s = signs_for_convention(*k.left, name.substr(5));
            s.resize(nl + nr, +1);
            return s;
          }
          if (name.starts_with("right:")) {
            auto s = signs_for_convention(*k.right, name.substr(6));
            std::vector<int> out(nl, +1);
            out.insert(out.end(), s.begin(), s.end());
            return out;
          }
        }
        if constexpr (std::is_same_v<K, spec::Symmetric> ||
                      std::is_same_v<K, spec::Alternating> ||
                      std::is_same_v<K, spec::Generators>) {
          if (name == "sign") {
            std::vector<int> s;
            for (const auto& p : family_generators(spec).perms)
              s.push_back(parity(p));
            return s;
          }
        }
        throw unknown();
      },
      spec.kind);
}

} // namespace

// ---------------------------------------------------------------------------

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
  return {spec::DirectProduct{std::make_shared<const GroupSpec>(std::move(a)),
                              std::make_shared<const GroupSpec>(std::move(b))}};
}

std::string GroupSpec::label() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, spec::Cyclic>) {
          return "C" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<K, spec::Dihedral>) {
          return "D" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<K, spec::Quaternion>) {
          return "Q8";
        } else if constexpr (std::is_same_v<K, spec::Symmetric>) {
          return "S" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<K, spec::Alternating>) {
          return "A" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<K, spec::DirectProduct>) {
          auto r = k.right->label();
          if (std::holds_alternative<spec::DirectProduct>(k.right->kind))
            r = "(" + r + ")";
          return k.left->label() + "x" + r;
        } else {
          std::string out = "Perm" + std::to_string(k.degree) + "<";
          for (std::size_t i = 0; i < k.generators.size(); ++i) {
            if (i) out += ",";
            out += cycle_notation(k.generators[i]);
          }
          return out + ">";
        }
      },
      kind);
}

Element GroupTable::power(Element a, std::uint64_t k) const {
  Element r = identity;
  Element base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::size_t GroupTable::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

std::size_t GroupTable::exponent() const {
  std::size_t e = 1;
  for (Element a = 0; a < order; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool GroupTable::is_abelian() const {
  for (Element a = 0; a < order; ++a)
    for (Element b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string check_group_axioms(const GroupTable& g) {
  const auto n = g.order;
  if (n == 0) return "empty group";
  if (g.product.size() != n * n || g.inverse.size() != n)
    return "table dimensions do not match the order";
  if (g.identity != 0) return "identity is not element 0";
  for (Element a = 0; a < n; ++a) {
    if (g.mul(a, 0) != a || g.mul(0, a) != a)
      return "identity law fails at element " + std::to_string(a);
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0)
      return "inverse law fails at element " + std::to_string(a);
  }
  std::vector<bool> row(n), col(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(row.begin(), row.end(), false);
    std::fill(col.begin(), col.end(), false);
    for (Element b = 0; b < n; ++b) {
      auto x = g.mul(a, b);
      auto y = g.mul(b, a);
      if (x >= n || y >= n || row[x] || col[y])
        return "multiplication by " + std::to_string(a) + " is not a bijection";
      row[x] = col[y] = true;
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          return "associativity fails at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")";
    }
  return {};
}

GroupTable group_from_permutations(unsigned degree,
                                   const std::vector<Permutation>& generators,
                                   std::vector<std::string> names,
                                   std::size_t order_cap) {
  if (degree < 1) throw InputError("permutation degree must be >= 1");
  for (const auto& p : generators) validate_permutation(p, degree);
  if (names.empty())
    for (std::size_t i = 0; i < generators.size(); ++i)
      names.push_back("g" + std::to_string(i));

  std::vector<Permutation> elements{identity_permutation(degree)};
  std::vector<std::vector<std::size_t>> words{{}};
  std::unordered_map<Permutation, Element, PermutationHash> index{
      {elements[0], 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      auto next = compose(elements[i], generators[k]);
      if (index.contains(next)) continue;
      if (elements.size() >= order_cap) {
        throw InputError("group order exceeds the configured limit of " +
                         std::to_string(order_cap));
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      auto w = words[i];
      w.push_back(k);
      words.push_back(std::move(w));
      elements.push_back(std::move(next));
    }
  }

  GroupTable g;
  g.order = elements.size();
  g.product.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b)
      g.product[a * g.order + b] = index.at(compose(elements[a], elements[b]));
  g.inverse.resize(g.order);
  for (Element a = 0; a < g.order; ++a)
    for (Element b = 0; b < g.order; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse[a] = b;
        break;
      }
  for (const auto& w : words) g.element_labels.push_back(word_label(w, names));
  for (const auto& p : generators) g.generators.push_back(index.at(p));
  g.generator_names = std::move(names);
  return g;
}

GroupTable build_group(const GroupSpec& spec, std::size_t order_cap) {
  auto f = family_generators(spec);
  return group_from_permutations(f.degree, f.perms, f.names, order_cap);
}

ConjugacyClasses conjugacy_classes(const GroupTable& g) {
  std::vector<std::vector<Element>> raw;
  std::vector<bool> seen(g.order, false);
  for (Element x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < g.order; ++y) {
      auto c = g.conjugate(x, y);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    raw.push_back(std::move(cls));
  }
  std::vector<std::size_t> orders;
  for (const auto& c : raw) orders.push_back(g.element_order(c.front()));
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(orders[a], raw[a].size(), raw[a].front()) <
           std::tuple(orders[b], raw[b].size(), raw[b].front());
  });

  ConjugacyClasses cc;
  cc.class_of.resize(g.order);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto& cls = raw[perm[i]];
    for (auto x : cls) cc.class_of[x] = i;
    cc.representatives.push_back(cls.front());
    cc.class_sizes.push_back(cls.size());
    cc.element_orders.push_back(orders[perm[i]]);
    cc.classes.push_back(std::move(cls));
  }
  return cc;
}

// ---------------------------------------------------------------------------

SignHomomorphism::SignHomomorphism(const GroupTable& g, std::vector<int> values)
    : values_(std::move(values)) {
  if (values_.size() != g.order)
    throw InputError("lambda must assign a sign to every element");
  for (auto v : values_)
    if (v != 1 && v != -1) throw InputError("lambda values must be +1 or -1");
  for (Element a = 0; a < g.order; ++a)
    for (Element b = 0; b < g.order; ++b)
      if (values_[g.mul(a, b)] != values_[a] * values_[b])
        throw InputError("lambda is not a homomorphism (fails at " +
                         g.element_labels[a] + ", " + g.element_labels[b] + ")");
  if (std::find(values_.begin(), values_.end(), -1) == values_.end())
    throw InputError("lambda is not surjective onto {+1,-1}");
}

SignHomomorphism SignHomomorphism::from_generator_signs(
    const GroupTable& g, const std::vector<int>& signs) {
  if (signs.size() != g.generators.size()) {
    throw InputError("expected " + std::to_string(g.generators.size()) +
                     " generator signs, got " + std::to_string(signs.size()));
  }
  for (auto s : signs)
    if (s != 1 && s != -1) throw InputError("generator signs must be +1 or -1");
  std::vector<int> values(g.order, 0);
  values[g.identity] = 1;
  std::deque<Element> queue{g.identity};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      auto y = g.mul(x, g.generators[k]);
      if (values[y] == 0) {
        values[y] = values[x] * signs[k];
        queue.push_back(y);
      }
    }
  }
  if (std::find(values.begin(), values.end(), 0) != values.end())
    throw InputError("generators do not generate the group");
  return SignHomomorphism(g, std::move(values));
}

std::vector<SignHomomorphism> all_sign_homomorphisms(const GroupTable& g) {
  const auto k = g.generators.size();
  if (k > 20) throw InputError("too many generators to enumerate sign maps");
  std::vector<SignHomomorphism> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> signs(k);
    for (std::size_t i = 0; i < k; ++i)
      signs[i] = (mask >> (k - 1 - i)) & 1 ? -1 : +1;
    try {
      out.push_back(SignHomomorphism::from_generator_signs(g, signs));
    } catch (const InputError&) {
    }
  }
  return out;
}

SubgroupEmbedding subgroup_embedding(const GroupTable& g,
                                     std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != g.identity)
    throw InputError("subgroup must contain the identity");
  SubgroupEmbedding emb;
  emb.inclusion = elements;
  emb.preimage.assign(g.order, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= g.order) throw InputError("element out of range");
    emb.preimage[elements[i]] = static_cast<std::int64_t>(i);
  }
  auto& h = emb.subgroup;
  h.order = elements.size();
  h.product.resize(h.order * h.order);
  h.inverse.resize(h.order);
  for (std::size_t a = 0; a < h.order; ++a) {
    auto ia = emb.preimage[g.inv(elements[a])];
    if (ia < 0) throw InputError("subset is not closed under inverses");
    h.inverse[a] = static_cast<Element>(ia);
    for (std::size_t b = 0; b < h.order; ++b) {
      auto p = emb.preimage[g.mul(elements[a], elements[b])];
      if (p < 0) throw InputError("subset is not closed under products");
      h.product[a * h.order + b] = static_cast<Element>(p);
    }
    h.element_labels.push_back(g.element_labels[elements[a]]);
  }
  // Greedy generating set in ascending order.
  std::vector<bool> span(h.order, false);
  span[0] = true;
  for (Element x = 1; x < h.order; ++x) {
    if (span[x]) continue;
    h.generators.push_back(x);
    h.generator_names.push_back(h.element_labels[x]);
    std::vector<Element> members;
    for (Element y = 0; y < h.order; ++y)
      if (span[y]) members.push_back(y);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto gen : h.generators) {
        auto z = h.mul(members[i], gen);
        if (!span[z]) {
          span[z] = true;
          members.push_back(z);
        }
      }
  }
  return emb;
}

SubgroupEmbedding kernel_embedding(const GroupTable& g,
                                   const SignHomomorphism& lambda) {
  std::vector<Element> kernel;
  for (Element x = 0; x < g.order; ++x)
    if (lambda(x) == 1) kernel.push_back(x);
  if (kernel.size() * 2 != g.order)
    throw InputError("lambda is not surjective: kernel has index != 2");
  return subgroup_embedding(g, std::move(kernel));
}

std::vector<Element> coset_representatives(const GroupTable& g,
                                           const SignHomomorphism& lambda) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order; ++x)
    if (lambda(x) == -1) out.push_back(x);
  return out;
}

std::vector<std::string> sign_conventions(const GroupSpec& spec) {
  return std::visit(
      [](const auto& k) -> std::vector<std::string> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, spec::Cyclic>) {
          return {"onto-pm1"};
        } else if constexpr (std::is_same_v<K, spec::Dihedral>) {
          return {"reflection-sign"};
        } else if constexpr (std::is_same_v<K, spec::Quaternion>) {
          return {"i-kernel", "j-kernel", "k-kernel"};
        } else if constexpr (std::is_same_v<K, spec::DirectProduct>) {
          std::vector<std::string> out;
          for (const auto& c : sign_conventions(*k.left)) out.push_back("left:" + c);
          for (const auto& c : sign_conventions(*k.right)) out.push_back("right:" + c);
          return out;
        } else {
          return {"sign"};
        }
      },
      spec.kind);
}

SignHomomorphism sign_convention(const GroupSpec& spec, const GroupTable& g,
                                 const std::string& name) {
  return SignHomomorphism::from_generator_signs(g, signs_for_convention(spec, name));
}

std::string describe_signs(const GroupTable& g, const SignHomomorphism& lambda) {
  std::string out = "signs[";
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (i) out += ',';
    out += lambda(g.generators[i]) > 0 ? "+1" : "-1";
  }
  return out + "]";
}

} // namespace ksphere

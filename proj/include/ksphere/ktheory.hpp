#pragma once

#include "ksphere/lattice.hpp"
#include "ksphere/setting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ksphere {

/// Which representation sphere a presentation describes.
enum class SphereModel { s_lambda, s_1_plus_lambda };

std::string to_string(SphereModel s); // "s-lambda" / "s1-lambda"
SphereModel parse_sphere(const std::string& s);

/// Generator ind_H^G(chi (x) (zeta - 1)) of the reduced K-group of S^{1+lambda},
/// carried into R(H) as chi - b.chi. zeta stays symbolic.
struct KBasisElement {
  std::size_t representative; // chi in Irr(H), the smaller index of its orbit
  std::size_t partner;        // b.chi
  VirtualCharacter image;     // chi - b.chi in R(H)
  std::string label;
};

struct KGroupPresentation {
  SphereModel sphere = SphereModel::s_1_plus_lambda;
  std::size_t rank = 0;
  std::vector<KBasisElement> basis;
  /// action[i] is the rank x rank matrix of the i-th irreducible of G;
  /// column j holds the coordinates of chi_i . basis_j.
  std::vector<IntMatrix> action;
  bool product_is_zero = true;
  std::uint64_t fingerprint = 0;
};

/// An element of a presentation, in basis coordinates.
struct KElement {
  std::uint64_t presentation = 0;
  IntVector coordinates;
};

/// Reduced K_G(S^{1+lambda}) as the R(G)-submodule of R(H) spanned by the
/// chi - b.chi, with one basis element per orbit of size two.
KGroupPresentation k_group_s1_lambda(const IndexTwoSetting& s);
/// Same, using `b` (any element outside H) for the twist.
KGroupPresentation k_group_s1_lambda(const IndexTwoSetting& s, Element b);
KGroupPresentation k_group_s1_lambda(const GroupTable& g, const SignHomomorphism& lambda);

/// res_H(phi) (x) x, re-expressed in basis coordinates. Throws InternalError
/// if the product leaves the span.
IntVector module_action(const IndexTwoSetting& s, const KGroupPresentation& p,
                        const VirtualCharacter& phi, const IntVector& x);

/// Matrix of module_action(phi, -) in the basis.
IntMatrix action_matrix(const IndexTwoSetting& s, const KGroupPresentation& p,
                        const VirtualCharacter& phi);

KElement make_element(const KGroupPresentation& p, IntVector coordinates);

/// The ring product on the reduced K-group, which vanishes identically.
/// Throws InputError for elements of another presentation.
KElement ring_product(const KGroupPresentation& p, const KElement& a, const KElement& b);

/// Reduced K_G(S^lambda) as the ideal of R(G) generated by 1 - lambda_C.
struct IdealPresentation {
  SphereModel sphere = SphereModel::s_lambda;
  std::size_t rank = 0;
  std::size_t lambda_index = 0; // lambda_C in Irr(G)
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> partners; // lambda_C (x) representative
  std::vector<VirtualCharacter> basis; // phi - lambda_C (x) phi
  /// action[i]: column j holds the coordinates of chi_i (x) basis_j.
  std::vector<IntMatrix> action;
};

/// Coordinates of an ideal element in the basis; throws InputError if v is
/// not in the ideal.
IntVector ideal_coordinates(const IdealPresentation& p, const VirtualCharacter& v);

IdealPresentation k_group_s_lambda(const IndexTwoSetting& s);
IdealPresentation k_group_s_lambda(const GroupTable& g, const SignHomomorphism& lambda);

/// perm[i] = index of lambda_C (x) phi_i in Irr(G).
std::vector<std::size_t> lambda_multiplication(const IndexTwoSetting& s);

struct RankSplitting {
  std::size_t orbits_isotropy_kernel = 0; // G_chi = H, one Z each
  std::size_t orbits_isotropy_group = 0;  // G_chi = G, contribute nothing
  std::size_t rank = 0;

  friend bool operator==(const RankSplitting&, const RankSplitting&) = default;
};

RankSplitting rank_splitting_report(const IndexTwoSetting& s);

} // namespace ksphere

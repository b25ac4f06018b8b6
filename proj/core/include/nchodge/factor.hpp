#ifndef NCHODGE_FACTOR_HPP
#define NCHODGE_FACTOR_HPP

#include <utility>
#include <vector>

#include "nchodge/unipoly.hpp"

namespace nchodge {

struct PolyFactor {
  UniPoly factor;  // monic, irreducible over Q
  int multiplicity = 1;
};

/// Complete factorization over Q by Zassenhaus: squarefree decomposition,
/// factorization modulo a good prime, Hensel lifting and recombination.
/// The product of the factors (with multiplicities) equals p up to its
/// leading coefficient. Ordered by degree, then lexicographically on the
/// coefficient list (low to high). Throws InvalidInputError on zero input.
std::vector<PolyFactor> factor_rational_poly(const UniPoly& p);

bool is_irreducible(const UniPoly& p);

/// Number of distinct real roots, counted with a Sturm chain on the
/// squarefree part. Throws InvalidInputError for constant input.
int real_root_count(const UniPoly& p);

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<UniPoly> sturm_chain(const UniPoly& p);

struct Signature {
  int r1 = 0;  // real embeddings
  int r2 = 0;  // pairs of complex embeddings
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of the number field Q[x]/(p). Requires p irreducible.
Signature signature_from_minpoly(const UniPoly& p);

}  // namespace nchodge

#endif  // NCHODGE_FACTOR_HPP

#pragma once

#include <string>

#include "symfunc.hpp"

namespace qts {

/// Cell statistics of a partition mu used throughout the operator theory.
struct MuStats {
  Partition mu;
  QTRatio T;   // t^{n(mu)} q^{n(mu')}
  QTRatio B;   // sum_c q^{coarm} t^{coleg}
  QTRatio Pi;  // prod_{c != corner} (1 - q^{coarm} t^{coleg})
  QTRatio w;   // prod_c (q^{arm} - t^{leg+1})(t^{leg} - q^{arm+1})
  /// Eigenvalue of the degree-preserving operator D_0 on Htilde_mu.
  QTRatio d0_eigenvalue() const { return QTRatio(1) - QTRatio::M() * B; }
};
MuStats mu_stats(const Partition& mu);

/// Modified Macdonald polynomial Htilde_mu, computed as the unique
/// D_0-eigenvector of eigenvalue 1 - M*B_mu with Schur coefficient 1 at
/// the one-row shape. Cached per degree.
SymF macdonald_H(const Partition& mu);

/// Coordinates of f in the Htilde basis, degree by degree.
std::map<Partition, QTRatio> macdonald_coords(const SymF& f);

SymF nabla(const SymF& f);
SymF nabla_inverse(const SymF& f);
/// Delta_g f: multiply the Htilde_mu component by g[B_mu]
/// (or g[B_mu - 1] for the primed variant).
SymF delta_op(const SymF& g, const SymF& f, bool primed = false);

/// Write/read the per-degree table of Htilde expansions. The file carries a
/// checksum over its entries; a stale or corrupt file loads as false.
void save_macdonald_cache(const std::string& path, int degree);
bool load_macdonald_cache(const std::string& path);

}  // namespace qts

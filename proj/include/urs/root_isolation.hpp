#ifndef URS_ROOT_ISOLATION_HPP
#define URS_ROOT_ISOLATION_HPP

#include <vector>

#include "urs/poly.hpp"

namespace urs {

/// Complex disk with dyadic-rational center and radius, exact containment
/// semantics: |z - c| <= radius.
struct Disk {
  mpq_class center_re;
  mpq_class center_im;
  mpq_class radius;
};

/// One certified root: the disk contains exactly one root of `factor` (a
/// monic squarefree factor of the isolated polynomial), carrying the exact
/// multiplicity of that root in the original input.
struct RootCluster {
  Disk disk;
  int multiplicity = 1;
  int source_stratum = 0;  // index into the squarefree decomposition
  Poly factor;
};

inline constexpr int kDefaultPrecisionBits = 128;

/// 2^-53, the default isolation radius bound.
mpq_class default_radius_bound();

/// Certified isolation of all distinct complex roots of p into pairwise
/// disjoint disks of radius <= radius_bound, multiplicities attached from the
/// squarefree decomposition. Clusters sorted by (Re, Im). Precision doubles
/// internally until certification succeeds. Throws on zero or constant input.
std::vector<RootCluster> isolate_roots(const Poly& p, const mpq_class& radius_bound,
                                       int precision_bits = kDefaultPrecisionBits);
std::vector<RootCluster> isolate_roots(const Poly& p);

/// Shrink the cluster's disk to radius <= radius_bound around the same root.
RootCluster refine(const RootCluster& c, const mpq_class& radius_bound);

/// Exact pairwise-disjointness test.
bool disks_disjoint(const Disk& a, const Disk& b);

}  // namespace urs

#endif

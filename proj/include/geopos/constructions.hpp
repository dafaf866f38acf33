#pragma once

#include "geopos/certificate.hpp"
#include "geopos/graph.hpp"

namespace geopos {

/// 2^{t+1} edges of C_{2^r}, consecutive edge gaps exactly 2^{r-t-1}-1,
/// forming an edge (2^t+1)-gp set. Requires r >= 3, t >= 1, 2^t <= 2^{r-1}-2.
Certificate cycle_equidistant_kgp(int r, int t);

/// 4r diametral paths partitioning the edges of C_{2r} x C_{2r}: for each
/// diagonal vertex (i,i) one path turning at it from row i into column i and
/// one from column i into row i. Requires r >= 2.
Certificate torus_diametral_partition(int r);

/// 2^{r+t+1} edges of C_{2^r} x C_{2^r}: 2^t equidistant column positions
/// (cyclic gap 2^{r-t}-1) with all parallel copies, mirrored for vertical
/// edges; an edge (2^t+1)-gp set. Requires r >= 3, t >= 1, 2^t <= 2^{r-1}-2.
Certificate torus_parallel_kgp(int r, int t);

/// 2^{d-1} geodesics of length d partitioning E(Q_d): from each even-parity
/// vertex, flip bits in ascending index order. Requires d >= 1.
Certificate hypercube_path_partition(int d);

/// 2^{r+1} diametral paths partitioning E(BN(r)): per row string s, cross
/// edges from [s,0] down to [~s,r] then straight edges back, and the mirrored
/// paths for the upper half. Requires r >= 2.
Certificate benes_path_partition(int r);

/// Edge k-gp set of BN(r) of size (k-1)*2^{r+1}: for k=3 the edges incident
/// to level-0 and level-2r vertices; for k=5 additionally those incident to
/// level-r vertices. Requires r >= 3 and k in {3,5}.
Certificate benes_kgp(int r, int k);

}  // namespace geopos

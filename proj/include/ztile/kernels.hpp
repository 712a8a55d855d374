#pragma once

#include <cstdint>
#include <vector>

#include "ztile/matrix.hpp"

// Data-parallel hot loops: the C(r,n) maximal-minor scan, halfspace
// membership sweeps, and tiling cover counts. Each kernel exists twice,
// ztile::serial (reference, used as the oracle in tests) and ztile::par
// (OpenMP). Outputs are exact and bit-identical between the two; the
// benchmark target compares their runtimes.

namespace ztile {

// All k-subsets of {0..r-1} in lexicographic order.
std::vector<std::vector<int>> n_subsets(int r, int k);

struct CoverCount {
  int strict_hits = 0;  // x interior to P + t
  int closed_hits = 0;  // x in closed P + t
};

namespace serial {

// |det| of the square submatrix picked by each subset of columns.
std::vector<Rat> minor_magnitudes(const RatMatrix& cols, const std::vector<std::vector<int>>& subsets);

// Closed membership per point of {x : |normals[j] . x| <= bounds[j]}.
std::vector<std::uint8_t> halfspace_mask(const std::vector<RatVec>& normals, const RatVec& bounds,
                                         const std::vector<RatVec>& points);

// Per point, how many translates cover it (strictly / closed).
std::vector<CoverCount> cover_counts(const std::vector<RatVec>& normals, const RatVec& bounds,
                                     const std::vector<RatVec>& translates, const std::vector<RatVec>& points);

}  // namespace serial

namespace par {

std::vector<Rat> minor_magnitudes(const RatMatrix& cols, const std::vector<std::vector<int>>& subsets);
std::vector<std::uint8_t> halfspace_mask(const std::vector<RatVec>& normals, const RatVec& bounds,
                                         const std::vector<RatVec>& points);
std::vector<CoverCount> cover_counts(const std::vector<RatVec>& normals, const RatVec& bounds,
                                     const std::vector<RatVec>& translates, const std::vector<RatVec>& points);

}  // namespace par

}  // namespace ztile

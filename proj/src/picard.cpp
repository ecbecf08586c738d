#include "coreg/picard.hpp"

#include "coreg/errors.hpp"

namespace coreg {

SurfaceLattice SurfaceLattice::p2() {
  return {Kind::P2, 1, {1}, {-3}};
}

SurfaceLattice SurfaceLattice::quadric() {
  return {Kind::Quadric, 2, {0, 1, 1, 0}, {-2, -2}};
}

SurfaceLattice SurfaceLattice::blowup_of_p2(size_t points) {
  if (points < 1 || points > 3)
    fail(Errc::InvalidInput, "blowups of one to three points only");
  SurfaceLattice lat;
  lat.kind = Kind::BlowupOfP2;
  lat.rank = points + 1;
  lat.form.assign(lat.rank * lat.rank, 0);
  lat.canonical.assign(lat.rank, 1);
  lat.form[0] = 1;
  lat.canonical[0] = -3;
  for (size_t i = 1; i < lat.rank; ++i) lat.form[i * lat.rank + i] = -1;
  return lat;
}

std::int64_t pairing(const DivisorClass& a, const DivisorClass& b, const SurfaceLattice& lat) {
  if (a.size() != lat.rank || b.size() != lat.rank)
    fail(Errc::DimensionMismatch, "divisor class length does not match the lattice rank");
  std::int64_t s = 0;
  for (size_t i = 0; i < lat.rank; ++i)
    for (size_t j = 0; j < lat.rank; ++j) s += a[i] * lat.form[i * lat.rank + j] * b[j];
  return s;
}

std::vector<DivisorClass> neg_one_curves(const SurfaceLattice& lat) {
  // E*K = -1 pins the coordinates to a small box for rank <= 4; the search
  // bound of 4 is far beyond any solution with at most three blown-up points.
  constexpr std::int64_t kBound = 4;
  std::vector<DivisorClass> found;
  DivisorClass v(lat.rank, -kBound);
  while (true) {
    if (pairing(v, v, lat) == -1 && pairing(v, lat.canonical, lat) == -1) found.push_back(v);
    size_t i = 0;
    while (i < lat.rank && v[i] == kBound) v[i++] = -kBound;
    if (i == lat.rank) break;
    ++v[i];
  }
  return found;
}

bool is_anticanonical(const std::vector<std::pair<DivisorClass, std::int64_t>>& classes,
                      const SurfaceLattice& lat, std::int64_t m) {
  DivisorClass sum(lat.rank, 0);
  for (const auto& [cls, mult] : classes) {
    if (cls.size() != lat.rank)
      fail(Errc::DimensionMismatch, "divisor class length does not match the lattice rank");
    for (size_t i = 0; i < lat.rank; ++i) sum[i] += mult * cls[i];
  }
  for (size_t i = 0; i < lat.rank; ++i)
    if (sum[i] != -m * lat.canonical[i]) return false;
  return true;
}

}  // namespace coreg

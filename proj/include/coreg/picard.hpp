// Divisor class lattices of the surfaces in scope: the plane, the quadric,
// and blowups of the plane in up to three points.  Classes are integer
// vectors in the standard basis (H; E_1..E_k for blowups, F_1, F_2 for the
// quadric) with the diagonal or hyperbolic intersection form.

#pragma once

#include <cstdint>
#include <vector>

namespace coreg {

using DivisorClass = std::vector<std::int64_t>;

struct SurfaceLattice {
  enum class Kind { P2, Quadric, BlowupOfP2 };
  Kind kind = Kind::P2;
  size_t rank = 1;
  std::vector<std::int64_t> form;  // intersection matrix, row-major rank x rank
  DivisorClass canonical;          // K in the same basis

  static SurfaceLattice p2();
  static SurfaceLattice quadric();
  static SurfaceLattice blowup_of_p2(size_t points);  // 1 <= points <= 3
};

std::int64_t pairing(const DivisorClass& a, const DivisorClass& b, const SurfaceLattice& lat);

// All classes E with E*E = -1 and E*K = -1; empty on the plane and the
// quadric, counts 1/3/6 on blowups of 1/2/3 points.
std::vector<DivisorClass> neg_one_curves(const SurfaceLattice& lat);

// True iff sum of mult_i * class_i equals -m * K.
bool is_anticanonical(const std::vector<std::pair<DivisorClass, std::int64_t>>& classes,
                      const SurfaceLattice& lat, std::int64_t m);

}  // namespace coreg

// Derives the third generator of the valentiner preset: a 3x3 matrix that
// extends the Sym^2 icosahedral group (order 60) to a projective group of
// order 360, normalized to determinant one so the unimodular lift works.
//
// Method: inside the order-60 group pick a 12-element subgroup generated by
// an involution u and a 3-cycle c.  For every pair (u', c') generating the
// same subgroup with the same relations, solve the linear intertwiner
// equations U N_u = l_u N_{u'} U, U N_c = l_c N_{c'} U over all cube-root
// character twists (l_u, l_c), keep the nonsingular solutions, and test
// whether adjoining U closes to order 360.  The winner is rescaled to
// determinant one (the needed cube root lives in the conductor-15 field)
// and printed as table literals for presets.cpp.

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <vector>

#include "coreg/errors.hpp"
#include "coreg/group.hpp"
#include "coreg/invariants.hpp"

using namespace coreg;

namespace {

Cyclotomic q(long long n) { return Cyclotomic(Rational(n)); }

CMat mat2(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
          const Cyclotomic& d) {
  CMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// Columns of the kernel of the 18x9 system expressing both intertwiner
// equations for the unknown 3x3 matrix U (row-major unknowns).
CMat intertwiner_space(const CMat& nu, const CMat& nu2, const CMat& nc,
                       const CMat& nc2, const Cyclotomic& lu, const Cyclotomic& lc) {
  CMat sys(18, 9);
  // U * A - l * B * U = 0 row for equation pairs (A,B,l).
  auto fill = [&](size_t base, const CMat& a, const CMat& b, const Cyclotomic& l) {
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        size_t row = base + i * 3 + j;
        for (size_t k = 0; k < 3; ++k) {
          sys.at(row, i * 3 + k) += a.at(k, j);
          sys.at(row, k * 3 + j) -= l * b.at(i, k);
        }
      }
  };
  fill(0, nu, nu2, lu);
  fill(9, nc, nc2, lc);
  return sys.kernel();
}

using Cx = std::complex<double>;

// Image of a conductor-15 value under zeta15 -> exp(2*pi*i*j/15).
Cx embed15(const Cyclotomic& z, int j) {
  Cyclotomic w = z.embedded(15);
  Cx r = 0;
  for (size_t i = 0; i < w.coeffs().size(); ++i) {
    const Rational& c = w.coeffs()[i];
    double v = static_cast<double>(c.num()) / static_cast<double>(c.den());
    double ang = 2.0 * M_PI * static_cast<double>(i) * j / 15.0;
    r += v * Cx(std::cos(ang), std::sin(ang));
  }
  return r;
}

// Nearest rational with a small denominator (continued fractions).
Rational rationalize(double x, long long max_den = 100000) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = v - fl;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  return Rational(BigInt(p1), BigInt(q1 == 0 ? 1 : q1));
}

// Exact square root of c in the conductor-15 field, if one exists: pick a
// complex square root in each embedding, solve for the power-basis
// coordinates numerically, rationalize, and verify exactly.
bool sqrt_in_q15(const Cyclotomic& c, Cyclotomic* out) {
  const int js[8] = {1, 2, 4, 7, 8, 11, 13, 14};  // 15-j partners of 1,2,4,7
  Cx root[8];
  for (int k = 0; k < 4; ++k) root[k] = std::sqrt(embed15(c, js[k]));
  for (int mask = 0; mask < 16; ++mask) {
    Cx t[8];
    for (int k = 0; k < 4; ++k) {
      t[k] = (mask >> k & 1) ? -root[k] : root[k];
      t[7 - k] = std::conj(t[k]);  // js[7-k] == 15 - js[k]
    }
    // Solve sum_i a_i * zeta^(i*j) = t_j for the eight coordinates a_i.
    Cx m[8][9];
    for (int r = 0; r < 8; ++r) {
      for (int i = 0; i < 8; ++i) {
        double ang = 2.0 * M_PI * i * js[r] / 15.0;
        m[r][i] = Cx(std::cos(ang), std::sin(ang));
      }
      m[r][8] = t[r];
    }
    for (int col = 0; col < 8; ++col) {
      int piv = col;
      for (int r = col + 1; r < 8; ++r)
        if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
      for (int i = 0; i < 9; ++i) std::swap(m[col][i], m[piv][i]);
      for (int r = 0; r < 8; ++r) {
        if (r == col) continue;
        Cx f = m[r][col] / m[col][col];
        for (int i = col; i < 9; ++i) m[r][i] -= f * m[col][i];
      }
    }
    std::vector<Rational> coeffs(8);
    bool plausible = true;
    for (int i = 0; i < 8 && plausible; ++i) {
      Cx a = m[i][8] / m[i][i];
      if (std::abs(a.imag()) > 1e-6) plausible = false;
      coeffs[i] = rationalize(a.real());
    }
    if (!plausible) continue;
    Cyclotomic s(15, coeffs);
    if (s * s == c.embedded(15)) {
      *out = s;
      return true;
    }
  }
  return false;
}

}  // namespace

int main() {
  Cyclotomic e = Cyclotomic::zeta(5);
  Cyclotomic rt5 = e - e.pow(2) - e.pow(3) + e.pow(4);
  Cyclotomic inv_rt5 = rt5 * Cyclotomic(Rational(BigInt(1), BigInt(5)));

  CMat s2 = mat2(e.pow(3), q(0), q(0), e.pow(2));
  CMat t2 = mat2(-(e - e.pow(4)) * inv_rt5, (e.pow(2) - e.pow(3)) * inv_rt5,
                 (e.pow(2) - e.pow(3)) * inv_rt5, (e - e.pow(4)) * inv_rt5);

  CMat s3 = sym_power_matrix(s2, 2);
  CMat t3 = sym_power_matrix(t2, 2);
  std::printf("det S = %s, det T = %s\n", s3.det().str().c_str(), t3.det().str().c_str());

  // Linear closure: Sym^2 kills the sign ambiguity of the 2x2 lifts, so the
  // sixty matrices form an honest determinant-one representation.
  MatGroup g = MatGroup::closure({s3, t3}, false);
  std::printf("|Sym2 icosahedral| = %zu\n", g.order());
  const GroupTable& t = g.table();

  // A 12-element subgroup generated by an involution and a 3-cycle.
  std::vector<std::uint32_t> sub;
  size_t u = 0, c = 0;
  for (size_t i = 0; i < t.n && sub.empty(); ++i) {
    if (t.orders[i] != 2) continue;
    for (size_t j = 0; j < t.n; ++j) {
      if (t.orders[j] != 3) continue;
      auto cand = t.subgroup_closure({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      if (cand.size() == 12) {
        sub = cand;
        u = i;
        c = j;
        break;
      }
    }
  }
  std::printf("subgroup <u=%zu, c=%zu> of size %zu\n", u, c, sub.size());

  CMat nu = g.elem(u), nc = g.elem(c);
  Cyclotomic w3 = Cyclotomic::zeta(3);

  for (std::uint32_t u2 : sub) {
    if (t.orders[u2] != 2) continue;
    for (std::uint32_t c2 : sub) {
      if (t.orders[c2] != 3) continue;
      if (t.orders[t.at(u2, c2)] != 3) continue;
      if (t.subgroup_closure({u2, c2}) != sub) continue;
      if (u2 == u && c2 == c) continue;  // identity map, nothing new
      CMat nu2 = g.elem(u2), nc2 = g.elem(c2);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          CMat space = intertwiner_space(nu, nu2, nc, nc2, w3.pow(a), w3.pow(b));
          if (space.cols != 1) continue;
          CMat cand(3, 3);
          for (size_t k = 0; k < 9; ++k) cand.at(k / 3, k % 3) = space.at(k, 0);
          if (cand.det().is_zero()) continue;
          size_t n = 0;
          try {
            n = MatGroup::closure({s3, t3, cand}, true, 720).order();
          } catch (const Error&) {
            continue;
          }
          if (n != 360) continue;

          std::printf("\nfound: u'=%u c'=%u twist=(%d,%d)\n", u2, c2, a, b);
          Cyclotomic d = cand.det();
          std::printf("det U = %s (conductor %u)\n", d.str().c_str(), d.conductor());
          auto sq = (cand * cand).scalar_value();
          std::printf("U^2 scalar: %s\n", sq ? sq->str().c_str() : "none");
          if (!sq) continue;  // keep only involution-type solutions

          // U^2 = c I with c a square in the conductor-15 field, so U/sqrt(c)
          // is an exact involution with determinant +-1.
          Cyclotomic root;
          if (!sqrt_in_q15(*sq, &root)) {
            std::printf("no conductor-15 square root for U^2 scalar\n");
            continue;
          }
          CMat v = cand.scaled(root.inverse()).embedded(15);
          if (!(v * v).is_identity()) {
            std::printf("normalized candidate is not an involution\n");
            continue;
          }
          if (v.det() == Cyclotomic(-1)) v = v.scaled(Cyclotomic(-1));
          if (!(v.det() == Cyclotomic(1))) {
            std::printf("determinant not +-1 after normalization\n");
            continue;
          }
          std::printf("V^2 = I, det V = 1\n");
          std::printf("closure with V: %zu\n", MatGroup::closure({s3, t3, v}, true, 720).order());
          std::printf("sl lift: %zu\n", sl_lift(MatGroup::closure({s3, t3, v}, true, 720)).order());
          std::printf("\nstatic const char* const kValentinerU[9][8] = {\n");
          for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
              const Cyclotomic& z = v.at(i, j);
              std::printf("  {");
              for (size_t m = 0; m < 8; ++m) {
                Rational coeff = m < z.coeffs().size() ? z.coeffs()[m] : Rational(0);
                std::printf("\"%s\"%s", coeff.str().c_str(), m + 1 < 8 ? ", " : "");
              }
              std::printf("},\n");
            }
          std::printf("};\n");
          return 0;
        }
    }
  }
  std::printf("no extension found\n");
  return 1;
}

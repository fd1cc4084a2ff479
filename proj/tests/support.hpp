#pragma once

// Shared generators and brute-force oracles for the test suites. The oracles
// work in plain 64-bit integers over a fixed coefficient box and never call
// the enumeration or gcd code they are used to check.

#include "torus/skeleton.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

namespace torus::testing {

using Rng = std::mt19937_64;

struct IntBasis {
  std::int64_t p, q, r, s;

  std::int64_t det() const { return p * s - q * r; }
  LatticeBasis lattice() const { return LatticeBasis(Rat(p), Rat(q), Rat(r), Rat(s)); }
};

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Integer basis with entries in [-bound, bound] and nonzero determinant.
inline IntBasis random_int_basis(Rng& rng, std::int64_t bound = 20) {
  for (;;) {
    IntBasis b{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound),
               uniform(rng, -bound, bound)};
    if (b.det() != 0) return b;
  }
}

/// Random positive rational with small numerator and denominator.
inline Rat random_positive_rat(Rng& rng, std::int64_t bound = 9) {
  return Rat(uniform(rng, 1, bound), uniform(rng, 1, bound));
}

inline Rat random_rat(Rng& rng, std::int64_t bound = 30) {
  return Rat(uniform(rng, -bound, bound), uniform(rng, 1, bound));
}

inline LatticeBasis random_rat_basis(Rng& rng, std::int64_t bound = 9) {
  for (;;) {
    Vec2 u{random_rat(rng, bound), random_rat(rng, bound)};
    Vec2 v{random_rat(rng, bound), random_rat(rng, bound)};
    if (!det(u, v).is_zero()) return LatticeBasis(u, v);
  }
}

/// Product of random elementary integer operations; determinant +-1.
struct Unimodular {
  std::int64_t a = 1, b = 0, c = 0, d = 1;  // columns (a, c) and (b, d)
};

inline Unimodular random_unimodular(Rng& rng, int steps = 6) {
  Unimodular m;
  for (int i = 0; i < steps; ++i) {
    const std::int64_t k = uniform(rng, -2, 2);
    switch (uniform(rng, 0, 2)) {
      case 0:  // col1 += k col2
        m.a += k * m.b;
        m.c += k * m.d;
        break;
      case 1:  // col2 += k col1
        m.b += k * m.a;
        m.d += k * m.c;
        break;
      default:  // negate col1
        m.a = -m.a;
        m.c = -m.c;
        break;
    }
  }
  return m;
}

/// New basis B * U: u' = a u + c v, v' = b u + d v.
inline LatticeBasis apply(const LatticeBasis& basis, const Unimodular& m) {
  return LatticeBasis(basis.combine(Rat(m.a), Rat(m.c)), basis.combine(Rat(m.b), Rat(m.d)));
}

inline std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

/// Exhaustive integer scan of z in [-box, box]^2.
struct BruteForce {
  std::int64_t q1_norm = -1;  // min l1 over nonzero points with xy >= 0
  std::int64_t q2_norm = -1;  // min l1 over points with xy < 0
  std::int64_t d_x = -1;      // least positive a with (a, 0) a lattice point
  std::int64_t d_y = -1;
  std::int64_t max_coefficient_used = 0;
};

inline BruteForce brute_force(const IntBasis& b, std::int64_t box = 256) {
  BruteForce out;
  std::int64_t reach[4] = {0, 0, 0, 0};  // coefficient size of each current minimizer
  auto improve = [&](std::int64_t& slot, std::int64_t value, int which, std::int64_t z1, std::int64_t z2) {
    if (slot < 0 || value < slot) {
      slot = value;
      reach[which] = std::max(iabs(z1), iabs(z2));
    }
  };
  for (std::int64_t z1 = -box; z1 <= box; ++z1) {
    for (std::int64_t z2 = -box; z2 <= box; ++z2) {
      const std::int64_t x = z1 * b.p + z2 * b.r;
      const std::int64_t y = z1 * b.q + z2 * b.s;
      if (x == 0 && y == 0) continue;
      const std::int64_t n = iabs(x) + iabs(y);
      const bool q1 = (x >= 0 && y >= 0) || (x <= 0 && y <= 0);
      if (q1)
        improve(out.q1_norm, n, 0, z1, z2);
      else
        improve(out.q2_norm, n, 1, z1, z2);
      if (y == 0 && x > 0) improve(out.d_x, x, 2, z1, z2);
      if (x == 0 && y > 0) improve(out.d_y, y, 3, z1, z2);
    }
  }
  out.max_coefficient_used = std::max({reach[0], reach[1], reach[2], reach[3]});
  return out;
}

/// Splits a random rectangle at a random interior rational coordinate.
inline Tiling split_once(const Tiling& t, Rng& rng) {
  Tiling out = t;
  const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(t.rects.size()) - 1));
  const Rect r = t.rects[i];
  const std::int64_t den = uniform(rng, 2, 5);
  const Rat frac(uniform(rng, 1, den - 1), den);
  if (uniform(rng, 0, 1) == 0) {
    const Rat cut = r.x0 + frac * r.width();
    out.rects[i] = Rect::make(r.x0, cut, r.y0, r.y1);
    out.rects.push_back(Rect::make(cut, r.x1, r.y0, r.y1));
  } else {
    const Rat cut = r.y0 + frac * r.height();
    out.rects[i] = Rect::make(r.x0, r.x1, r.y0, cut);
    out.rects.push_back(Rect::make(r.x0, r.x1, cut, r.y1));
  }
  return out;
}

inline Tiling split_randomly(Tiling t, int splits, Rng& rng) {
  for (int k = 0; k < splits; ++k) t = split_once(t, rng);
  return t;
}

}  // namespace torus::testing

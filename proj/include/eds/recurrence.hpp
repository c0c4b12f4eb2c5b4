#pragma once

#include <array>
#include <cstdlib>
#include <span>
#include <vector>

#include "eds/reduction.hpp"
#include "eds/sequences.hpp"

namespace eds {

/// One instance of Ward's recurrence on a sequence, with indices stored
/// sorted n >= m >= r >= 1:
///
///   lhs = a_{n+m} a_{n-m} a_r^2
///   rhs = a_{m+r} a_{m-r} a_n^2 - a_{n+r} a_{n-r} a_m^2
///
/// qualifying marks triples with at least two indices divisible by M(P).
struct TripleCheckResult {
  long m = 0, n = 0, r = 0;
  Int lhs, rhs, defect;
  bool qualifying = false;
};

/// L_{m,n} = g_{m+n} g_{|n-m|} / (g_n^2 g_m^2), the exact cancellation ratio
/// that measures how far the beta-sequence is from Ward's recurrence.
struct DefectRatio {
  long m = 0, n = 0;
  Rat L;
};

namespace detail {

struct WardSides {
  Int lhs, rhs;
};

/// Requires m >= n >= r >= 1 and seq defined through index m+n.
inline WardSides ward_sides(std::span<const Int> seq, long m, long n, long r) {
  WardSides s;
  s.lhs = seq[m + n] * seq[m - n] * seq[r] * seq[r];
  s.rhs = seq[m + r] * seq[m - r] * seq[n] * seq[n] -
          seq[n + r] * seq[n - r] * seq[m] * seq[m];
  return s;
}

/// Throws torsion_point if some multiple of P up to max(limit, 16) is the
/// identity; over Q, torsion orders never exceed 12, so this is exact.
inline void require_non_torsion(PointContext& ctx, long limit) {
  long scan = std::max<long>(limit, 16);
  for (long n = 1; n <= scan; ++n)
    if (psi(ctx, n) == 0)
      fail(errc::torsion_point, "point has finite order " + std::to_string(n));
}

}  // namespace detail

/// Ward's sequence from seeds (1, h2, h3, h4): h_0 = 0, then the duplication
/// instances
///
///   h_{2k+1} = h_{k+2} h_k^3 - h_{k-1} h_{k+1}^3
///   h_{2k}   = h_k (h_{k+2} h_{k-1}^2 - h_{k-2} h_{k+1}^2) / h_2
///
/// filled in increasing index order, with exact divisibility by h_2 asserted
/// at every even step.
inline std::vector<Int> edsa_generate(const Int& h1, const Int& h2, const Int& h3,
                                      const Int& h4, long N) {
  if (N < 0) fail(errc::index_out_of_range, "edsa_generate needs N >= 0");
  if (h1 != 1) fail(errc::invalid_seed, "h_1 must be 1");
  bool h2_divides_h4 = h2 == 0 ? h4 == 0 : divides(h2, h4);
  if (!h2_divides_h4) fail(errc::invalid_seed, "h_2 must divide h_4");
  std::vector<Int> seq{Int(0), h1, h2, h3, h4};
  if (N < 4) {
    seq.resize(static_cast<std::size_t>(N) + 1);
    return seq;
  }
  for (long j = 5; j <= N; ++j) {
    long k = j / 2;
    Int term;
    if (j % 2 != 0) {
      term = seq[k + 2] * seq[k] * seq[k] * seq[k] -
             seq[k - 1] * seq[k + 1] * seq[k + 1] * seq[k + 1];
    } else {
      Int num = seq[k] * (seq[k + 2] * seq[k - 1] * seq[k - 1] -
                          seq[k - 2] * seq[k + 1] * seq[k + 1]);
      if (h2 == 0 || !divides(h2, num))
        fail(errc::non_integral_step,
             "h_2 does not divide the index-" + std::to_string(j) + " numerator");
      term = num / h2;
    }
    seq.push_back(std::move(term));
  }
  return seq;
}

/// Defect of Ward's recurrence at (m, n, r) after sorting descending; zero
/// exactly when the instance holds. seq[i] must be the i-th term.
inline Int check_ward_triple(std::span<const Int> seq, long m, long n, long r) {
  std::array<long, 3> idx{m, n, r};
  std::sort(idx.begin(), idx.end(), std::greater<long>());
  if (idx[2] < 1) fail(errc::index_out_of_range, "indices must be >= 1");
  if (idx[0] + idx[1] >= static_cast<long>(seq.size()))
    fail(errc::index_out_of_range, "sequence too short for index " +
                                       std::to_string(idx[0] + idx[1]));
  detail::WardSides s = detail::ward_sides(seq, idx[0], idx[1], idx[2]);
  return s.lhs - s.rhs;
}

/// Every triple n >= m >= r >= 1 with n <= bound, checked against the
/// beta-sequence of the context. Triples with at least two indices divisible
/// by M(P) are marked qualifying and must come out with defect zero; the
/// others are probes and may not.
inline std::vector<TripleCheckResult> verify_main_theorem(PointContext& ctx,
                                                          long bound) {
  if (bound < 1) fail(errc::index_out_of_range, "bound must be >= 1");
  detail::require_non_torsion(ctx, 2 * bound);
  long M = M_of(ctx).first;
  std::vector<SequenceRecord> table = sequence_table(ctx, 2 * bound);
  std::vector<Int> betas;
  betas.reserve(table.size());
  for (const SequenceRecord& rec : table) betas.push_back(rec.beta);

  std::vector<TripleCheckResult> out;
  for (long n = 1; n <= bound; ++n)
    for (long m = 1; m <= n; ++m)
      for (long r = 1; r <= m; ++r) {
        detail::WardSides s = detail::ward_sides(betas, n, m, r);
        int hits = (n % M == 0) + (m % M == 0) + (r % M == 0);
        TripleCheckResult res;
        res.m = m;
        res.n = n;
        res.r = r;
        res.lhs = s.lhs;
        res.rhs = s.rhs;
        res.defect = s.lhs - s.rhs;
        res.qualifying = hits >= 2;
        out.push_back(std::move(res));
      }
  return out;
}

/// Defect of the valuation law
///
///   g_{n+m,p} + g_{|n-m|,p} = 2 (g_{n,p} + g_{m,p}),
///
/// which vanishes whenever r(p,P) divides m (and ord_p(x(P)) >= 0).
inline long check_g_valuation_law(PointContext& ctx, const Int& p, long m, long n) {
  if (m < 0 || n < 0) fail(errc::index_out_of_range, "indices must be >= 0");
  long lhs = static_cast<long>(g_valuation(ctx, n + m, p)) +
             static_cast<long>(g_valuation(ctx, std::labs(n - m), p));
  long rhs = 2 * (static_cast<long>(g_valuation(ctx, n, p)) +
                  static_cast<long>(g_valuation(ctx, m, p)));
  return lhs - rhs;
}

/// L_{m,n} as an exact rational; equals 1 whenever M(P) divides m.
inline DefectRatio check_g_multiplicative_law(PointContext& ctx, long m, long n) {
  if (m < 0 || n < 0) fail(errc::index_out_of_range, "indices must be >= 0");
  Int num = g(ctx, n + m) * g(ctx, std::labs(n - m));
  Int gn = g(ctx, n);
  Int gm = g(ctx, m);
  return DefectRatio{m, n, make_rat(num, Int(gn * gn * gm * gm))};
}

/// Closed-form valuation of g_n at a bad prime with r = r(p,P) > 1, via the
/// Cheon-Hahn formula. With mu = g_{r,p}:
///
///   n = m r         ->  mu m^2
///   n = 2 m r +- k  ->  4 mu m^2 +- 2 (2 ord_p(psi_k/psi_{r-k}) + mu) m
///                       + 2 ord_p(psi_k),            1 <= k < r
///
/// The decomposition is canonical: k = min(n mod 2r, 2r - n mod 2r), sign +
/// when n mod 2r < r and - when n mod 2r > r (n mod 2r = r falls in the
/// multiple branch). For 1 <= k < r the representation is unique.
inline long cheon_g(PointContext& ctx, const Int& p, long n) {
  if (n < 1) fail(errc::index_out_of_range, "cheon_g needs n >= 1");
  long r = r_of(ctx, p);
  if (r == 1)
    fail(errc::not_applicable, "r(p,P) = 1: the valuation vanishes identically");
  if (divides(p, ctx.v))
    fail(errc::not_applicable, "cheon_g needs ord_p(x(P)) >= 0");
  detail::require_non_torsion(ctx, 0);
  long mu = static_cast<long>(g_valuation(ctx, r, p));
  if (n % r == 0) {
    long m = n / r;
    return mu * m * m;
  }
  long q = n % (2 * r);
  long k, m;
  int sgn;
  if (q < r) {
    k = q;
    m = (n - k) / (2 * r);
    sgn = 1;
  } else {
    k = 2 * r - q;
    m = (n + k) / (2 * r);
    sgn = -1;
  }
  long nu_k = ord_p(psi(ctx, k), p);
  long nu_rk = ord_p(psi(ctx, r - k), p);
  long val = 4 * mu * m * m + sgn * 2 * (2 * (nu_k - nu_rk) + mu) * m + 2 * nu_k;
  if (val < 0)
    fail(errc::invariant_violation, "valuation formula went negative");
  return val;
}

/// Outcome of the torsion-point variant: when M(P) = 1 the beta-sequence
/// satisfies every instance of Ward's recurrence; when M(P) != 1 the check
/// is skipped (no formula is available for that case).
struct TorsionCaseReport {
  bool skipped = false;
  long torsion_order = 0;
  long M = 1;
  std::vector<TripleCheckResult> triples;
};

inline TorsionCaseReport verify_torsion_case(PointContext& ctx, long bound) {
  if (bound < 1) fail(errc::index_out_of_range, "bound must be >= 1");
  long order = 0;
  for (long t = 1; t <= 16 && order == 0; ++t)
    if (psi(ctx, t) == 0) order = t;
  if (order == 0)
    fail(errc::non_torsion_point, "point is not torsion (no nP = O, n <= 16)");

  TorsionCaseReport rep;
  rep.torsion_order = order;
  rep.M = M_of(ctx).first;
  if (rep.M != 1) {
    rep.skipped = true;
    return rep;
  }
  std::vector<SequenceRecord> table = sequence_table(ctx, 2 * bound);
  std::vector<Int> betas;
  betas.reserve(table.size());
  for (const SequenceRecord& rec : table) betas.push_back(rec.beta);
  for (long n = 1; n <= bound; ++n)
    for (long m = 1; m <= n; ++m)
      for (long r = 1; r <= m; ++r) {
        detail::WardSides s = detail::ward_sides(betas, n, m, r);
        TripleCheckResult res;
        res.m = m;
        res.n = n;
        res.r = r;
        res.lhs = s.lhs;
        res.rhs = s.rhs;
        res.defect = s.lhs - s.rhs;
        res.qualifying = true;
        rep.triples.push_back(std::move(res));
      }
  return rep;
}

}  // namespace eds

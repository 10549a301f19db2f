#include "orbitkit/orbital.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace orbitkit {

namespace {

// Inverse of an odd number modulo 2^64 by Newton iteration.
u64 inverse_mod_2_64(u64 odd) {
  u64 x = odd;  // correct to 3 bits
  for (int i = 0; i < 5; ++i) x *= 2 - odd * x;
  return x;
}

// A contiguous run of off-diagonal values in one (alpha, beta) block.
struct Chunk {
  int alpha;
  int beta;
  u64 c_begin;
  u64 c_end;
};

struct Partial {
  std::array<u64, 2> stable{};
  u64 scanned = 0;
};

i64 checked_signed_pow(u64 p, int e) {
  return static_cast<i64>(checked_pow(p, e));
}

}  // namespace

i64 GradedCounts::twisted(int kappa) const {
  if (kappa != 0 && kappa != 1) throw std::invalid_argument("kappa must be 0 or 1");
  const i64 even = static_cast<i64>(by_grading[0]);
  const i64 odd = static_cast<i64>(by_grading[1]);
  return kappa == 0 ? even + odd : even - odd;
}

StabilityKernel::StabilityKernel(const GammaElement& gamma, int window)
    : p_(gamma.prime()), window_(window), modulus_(checked_pow(gamma.prime(), 2 * window)) {
  if (window < 0) throw std::invalid_argument("window radius must be non-negative");
  if (!applicable(gamma)) {
    throw std::invalid_argument("StabilityKernel needs an integral gamma with unit determinant");
  }
  a_ = gamma.a().residue(2 * window);
  b_ = gamma.b().residue(2 * window);
  b_delta_ = (gamma.b() * gamma.delta()).residue(2 * window);
}

bool StabilityKernel::stable(const WindowCell& cell) const {
  if (cell.alpha < 0 || cell.beta < 0 || cell.alpha + cell.beta > 2 * window_) {
    throw std::invalid_argument("cell lies outside the kernel window");
  }
  const u64 pa = checked_pow(p_, cell.alpha);
  const u64 pb = checked_pow(p_, cell.beta);
  const u64 m = pa * pb;
  const u64 a = a_ % m, b = b_ % m, bd = b_delta_ % m, c = cell.offdiag;

  // w in L iff w2 = t p^beta with t in Z_p and w1 - t c in p^alpha Z_p.
  auto in_lattice = [&](u64 w1, u64 w2) {
    if (w2 % pb != 0) return false;
    const u64 t = w2 / pb;
    return w1 % pa == mulmod(t, c, pa);
  };
  const bool first = in_lattice(mulmod(a, pa, m), mulmod(b, pa, m));
  if (!first) return false;
  return in_lattice((mulmod(a, c, m) + mulmod(bd, pb, m)) % m, (mulmod(b, c, m) + mulmod(a, pb, m)) % m);
}

GradedCounts StabilityKernel::count_window(unsigned jobs) const {
  const int radius = 2 * window_;
  std::vector<Chunk> chunks;
  constexpr u64 kChunk = u64{1} << 16;
  for (int alpha = 0; alpha <= radius; ++alpha) {
    for (int beta = 0; alpha + beta <= radius; ++beta) {
      const u64 bound = alpha == 0 ? 1 : checked_pow(p_, alpha);
      for (u64 c = 0; c < bound; c += kChunk) chunks.push_back({alpha, beta, c, std::min(bound, c + kChunk)});
    }
  }

  // t * c < p^(2 alpha) <= p^(4m) must fit in 64 bits for the fast loop.
  const bool fast = static_cast<u128>(modulus_) * modulus_ <= std::numeric_limits<u64>::max();

  auto run_chunk = [&](const Chunk& chunk, Partial& out) {
    const int parity = (chunk.alpha + chunk.beta) & 1;
    const bool needs_unit = chunk.alpha > 0 && chunk.beta > 0;
    if (!fast) {
      for (u64 c = chunk.c_begin; c < chunk.c_end; ++c) {
        if (needs_unit && c % p_ == 0) continue;
        ++out.scanned;
        if (stable(WindowCell{chunk.alpha, chunk.beta, c})) ++out.stable[parity];
      }
      return;
    }

    const u64 pa = checked_pow(p_, chunk.alpha);
    const u64 pb = checked_pow(p_, chunk.beta);
    const u64 m = pa * pb;
    const u64 a = a_ % m, b = b_ % m, bd = b_delta_ % m;
    const u64 inv_pa = inverse_mod_2_64(pa), lim_pa = std::numeric_limits<u64>::max() / pa;
    const u64 inv_pb = inverse_mod_2_64(pb);
    // Odd d divides n iff n * d^-1 mod 2^64 <= (2^64 - 1) / d.
    auto divisible_by_pa = [&](u64 x, u64 y) {
      const u64 diff = x >= y ? x - y : y - x;
      return diff * inv_pa <= lim_pa;
    };

    // gamma (p^alpha, 0) = (a p^alpha, b p^alpha).
    const u64 first_w1 = mulmod(a, pa, m);
    const u64 first_w2 = mulmod(b, pa, m);
    const bool first_t_integral = first_w2 % pb == 0;
    const u64 first_t = first_w2 / pb;

    // gamma (c, p^beta) = (a c + b delta p^beta, b c + a p^beta), advanced in c.
    const u64 a_pb = mulmod(a, pb, m);
    const u64 bd_pb = mulmod(bd, pb, m);
    const u64 b_mod_pb = b % pb;
    u64 ac = mulmod(a, chunk.c_begin, m);
    u64 bc = mulmod(b, chunk.c_begin, m);
    u64 bc_mod_pb = mulmod(b_mod_pb, chunk.c_begin, pb);
    u64 c_mod_p = chunk.c_begin % p_;

    for (u64 c = chunk.c_begin; c < chunk.c_end; ++c) {
      const bool skip = needs_unit && c_mod_p == 0;
      if (!skip) {
        ++out.scanned;
        bool ok = first_t_integral && divisible_by_pa(first_t * c, first_w1) && bc_mod_pb == 0;
        if (ok) {
          u64 w2 = bc + a_pb;
          if (w2 >= m) w2 -= m;
          u64 w1 = ac + bd_pb;
          if (w1 >= m) w1 -= m;
          const u64 t = w2 * inv_pb;  // exact: p^beta divides w2
          ok = divisible_by_pa(t * c, w1);
        }
        if (ok) ++out.stable[parity];
      }
      ac += a;
      if (ac >= m) ac -= m;
      bc += b;
      if (bc >= m) bc -= m;
      bc_mod_pb += b_mod_pb;
      if (bc_mod_pb >= pb) bc_mod_pb -= pb;
      if (++c_mod_p == p_) c_mod_p = 0;
    }
  };

  std::vector<Partial> partials(std::max(1u, jobs));
  if (partials.size() == 1) {
    for (const Chunk& chunk : chunks) run_chunk(chunk, partials[0]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (Partial& partial : partials) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < chunks.size(); i = next++) run_chunk(chunks[i], partial);
      });
    }
  }

  GradedCounts result;
  result.window = window_;
  for (const Partial& partial : partials) {
    result.by_grading[0] += partial.stable[0];
    result.by_grading[1] += partial.stable[1];
    result.cells_scanned += partial.scanned;
  }
  return result;
}

GradedCounts count_stable(const GammaElement& gamma, int m, int precision, unsigned jobs) {
  if (m < 0) throw std::invalid_argument("window radius must be non-negative");
  if (precision < 2 * m + 6) throw std::invalid_argument("count_stable: precision must be >= 2m + 6");
  if (StabilityKernel::applicable(gamma)) return StabilityKernel(gamma, m).count_window(jobs);

  GradedCounts result;
  result.window = m;
  const u64 p = gamma.prime();
  visit_window_cells(p, m, [&](const WindowCell& cell) {
    ++result.cells_scanned;
    const Lattice2 lattice = lattice_from_cell(cell, p, precision);
    if (is_stable(lattice, gamma)) ++result.by_grading[static_cast<std::size_t>(grading(lattice))];
  });
  return result;
}

i64 twisted_count(const GammaElement& gamma, int kappa, int m, int precision, unsigned jobs) {
  return count_stable(gamma, m, precision, jobs).twisted(kappa);
}

i64 closed_form_count(u64 p, int vb, int kappa) {
  if (vb <= 0) throw std::invalid_argument("closed_form_count: val(b) must be positive");
  if (kappa != 0 && kappa != 1) throw std::invalid_argument("kappa must be 0 or 1");
  i64 sum = 0;
  for (int w = -vb; w <= vb; ++w) {
    const i64 term = checked_signed_pow(p, (vb - w) / 2);
    sum += (kappa == 1 && (w & 1)) ? -term : term;
  }
  return sum;
}

bool stable_by_inequalities(Valuation val_x, Valuation val_y, int vb) {
  if (val_y < -vb || val_y > vb) return false;
  if (val_x == kInfiniteValuation) return true;
  return 2 * static_cast<i64>(val_x) >= static_cast<i64>(val_y) - vb;
}

i64 transfer_value(u64 p, int vb) {
  if (vb < 0) throw std::invalid_argument("transfer_value: negative exponent");
  const i64 magnitude = checked_signed_pow(p, vb);
  return (vb & 1) ? -magnitude : magnitude;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string to_string(GammaRegime r) {
  switch (r) {
    case GammaRegime::UnitNorm: return "unit-norm";
    case GammaRegime::NonUnit: return "non-unit";
    case GammaRegime::OutsideWorked: return "outside-worked-regime";
  }
  return "unknown";
}

GammaRegime classify(Valuation val_a, Valuation val_b) {
  if (val_a == 0 && val_b > 0) return GammaRegime::UnitNorm;
  // The norm a^2 - b^2 delta has valuation 2 min(val a, val b) for non-square delta.
  if (std::min(val_a, val_b) != 0) return GammaRegime::NonUnit;
  return GammaRegime::OutsideWorked;
}

OrbitalReport verify_fundamental_lemma(u64 p, Fraction a, Fraction b, Fraction delta, int kappa,
                                       const WindowOptions& options) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (kappa != 0 && kappa != 1) throw std::invalid_argument("kappa must be 0 or 1");
  if (b.num == 0) throw std::invalid_argument("b must be nonzero");

  OrbitalReport report;
  report.p = p;
  report.a = a;
  report.b = b;
  report.delta = delta;
  report.kappa = kappa;

  // Valuations are exact on rationals; read them at unit precision first.
  const PadicScalar b_probe = PadicScalar::from_rational(b.num, b.den, p, 1);
  const int m = options.window.value_or(std::max(b_probe.valuation(), 0) + 1);
  if (m < 0) throw std::invalid_argument("window must be non-negative");
  const int precision = 2 * (m + (options.saturate ? 1 : 0)) + 6;

  const GammaElement gamma(PadicScalar::from_rational(a.num, a.den, p, precision),
                           PadicScalar::from_rational(b.num, b.den, p, precision),
                           PadicScalar::from_rational(delta.num, delta.den, p, precision));
  report.val_a = gamma.a().valuation();
  report.val_b = gamma.b().valuation();
  report.regime = classify(report.val_a, report.val_b);
  report.window = m;

  report.counts = count_stable(gamma, m, precision, options.jobs);
  report.untwisted_total = report.counts.total();
  report.twisted_total = report.counts.twisted(kappa);
  if (options.saturate) {
    report.saturation_counts = count_stable(gamma, m + 1, precision, options.jobs);
    report.saturated = *report.saturation_counts == report.counts;
  }

  switch (report.regime) {
    case GammaRegime::UnitNorm:
      report.closed_form = closed_form_count(p, report.val_b, kappa);
      report.expected = kappa == 1 ? transfer_value(p, report.val_b) : *report.closed_form;
      break;
    case GammaRegime::NonUnit:
      report.expected = 0;
      break;
    case GammaRegime::OutsideWorked:
      break;
  }

  if (report.expected) {
    bool ok = report.twisted_total == *report.expected;
    if (report.closed_form) ok = ok && *report.closed_form == report.twisted_total;
    if (options.saturate) ok = ok && report.saturated;
    report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  }
  return report;
}

}  // namespace orbitkit

#include "szkit/scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "szkit/poly_ops.hpp"
#include "szkit/roots.hpp"
#include "szkit/sz_check.hpp"

namespace szkit {

namespace {

// Real root of rho^3 = rho + 1; floor for the non-reciprocal case.
constexpr double kSmythRho = 1.3247179572447460;

IntPoly poly_from_index(std::uint64_t idx, unsigned long n, long b) {
  const std::uint64_t base = static_cast<std::uint64_t>(2 * b + 1);
  std::vector<Int> c(n + 1);
  c[0] = (idx & 1) ? -1 : 1;
  idx >>= 1;
  for (unsigned long i = 1; i < n; ++i) {
    c[i] = static_cast<long>(idx % base) - b;
    idx /= base;
  }
  c[n] = 1;
  return IntPoly(std::move(c));
}

// Orbit of house-equivalent (up to modulus inversion) family members.
// recip marks members whose house is 1/min|root| of the representative.
struct OrbitMember {
  IntPoly poly;
  bool recip = false;
};

std::vector<OrbitMember> orbit_members(const IntPoly& p) {
  const long n = p.degree();
  IntPoly neg = p.negate_variable();
  if (n % 2 != 0) neg = -neg;  // restore monicity
  IntPoly rec = reciprocal(p);
  if (!rec.is_monic()) rec = -rec;
  IntPoly recneg = rec.negate_variable();
  if (n % 2 != 0) recneg = -recneg;
  std::vector<OrbitMember> mem{{p, false}, {neg, false}, {rec, true}, {recneg, true}};
  // Direct members sort first on ties so palindromic overlaps classify as
  // direct (for them min and max moduli are inverses anyway).
  std::sort(mem.begin(), mem.end(), [](const OrbitMember& a, const OrbitMember& b) {
    if (a.poly.coeffs() != b.poly.coeffs()) return a.poly.coeffs() < b.poly.coeffs();
    return a.recip < b.recip;
  });
  mem.erase(std::unique(mem.begin(), mem.end(),
                        [](const OrbitMember& a, const OrbitMember& b) {
                          return a.poly == b.poly;
                        }),
            mem.end());
  return mem;
}

struct ChunkResult {
  std::uint64_t orbits = 0, members = 0, cyclo = 0, bound = 0, faults = 0;
  std::vector<IntPoly> counterexamples;
  bool has_min = false;
  double min_house = 0.0;
  IntPoly witness;
  std::string error;  // first Undecided/fault message, if any

  void offer_min(double h, const IntPoly& w) {
    if (!has_min || h < min_house) {
      has_min = true;
      min_house = h;
      witness = w;
    }
  }
};

void process_range(std::uint64_t lo, std::uint64_t hi, unsigned long n, long b,
                   const RunConfig& cfg, const Interval thr, ChunkResult* out) {
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    IntPoly p = poly_from_index(idx, n, b);
    auto members = orbit_members(p);
    if (p.coeffs() != members.front().poly.coeffs()) continue;  // not the canonical rep
    ++out->orbits;
    out->members += members.size();

    if (is_cyclotomic_product(p)) {
      out->cyclo += members.size();
      continue;
    }

    // One root isolation serves the whole orbit: direct members share the
    // representative's moduli, reciprocal members invert them.
    Interval maxmod = house(p, cfg.tol, cfg.precision_cap_bits);
    Interval minmod = min_root_modulus(p, cfg.tol, cfg.precision_cap_bits);
    for (const auto& m : members) {
      Interval h = m.recip ? Interval{1.0 / minmod.hi, 1.0 / std::max(minmod.lo, 1e-300)}
                           : maxmod;
      if (h.lo >= thr.hi) {
        ++out->bound;
        out->offer_min(0.5 * (h.lo + h.hi), m.poly);
      } else if (h.hi < thr.lo) {
        ++out->faults;
        out->counterexamples.push_back(m.poly);
      } else {
        throw Undecided("scan: house straddles threshold at index " + std::to_string(idx));
      }
    }
  }
}

}  // namespace

ScanReport scan(unsigned long degree, long coeff_bound, const RunConfig& cfg,
                const std::string& resume_token) {
  if (degree < 2) throw std::invalid_argument("scan: theorem requires degree > 1");
  if (coeff_bound < 1) throw std::invalid_argument("scan: coefficient bound must be >= 1");

  ScanReport rep;
  rep.degree = degree;
  rep.coeff_bound = coeff_bound;
  const std::uint64_t base = static_cast<std::uint64_t>(2 * coeff_bound + 1);
  std::uint64_t family = 2;
  for (unsigned long i = 1; i < degree; ++i) {
    if (family > (1ull << 62) / base) throw std::invalid_argument("scan: family size overflows");
    family *= base;
  }
  rep.family_size = family;
  rep.threshold = two_pow_inv_interval(4.0 * static_cast<double>(degree)).hi;
  rep.smyth_floor = std::pow(kSmythRho, 1.0 / static_cast<double>(degree));

  std::uint64_t start = 0;
  if (!resume_token.empty()) start = std::stoull(resume_token);
  if (start > family) throw std::invalid_argument("scan: resume token out of range");
  rep.start_index = start;

  const std::uint64_t budget_polys =
      std::max<std::uint64_t>(1, cfg.scan_budget / std::max<unsigned long>(degree, 1));
  std::uint64_t end = family;
  if (family - start > budget_polys) {
    end = start + budget_polys;
    rep.complete = false;
    rep.resume_token = std::to_string(end);
  }
  rep.end_index = end;

  const Interval thr = two_pow_inv_interval(4.0 * static_cast<double>(degree));
  const unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<ChunkResult> results(jobs);
  if (jobs == 1) {
    process_range(start, end, degree, coeff_bound, cfg, thr, &results[0]);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t span = (end - start + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      std::uint64_t lo = start + j * span;
      std::uint64_t hi = std::min(end, lo + span);
      if (lo >= hi) break;
      workers.emplace_back([&, lo, hi, j] {
        try {
          process_range(lo, hi, degree, coeff_bound, cfg, thr, &results[j]);
        } catch (const std::exception& e) {
          results[j].error = e.what();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& r : results) {
      if (!r.error.empty()) throw Undecided(r.error);
    }
  }

  for (const auto& r : results) {
    rep.orbits_processed += r.orbits;
    rep.members_checked += r.members;
    rep.cyclotomic_members += r.cyclo;
    rep.bound_members += r.bound;
    rep.fault_count += r.faults;
    for (const auto& c : r.counterexamples) rep.counterexamples.push_back(c);
    if (r.has_min && (!rep.has_min_house || r.min_house < rep.min_house ||
                      (r.min_house == rep.min_house &&
                       r.witness.coeffs() < rep.min_house_witness.coeffs()))) {
      rep.has_min_house = true;
      rep.min_house = r.min_house;
      rep.min_house_witness = r.witness;
    }
  }
  return rep;
}

}  // namespace szkit

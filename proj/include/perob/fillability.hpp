#pragma once

// Fillability verdicts for contact structures carried by marked data sets,
// plus the numerical check of boundary-profile curves (f0, g0) used to
// extend a symplectic form over a rationally rotating binding.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "perob/data_set.hpp"
#include "perob/error.hpp"
#include "perob/gluing.hpp"
#include "perob/openbook.hpp"

namespace perob {

enum class Verdict { SteinFillable, StronglyFillable, Overtwisted, Unknown };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SteinFillable: return "SteinFillable";
    case Verdict::StronglyFillable: return "StronglyFillable";
    case Verdict::Overtwisted: return "Overtwisted";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

// Certificate ids. Each names the rule that produced the verdict.
namespace certificate {
inline constexpr const char* positive_irreducible = "positive-irreducible";
inline constexpr const char* positive_assembly = "positive-assembly";
inline constexpr const char* positive_word_stein = "positive-word-stein";
inline constexpr const char* positive_word_strong = "positive-word-strong";
inline constexpr const char* integral_resolution = "integral-resolution";
inline constexpr const char* none = "none";
}  // namespace certificate

struct Hypothesis {
  std::string name;
  bool holds = false;
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct FillabilityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string certificate = certificate::none;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> fired;  // every rule that applied, strongest first
  std::string note;                // extra detail for text output

  bool hypothesis(const std::string& name) const {
    for (const auto& h : hypotheses)
      if (h.name == name) return h.holds;
    return false;
  }
};

/// "SteinFillable (positive-irreducible)", "Overtwisted (integral resolution:
/// left-veering)", "Unknown".
inline std::string verdict_text(const FillabilityVerdict& v) {
  if (v.verdict == Verdict::Unknown) return "Unknown";
  if (v.certificate == std::string(certificate::integral_resolution))
    return verdict_name(v.verdict) + " (integral resolution: left-veering)";
  return verdict_name(v.verdict) + " (" + v.certificate + ")";
}

namespace detail {

inline void require_valid(const MarkedDataSet& m, const char* who) {
  const ValidationReport rep = validate(m);
  if (!rep.valid())
    throw InvalidInput(std::string(who) + ": " + format(m) + " is invalid: condition " +
                       rep.violations.front().condition + ": " + rep.violations.front().detail);
}

inline bool marks_full_order(const MarkedDataSet& m) {
  return std::all_of(m.marks.begin(), m.marks.end(), [&](int j) {
    return m.base.pair(static_cast<std::size_t>(j)).order == m.base.degree;
  });
}

inline bool slopes_in_unit_interval(const OpenBookDescriptor& d) {
  return !d.boundaries.empty() &&
         std::all_of(d.boundaries.begin(), d.boundaries.end(), [](const BoundaryOrbit& b) {
           const auto q = b.full_period_slope.num();
           const auto p = b.full_period_slope.den();
           return p > q && q > 0;
         });
}

}  // namespace detail

/// Positive word with every boundary slope q/p satisfying p > q > 0.
///
/// Throws InvalidInput if the word has a negative twist or no boundary.
inline FillabilityVerdict classify_positive_word(const OpenBookDescriptor& d) {
  if (!d.positive_word || !d.monodromy.twists_positive())
    throw InvalidInput("classify_positive_word: monodromy word has negative twists");
  if (d.boundaries.empty()) throw InvalidInput("classify_positive_word: no boundary");
  FillabilityVerdict v;
  const bool slopes = detail::slopes_in_unit_interval(d);
  const bool connected = d.boundary_circles() == 1;
  v.hypotheses = {{"positive-word", true},
                  {"slopes-p>q>0", slopes},
                  {"connected-boundary", connected}};
  if (slopes) {
    v.verdict = Verdict::SteinFillable;
    v.certificate = certificate::positive_word_stein;
    v.fired.push_back(certificate::positive_word_stein);
    if (connected) v.fired.push_back(certificate::positive_word_strong);
  }
  return v;
}

/// Irreducible Type 1 pieces: a positive marking is Stein fillable; a
/// negative one is overtwisted when its integral resolution is left-veering.
///
/// Throws InvalidInput unless the base is a valid irreducible Type 1 data set.
inline FillabilityVerdict classify_irreducible(const MarkedDataSet& m) {
  detail::require_valid(m, "classify_irreducible");
  if (!classify(m.base).is_irreducible_type1())
    throw InvalidInput("classify_irreducible: " + format(m) + " is not irreducible Type 1");

  FillabilityVerdict v;
  const OpenBookDescriptor page = page_descriptor(m);
  v.hypotheses.push_back({"irreducible-type1", true});
  if (m.sign == Sign::Positive) {
    const bool fixed = detail::marks_full_order(m);
    v.hypotheses.push_back({"positive-sign", true});
    v.hypotheses.push_back({"marks-full-order", fixed});
    if (!fixed) {
      // Permuted orbits are accepted only with positive slopes; always true
      // for a positive marking, but recorded since it goes beyond fixed marks.
      v.hypotheses.push_back({"permuted-marks-positive-slope", true});
      v.note = "permuted marked orbits accepted by extension";
    }
    v.verdict = Verdict::SteinFillable;
    v.certificate = certificate::positive_irreducible;
    v.fired.push_back(certificate::positive_irreducible);
    const FillabilityVerdict w = classify_positive_word(page);
    for (const auto& f : w.fired) v.fired.push_back(f);
    return v;
  }

  v.hypotheses.push_back({"positive-sign", false});
  try {
    const OpenBookDescriptor resolved = integral_resolution(page);
    const bool left = veering(resolved) == Veering::LeftVeering;
    v.hypotheses.push_back({"resolution-supported", true});
    v.hypotheses.push_back({"left-veering", left});
    if (left) {
      v.verdict = Verdict::Overtwisted;
      v.certificate = certificate::integral_resolution;
      v.fired.push_back(certificate::integral_resolution);
      v.note = std::to_string(resolved.monodromy.count_twists(-1)) + " negative boundary twists";
    }
  } catch (const UnsupportedResolution& e) {
    v.hypotheses.push_back({"resolution-supported", false});
    v.note = e.what();
  }
  return v;
}

/// Assemblies of positive irreducible pieces glued along boundaries, with
/// every mark on a fixed point and both sides of every edge keeping some
/// marked boundary.
///
/// Throws as check_assembly does for malformed input.
inline FillabilityVerdict classify_assembly(const Assembly& a) {
  const AssemblyResult r = assemble(a);
  FillabilityVerdict v;

  const bool positive = std::all_of(a.pieces.begin(), a.pieces.end(),
                                    [](const MarkedDataSet& m) { return m.sign == Sign::Positive; });
  const bool fixed = std::all_of(a.pieces.begin(), a.pieces.end(), detail::marks_full_order);
  bool survives = true;
  for (const GluingEdge& e : a.edges)
    for (int p : {e.left.piece, e.right.piece})
      if (r.ledger[static_cast<std::size_t>(p - 1)].surviving_marks.empty()) survives = false;
  // Closing a cycle of pieces caps off like a self gluing.
  bool tree = a.self_edges.empty() && a.edges.size() + 1 == a.pieces.size();
  const bool plain = a.permutation_additions.empty();

  v.hypotheses = {{"all-pieces-positive", positive},
                  {"marks-full-order", fixed},
                  {"boundary-survives-each-edge", survives},
                  {"no-self-gluing", tree},
                  {"no-permutation-additions", plain}};
  if (positive && fixed && survives && tree && plain) {
    v.verdict = Verdict::SteinFillable;
    v.certificate = certificate::positive_assembly;
    v.fired.push_back(certificate::positive_assembly);
  } else if (!survives) {
    v.note = "a glued piece has no marked boundary left";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Boundary profiles

struct ProfilePair {
  std::vector<double> r;
  std::vector<double> f0;
  std::vector<double> g0;
  int p = 1;
  int q = 0;
  double K = 1;
  double H = 1;
};

struct ProfileViolation {
  double r = 0;
  std::string condition;  // "contact" or "symplectic"
  double value = 0;
};

struct ConditionReport {
  bool contact_ok = false;
  bool symplectic_ok = false;
  std::optional<ProfileViolation> first_violation;
  int inconclusive = 0;  // samples within tolerance of zero

  bool ok() const { return contact_ok && symplectic_ok; }
};

// Blend shape: A on [0, a], B on [b, 1], quintic smoothstep between.
struct ProfileShape {
  double a = 0.2;
  double b = 0.8;
};

/// Smallest integer K >= 1 with f0(1) < 0 < g0(1), plus one. If f0(1) stays
/// non-negative for every K (q < 0), the smallest K with g0(1) > 0, plus one.
inline double default_K(int p, int q) {
  for (int K = 1; K < 1000000; ++K) {
    const double f1 = -p - static_cast<double>(q) * K;
    const double g1 = -q + static_cast<double>(p) * K;
    if (f1 < 0 && g1 > 0) return K + 1;
  }
  for (int K = 1; K < 1000000; ++K)
    if (-q + static_cast<double>(p) * K > 0) return K + 1;
  return 1000000;
}

inline double default_H(int p, int q, double K) {
  const double f1 = -p - q * K;
  return 1 + std::max(1.0, f1);
}

namespace detail {

inline double smootherstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * t * (t * (t * 6 - 15) + 10);
}

}  // namespace detail

/// Samples a curve from the arc (2H - r^2, r^2) near r = 0 to the line
/// through (-p - qK, -q + pK) at r = 1 with direction (-p, -q).
///
/// Throws InvalidInput for p <= 0, gcd(p, q) != 1, K or H <= 0, or fewer
/// than 2 grid points.
inline ProfilePair build_profile(int p, int q, double K, double H, int grid_size,
                                 ProfileShape shape = {}) {
  if (p <= 0) throw InvalidInput("build_profile: p must be positive");
  if (std::gcd(p, q) != 1) throw InvalidInput("build_profile: gcd(p, q) must be 1");
  if (!(K > 0) || !(H > 0)) throw InvalidInput("build_profile: K and H must be positive");
  if (grid_size < 2) throw InvalidInput("build_profile: grid needs at least 2 points");
  if (!(0 < shape.a && shape.a < shape.b && shape.b < 1))
    throw InvalidInput("build_profile: need 0 < a < b < 1");

  ProfilePair pp{{}, {}, {}, p, q, K, H};
  const auto n = static_cast<std::size_t>(grid_size);
  pp.r.resize(n);
  pp.f0.resize(n);
  pp.g0.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(n - 1);
    const double fa = 2 * H - r * r, ga = r * r;
    const double fb = -r * p - q * K, gb = -r * q + p * K;
    const double s = detail::smootherstep((r - shape.a) / (shape.b - shape.a));
    pp.r[i] = r;
    pp.f0[i] = (1 - s) * fa + s * fb;
    pp.g0[i] = (1 - s) * ga + s * gb;
  }
  return pp;
}

/// Contact: f0 g0' - f0' g0 > 0 on (r_1, 1]. Symplectic: p f0' + q g0' < 0
/// on [0, 1]. Derivatives are central differences (second order one-sided
/// at the ends). Values within `tolerance` of zero count as inconclusive.
///
/// Throws InvalidInput for fewer than 64 samples, mismatched lengths or a
/// grid that is not strictly increasing.
inline ConditionReport verify_profile(const ProfilePair& pp, double tolerance) {
  const std::size_t n = pp.r.size();
  if (n < 64) throw InvalidInput("verify_profile: grid needs at least 64 samples");
  if (pp.f0.size() != n || pp.g0.size() != n)
    throw InvalidInput("verify_profile: sample arrays differ in length");
  for (std::size_t i = 1; i < n; ++i)
    if (!(pp.r[i] > pp.r[i - 1])) throw InvalidInput("verify_profile: grid not strictly increasing");

  auto derivative = [&](const std::vector<double>& y, std::size_t i) {
    const auto& x = pp.r;
    if (i == 0) {
      const double h1 = x[1] - x[0], h2 = x[2] - x[0];
      return (-(h2 * h2) * y[0] + h2 * h2 * y[1] - h1 * h1 * y[2] + h1 * h1 * y[0]) /
             (h1 * h2 * (h2 - h1));
    }
    if (i == n - 1) {
      const double h1 = x[n - 1] - x[n - 2], h2 = x[n - 1] - x[n - 3];
      return ((h2 * h2 - h1 * h1) * y[n - 1] - h2 * h2 * y[n - 2] + h1 * h1 * y[n - 3]) /
             (h1 * h2 * (h2 - h1));
    }
    const double hl = x[i] - x[i - 1], hr = x[i + 1] - x[i];
    return (hl * hl * y[i + 1] - hr * hr * y[i - 1] + (hr * hr - hl * hl) * y[i]) /
           (hl * hr * (hl + hr));
  };

  ConditionReport rep;
  rep.contact_ok = rep.symplectic_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double df = derivative(pp.f0, i), dg = derivative(pp.g0, i);
    const double symp = pp.p * df + pp.q * dg;
    if (symp > tolerance) {
      rep.symplectic_ok = false;
      if (!rep.first_violation) rep.first_violation = ProfileViolation{pp.r[i], "symplectic", symp};
    } else if (symp >= -tolerance) {
      ++rep.inconclusive;
    }
    if (i == 0) continue;
    const double cont = pp.f0[i] * dg - df * pp.g0[i];
    if (cont < -tolerance) {
      rep.contact_ok = false;
      if (!rep.first_violation) rep.first_violation = ProfileViolation{pp.r[i], "contact", cont};
    } else if (cont <= tolerance) {
      ++rep.inconclusive;
    }
  }
  return rep;
}

/// Symplectic value p f0' + q g0' of the arc (2H - r^2, r^2): 2r(q - p).
inline double symplectic_near_core(int p, int q, double r) { return 2 * r * (q - p); }

struct ProfileSearchResult {
  int candidates = 0;
  int passing = 0;             // both conditions
  int symplectic_passing = 0;  // symplectic condition alone
  std::optional<ProfilePair> first_passing;
};

/// Tries `candidates` monotone profiles with varying blend windows and
/// scales of K and H; counts those passing both conditions.
inline ProfileSearchResult search_profiles(int p, int q, int candidates, int grid_size,
                                           double tolerance) {
  ProfileSearchResult out;
  const double K0 = default_K(p, q);
  const double H0 = default_H(p, q, K0);
  const int side = std::max(1, static_cast<int>(std::ceil(std::cbrt(static_cast<double>(candidates)))));
  for (int ia = 0; ia < side && out.candidates < candidates; ++ia)
    for (int ik = 0; ik < side && out.candidates < candidates; ++ik)
      for (int ih = 0; ih < side && out.candidates < candidates; ++ih) {
        ProfileShape shape;
        shape.a = 0.05 + 0.4 * ia / side;
        shape.b = shape.a + 0.1 + 0.4 * (side - ia) / side;
        if (shape.b >= 1) shape.b = 0.95;
        const double K = K0 * (1 + ik);
        const double H = std::max(H0, default_H(p, q, K)) * (1 + 0.5 * ih);
        ++out.candidates;
        const ProfilePair pp = build_profile(p, q, K, H, grid_size, shape);
        const ConditionReport rep = verify_profile(pp, tolerance);
        if (rep.symplectic_ok) ++out.symplectic_passing;
        if (rep.ok()) {
          ++out.passing;
          if (!out.first_passing) out.first_passing = pp;
        }
      }
  return out;
}

inline void write_profile_csv(std::ostream& os, const ProfilePair& pp) {
  os << "r,f0,g0\n";
  os.precision(17);
  for (std::size_t i = 0; i < pp.r.size(); ++i) os << pp.r[i] << ',' << pp.f0[i] << ',' << pp.g0[i] << '\n';
}

}  // namespace perob

#ifndef RCM_SPACES_HPP
#define RCM_SPACES_HPP

#include <limits>
#include <string>
#include <vector>

#include "rcm/funcs.hpp"
#include "rcm/quad.hpp"

namespace rcm {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

enum class SpaceKind { hardy, bloch, bmoa, triebel, besov };

SpaceKind space_kind_from_string(const std::string& name);
std::string to_string(SpaceKind kind);

/// Identifies a (quasi)norm: kind plus the parameters it actually uses.
/// Hardy reads p only; Bloch/BMOA read nothing; Triebel and Besov read
/// (s, p, q, m) with m > s and q possibly infinite.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::hardy;
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;  // kInfExponent for the sup variant
  int m = 1;

  void validate() const;

  static SpaceSpec hardy(double p);
  static SpaceSpec bloch();
  static SpaceSpec bmoa();
  static SpaceSpec triebel(double s, double p, double q, int m = 0);
  static SpaceSpec besov(double s, double p, double q, int m = 0);
};

struct NormResult {
  double value = 0.0;
  /// True when the evaluator only ever under-reports the exact value
  /// (sup-type norms scanned over finite grids).
  bool lower_bound_certified = false;
  /// Intermediate values leading to the final one (e.g. grid value
  /// before local refinement).
  std::vector<double> refinement;
};

NormResult hardy_norm(const HoloFunction& f, double p, const QuadConfig& cfg);
NormResult bloch_norm(const HoloFunction& f, const QuadConfig& cfg);
NormResult bmoa_norm(const HoloFunction& f, const QuadConfig& cfg,
                     int level_max);
NormResult triebel_norm(const HoloFunction& f, const SpaceSpec& spec,
                        const QuadConfig& cfg, bool seminorm_only = false);
NormResult besov_norm(const HoloFunction& f, const SpaceSpec& spec,
                      const QuadConfig& cfg, bool seminorm_only = false);

/// Partial weighted first-derivative variation along the ray of angle t
/// (turns): int_0^{r_max} |f'(r e^{2 pi i t})|^q (1-r)^{q-1} dr.
/// Only partial integrals are computed; r_max must be < 1.
double q_variation(const HoloFunction& f, double q, double t, double r_max,
                   const QuadConfig& cfg);

/// Dispatch on spec.kind; level_max feeds the BMOA arc scan only.
NormResult space_norm(const HoloFunction& f, const SpaceSpec& spec,
                      const QuadConfig& cfg, int level_max = 10,
                      bool seminorm_only = false);

}  // namespace rcm

#endif

#ifndef POWERSUMS_PIPELINE_HPP
#define POWERSUMS_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powersums/bridge.hpp"
#include "powersums/equation.hpp"
#include "powersums/errors.hpp"
#include "powersums/quartic.hpp"
#include "powersums/weierstrass.hpp"

namespace powersums {

/// A user-supplied starting point. Quartic points live on the derived
/// (untranslated) quartic; cubic points on the bridge cubic; completed
/// points on its completed-square form M^2 = x^3 + F x^2 + G x + H.
struct SeedPoint {
  enum class Frame { Quartic, Cubic, Completed };
  Frame frame = Frame::Cubic;
  Rational x;
  Rational y;

  friend bool operator==(const SeedPoint&, const SeedPoint&) = default;
};

struct PipelineConfig {
  Problem problem;
  unsigned long search_height = 100;
  unsigned long family_size = 10;
  std::vector<SeedPoint> seed_points;
  /// Cap on seeds taken from search results (explicit seeds are never capped).
  std::size_t max_seeds = 4;
  /// Also emit P_i + P_j for every pair of certified seeds.
  bool pairwise_sums = false;
  /// Forces the shift t -> t - t0 instead of choosing one from search.
  std::optional<Rational> translation;
  FactorOptions factor_options;

  /// Throws Error(InvalidArgument).
  void validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

struct CertifiedSeed {
  CurvePoint point;  // on the bridge cubic
  std::string origin;
};

struct EmittedSolution {
  enum class Source { Family, PairSum, SearchPoint };
  Source source = Source::Family;
  std::size_t seed = 0;
  std::size_t other_seed = 0;  // PairSum only
  long multiple = 0;
  QuarticPoint point;  // (t, v) on the derived quartic
  ClearedSolution cleared;
};

struct StageFailure {
  ErrorKind kind;
  std::string message;
};

struct PipelineReport {
  explicit PipelineReport(QuarticCurve derived) : quartic(std::move(derived)) {}

  QuarticCurve quartic;
  std::optional<Rational> shift;
  std::optional<QuarticCurve> translated;
  std::optional<QuarticCubicBridge> bridge;
  std::optional<WeierstrassCurve> completed;
  bool searched = false;
  std::vector<QuarticPoint> search_points;
  std::vector<CertifiedSeed> seeds;
  std::vector<EmittedSolution> solutions;
  std::vector<std::string> diagnostics;
  std::optional<StageFailure> failure;
};

/// One member of a seed's family: n * seed pulled back to the quartic,
/// un-translated, substituted and denominator-cleared.
struct FamilyMember {
  long multiple = 0;
  QuarticPoint point;
  ClearedSolution cleared;
};

/// Throws UnmappablePoint when n * seed has y = 0 and DegenerateParameter
/// when it lands on t = 0.
FamilyMember emit_solution_for_multiple(const QuarticCubicBridge& bridge, const Rational& shift,
                                        const Problem& problem, const CurvePoint& seed, long n,
                                        const FactorOptions& options = {});

/// Chooses the translation point among candidates: smallest height of t,
/// then t > 0 before t < 0, then smaller numerator. Points with t = 0 or
/// v = 0 are skipped.
std::optional<QuarticPoint> choose_translation_point(const std::vector<QuarticPoint>& candidates);

/// Derivation, translation and bridge construction only (no seeds, no
/// solutions). Stage failures land in `failure`.
PipelineReport prepare_curves(const PipelineConfig& config);

/// Derive, search, translate, bridge, certify seeds, emit families.
/// Stage failures (no points, singular cubic) are reported, not thrown; only
/// an invalid config throws.
PipelineReport run(const PipelineConfig& config);

}  // namespace powersums

#endif  // POWERSUMS_PIPELINE_HPP

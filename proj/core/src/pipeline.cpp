#include "powersums/pipeline.hpp"

#include <algorithm>
#include <tuple>

namespace powersums {
namespace {

std::string point_text(const QuarticPoint& p) {
  return "(" + p.t.to_string() + ", " + p.v.to_string() + ")";
}

std::string frame_name(SeedPoint::Frame frame) {
  switch (frame) {
    case SeedPoint::Frame::Quartic: return "quartic";
    case SeedPoint::Frame::Cubic: return "cubic";
    case SeedPoint::Frame::Completed: return "completed";
  }
  return "?";
}

// Pipeline state shared by the stages below.
struct Stages {
  const PipelineConfig& config;
  PipelineReport& report;

  Rational shift() const { return report.shift.value_or(Rational(0)); }

  void note(const std::string& message) { report.diagnostics.push_back(message); }

  void fail(ErrorKind kind, const std::string& message) {
    report.failure = StageFailure{kind, message};
    note(std::string(to_string(kind)) + ": " + message);
  }

  void search() {
    if (report.searched) return;
    report.search_points = search_points(report.quartic, config.search_height);
    report.searched = true;
    for (const auto& p : report.search_points) {
      if (p.on_branch()) note("search point " + point_text(p) + " has v = 0 (branch point)");
    }
  }

  // Returns false when no usable shift exists.
  bool choose_shift() {
    if (config.translation) {
      report.shift = *config.translation;
      return true;
    }
    const auto q = constant_square_root(report.quartic);
    if (q && !q->is_zero()) return true;

    std::vector<QuarticPoint> candidates;
    for (const auto& seed : config.seed_points) {
      if (seed.frame == SeedPoint::Frame::Quartic) candidates.push_back({seed.x, seed.y});
    }
    auto chosen = choose_translation_point(candidates);
    if (!chosen) {
      search();
      chosen = choose_translation_point(report.search_points);
    }
    if (!chosen) {
      fail(ErrorKind::NoPointsFound,
           "constant term is not a nonzero square and there are no rational points up to height " +
               std::to_string(config.search_height));
      return false;
    }
    report.shift = chosen->t;
    return true;
  }

  bool build_bridge() {
    const QuarticCurve& target = report.shift ? *report.translated : report.quartic;
    try {
      report.bridge = QuarticCubicBridge::build(target);
    } catch (const Error& e) {
      fail(e.kind(), e.what());
      return false;
    }
    report.completed = complete_square(report.bridge->cubic()).target;
    return true;
  }

  // Quartic points go through the bridge; (0, q) would land on infinity, so
  // the sign of v is flipped there.
  std::optional<CurvePoint> quartic_to_cubic(const QuarticPoint& p) {
    const QuarticPoint moved{p.t - shift(), p.v};
    CurvePoint image = report.bridge->to_cubic(moved);
    if (image.is_infinity()) image = report.bridge->to_cubic({moved.t, -moved.v});
    if (image.is_infinity()) return std::nullopt;
    return image;
  }

  std::optional<CurvePoint> seed_on_cubic(const SeedPoint& seed) {
    try {
      switch (seed.frame) {
        case SeedPoint::Frame::Quartic:
          return quartic_to_cubic({seed.x, seed.y});
        case SeedPoint::Frame::Cubic: {
          CurvePoint p(seed.x, seed.y);
          if (!report.bridge->cubic().contains(p)) {
            throw Error(ErrorKind::PointNotOnCurve, p.to_string() + " is not on the bridge cubic");
          }
          return p;
        }
        case SeedPoint::Frame::Completed: {
          const CompletedSquare cs = complete_square(report.bridge->cubic());
          CurvePoint p(seed.x, seed.y);
          if (!cs.target.contains(p)) {
            throw Error(ErrorKind::PointNotOnCurve,
                        p.to_string() + " is not on the completed-square cubic");
          }
          return cs.to_source(p);
        }
      }
    } catch (const Error& e) {
      note("seed " + frame_name(seed.frame) + " (" + seed.x.to_string() + ", " +
           seed.y.to_string() + ") rejected: " + e.what());
    }
    return std::nullopt;
  }

  bool already_seeded(const CurvePoint& p) const {
    const auto& cubic = report.bridge->cubic();
    return std::any_of(report.seeds.begin(), report.seeds.end(), [&](const CertifiedSeed& s) {
      return s.point == p || s.point == cubic.negate(p);
    });
  }

  void certify_and_add(const CurvePoint& p, const std::string& origin) {
    if (already_seeded(p)) return;
    const OrderCertificate cert = certify_order(report.bridge->cubic(), p);
    if (!cert.infinite_order) {
      note("seed " + origin + " maps to " + p.to_string() + " of finite order " +
           std::to_string(cert.torsion_order.value_or(0)) + "; discarded");
      return;
    }
    report.seeds.push_back({p, origin});
  }

  void collect_seeds() {
    if (!config.seed_points.empty()) {
      for (const auto& seed : config.seed_points) {
        if (auto p = seed_on_cubic(seed)) {
          certify_and_add(*p, frame_name(seed.frame) + " (" + seed.x.to_string() + ", " +
                                  seed.y.to_string() + ")");
        }
      }
      return;
    }

    search();
    std::vector<QuarticPoint> ordered = report.search_points;
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
      return height(l.t) < height(r.t);
    });
    for (const auto& p : ordered) {
      if (report.seeds.size() >= config.max_seeds) break;
      try {
        if (auto image = quartic_to_cubic(p)) certify_and_add(*image, "search " + point_text(p));
      } catch (const Error& e) {
        note("search point " + point_text(p) + " skipped: " + e.what());
      }
    }
  }

  void emit(EmittedSolution::Source source, std::size_t seed, std::size_t other, const CurvePoint& p,
            long n) {
    try {
      FamilyMember member = emit_solution_for_multiple(*report.bridge, shift(), config.problem, p, n,
                                                       config.factor_options);
      EmittedSolution out;
      out.source = source;
      out.seed = seed;
      out.other_seed = other;
      out.multiple = n;
      out.point = std::move(member.point);
      out.cleared = std::move(member.cleared);
      if (!out.cleared.mu_minimal) {
        note("seed " + std::to_string(seed) + " n=" + std::to_string(n) +
             ": scaling factor is not proven minimal");
      }
      report.solutions.push_back(std::move(out));
    } catch (const Error& e) {
      note("seed " + std::to_string(seed) + " n=" + std::to_string(n) + " skipped: " + e.what());
    }
  }

  void emit_families() {
    for (std::size_t i = 0; i < report.seeds.size(); ++i) {
      for (unsigned long n = 1; n <= config.family_size; ++n) {
        emit(EmittedSolution::Source::Family, i, i, report.seeds[i].point, static_cast<long>(n));
      }
    }
    if (!config.pairwise_sums) return;
    const auto& cubic = report.bridge->cubic();
    for (std::size_t i = 0; i < report.seeds.size(); ++i) {
      for (std::size_t j = i + 1; j < report.seeds.size(); ++j) {
        const CurvePoint sum = cubic.add(report.seeds[i].point, report.seeds[j].point);
        if (sum.is_infinity()) continue;
        emit(EmittedSolution::Source::PairSum, i, j, sum, 1);
      }
    }
  }

  // Without a working group law the search points themselves still give
  // solutions.
  void emit_search_points() {
    for (const auto& p : report.search_points) {
      if (p.t.is_zero()) {
        note("search point " + point_text(p) + " has t = 0 (trivial solution), not emitted");
        continue;
      }
      try {
        SolutionTuple s = build_solution(config.problem, p.t, p.v);
        EmittedSolution out;
        out.source = EmittedSolution::Source::SearchPoint;
        out.point = p;
        out.cleared = clear_denominators(s, config.factor_options);
        report.solutions.push_back(std::move(out));
      } catch (const Error& e) {
        note("search point " + point_text(p) + " skipped: " + e.what());
      }
    }
  }
};

}  // namespace

void PipelineConfig::validate() const {
  powersums::validate(problem);
  if (search_height < 1) throw Error(ErrorKind::InvalidArgument, "search_height must be >= 1");
  if (family_size < 1) throw Error(ErrorKind::InvalidArgument, "family_size must be >= 1");
}

std::optional<QuarticPoint> choose_translation_point(const std::vector<QuarticPoint>& candidates) {
  std::optional<QuarticPoint> best;
  auto key = [](const QuarticPoint& p) {
    return std::make_tuple(height(p.t), p.t.sign() < 0, p.t.denominator(), abs(p.t.numerator()));
  };
  for (const auto& p : candidates) {
    if (p.t.is_zero() || p.v.is_zero()) continue;
    if (!best || key(p) < key(*best)) best = p;
  }
  return best;
}

FamilyMember emit_solution_for_multiple(const QuarticCubicBridge& bridge, const Rational& shift,
                                        const Problem& problem, const CurvePoint& seed, long n,
                                        const FactorOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "multiple must be >= 1");
  const CurvePoint multiple = bridge.cubic().multiply(n, seed);
  const QuarticPoint local = bridge.from_cubic(multiple);
  const QuarticPoint point{local.t + shift, local.v};
  const SolutionTuple rational = build_solution(problem, point.t, point.v);
  ClearedSolution cleared = clear_denominators(rational, options);
  if (!cleared.tuple.verified || !cleared.tuple.is_integral()) {
    throw Error(ErrorKind::InvalidArgument, "cleared solution failed verification");
  }
  return {n, point, std::move(cleared)};
}

PipelineReport prepare_curves(const PipelineConfig& config) {
  config.validate();
  PipelineReport report(derive_quartic(config.problem));
  Stages stages{config, report};
  if (!stages.choose_shift()) return report;
  if (report.shift) report.translated = translate(report.quartic, *report.shift);
  stages.build_bridge();
  return report;
}

PipelineReport run(const PipelineConfig& config) {
  PipelineReport report = prepare_curves(config);
  Stages stages{config, report};
  if (report.bridge) {
    stages.collect_seeds();
    if (report.seeds.empty()) stages.note("no seed point of infinite order");
    stages.emit_families();
  }

  if (report.seeds.empty()) {
    stages.search();
    stages.emit_search_points();
    if (report.solutions.empty() && !report.failure) {
      stages.fail(ErrorKind::NoPointsFound,
                  "no usable rational points up to height " + std::to_string(config.search_height));
    }
  }
  return report;
}

}  // namespace powersums

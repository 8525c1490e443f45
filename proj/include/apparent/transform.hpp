#pragma once

#include <optional>
#include <vector>

#include "apparent/ode.hpp"

namespace apparent {

struct NewApparentPoint {
  BigRat location;
  int multiplicity;  // as a root of the antecedent's P_n
  /// Exponent gap predicted for second-order input (multiplicity + 1);
  /// empty for higher orders, where the gap has to be measured.
  std::optional<int> expected_gap;
};

struct DeformResult {
  LinearODE ode;
  std::vector<NewApparentPoint> new_apparent;
  RatPoly clearing_factor;  // radical of the input's P_n
  /// Monic factor of P_n with irrational roots; those roots are not listed.
  RatPoly unresolved_factor;
};

/// Equation satisfied by u = w': differentiate, eliminate w through the last
/// coefficient, clear denominators by radical(P_n). AlreadyIntegrated if P_n = 0.
DeformResult deform(const LinearODE& ode);

/// k successive deformations; stage i + 1 consumes stage i's output.
std::vector<DeformResult> deform_iter(const LinearODE& ode, int k);

struct UndeformTarget {
  BigRat location;
  /// Root multiplicity in the antecedent's P_n; inferred from the exponent
  /// gap for second-order equations when absent.
  std::optional<int> multiplicity;
};

struct UndeformOptions {
  /// Extra degree allowance tried after the tight bounds fail.
  int max_slack = 1;
};

struct UndeformResult {
  LinearODE ode;
  std::vector<BigRat> removed_points;
  int free_parameters = 0;
  /// Every antecedent in the solution space (the first one is `ode`).
  std::vector<LinearODE> basis;
  int slack_used = 0;
};

/// Inverse of deform: find an equation without the targeted apparent points
/// whose deformation is the input. Without targets, every finite apparent
/// point is removed. NothingToRemove, NotRemovable, MultiplicityRequired.
UndeformResult undeform(const LinearODE& ode, std::optional<std::vector<UndeformTarget>> targets = std::nullopt,
                        const UndeformOptions& options = {});

}  // namespace apparent

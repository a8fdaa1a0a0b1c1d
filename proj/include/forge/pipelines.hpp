#pragma once

#include <cstdint>

#include "forge/config.hpp"
#include "forge/graph.hpp"
#include "forge/rational.hpp"
#include "forge/report.hpp"

namespace forge {

/// Gadget route for the connectivity bound on one pattern H.
///
/// Computes κ(H). When κ(H) < εv(H) the run takes the trivial branch: K_{v(H)-1}
/// is H-minor-free and needs v(H)-1 colours. Otherwise it builds the two-clique
/// gadget, re-checks its shape, its H-minor-freeness and |A| < κ(H), and
/// certifies the pasting bound with the realized slack. Guarded to v(H) <= 12.
/// Needs cfg.seed.
RunReport pipeline_conn(const Graph& h, const Rational& eps, const ExperimentConfig& cfg);

/// Random-pattern route for n-vertex H = G(n; m).
///
/// δ is cfg.delta or the largest multiple of 1/100 with 7δ < ε; p defaults to
/// δ/2 and D to the computed constant. m is clamped with a warning. The run
/// checks property Q, tries the gadget, sweeps H[U] minors, checks the
/// contrapositive transfer on a two-copy pasting and the pasting bound with
/// d = ⌊δn⌋. Requires 2 <= n <= 10. Needs cfg.seed.
RunReport pipeline_random(std::size_t n, const Rational& eps, const ExperimentConfig& cfg);

/// F plus k isolated vertices: samples random graphs, keeps the H-minor-free
/// ones and checks (v(H)-2)-degeneracy and colouring from (v(H)-1)-lists.
/// k₀ is computed as max{d+1, 9v(F)³} with d = 2^(v(F)-2) and flagged.
/// Requires v(F) + k <= 9. Needs cfg.seed.
RunReport pipeline_isolated(const Graph& f, std::size_t k, const ExperimentConfig& cfg);

/// Best vertex connectivity over all induced subgraphs against ⌈d̄/4⌉.
/// Guarded to v(H) <= 9.
RunReport mader_step_check(const Graph& h, const ExperimentConfig& cfg = {});

/// Dispatches on cfg.pipeline, resolving cfg.graphs.
RunReport run_pipeline(const ExperimentConfig& cfg);

}  // namespace forge

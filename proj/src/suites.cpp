#include "gauge2/suites.hpp"

#include "gauge2/random_forms.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace gauge2 {

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteContext {
  const Scenario& sc;
  Report& report;

  SplitMix64 rng_for(const std::string& check) const
  {
    return SplitMix64(sc.seed ^ fnv1a(check));
  }

  CheckEntry& start(const std::string& name)
  {
    CheckEntry entry;
    entry.name = name;
    entry.param("n", std::to_string(sc.n));
    entry.param("module", sc.module_name);
    entry.param("seed", std::to_string(sc.seed));
    report.checks.push_back(std::move(entry));
    return report.checks.back();
  }

  /// Runs `body`, records timing, converts exceptions into failures.
  void check(const std::string& name, const std::function<void(CheckEntry&)>& body)
  {
    CheckEntry& entry = start(name);
    const auto t0 = Clock::now();
    try {
      body(entry);
    } catch (const SuiteError&) {
      throw;
    } catch (const std::exception& e) {
      entry.status = CheckStatus::Fail;
      entry.witness = e.what();
    }
    entry.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }

  void skip(const std::string& name, const std::string& why)
  {
    CheckEntry& entry = start(name);
    entry.status = CheckStatus::Skip;
    entry.witness = why;
  }
};

void record_form(CheckEntry& entry, const ScalarForm& residual)
{
  entry.residual_terms += static_cast<long>(residual.term_count());
  if (!residual.is_zero()) {
    entry.status = CheckStatus::Fail;
    if (entry.witness.empty()) entry.witness = residual.first_witness();
  }
}

void record_form(CheckEntry& entry, const AlgebraForm& residual)
{
  for (int i = 0; i < residual.algebra_dim(); ++i)
    entry.residual_terms += static_cast<long>(residual.component(i).term_count());
  if (!residual.is_zero()) {
    entry.status = CheckStatus::Fail;
    if (entry.witness.empty()) entry.witness = residual.first_witness();
  }
}

void record_flag(CheckEntry& entry, bool ok, const std::string& why)
{
  if (!ok) {
    entry.status = CheckStatus::Fail;
    if (entry.witness.empty()) entry.witness = why;
  }
}

TwoConnection require_conn1(const Scenario& sc)
{
  if (!sc.conn1) throw SuiteError("suite requires a connection (A/B block)");
  return *sc.conn1;
}

// ---------------------------------------------------------------------------

void suite_axioms(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  const ValidationReport module_report = sc.cm->validate();
  for (const auto& axiom : module_report.checks) {
    ctx.check("axiom." + axiom.axiom, [&](CheckEntry& entry) {
      entry.residual_terms = static_cast<long>(axiom.residuals.size());
      record_flag(entry, axiom.pass, axiom.witness());
    });
  }
  const ValidationReport pairing_report = sc.pairing->validate(*sc.cm);
  for (const auto& axiom : pairing_report.checks) {
    ctx.check("axiom." + axiom.axiom, [&](CheckEntry& entry) {
      entry.residual_terms = static_cast<long>(axiom.residuals.size());
      record_flag(entry, axiom.pass, axiom.witness());
    });
  }

  if (sc.module_name == "poincare2" || sc.module_name == "adjoint_so21") {
    ctx.check("axiom.pairing_group_invariance", [&](CheckEntry& entry) {
      const std::vector<Rational> params{Rational(1, 2), Rational(1, 3), Rational(2, 3)};
      int count = 0;
      for (const auto& s : params)
        for (int plane : {1, 2}) {
          const auto [b, binv] = so21_boost(0, plane, s);
          const auto res = sc.pairing->conjugation_residual(b, b);
          entry.residual_terms += static_cast<long>(res.size());
          record_flag(entry, res.empty(), "boost invariance violated");
          ++count;
        }
      const auto [rot, rotinv] = so21_rotation(Rational(1, 2));
      const auto res = sc.pairing->conjugation_residual(rot, rot);
      entry.residual_terms += static_cast<long>(res.size());
      record_flag(entry, res.empty(), "rotation invariance violated");
      entry.param("elements", std::to_string(count + 1));
    });
  } else if (sc.module_name == "abelian_tt") {
    ctx.check("axiom.pairing_group_invariance", [&](CheckEntry& entry) {
      const RatMatrix one = RatMatrix::identity_like(1, Rational(1), Rational(0));
      const auto res = sc.pairing->conjugation_residual(one, one);
      record_flag(entry, res.empty(), "invariance violated");
    });
  } else {
    ctx.skip("axiom.pairing_group_invariance", "no built-in group elements for custom module");
  }
}

void suite_bianchi(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  if (sc.conn1) {
    ctx.check("bianchi.scenario", [&](CheckEntry& entry) {
      const auto [rg, rh] = bianchi_residuals(*sc.conn1);
      record_form(entry, rg);
      record_form(entry, rh);
    });
  }
  ctx.check("bianchi.random", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("bianchi.random");
    for (int k = 0; k < sc.trials; ++k) {
      const TwoConnection conn = random_connection(sc.cm, sc.chart, rng);
      const auto [rg, rh] = bianchi_residuals(conn);
      record_form(entry, rg);
      record_form(entry, rh);
    }
  });
}

void suite_closedness(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  if (sc.conn1) {
    ctx.check("closedness.scenario", [&](CheckEntry& entry) {
      record_form(entry, characteristic_form(*sc.conn1, *sc.pairing).d());
    });
  }
  ctx.check("closedness.random", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("closedness.random");
    for (int k = 0; k < sc.trials; ++k) {
      const TwoConnection conn = random_connection(sc.cm, sc.chart, rng);
      record_form(entry, characteristic_form(conn, *sc.pairing).d());
    }
  });
}

void suite_chsas(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  if (sc.conn1) {
    ctx.check("chsas.potential.scenario", [&](CheckEntry& entry) {
      record_form(entry, chsas_form(*sc.conn1, *sc.pairing).d() -
                             characteristic_form(*sc.conn1, *sc.pairing));
    });
  }
  ctx.check("chsas.potential.random", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("chsas.potential.random");
    for (int k = 0; k < sc.trials; ++k) {
      const TwoConnection conn = random_connection(sc.cm, sc.chart, rng);
      record_form(entry,
                  chsas_form(conn, *sc.pairing).d() - characteristic_form(conn, *sc.pairing));
    }
  });
  ctx.check("chsas.zero_connection_identity", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("chsas.zero_connection_identity");
    const int n = sc.pairing->arity();
    for (int k = 0; k < sc.trials; ++k) {
      AlgebraForm B = random_algebra_form(sc.cm, Side::H, sc.chart, 2, rng);
      TwoConnection conn(AlgebraForm(sc.cm, Side::G, sc.chart, 1), B);
      const ScalarForm lhs = chsas_form(conn, *sc.pairing);
      const AlgebraForm aB = alpha_lift(B);
      const std::vector<AlgebraForm> slots(static_cast<std::size_t>(n), aB);
      const Rational factor = Rational((n % 2) ? -1 : 1, n + 1);
      const ScalarForm rhs = pairing_eval(*sc.pairing, slots, B).scaled(factor);
      record_form(entry, lhs - rhs);
    }
  });
}

void suite_chern_weil(SuiteContext& ctx, bool strict)
{
  const Scenario& sc = ctx.sc;
  if (sc.conn0 && sc.conn1) {
    ctx.check("chern_weil.scenario", [&](CheckEntry& entry) {
      const Interpolation interp(*sc.conn0, *sc.conn1);
      record_form(entry, chern_weil_residual(interp, *sc.pairing));
    });
  } else if (strict) {
    throw SuiteError("chern-weil suite requires both conn0 (A0/B0) and conn1 (A/B) blocks");
  } else {
    ctx.skip("chern_weil.scenario", "no conn0 block");
  }
  ctx.check("chern_weil.random", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("chern_weil.random");
    for (int k = 0; k < sc.trials; ++k) {
      const TwoConnection c0 = random_connection(sc.cm, sc.chart, rng);
      const TwoConnection c1 = random_connection(sc.cm, sc.chart, rng);
      const Interpolation interp(c0, c1);
      record_form(entry, chern_weil_residual(interp, *sc.pairing));
    }
  });
  ctx.check("chern_weil.reduction", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("chern_weil.reduction");
    for (int k = 0; k < sc.trials; ++k) {
      const TwoConnection conn = random_connection(sc.cm, sc.chart, rng);
      const Interpolation interp(TwoConnection::zero(sc.cm, sc.chart), conn);
      record_form(entry,
                  transgression_form(interp, *sc.pairing) - chsas_form(conn, *sc.pairing));
    }
  });
}

void suite_proof_steps(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  const int n = sc.pairing->arity();

  ctx.check("proof_steps.covariant_leibniz", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("proof_steps.covariant_leibniz");
    for (int k = 0; k < sc.trials; ++k) {
      const AlgebraForm A = random_algebra_form(sc.cm, Side::G, sc.chart, 1, rng);
      std::vector<AlgebraForm> slots;
      for (int i = 0; i < n; ++i) {
        const int deg = 1 + static_cast<int>(rng.below(2));
        slots.push_back(random_algebra_form(sc.cm, Side::G, sc.chart, deg, rng));
      }
      const int hdeg = 1 + static_cast<int>(rng.below(2));
      const AlgebraForm hv = random_algebra_form(sc.cm, Side::H, sc.chart, hdeg, rng);
      const ScalarForm lhs = pairing_covariant_expansion(A, slots, hv, *sc.pairing);
      const ScalarForm rhs = pairing_eval(*sc.pairing, slots, hv).d();
      record_form(entry, lhs - rhs);
    }
  });

  auto interp_of_trial = [&](SplitMix64& rng) {
    const TwoConnection c0 = random_connection(sc.cm, sc.chart, rng);
    const TwoConnection c1 = random_connection(sc.cm, sc.chart, rng);
    return Interpolation(c0, c1);
  };

  if (n >= 2) {
    ctx.check("proof_steps.alpha_slot_vanishes", [&](CheckEntry& entry) {
      entry.param("trials", std::to_string(sc.trials));
      SplitMix64 rng = ctx.rng_for("proof_steps.alpha_slot_vanishes");
      for (int k = 0; k < sc.trials; ++k)
        record_form(entry, interp_alpha_slot_residual(interp_of_trial(rng), *sc.pairing));
    });
  } else {
    ctx.skip("proof_steps.alpha_slot_vanishes", "needs arity n >= 2");
  }

  ctx.check("proof_steps.alpha_swap", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("proof_steps.alpha_swap");
    for (int k = 0; k < sc.trials; ++k)
      record_form(entry, interp_alpha_swap_residual(interp_of_trial(rng), *sc.pairing));
  });

  // The two action cross-terms of the transgression proof cancel jointly:
  // <F_t^n, theta |> B_t> + n <theta F_t^{n-1}, F_t |> B_t> = 0.
  ctx.check("proof_steps.action_cross_cancellation", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("proof_steps.action_cross_cancellation");
    for (int k = 0; k < sc.trials; ++k) {
      const Interpolation interp = interp_of_trial(rng);
      const ScalarForm combined = interp_action_term_h(interp, *sc.pairing) +
                                  interp_action_term_g(interp, *sc.pairing).scaled(Rational(n));
      record_form(entry, combined);
    }
  });

  ctx.check("proof_steps.t_derivative_laws", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("proof_steps.t_derivative_laws");
    for (int k = 0; k < sc.trials; ++k) {
      const Interpolation interp = interp_of_trial(rng);
      const AlgebraForm dF = interp.F_t.derivative_t() -
                             (interp.covariant(interp.theta) - alpha_lift(interp.Phi));
      const AlgebraForm dG = interp.G_t.derivative_t() -
                             (interp.covariant(interp.Phi) +
                              wedge_action(interp.theta, interp.B_t));
      record_form(entry, dF);
      record_form(entry, dG);
    }
  });
}

void suite_gauge_invariance(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  if (sc.gauge) {
    ctx.check("gauge.data_consistency", [&](CheckEntry& entry) {
      const ValidationReport vr = sc.gauge->validate();
      for (const auto& axiom : vr.checks) {
        entry.residual_terms += static_cast<long>(axiom.residuals.size());
        record_flag(entry, axiom.pass, axiom.axiom);
      }
    });
    ctx.check("gauge.curvature_transform", [&](CheckEntry& entry) {
      const TwoConnection conn = require_conn1(sc);
      const auto [rg, rh] = curvature_transform_residual(conn, *sc.gauge);
      record_form(entry, rg);
      record_form(entry, rh);
    });
    ctx.check("gauge.characteristic_invariance", [&](CheckEntry& entry) {
      const TwoConnection conn = require_conn1(sc);
      const TwoConnection after = gauge_transform(conn, *sc.gauge);
      record_form(entry, characteristic_form(after, *sc.pairing) -
                             characteristic_form(conn, *sc.pairing));
    });
    ctx.check("gauge.composition", [&](CheckEntry& entry) {
      const TwoConnection conn = require_conn1(sc);
      AlgebraForm zero_phi(sc.cm, Side::H, sc.chart, 1);
      const GaugeData bare(sc.cm, sc.chart, sc.gauge->group(), sc.gauge->group_inv(),
                           sc.gauge->action(), zero_phi);
      const GaugeData twice = GaugeData::compose(bare, bare);
      const TwoConnection once = gauge_transform(gauge_transform(conn, bare), bare);
      const TwoConnection direct = gauge_transform(conn, twice);
      record_form(entry, once.A - direct.A);
      record_form(entry, once.B - direct.B);
    });
    if (sc.conn0 && sc.conn1) {
      ctx.check("gauge.action_invariance", [&](CheckEntry& entry) {
        const Interpolation interp(*sc.conn0, *sc.conn1);
        const InterpolationTransformResiduals laws =
            interpolation_transform_residuals(interp, *sc.gauge);
        record_form(entry, laws.theta);
        record_form(entry, laws.Phi);
        record_form(entry, laws.F_t);
        record_form(entry, laws.G_t);
        const GaugeInvarianceResult res = action_gauge_invariance(interp, *sc.gauge, *sc.pairing);
        record_form(entry, res.residual);
        entry.param("residual_closed", res.residual_closed ? "yes" : "no");
      });
    } else {
      ctx.skip("gauge.action_invariance", "needs conn0 and conn1");
    }
  } else {
    ctx.skip("gauge.data_consistency", "no gauge block");
    ctx.skip("gauge.curvature_transform", "no gauge block");
    ctx.skip("gauge.characteristic_invariance", "no gauge block");
    ctx.skip("gauge.composition", "no gauge block");
    ctx.skip("gauge.action_invariance", "no gauge block");
  }

  if (!sc.cm->has_representation()) {
    ctx.skip("gauge.random_phi", "module has no matrix representation");
    return;
  }
  ctx.check("gauge.random_phi", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("gauge.random_phi");
    for (int k = 0; k < sc.trials; ++k) {
      const TwoConnection conn =
          sc.conn1 ? *sc.conn1 : random_connection(sc.cm, sc.chart, rng);
      AlgebraForm phi = random_algebra_form(sc.cm, Side::H, sc.chart, 1, rng);
      const GaugeData gd = GaugeData::identity(sc.cm, sc.chart, std::move(phi));
      const auto [rg, rh] = curvature_transform_residual(conn, gd);
      record_form(entry, rg);
      record_form(entry, rh);
      const TwoConnection after = gauge_transform(conn, gd);
      record_form(entry, characteristic_form(after, *sc.pairing) -
                             characteristic_form(conn, *sc.pairing));
    }
  });
}

void suite_eom(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  ctx.check("eom.flat_vanishes", [&](CheckEntry& entry) {
    entry.param("trials", std::to_string(sc.trials));
    SplitMix64 rng = ctx.rng_for("eom.flat_vanishes");
    std::vector<TwoConnection> flats;
    flats.push_back(TwoConnection::zero(sc.cm, sc.chart));
    if (sc.cm->has_representation()) {
      for (int k = 0; k < std::min(sc.trials, 5); ++k) {
        AlgebraForm phi = random_algebra_form(sc.cm, Side::H, sc.chart, 1, rng);
        const GaugeData gd = GaugeData::identity(sc.cm, sc.chart, std::move(phi));
        flats.push_back(gauge_transform(flats.front(), gd));
      }
    }
    for (const auto& conn : flats) {
      const CurvaturePair cur = curvatures(conn);
      record_flag(entry, cur.is_flat(), "transformed connection is not flat");
      const auto [gres, hres] = field_equation_residuals(conn, *sc.pairing);
      for (const auto& f : gres) record_form(entry, f);
      for (const auto& f : hres) record_form(entry, f);
    }
  });

  if (sc.conn1) {
    ctx.check("eom.scenario_status", [&](CheckEntry& entry) {
      const auto [gres, hres] = field_equation_residuals(*sc.conn1, *sc.pairing);
      for (int a = 0; a < static_cast<int>(gres.size()); ++a) {
        std::ostringstream line;
        line << "EOM g[" << sc.cm->g().label(a) << "] : "
             << (gres[a].is_zero() ? "ZERO"
                                   : "NONZERO(" + std::to_string(gres[a].term_count()) + ")");
        entry.details.push_back(line.str());
        entry.param("eom_g_" + sc.cm->g().label(a),
                    gres[a].is_zero() ? "ZERO" : "NONZERO:" + std::to_string(gres[a].term_count()));
      }
      for (int b = 0; b < static_cast<int>(hres.size()); ++b) {
        std::ostringstream line;
        line << "EOM h[" << sc.cm->h().label(b) << "] : "
             << (hres[b].is_zero() ? "ZERO"
                                   : "NONZERO(" + std::to_string(hres[b].term_count()) + ")");
        entry.details.push_back(line.str());
        entry.param("eom_h_" + sc.cm->h().label(b),
                    hres[b].is_zero() ? "ZERO" : "NONZERO:" + std::to_string(hres[b].term_count()));
      }
    });
  }
}

void suite_boundary(SuiteContext& ctx)
{
  const Scenario& sc = ctx.sc;
  auto base_interp = [&](SplitMix64& rng) {
    const TwoConnection c0 =
        sc.conn0 ? *sc.conn0 : random_connection(sc.cm, sc.chart, rng);
    const TwoConnection c1 =
        sc.conn1 ? *sc.conn1 : random_connection(sc.cm, sc.chart, rng);
    return Interpolation(c0, c1);
  };

  ctx.check("boundary.zero_variation", [&](CheckEntry& entry) {
    SplitMix64 rng = ctx.rng_for("boundary.zero_variation");
    const Interpolation interp = base_interp(rng);
    const VariationData var = VariationData::zero(sc.cm, sc.chart);
    record_form(entry, boundary_term(interp, var, *sc.pairing));
  });

  ctx.check("boundary.zero_interpolation", [&](CheckEntry& entry) {
    SplitMix64 rng = ctx.rng_for("boundary.zero_interpolation");
    const TwoConnection conn =
        sc.conn1 ? *sc.conn1 : random_connection(sc.cm, sc.chart, rng);
    const Interpolation interp(conn, conn);
    VariationData var(random_algebra_form(sc.cm, Side::G, sc.chart, 1, rng),
                      random_algebra_form(sc.cm, Side::H, sc.chart, 2, rng),
                      random_algebra_form(sc.cm, Side::G, sc.chart, 1, rng),
                      random_algebra_form(sc.cm, Side::H, sc.chart, 2, rng));
    record_form(entry, boundary_term(interp, var, *sc.pairing));
  });

  ctx.check("boundary.faces", [&](CheckEntry& entry) {
    SplitMix64 rng = ctx.rng_for("boundary.faces");
    const Interpolation interp = base_interp(rng);
    const VariationData var =
        sc.variation ? *sc.variation
                     : VariationData(random_algebra_form(sc.cm, Side::G, sc.chart, 1, rng),
                                     random_algebra_form(sc.cm, Side::H, sc.chart, 2, rng),
                                     random_algebra_form(sc.cm, Side::G, sc.chart, 1, rng),
                                     random_algebra_form(sc.cm, Side::H, sc.chart, 2, rng));
    const auto faces = boundary_faces(interp, var, *sc.pairing, sc.box_or_unit());
    for (const auto& face : faces) {
      std::ostringstream line;
      line << "BOUNDARY face x" << (face.coordinate + 1) << "=" << face.value.str() << " : "
           << (face.form.is_zero() ? "ZERO" : "NONZERO");
      entry.details.push_back(line.str());
      entry.param("face_x" + std::to_string(face.coordinate + 1) + "_" + face.value.str(),
                  face.form.is_zero() ? "ZERO" : "NONZERO");
    }
  });
}

} // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{
      "axioms",       "bianchi",  "closedness", "chsas", "chern-weil",
      "proof-steps",  "gauge-invariance", "eom", "boundary", "all"};
  return names;
}

Report run_suite(const Scenario& scenario, const std::string& suite)
{
  Report report;
  SuiteContext ctx{scenario, report};

  const bool all = suite == "all";
  bool known = all;
  auto dispatch = [&](const char* name, auto&& body) {
    if (all || suite == name) {
      body();
      known = true;
    }
  };
  dispatch("axioms", [&] { suite_axioms(ctx); });
  dispatch("bianchi", [&] { suite_bianchi(ctx); });
  dispatch("closedness", [&] { suite_closedness(ctx); });
  dispatch("chsas", [&] { suite_chsas(ctx); });
  dispatch("chern-weil", [&] { suite_chern_weil(ctx, !all); });
  dispatch("proof-steps", [&] { suite_proof_steps(ctx); });
  dispatch("gauge-invariance", [&] { suite_gauge_invariance(ctx); });
  dispatch("eom", [&] { suite_eom(ctx); });
  dispatch("boundary", [&] { suite_boundary(ctx); });
  if (!known) throw SuiteError("unknown suite '" + suite + "'");

  return report;
}

} // namespace gauge2

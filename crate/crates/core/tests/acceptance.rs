//! End-to-end acceptance suite. Prints one line per criterion and exits
//! with a nonzero status if any of them fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use acyt_core::check::{Check, Status};
use acyt_core::curvature::{
    holonomy_su3_check, su_condition_battery, theorem_level_report, CurvatureData,
};
use acyt_core::input::{GeometryInput, Prepared, FIXTURES};
use acyt_core::lie::LieAlgebra;
use acyt_core::random::RandomSource;
use acyt_core::report::{run_pipeline, Command, Outcome, Selection, Stage, VerificationReport};
use acyt_core::scalar::q;
use acyt_core::su3::Su3Structure;
use acyt_core::torsion::TorsionData;
use acyt_core::{AltForm, Rational, Tensor, Tolerance};

use common::Arr;

type Outcome_ = Result<(), String>;

const TOL: Tolerance = Tolerance::DEFAULT;
const RANDOM_INPUTS: u64 = 25;

fn ensure(cond: bool, what: impl Into<String>) -> Outcome_ {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn zero() -> Rational {
    q(0, 1)
}

fn prepared(name: &str) -> Prepared<Rational> {
    GeometryInput::fixture(name)
        .and_then(|i| i.prepare(TOL))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

fn report(name: &str, command: Command) -> VerificationReport {
    let input = GeometryInput::fixture(name).expect("bundled fixture");
    run_pipeline(&input, &Selection::command(command)).expect("pipeline runs")
}

fn forms(terms: &[(i64, &str)]) -> AltForm<Rational> {
    let terms: Vec<_> = terms.iter().map(|&(v, i)| (q(v, 1), i)).collect();
    AltForm::from_terms(6, &terms)
}

fn find<'a>(checks: &'a [Check<Rational>], id: &str) -> &'a Check<Rational> {
    checks
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("no check {id}"))
}

fn exact_zero(checks: &[Check<Rational>], id: &str) -> Outcome_ {
    let c = find(checks, id);
    ensure(
        c.residual.as_ref() == Some(&zero()),
        format!("{id} residual {:?}", c.residual),
    )
}

fn engine_arr(t: &Tensor<Rational>) -> Arr {
    common::from_engine(t)
}

fn oracle_t(terms: &[(i64, &str)]) -> Arr {
    common::form(3, terms)
}

/// Torsion data and curvature of the torsion connection, from the engine.
fn engine(
    alg: &LieAlgebra<Rational>,
    s: &Su3Structure<Rational>,
) -> (TorsionData<Rational>, CurvatureData<Rational>) {
    let tor = TorsionData::compute(alg, s, TOL).expect("G1 input");
    let cd = CurvatureData::compute(alg, s, &tor.t);
    (tor, cd)
}

const NIL_T: [(i64, &str); 4] = [(-2, "145"), (1, "136"), (1, "235"), (-1, "246")];
const PHI: [(i64, &str); 3] = [(1, "1234"), (1, "1256"), (1, "3456")];

fn criterion_1() -> Outcome_ {
    let p = prepared("nilmanifold_4_1");
    let (alg, s) = (&p.algebra, &p.structure);
    let tor = TorsionData::compute(alg, s, TOL).map_err(|e| e.to_string())?;

    ensure(tor.d_f == forms(&[(-3, "236")]), "dF")?;
    ensure(tor.n == -s.psi_minus(), "N = -Ψ⁻")?;
    ensure(tor.theta.is_zero(TOL), "θ = 0")?;
    ensure(
        tor.n.normalized_pairing(s.psi_plus()).ok() == Some(zero()),
        "(N, Ψ⁺)",
    )?;
    ensure(
        tor.n.normalized_pairing(s.psi_minus()).ok() == Some(q(-4, 1)),
        "(N, Ψ⁻)",
    )?;
    ensure(tor.t == forms(&NIL_T), "T")?;
    ensure(tor.lambda == zero() && tor.mu == q(-1, 1), "λ, μ")?;

    let dt = alg.d(&tor.t);
    ensure(
        dt == forms(&[(-2, "1256"), (-2, "3456"), (-2, "1234")]),
        "dT",
    )?;
    ensure(dt == s.star(s.f()).scale(&q(2, 1)), "dT = 2*F")?;

    // ∇_{e_i} e_j = v e_k, 1-based
    let tor1 = [
        (1, 6, 3, -1),
        (5, 2, 3, 1),
        (4, 6, 2, -1),
        (4, 5, 1, -1),
        (5, 1, 4, -1),
        (1, 4, 5, -1),
    ];
    let c = common::nilmanifold();
    ensure(
        common::brackets_from_engine(alg.structure_constants()) == c,
        "structure constants",
    )?;
    let oracle = common::with_torsion(&common::levi_civita(&c), &oracle_t(&NIL_T));
    let gamma = tor.connection.coefficients();
    for (i, j, k, v) in tor1 {
        let idx = [i - 1, j - 1, k - 1];
        ensure(*gamma.get(&idx) == q(v, 1), format!("Γ[{i}{j}{k}] engine"))?;
        ensure(oracle.get(&idx) == q(v, 1), format!("Γ[{i}{j}{k}] oracle"))?;
    }
    ensure(
        engine_arr(gamma) == oracle,
        "connection differs from oracle",
    )?;

    let r = report("nilmanifold_4_1", Command::Torsion);
    let rec = r.record("tor1_connection_match").ok_or("no tor1 record")?;
    ensure(
        rec.status == Status::Pass && rec.residual.as_deref() == Some("0/1"),
        "tor1_connection_match record",
    )
}

fn criterion_2() -> Outcome_ {
    let p = prepared("nilmanifold_4_1");
    let (alg, s) = (&p.algebra, &p.structure);
    let (tor, cd) = engine(alg, s);
    let c = common::nilmanifold();
    let t = oracle_t(&NIL_T);
    let lc = common::levi_civita(&c);
    let conn = common::with_torsion(&lc, &t);
    let r = common::curvature(&c, &conn);
    let dt = common::d(&c, &t);

    // ∇T, ∇N, ∇dF
    ensure(cd.nabla_t.is_zero(TOL), "engine ∇T")?;
    ensure(common::covariant(&conn, &t).is_zero(), "oracle ∇T")?;
    for (name, f) in [("N", &tor.n), ("dF", &tor.d_f)] {
        ensure(
            tor.connection
                .covariant_derivative(&f.to_tensor())
                .is_zero(TOL),
            format!("engine ∇{name}"),
        )?;
        let of = common::from_engine(&f.to_tensor());
        ensure(
            common::covariant(&conn, &of).is_zero(),
            format!("oracle ∇{name}"),
        )?;
    }

    ensure(engine_arr(&cd.r) == r, "curvature differs from oracle")?;
    ensure(
        cd.pair_symmetry_defect().is_zero(TOL),
        "engine pair symmetry",
    )?;
    ensure(common::pair_defect(&r).is_zero(), "oracle pair symmetry")?;
    ensure(
        !cd.bianchi_defect().is_zero(TOL),
        "engine RB defect vanishes",
    )?;
    ensure(
        !common::bianchi_defect(&r).is_zero(),
        "oracle RB defect vanishes",
    )?;

    let minus_two_g = common::Arr {
        rank: 2,
        data: (0..36)
            .map(|o| if o % 7 == 0 { q(-2, 1) } else { zero() })
            .collect(),
    };
    ensure(common::ricci(&r) == minus_two_g, "oracle Ric = -2g")?;
    ensure(engine_arr(&cd.ricci.ric) == minus_two_g, "engine Ric = -2g")?;
    let battery = su_condition_battery(alg, s, &tor, &cd, TOL);
    exact_zero(&battery, "ricci_from_dt")?;

    // δT_{ij} = -Σ_k (∇ᵍ_k T)_{kij}
    ensure(cd.ricci.delta_t.is_zero(TOL), "engine δT")?;
    let ngt = common::covariant(&lc, &t);
    let mut delta = Arr::zeros(2);
    for idx in delta.indices() {
        let v = (0..6).fold(zero(), |a, k| a - ngt.get(&[k, k, idx[0], idx[1]]));
        delta.set(&idx, v);
    }
    ensure(delta.is_zero(), "oracle δT")?;

    let phi = common::form(4, &PHI);
    ensure(
        engine_arr(&cd.sigma.to_tensor()) == phi.scaled(q(-1, 1)),
        "engine σ = -Φ",
    )?;
    ensure(common::sigma(&t) == phi.scaled(q(-1, 1)), "oracle σ = -Φ")?;
    ensure(engine_arr(s.phi_tensor()) == phi, "Φ")?;

    let ids = cd.identity_checks(TOL);
    exact_zero(&ids, "dt_expansion")?;
    // dT_{ijkl} = Σ_cyc(ijk) ∇_i T_{jkl} + 2σ_{ijkl} - ∇_l T_{ijk}
    let nt = common::covariant(&conn, &t);
    let sig = common::sigma(&t);
    for idx in dt.indices() {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        let rhs = nt.get(&[i, j, k, l])
            + nt.get(&[j, k, i, l])
            + nt.get(&[k, i, j, l])
            + sig.get(&idx) * q(2, 1)
            - nt.get(&[l, i, j, k]);
        ensure(dt.get(&idx) == rhs, "oracle dT expansion")?;
    }

    let lemma = cd.lemma_4form(TOL);
    ensure(
        lemma.conditions.iter().all(|c| c.holds),
        "lemma_4form not (T, T, T)",
    )?;
    let skew = {
        let mut out = nt.clone();
        for idx in nt.indices() {
            out.set(
                &idx,
                nt.get(&idx) + nt.get(&[idx[1], idx[0], idx[2], idx[3]]),
            );
        }
        out
    };
    ensure(skew.is_zero(), "oracle ∇T skew")?;
    ensure(dt.minus(&ngt.scaled(q(4, 1))).is_zero(), "oracle dT = 4∇ᵍT")?;

    let tfbi = cd.tfbi(TOL);
    ensure(
        tfbi.consistent() && tfbi.value() == Some(false),
        "tfbi not consistent FALSE",
    )?;
    ensure(
        !dt.minus(&nt.scaled(q(-2, 1))).is_zero(),
        "oracle dT = -2∇T",
    )
}

fn criterion_3() -> Outcome_ {
    for (name, _) in FIXTURES {
        let r = report(name, Command::Identities);
        for rec in r.records.iter().filter(|r| r.stage == Stage::Su3) {
            ensure(rec.status == Status::Pass, format!("{name}: {}", rec.id))?;
        }
        ensure(
            r.records.iter().any(|r| r.id == "star_phi"),
            "star table missing",
        )?;
    }
    let s = Su3Structure::<Rational>::standard();
    for c in s
        .compatibility(TOL)
        .iter()
        .chain(&s.iden_battery(TOL))
        .chain(&s.star_battery(TOL))
    {
        ensure(
            c.residual.as_ref().is_none_or(|r| *r == zero()) && c.passed(),
            c.id.clone(),
        )?;
    }
    let k = s.prop_4form_kernel(TOL).map_err(|e| e.to_string())?;
    ensure(k.rank == 15, format!("four-form map rank {}", k.rank))?;

    // Ψ⁺_{ijs} F_{sk} = -Ψ⁻_{ijk}, contracted by hand
    let (pp, pm, f) = (s.psi_plus_tensor(), s.psi_minus_tensor(), s.f_tensor());
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                let lhs = (0..6).fold(zero(), |a, m| a + pp.get(&[i, j, m]) * f.get(&[m, k]));
                ensure(lhs == -pm.get(&[i, j, k]), "Ψ⁺F = -Ψ⁻")?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome_ {
    let s = Su3Structure::<Rational>::standard();
    ensure(s.lambda2_ranks(TOL).ok() == Some([1, 6, 8]), "Λ² ranks")?;
    ensure(s.lambda3_ranks(TOL).ok() == Some([1, 1, 6, 12]), "Λ³ ranks")?;
    let mut src = RandomSource::seeded(2024);
    for n in 0..50 {
        let h = src.sym_minus(&s);
        let b = s.gamma(&h);
        ensure(
            s.in_lambda3_12(&b, TOL),
            format!("γ(h) outside Λ³₁₂ at sample {n}"),
        )?;
        let back = s.gamma_inv(&b, TOL).map_err(|e| e.to_string())?;
        ensure(
            back.tensor() == h.tensor(),
            format!("γ roundtrip at sample {n}"),
        )?;
    }
    Ok(())
}

const STRUCTURAL: [&str; 4] = [
    "first_bianchi",
    "ricci_relation",
    "scalar_curvature_relation",
    "ricci_skew_part",
];

/// Oracle version of the first Bianchi identity and the Ricci relation.
fn oracle_structural(c: &Arr, t: &Arr) -> Outcome_ {
    let lc = common::levi_civita(c);
    let conn = common::with_torsion(&lc, t);
    let r = common::curvature(c, &conn);
    let dt = common::d(c, t);
    let sig = common::sigma(t);
    let nt = common::covariant(&conn, t);
    let b = common::bianchi_defect(&r);
    for idx in b.indices() {
        let rhs = dt.get(&idx) - sig.get(&idx) + nt.get(&[idx[3], idx[0], idx[1], idx[2]]);
        ensure(b.get(&idx) == rhs, "oracle first Bianchi")?;
    }
    let ric = common::ricci(&r);
    let ric_g = common::ricci(&common::curvature(c, &lc));
    let ngt = common::covariant(&lc, t);
    for idx in ric.indices() {
        let (i, j) = (idx[0], idx[1]);
        let delta = (0..6).fold(zero(), |a, k| a - ngt.get(&[k, k, i, j]));
        let mut t2 = zero();
        for a in 0..6 {
            for b in 0..6 {
                t2 += t.at(&[i, a, b]) * t.at(&[j, a, b]);
            }
        }
        let rhs = ric.get(&idx) + delta * q(1, 2) + t2 * q(1, 4);
        ensure(ric_g.get(&idx) == rhs, "oracle Ricci relation")?;
    }
    Ok(())
}

fn structural_case(
    alg: &LieAlgebra<Rational>,
    s: &Su3Structure<Rational>,
    extra: &AltForm<Rational>,
) -> Outcome_ {
    let (tor, cd) = engine(alg, s);
    let ids = cd.identity_checks(TOL);
    for id in STRUCTURAL {
        exact_zero(&ids, id)?;
    }
    exact_zero(&su_condition_battery(alg, s, &tor, &cd, TOL), "ricci_form")?;
    exact_zero(&tor.checks(alg, s, TOL), "nijenhuis_psi_expansion")?;

    // the curvature identities hold for any 3-form
    let t = &tor.t + extra;
    let ids = CurvatureData::compute(alg, s, &t).identity_checks(TOL);
    for id in STRUCTURAL {
        exact_zero(&ids, id).map_err(|e| format!("with extra torsion: {e}"))?;
    }
    let c = common::brackets_from_engine(alg.structure_constants());
    oracle_structural(&c, &engine_arr(&tor.t.to_tensor()))?;
    oracle_structural(&c, &engine_arr(&t.to_tensor()))
}

/// Three random monomials; dense 3-forms make the exact arithmetic slow
/// without exercising anything new.
fn sparse_form(src: &mut RandomSource) -> AltForm<Rational> {
    let full = src.form::<Rational>(6, 3);
    let mut out = AltForm::zero(6, 3);
    let terms: Vec<_> = full
        .terms()
        .filter(|(_, v)| **v != q(0, 1))
        .take(3)
        .collect();
    for (idx, v) in terms {
        out.add_component(idx, v.clone());
    }
    out
}

fn criterion_5() -> Outcome_ {
    let mut src = RandomSource::seeded(5);
    for (name, _) in FIXTURES {
        let p = prepared(name);
        let extra = p
            .perturbation
            .clone()
            .unwrap_or_else(|| sparse_form(&mut src));
        structural_case(&p.algebra, &p.structure, &extra).map_err(|e| format!("{name}: {e}"))?;
    }
    let s = Su3Structure::standard();
    for n in 0..RANDOM_INPUTS {
        let alg = src.g1_algebra().map_err(|e| e.to_string())?;
        let extra = sparse_form(&mut src);
        structural_case(&alg, &s, &extra).map_err(|e| format!("random input {n}: {e}"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome_ {
    let p = prepared("su2_su2_cartan");
    let (tor, cd) = engine(&p.algebra, &p.structure);
    ensure(cd.r.is_zero(TOL), "R = 0")?;
    ensure(cd.d_t.is_zero(TOL), "dT = 0")?;
    ensure(cd.nabla_t.is_zero(TOL), "∇T = 0")?;
    ensure(cd.sigma.is_zero(TOL), "σᵀ = 0")?;
    ensure(cd.bianchi_defect().is_zero(TOL), "RB defect")?;
    ensure(cd.ricci.ric.is_zero(TOL), "Ric = 0")?;
    ensure(cd.ricci.delta_t.is_zero(TOL), "δT = 0")?;
    ensure(tor.t == forms(&[(-1, "123"), (-1, "456")]), "Cartan 3-form")?;

    let c = common::su2_su2();
    let t = engine_arr(&tor.t.to_tensor());
    let conn = common::with_torsion(&common::levi_civita(&c), &t);
    ensure(common::curvature(&c, &conn).is_zero(), "oracle R = 0")?;
    ensure(common::d(&c, &t).is_zero(), "oracle dT = 0")?;
    ensure(common::sigma(&t).is_zero(), "oracle σᵀ = 0")?;

    let r = report("su2_su2_cartan", Command::Soliton);
    ensure(r.verdicts.soliton == Some(true), "soliton verdict")?;
    for id in [
        "soliton_metric",
        "soliton_codifferential",
        "soliton_closed_torsion",
    ] {
        let rec = r.record(id).ok_or(format!("no {id}"))?;
        ensure(
            rec.status == Status::Pass && rec.residual.as_deref() == Some("0/1"),
            format!("{id}: {} {:?}", rec.status, rec.residual),
        )?;
    }
    ensure(r.outcome == Outcome::Pass, "Cartan report outcome")
}

fn monitor(alg: &LieAlgebra<Rational>, s: &Su3Structure<Rational>, label: &str) -> Outcome_ {
    let (tor, cd) = engine(alg, s);
    for imp in theorem_level_report(alg, s, &tor, &cd, TOL) {
        ensure(!imp.violated(), format!("{label}: {} violated", imp.id))?;
    }
    ensure(
        cd.lemma_4form(TOL).consistent(),
        format!("{label}: lemma_4form inconsistent"),
    )?;
    ensure(
        cd.tfbi(TOL).consistent(),
        format!("{label}: tfbi inconsistent"),
    )
}

fn criterion_7() -> Outcome_ {
    for (name, _) in FIXTURES {
        let r = report(name, Command::Check);
        ensure(
            r.outcome != Outcome::EngineBug,
            format!("{name}: engine bug"),
        )?;
        for rec in r.records.iter().filter(|r| r.stage == Stage::Theorem) {
            ensure(rec.status != Status::Fail, format!("{name}: {}", rec.id))?;
        }
        let p = prepared(name);
        monitor(&p.algebra, &p.structure, name)?;
    }
    let mut src = RandomSource::seeded(7);
    let s = Su3Structure::standard();
    for n in 0..RANDOM_INPUTS {
        let alg = src.g1_algebra().map_err(|e| e.to_string())?;
        monitor(&alg, &s, &format!("random input {n}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome_ {
    let p = prepared("perturbed_connection");
    let pert = p
        .perturbation
        .clone()
        .ok_or("fixture has no perturbation")?;
    let (tor, _) = engine(&p.algebra, &p.structure);
    let cd = CurvatureData::compute(&p.algebra, &p.structure, &(&tor.t + &pert));
    let lemma = cd.lemma_4form(TOL);
    ensure(
        lemma.consistent() && lemma.conditions.iter().all(|c| !c.holds),
        "perturbed lemma_4form not consistent all-FALSE",
    )?;
    let r = report("perturbed_connection", Command::Check);
    let pv = r
        .verdicts
        .perturbed
        .as_ref()
        .ok_or("no perturbed verdicts")?;
    ensure(pv.lemma_4form == Some(false), "perturbed lemma verdict")?;
    ensure(
        r.exit_code() == 1,
        format!("perturbed exit code {}", r.exit_code()),
    )?;

    let p = prepared("nilmanifold_4_1");
    let (_, cd) = engine(&p.algebra, &p.structure);
    let hol = holonomy_su3_check(&cd.r_lc, &p.structure, "levi_civita_holonomy", TOL);
    ensure(
        hol.iter().any(|c| c.failed()),
        "Levi-Civita holonomy passes",
    )?;
    // oracle: R^g_{ijab} F_{ab} ≠ 0
    let c = common::nilmanifold();
    let rg = common::curvature(&c, &common::levi_civita(&c));
    let f = common::form(2, &[(-1, "12"), (-1, "34"), (-1, "56")]);
    let mut rf = Arr::zeros(2);
    for idx in rf.indices() {
        let mut v = zero();
        for a in 0..6 {
            for b in 0..6 {
                v += rg.get(&[idx[0], idx[1], a, b]) * f.get(&[a, b]);
            }
        }
        rf.set(&idx, v);
    }
    ensure(!rf.is_zero(), "oracle Levi-Civita curvature preserves F")?;
    ensure(!r.verdicts.levi_civita_holonomy_su3, "holonomy verdict")
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome_; 8] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
    ];
    let mut failed = false;
    for (n, run) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("criterion {}: pass ({ms} ms)", n + 1),
            Err(why) => {
                failed = true;
                println!("criterion {}: fail ({why})", n + 1);
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

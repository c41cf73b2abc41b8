//! The verification pipeline and its report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::check::{Check, Status};
use crate::curvature::{self, CurvatureData, TriState};
use crate::error::{Error, Result};
use crate::form::AltForm;
use crate::input::{convert_form, Expected, GeometryInput, Prepared};
use crate::random::RandomSource;
use crate::registry::reference;
use crate::scalar::{Arithmetic, Rational, Scalar, Tolerance};
use crate::soliton::{self, SolitonCandidate};
use crate::su3::Su3Structure;
use crate::tensor::Tensor;
use crate::torsion::{StructureClass, TorsionData};

pub const SCHEMA_VERSION: u32 = 1;

/// Pipeline stages, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Core,
    Su3,
    Geometry,
    Curvature,
    Theorem,
    Soliton,
}

/// What a failing record means for the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// An identity evaluated on the input.
    Identity,
    /// Comparison against a value declared in the input.
    Expected,
    /// Residual of a declared soliton candidate.
    Candidate,
    /// Agreement of conditions that must be equivalent, or an implication
    /// between them. A failure here is an engine bug.
    Consistency,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Check,
    Torsion,
    Curvature,
    Soliton,
    Identities,
}

impl Command {
    pub fn stages(self) -> &'static [Stage] {
        use Stage::*;
        match self {
            Command::Check => &[Core, Su3, Geometry, Curvature, Theorem, Soliton],
            Command::Torsion => &[Core, Geometry],
            Command::Curvature => &[Core, Curvature, Theorem],
            Command::Soliton => &[Core, Soliton],
            Command::Identities => &[Core, Su3],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub command: Command,
    /// Overrides the arithmetic named in the input.
    pub arithmetic: Option<Arithmetic>,
    /// Check ids or id prefixes; `None` keeps everything.
    pub checks: Option<Vec<String>>,
}

impl Selection {
    pub fn all() -> Self {
        Self {
            command: Command::Check,
            arithmetic: None,
            checks: None,
        }
    }

    pub fn command(command: Command) -> Self {
        Self {
            command,
            ..Self::all()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub stage: Stage,
    pub kind: Kind,
    pub reference: String,
    pub status: Status,
    /// Largest absolute component of the defect: `p/q` in exact mode.
    pub residual: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub automatic_by_homogeneity: usize,
    pub convention_sensitive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbedVerdicts {
    pub riemannian_bianchi: bool,
    pub pair_symmetry: bool,
    pub lemma_4form: Option<bool>,
    pub tfbi: Option<bool>,
}

/// Conditions decided on the input. Fields are `None` when the structure
/// is not of class `G₁` and no torsion connection exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportVerdicts {
    pub g1: bool,
    pub class: StructureClass,
    pub riemannian_bianchi: Option<bool>,
    pub pair_symmetry: Option<bool>,
    pub torsion_parallel: Option<bool>,
    pub torsion_closed: Option<bool>,
    pub ricci_flat: Option<bool>,
    pub lemma_4form: Option<bool>,
    pub tfbi: Option<bool>,
    pub levi_civita_holonomy_su3: bool,
    /// Declared soliton candidate passes; `None` without a candidate.
    pub soliton: Option<bool>,
    pub parallel_fields: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturbed: Option<PerturbedVerdicts>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    EngineBug,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub input: String,
    pub command: Command,
    pub arithmetic: Arithmetic,
    /// Zero threshold; only present in float mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub outcome: Outcome,
    pub summary: Summary,
    pub verdicts: ReportVerdicts,
    pub records: Vec<Record>,
}

/// Exit status: 0 all pass, 1 checks failed, 2 input or precondition
/// error, 3 engine bug.
pub fn exit_code(result: &Result<VerificationReport>) -> i32 {
    match result {
        Ok(r) => match r.outcome {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::EngineBug => 3,
        },
        Err(Error::EngineBug(_) | Error::TorsionMismatch(_)) => 3,
        Err(_) => 2,
    }
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        exit_code(&Ok(self.clone()))
    }

    pub fn record(&self, id: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }

    /// Aligned table. Ids are right-aligned so every row reads
    /// `id: status`.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let width = self.records.iter().map(|r| r.id.len()).max().unwrap_or(0);
        let sw = self
            .records
            .iter()
            .map(|r| r.status.as_str().len())
            .max()
            .unwrap_or(0);
        let _ = writeln!(out, "input:      {}", self.input);
        let _ = writeln!(out, "command:    {}", format!("{:?}", self.command).to_lowercase());
        let _ = writeln!(out, "arithmetic: {}", self.arithmetic);
        if let Some(t) = self.tolerance {
            let _ = writeln!(out, "tolerance:  {t:e}");
        }
        let mut stage = None;
        for r in &self.records {
            if stage != Some(r.stage) {
                stage = Some(r.stage);
                let _ = writeln!(
                    out,
                    "\n[{}]",
                    serde_json::to_value(r.stage).unwrap().as_str().unwrap()
                );
            }
            let residual = r.residual.as_deref().unwrap_or("-");
            let _ = write!(
                out,
                "{:>width$}: {:<sw$}  {residual}",
                r.id,
                r.status.as_str()
            );
            if let Some(n) = &r.note {
                let _ = write!(out, "  ({n})");
            }
            out.push('\n');
        }
        let v = &self.verdicts;
        let b = |x: Option<bool>| x.map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(out, "\nverdicts:");
        let rows = [
            ("g1", v.g1.to_string()),
            ("class", v.class.as_str().to_string()),
            ("riemannian_bianchi", b(v.riemannian_bianchi)),
            ("pair_symmetry", b(v.pair_symmetry)),
            ("torsion_parallel", b(v.torsion_parallel)),
            ("torsion_closed", b(v.torsion_closed)),
            ("ricci_flat", b(v.ricci_flat)),
            ("lemma_4form", b(v.lemma_4form)),
            ("tfbi", b(v.tfbi)),
            (
                "levi_civita_holonomy_su3",
                v.levi_civita_holonomy_su3.to_string(),
            ),
            ("soliton", b(v.soliton)),
            (
                "parallel_fields",
                v.parallel_fields.map_or("-".into(), |n| n.to_string()),
            ),
        ];
        for (k, val) in rows {
            let _ = writeln!(out, "{k:>24}: {val}");
        }
        if let Some(p) = &v.perturbed {
            let _ = writeln!(
                out,
                "{:>24}: riemannian_bianchi={} pair_symmetry={} lemma_4form={} tfbi={}",
                "perturbed",
                p.riemannian_bianchi,
                p.pair_symmetry,
                b(p.lemma_4form),
                b(p.tfbi)
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\nsummary: {} pass, {} fail, {} vacuous, {} automatic-by-homogeneity, {} convention-sensitive",
            s.pass, s.fail, s.vacuous, s.automatic_by_homogeneity, s.convention_sensitive
        );
        let outcome = match self.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::EngineBug => "engine-bug",
        };
        let _ = writeln!(out, "outcome: {outcome}");
        out
    }
}

struct Builder {
    records: Vec<Record>,
}

impl Builder {
    fn push<S: Scalar>(&mut self, stage: Stage, kind: Kind, c: Check<S>) {
        self.records.push(Record {
            reference: reference(&c.id),
            id: c.id,
            stage,
            kind,
            status: c.status,
            residual: c.residual.map(|r| r.render()),
            note: c.note,
        });
    }

    fn extend<S: Scalar>(
        &mut self,
        stage: Stage,
        kind: Kind,
        cs: impl IntoIterator<Item = Check<S>>,
    ) {
        for c in cs {
            self.push(stage, kind, c);
        }
    }
}

fn form_match<S: Scalar>(
    id: &str,
    got: &AltForm<S>,
    want: &Option<AltForm<Rational>>,
    tol: Tolerance,
) -> Option<Check<S>> {
    want.as_ref()
        .map(|w| Check::forms(id, got, &convert_form(w), tol))
}

fn flag_match<S: Scalar>(id: &str, got: Option<bool>, want: Option<bool>) -> Option<Check<S>> {
    let want = want?;
    let status = if got == Some(want) {
        Status::Pass
    } else {
        Status::Fail
    };
    let got = got.map_or("undetermined".to_string(), |g| g.to_string());
    Some(Check::with_status(
        id,
        status,
        format!("expected {want}, found {got}"),
    ))
}

fn tri_state<S: Scalar>(t: &TriState<S>, prefix: &str) -> Check<S> {
    let mut c = t.to_check();
    c.id = format!("{prefix}{}", c.id);
    c
}

/// Runs every stage selected by `sel` on `input`.
pub fn run_pipeline(input: &GeometryInput, sel: &Selection) -> Result<VerificationReport> {
    match sel.arithmetic.unwrap_or(input.arithmetic) {
        Arithmetic::Exact => run::<Rational>(input, sel, Tolerance::DEFAULT),
        Arithmetic::Float => run::<f64>(input, sel, Tolerance::DEFAULT),
    }
}

fn run<S: Scalar>(
    input: &GeometryInput,
    sel: &Selection,
    tol: Tolerance,
) -> Result<VerificationReport> {
    let p: Prepared<S> = input.prepare(tol)?;
    let (alg, s) = (&p.algebra, &p.structure);
    let ex = &input.expected;
    let mut b = Builder {
        records: Vec::new(),
    };

    // core
    b.push(
        Stage::Core,
        Kind::Identity,
        Check::<S>::zero(
            "structure_jacobi",
            alg.jacobi_violation(tol).map_or(S::zero(), |_| S::one()),
            tol,
        ),
    );
    b.push(
        Stage::Core,
        Kind::Identity,
        Check::<S>::zero(
            "structure_d_squared",
            if alg.d_squared_vanishes(tol) {
                S::zero()
            } else {
                S::one()
            },
            tol,
        ),
    );
    b.extend(Stage::Core, Kind::Identity, s.compatibility(tol));

    // su3
    b.extend(Stage::Su3, Kind::Identity, s.iden_battery(tol));
    b.extend(Stage::Su3, Kind::Identity, s.star_battery(tol));
    b.extend(Stage::Su3, Kind::Identity, su3_dimension_checks(s, tol)?);

    let lc_holonomy =
        curvature::holonomy_su3_check(&alg.levi_civita().curvature(alg), s, "levi_civita", tol)
            .iter()
            .all(Check::passed);

    let tor = match TorsionData::compute(alg, s, tol) {
        Ok(t) => t,
        Err(Error::NotG1(size)) => {
            b.push(
                Stage::Geometry,
                Kind::Identity,
                Check::<S>::with_status(
                    "nijenhuis_totally_skew",
                    Status::Fail,
                    format!("non-skew part of size {size}; no torsion connection"),
                ),
            );
            let verdicts = ReportVerdicts {
                g1: false,
                class: StructureClass::NotG1,
                riemannian_bianchi: None,
                pair_symmetry: None,
                torsion_parallel: None,
                torsion_closed: None,
                ricci_flat: None,
                lemma_4form: None,
                tfbi: None,
                levi_civita_holonomy_su3: lc_holonomy,
                soliton: None,
                parallel_fields: None,
                perturbed: None,
            };
            return finish::<S>(input, sel, b.records, verdicts, tol);
        }
        Err(e) => return Err(e),
    };
    let cd = CurvatureData::compute(alg, s, &tor.t);
    let cd_p = p
        .perturbation
        .as_ref()
        .map(|e| CurvatureData::compute(alg, s, &(&tor.t + e)));
    let effective = cd_p.as_ref().unwrap_or(&cd);

    // geometry
    b.extend(Stage::Geometry, Kind::Identity, tor.checks(alg, s, tol));
    let expected: Vec<Check<S>> = [
        form_match("df_match", &tor.d_f, &ex.df, tol),
        form_match("nijenhuis_match", &tor.n, &ex.nijenhuis, tol),
        form_match("torsion_match", &tor.t, &ex.torsion, tol),
        form_match("lee_form_match", &tor.theta, &ex.lee_form, tol),
        ex.lambda
            .as_ref()
            .map(|l| Check::scalars("lambda_match", tor.lambda.clone(), S::from_rational(l), tol)),
        ex.mu
            .as_ref()
            .map(|m| Check::scalars("mu_match", tor.mu.clone(), S::from_rational(m), tol)),
        ex.connection.as_ref().map(|g| {
            let want = Tensor::from_fn(6, 3, |i| S::from_rational(g.get(i)));
            Check::tensors(
                "tor1_connection_match",
                effective.connection.coefficients(),
                &want,
                tol,
            )
        }),
    ]
    .into_iter()
    .flatten()
    .collect();
    b.extend(Stage::Geometry, Kind::Expected, expected);

    // curvature
    b.extend(Stage::Curvature, Kind::Identity, cd.identity_checks(tol));
    let lemma = cd.lemma_4form(tol);
    let tfbi = cd.tfbi(tol);
    b.push(Stage::Curvature, Kind::Consistency, tri_state(&lemma, ""));
    b.push(Stage::Curvature, Kind::Consistency, tri_state(&tfbi, ""));
    b.extend(
        Stage::Curvature,
        Kind::Identity,
        curvature::su_condition_battery(alg, s, &tor, &cd, tol),
    );
    let mut perturbed = None;
    if let Some(cp) = &cd_p {
        let ids = cp.identity_checks(tol).into_iter().map(|mut c| {
            c.id = format!("perturbed_{}", c.id);
            c
        });
        b.extend(Stage::Curvature, Kind::Identity, ids);
        let (pl, pt) = (cp.lemma_4form(tol), cp.tfbi(tol));
        b.push(
            Stage::Curvature,
            Kind::Consistency,
            tri_state(&pl, "perturbed_"),
        );
        b.push(
            Stage::Curvature,
            Kind::Consistency,
            tri_state(&pt, "perturbed_"),
        );
        let v = cp.verdicts(tol);
        perturbed = Some(PerturbedVerdicts {
            riemannian_bianchi: v.riemannian_bianchi,
            pair_symmetry: v.pair_symmetry,
            lemma_4form: pl.value(),
            tfbi: pt.value(),
        });
    }
    b.extend(
        Stage::Curvature,
        Kind::Expected,
        curvature_expectations(effective, ex, lc_holonomy, tol),
    );

    // theorem
    let implications = curvature::theorem_level_report(alg, s, &tor, &cd, tol);
    b.extend(
        Stage::Theorem,
        Kind::Consistency,
        implications.iter().map(|i| i.to_check::<S>()),
    );

    // soliton
    b.push(
        Stage::Soliton,
        Kind::Identity,
        Check::zero("second_bianchi", soliton::second_bianchi_residual(&cd), tol),
    );
    b.push(
        Stage::Soliton,
        Kind::Identity,
        Check::zero(
            "codifferential_divergence",
            soliton::div_delta_t_residual(&cd),
            tol,
        ),
    );
    let soliton_ok = match &p.soliton {
        Some(cand) => {
            let cs = soliton::soliton_residuals(alg, &cd, cand, tol);
            let ok = cs.iter().all(Check::passed);
            b.extend(Stage::Soliton, Kind::Candidate, cs);
            Some(ok)
        }
        None => {
            let ids = soliton::soliton_residuals(alg, &cd, &SolitonCandidate::zero(6), tol)
                .into_iter()
                .map(|c| Check::<S>::vacuous(c.id, "no soliton candidate declared"));
            b.extend(Stage::Soliton, Kind::Candidate, ids);
            None
        }
    };
    let fields = soliton::parallel_vector_fields(&tor.connection, tol);
    for (k, v) in fields.iter().enumerate() {
        let label = (k + 1).to_string();
        b.extend(
            Stage::Soliton,
            Kind::Identity,
            soliton::parallel_field_battery(alg, s, &tor, &cd, v, &label, tol),
        );
    }
    let theta: Vec<S> = (0..6).map(|i| tor.theta.get(&[i])).collect();
    if !tor.theta.is_zero(tol) && tor.connection.derivative_of_vector(&theta).is_zero(tol) {
        b.extend(
            Stage::Soliton,
            Kind::Identity,
            soliton::parallel_field_battery(alg, s, &tor, &cd, &theta, "lee", tol),
        );
    }

    let v = cd.verdicts(tol);
    let verdicts = ReportVerdicts {
        g1: true,
        class: tor.class,
        riemannian_bianchi: Some(v.riemannian_bianchi),
        pair_symmetry: Some(v.pair_symmetry),
        torsion_parallel: Some(v.torsion_parallel),
        torsion_closed: Some(v.torsion_closed),
        ricci_flat: Some(v.ricci_flat),
        lemma_4form: lemma.value(),
        tfbi: tfbi.value(),
        levi_civita_holonomy_su3: lc_holonomy,
        soliton: soliton_ok,
        parallel_fields: Some(fields.len()),
        perturbed,
    };
    finish::<S>(input, sel, b.records, verdicts, tol)
}

fn su3_dimension_checks<S: Scalar>(s: &Su3Structure<S>, tol: Tolerance) -> Result<Vec<Check<S>>> {
    let counted = |id: &str, got: String, want: String| {
        let status = if got == want {
            Status::Pass
        } else {
            Status::Fail
        };
        Check::with_status(id, status, format!("expected {want}, found {got}"))
    };
    let l2 = s.lambda2_ranks(tol)?;
    let l3 = s.lambda3_ranks(tol)?;
    let k = s.prop_4form_kernel(tol)?;
    let mut out = vec![
        counted(
            "lambda2_projector_ranks",
            format!("{l2:?}"),
            "[1, 6, 8]".into(),
        ),
        counted(
            "lambda3_projector_ranks",
            format!("{l3:?}"),
            "[1, 1, 6, 12]".into(),
        ),
        counted("four_form_kernel_rank", k.rank.to_string(), "15".into()),
    ];
    let mut src = RandomSource::seeded(0);
    let mut worst = S::zero();
    for _ in 0..5 {
        let h = src.sym_minus(s);
        let back = s.gamma_inv(&s.gamma(&h), tol)?;
        let r = (back.tensor() - h.tensor()).max_abs();
        if r > worst {
            worst = r;
        }
    }
    out.push(Check::zero("gamma_roundtrip", worst, tol));
    Ok(out)
}

fn curvature_expectations<S: Scalar>(
    cd: &CurvatureData<S>,
    ex: &Expected,
    lc_holonomy: bool,
    tol: Tolerance,
) -> Vec<Check<S>> {
    let v = cd.verdicts(tol);
    [
        form_match("dt_match", &cd.d_t, &ex.dt, tol),
        ex.ricci_factor.as_ref().map(|c| {
            let want = Tensor::identity(6).scale(&S::from_rational(c));
            Check::tensors("ricci_match", &cd.ricci.ric, &want, tol)
        }),
        flag_match(
            "riemannian_bianchi_match",
            Some(v.riemannian_bianchi),
            ex.riemannian_bianchi,
        ),
        flag_match(
            "pair_symmetry_match",
            Some(v.pair_symmetry),
            ex.pair_symmetry,
        ),
        flag_match(
            "torsion_parallel_match",
            Some(v.torsion_parallel),
            ex.torsion_parallel,
        ),
        flag_match(
            "lemma_4form_match",
            cd.lemma_4form(tol).value(),
            ex.lemma_4form,
        ),
        flag_match("tfbi_match", cd.tfbi(tol).value(), ex.tfbi),
        flag_match(
            "levi_civita_holonomy_su3_match",
            Some(lc_holonomy),
            ex.levi_civita_holonomy_su3,
        ),
    ]
    .into_iter()
    .flatten()
    .collect()
}

fn finish<S: Scalar>(
    input: &GeometryInput,
    sel: &Selection,
    records: Vec<Record>,
    verdicts: ReportVerdicts,
    tol: Tolerance,
) -> Result<VerificationReport> {
    let stages = sel.command.stages();
    let mut records: Vec<Record> = records
        .into_iter()
        .filter(|r| stages.contains(&r.stage))
        .collect();
    if let Some(list) = &sel.checks {
        let matches = |r: &Record, item: &str| r.id == item || r.id.starts_with(item);
        if let Some(bad) = list
            .iter()
            .find(|item| !records.iter().any(|r| matches(r, item)))
        {
            return Err(Error::Parse(format!("no check matches `{bad}`")));
        }
        records.retain(|r| list.iter().any(|item| matches(r, item)));
    }
    let mut summary = Summary::default();
    for r in &records {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Vacuous => summary.vacuous += 1,
            Status::AutomaticByHomogeneity => summary.automatic_by_homogeneity += 1,
            Status::ConventionSensitive => summary.convention_sensitive += 1,
        }
    }
    let bug = records
        .iter()
        .any(|r| r.kind == Kind::Consistency && r.status == Status::Fail);
    let outcome = if bug {
        Outcome::EngineBug
    } else if summary.fail > 0 {
        Outcome::Fail
    } else {
        Outcome::Pass
    };
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        input: input.name.clone(),
        command: sel.command,
        arithmetic: if S::EXACT {
            Arithmetic::Exact
        } else {
            Arithmetic::Float
        },
        tolerance: (!S::EXACT).then_some(tol.0),
        outcome,
        summary,
        verdicts,
        records,
    })
}

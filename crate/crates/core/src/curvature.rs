//! Curvature of a left-invariant metric connection with skew torsion, its
//! Ricci tensors and the identities relating them to the torsion.
//!
//! `R_{ijkl} = g(R(e_i, e_j) e_k, e_l)` and `Ric_{jk} = Σ_i R_{ijki}`.

use serde::{Deserialize, Serialize};

use crate::check::{max_residual, Check, Status};
use crate::form::AltForm;
use crate::lie::{Connection, LieAlgebra};
use crate::scalar::{Scalar, Tolerance};
use crate::su3::Su3Structure;
use crate::tensor::{einsum, Tensor};
use crate::torsion::{codifferential, TorsionData};

/// `σᵀ = ½ Σ_j (e_j ⌟ T) ∧ (e_j ⌟ T)`.
pub fn sigma_t<S: Scalar>(t: &AltForm<S>) -> AltForm<S> {
    let mut out = AltForm::zero(t.dim(), t.grade() * 2 - 2);
    for j in 0..t.dim() {
        let c = t.interior_basis(j).expect("positive grade");
        out = &out + &c.wedge(&c).expect("same dimension");
    }
    out.scale(&S::from_ratio(1, 2))
}

/// `σ_{xyzv} = T_{xya}T_{zva} + T_{yza}T_{xva} + T_{zxa}T_{yva}`, the
/// componentwise form of [`sigma_t`].
pub fn sigma_t_tensor<S: Scalar>(t: &Tensor<S>) -> Tensor<S> {
    let a = einsum("xya,zva->xyzv", &[t, t]);
    &(&a + &a.permute(&[1, 2, 0, 3])) + &a.permute(&[2, 0, 1, 3])
}

/// One boolean condition together with the residual it was decided on.
#[derive(Clone, Debug, PartialEq)]
pub struct Condition<S> {
    pub id: &'static str,
    pub holds: bool,
    pub residual: S,
}

impl<S: Scalar> Condition<S> {
    fn new(id: &'static str, residual: S, tol: Tolerance) -> Self {
        let residual = residual.abs_value();
        Self {
            id,
            holds: residual.is_negligible(tol),
            residual,
        }
    }
}

/// Conditions that are asserted to be equivalent.
#[derive(Clone, Debug, PartialEq)]
pub struct TriState<S> {
    pub id: &'static str,
    pub conditions: Vec<Condition<S>>,
}

impl<S: Scalar> TriState<S> {
    pub fn consistent(&self) -> bool {
        self.conditions.windows(2).all(|w| w[0].holds == w[1].holds)
    }

    /// The common value, or `None` when the conditions disagree.
    pub fn value(&self) -> Option<bool> {
        self.consistent()
            .then(|| self.conditions.first().is_none_or(|c| c.holds))
    }

    pub fn to_check(&self) -> Check<S> {
        let text = self
            .conditions
            .iter()
            .map(|c| format!("{}={}", c.id, c.holds))
            .collect::<Vec<_>>()
            .join(", ");
        let status = if self.consistent() {
            Status::Pass
        } else {
            Status::Fail
        };
        Check {
            id: self.id.to_string(),
            status,
            residual: None,
            note: Some(text),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdicts {
    pub riemannian_bianchi: bool,
    pub pair_symmetry: bool,
    pub nabla_t_skew: bool,
    pub torsion_parallel: bool,
    pub torsion_closed: bool,
    pub ricci_flat: bool,
}

/// Ricci tensors and their ingredients.
#[derive(Clone, Debug, PartialEq)]
pub struct RicciData<S> {
    pub ric: Tensor<S>,
    pub ric_g: Tensor<S>,
    pub scal: S,
    pub scal_g: S,
    /// `δT = -*d*T`.
    pub delta_t: AltForm<S>,
    /// `T²_{ij} = T_{iab} T_{jab}`.
    pub t_squared: Tensor<S>,
    pub norm_t: S,
}

/// Curvature data of `∇ = ∇ᵍ + ½T` for a 3-form `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureData<S> {
    pub t: AltForm<S>,
    pub connection: Connection<S>,
    /// `(∇_i T)_{jkl}` at `[i, j, k, l]`.
    pub nabla_t: Tensor<S>,
    pub nabla_g_t: Tensor<S>,
    pub d_t: AltForm<S>,
    pub sigma: AltForm<S>,
    pub r: Tensor<S>,
    pub r_lc: Tensor<S>,
    pub ricci: RicciData<S>,
}

impl<S: Scalar> CurvatureData<S> {
    pub fn compute(alg: &LieAlgebra<S>, s: &Su3Structure<S>, t: &AltForm<S>) -> Self {
        let lc = alg.levi_civita();
        let tt = t.to_tensor();
        let connection = lc.plus_half(&tt);
        let nabla_t = connection.covariant_derivative(&tt);
        let nabla_g_t = lc.covariant_derivative(&tt);
        let d_t = alg.d(t);
        let sigma = sigma_t(t);
        let r = connection.curvature(alg);
        let r_lc = lc.curvature(alg);
        let ric = einsum("iabi->ab", &[&r]);
        let ric_g = einsum("iabi->ab", &[&r_lc]);
        let trace = |m: &Tensor<S>| (0..m.dim()).fold(S::zero(), |a, i| a + m.get(&[i, i]).clone());
        let t_squared = einsum("iab,jab->ij", &[&tt, &tt]);
        let ricci = RicciData {
            scal: trace(&ric),
            scal_g: trace(&ric_g),
            ric,
            ric_g,
            delta_t: codifferential(alg, s, t),
            t_squared,
            norm_t: t.norm_sq(),
        };
        Self {
            t: t.clone(),
            connection,
            nabla_t,
            nabla_g_t,
            d_t,
            sigma,
            r,
            r_lc,
            ricci,
        }
    }

    /// `R + R(Y,Z,X,V) + R(Z,X,Y,V)`, the Riemannian first Bianchi defect.
    pub fn bianchi_defect(&self) -> Tensor<S> {
        let r = &self.r;
        &(r + &r.permute(&[1, 2, 0, 3])) + &r.permute(&[2, 0, 1, 3])
    }

    pub fn pair_symmetry_defect(&self) -> Tensor<S> {
        &self.r - &self.r.permute(&[2, 3, 0, 1])
    }

    /// `∇_i T_{jkl} + ∇_j T_{ikl}`; zero iff `∇T` is a 4-form.
    pub fn nabla_t_skew_defect(&self) -> Tensor<S> {
        &self.nabla_t + &self.nabla_t.permute(&[1, 0, 2, 3])
    }

    pub fn verdicts(&self, tol: Tolerance) -> Verdicts {
        Verdicts {
            riemannian_bianchi: self.bianchi_defect().is_zero(tol),
            pair_symmetry: self.pair_symmetry_defect().is_zero(tol),
            nabla_t_skew: self.nabla_t_skew_defect().is_zero(tol),
            torsion_parallel: self.nabla_t.is_zero(tol),
            torsion_closed: self.d_t.is_zero(tol),
            ricci_flat: self.ricci.ric.is_zero(tol),
        }
    }

    /// Identities valid for every metric connection with skew torsion.
    pub fn identity_checks(&self, tol: Tolerance) -> Vec<Check<S>> {
        let r = &self.r;
        let nt = &self.nabla_t;
        let dt = self.d_t.to_tensor();
        let sigma = self.sigma.to_tensor();
        let tt = self.t.to_tensor();
        let two = S::from_int(2);
        let half = S::from_ratio(1, 2);
        let nt_last = nt.permute(&[3, 0, 1, 2]);
        let mut out = Vec::new();

        out.push(Check::zero(
            "curvature_antisymmetry",
            max_residual([
                (r + &r.permute(&[1, 0, 2, 3])).max_abs(),
                (r + &r.permute(&[0, 1, 3, 2])).max_abs(),
            ]),
            tol,
        ));
        out.push(Check::tensors(
            "sigma_t_components",
            &sigma,
            &sigma_t_tensor(&tt),
            tol,
        ));
        let cyc_nt =
            &(&(nt + &nt.permute(&[1, 2, 0, 3])) + &nt.permute(&[2, 0, 1, 3])) + &sigma.scale(&two);
        out.push(Check::tensors(
            "dt_expansion",
            &dt,
            &(&cyc_nt - &nt_last),
            tol,
        ));
        out.push(Check::tensors(
            "first_bianchi",
            &self.bianchi_defect(),
            &(&(&dt - &sigma) + &nt_last),
            tol,
        ));
        let lhs =
            &(&r.permute(&[3, 0, 1, 2]) + &r.permute(&[3, 1, 2, 0])) + &r.permute(&[3, 2, 0, 1]);
        out.push(Check::tensors(
            "first_bianchi_dual",
            &lhs,
            &(&dt.scale(&-half.clone()) + &nt_last),
            tol,
        ));
        out.push(Check::tensors(
            "levi_civita_derivative_of_t",
            &self.nabla_g_t,
            &(nt + &sigma.scale(&half)),
            tol,
        ));

        let rc = &self.ricci;
        let dtt = rc.delta_t.to_tensor();
        let quarter = S::from_ratio(1, 4);
        let dt_from_nabla = -&einsum("kkij->ij", &[&self.nabla_g_t]);
        out.push(Check::tensors(
            "codifferential_of_t",
            &dtt,
            &dt_from_nabla,
            tol,
        ));
        out.push(Check::tensors(
            "ricci_relation",
            &rc.ric_g,
            &(&(&rc.ric + &dtt.scale(&half)) + &rc.t_squared.scale(&quarter)),
            tol,
        ));
        out.push(Check::scalars(
            "scalar_curvature_relation",
            rc.scal_g.clone(),
            rc.scal.clone() + rc.norm_t.clone() * quarter,
            tol,
        ));
        out.push(Check::tensors(
            "ricci_skew_part",
            &(&rc.ric - &rc.ric.permute(&[1, 0])),
            &(-&dtt),
            tol,
        ));
        out
    }

    /// `∇T` skew, `R ∈ S²Λ²` and `dT = 4∇ᵍT` are equivalent.
    pub fn lemma_4form(&self, tol: Tolerance) -> TriState<S> {
        let dt = self.d_t.to_tensor();
        TriState {
            id: "lemma_4form",
            conditions: vec![
                Condition::new("nabla_t_skew", self.nabla_t_skew_defect().max_abs(), tol),
                Condition::new("pair_symmetry", self.pair_symmetry_defect().max_abs(), tol),
                Condition::new(
                    "dt_four_nabla_g_t",
                    (&dt - &self.nabla_g_t.scale(&S::from_int(4))).max_abs(),
                    tol,
                ),
            ],
        }
    }

    /// RB holds iff `dT = -2∇T = ⅔σᵀ`.
    pub fn tfbi(&self, tol: Tolerance) -> TriState<S> {
        let dt = self.d_t.to_tensor();
        let a = (&dt + &self.nabla_t.scale(&S::from_int(2))).max_abs();
        let b = (&dt - &self.sigma.to_tensor().scale(&S::from_ratio(2, 3))).max_abs();
        TriState {
            id: "tfbi",
            conditions: vec![
                Condition::new("riemannian_bianchi", self.bianchi_defect().max_abs(), tol),
                Condition::new("dt_nabla_t_sigma", max_residual([a, b]), tol),
            ],
        }
    }
}

/// `R_{ijab}Ψ^±_{abc} = R_{ijab}F_{ab} = 0` and `R_{ijab}Φ_{abkl} = -2R_{ijkl}`.
pub fn holonomy_su3_check<S: Scalar>(
    r: &Tensor<S>,
    s: &Su3Structure<S>,
    prefix: &str,
    tol: Tolerance,
) -> Vec<Check<S>> {
    let rp = einsum("ijab,abc->ijc", &[r, s.psi_plus_tensor()]);
    let rm = einsum("ijab,abc->ijc", &[r, s.psi_minus_tensor()]);
    let rf = einsum("ijab,ab->ij", &[r, s.f_tensor()]);
    let rphi = einsum("ijab,abkl->ijkl", &[r, s.phi_tensor()]);
    vec![
        Check::zero(
            format!("{prefix}_su3_forms"),
            max_residual([rp.max_abs(), rm.max_abs(), rf.max_abs()]),
            tol,
        ),
        Check::tensors(
            format!("{prefix}_su3_phi"),
            &rphi,
            &r.scale(&S::from_int(-2)),
            tol,
        ),
    ]
}

/// Quantities of the SU(3)-structure that enter the curvature formulas.
#[derive(Clone, Debug, PartialEq)]
pub struct LeeData<S> {
    /// `(∇θ)_{ij} = ∇_i θ_j`.
    pub nabla_theta: Tensor<S>,
    pub delta_theta: S,
    pub theta_sq: S,
}

impl<S: Scalar> LeeData<S> {
    pub fn compute(tor: &TorsionData<S>) -> Self {
        let th = tor.theta.to_tensor();
        let nabla_theta = tor.connection.covariant_derivative(&th);
        let delta_theta =
            -(0..th.dim()).fold(S::zero(), |a, i| a + nabla_theta.get(&[i, i]).clone());
        Self {
            nabla_theta,
            delta_theta,
            theta_sq: tor.theta.norm_sq(),
        }
    }
}

/// Ricci form, SU(3) holonomy and trace formulas of the torsion connection.
pub fn su_condition_battery<S: Scalar>(
    alg: &LieAlgebra<S>,
    s: &Su3Structure<S>,
    tor: &TorsionData<S>,
    cd: &CurvatureData<S>,
    tol: Tolerance,
) -> Vec<Check<S>> {
    let acyt = tor.is_acyt();
    let lee = LeeData::compute(tor);
    let f = s.f_tensor();
    let phi = s.phi_tensor();
    let dt = cd.d_t.to_tensor();
    let r = &cd.r;
    let ric = &cd.ricci.ric;
    let nth = &lee.nabla_theta;
    let quarter = S::from_ratio(1, 4);
    let mut out = Vec::new();

    out.push(Check::scalars(
        "codifferential_of_lee_form",
        lee.delta_theta.clone(),
        codifferential(alg, s, &tor.theta).get(&[]),
        tol,
    ));

    // ρ_{xy} = ½ R_{xyab} F_{ba}
    let rho = einsum("xyab,ba->xy", &[r, f]).scale(&S::from_ratio(1, 2));
    let rhs = &(&einsum("xa,ay->xy", &[ric, f]) + &einsum("xa,ay->xy", &[nth, f]))
        + &einsum("xyab,ba->xy", &[&dt, f]).scale(&quarter);
    out.push(Check::tensors("ricci_form", &rho, &rhs, tol));

    let su = &(ric + nth) - &einsum("xaib,ay,bi->xy", &[&dt, f, f]).scale(&quarter);
    out.push(Check::zero("su3_ricci_condition", su.max_abs(), tol).given(acyt, "ACYT"));
    out.extend(
        holonomy_su3_check(r, s, "holonomy", tol)
            .into_iter()
            .map(|c| c.given(acyt, "ACYT")),
    );

    let lhs = einsum("jaib,aj,bi->", &[&dt, f, f]).get(&[]).clone();
    let tt = tor.torsion_tensor();
    let tr_nabla_theta = -lee.delta_theta.clone();
    let eight = S::from_int(8);
    let th8 = eight.clone() * lee.theta_sq.clone();
    let n_sq = tor.n.norm_sq();
    let dfp_sq = tor.df_plus.norm_sq();
    let t_sq = tor.t.norm_sq();
    let form_a = -eight.clone() * tr_nabla_theta + th8.clone()
        - S::from_int(4)
            * einsum("ijk,abk,ai,bj->", &[&tt, &tt, f, f])
                .get(&[])
                .clone();
    let form_b = eight.clone() * lee.delta_theta.clone() + th8.clone()
        - S::from_ratio(4, 3) * dfp_sq.clone()
        + quarter.clone() * n_sq.clone();
    let form_c = eight * lee.delta_theta.clone() + th8 - S::from_ratio(4, 3) * t_sq.clone()
        + S::from_ratio(1, 3) * n_sq.clone();
    out.push(Check::scalars(
        "dt_trace_nabla_theta",
        lhs.clone(),
        form_a,
        tol,
    ));
    out.push(Check::scalars("dt_trace_df_plus", lhs.clone(), form_b, tol));
    out.push(Check::scalars("dt_trace_torsion", lhs, form_c, tol));

    let base = S::from_int(3) * lee.delta_theta.clone() + S::from_int(2) * lee.theta_sq.clone();
    let scal = |a: S, b: S, dfp: &S, n: &S| base.clone() - a * dfp.clone() + b * n.clone();
    let (third, sixteenth) = (S::from_ratio(1, 3), S::from_ratio(1, 16));
    out.push(
        convention_check(
            "scalar_curvature_formula",
            cd.ricci.scal.clone(),
            |norm| {
                scal(
                    third.clone(),
                    sixteenth.clone(),
                    &norm(&dfp_sq),
                    &norm(&n_sq),
                )
            },
            tol,
        )
        .given(acyt, "ACYT"),
    );
    out.push(
        convention_check(
            "riemannian_scalar_formula_as_printed",
            cd.ricci.scal_g.clone(),
            |norm| {
                scal(
                    third.clone(),
                    S::from_ratio(5, 64),
                    &norm(&dfp_sq),
                    &norm(&n_sq),
                )
            },
            tol,
        )
        .given(acyt, "ACYT"),
    );
    out.push(
        Check::scalars(
            "riemannian_scalar_formula",
            cd.ricci.scal_g.clone(),
            scal(S::from_ratio(1, 12), S::from_ratio(5, 64), &dfp_sq, &n_sq),
            tol,
        )
        .given(acyt, "ACYT"),
    );
    out.push(Check::scalars(
        "torsion_norm_split",
        t_sq,
        dfp_sq + sixteenth * n_sq,
        tol,
    ));

    let twelfth = S::from_ratio(1, 12);
    let dt_phi = einsum("iabc,jabc->ij", &[&dt, phi]);
    let nt_phi = einsum("iabc,jabc->ij", &[&cd.nabla_t, phi]);
    out.push(
        Check::tensors("ricci_from_dt", ric, &(&dt_phi.scale(&twelfth) - nth), tol)
            .given(acyt, "ACYT"),
    );
    out.push(
        Check::tensors(
            "ricci_from_curvature_phi",
            ric,
            &einsum("iabc,jabc->ij", &[r, phi]).scale(&S::from_ratio(1, 2)),
            tol,
        )
        .given(acyt, "ACYT"),
    );
    out.push(
        Check::tensors(
            "ricci_from_dt_nabla_t",
            ric,
            &(&dt_phi.scale(&twelfth) + &nt_phi.scale(&S::from_ratio(1, 6))),
            tol,
        )
        .given(acyt, "ACYT"),
    );
    let ricnew = |psi: &Tensor<S>| {
        (&einsum("iabc,abc->i", &[&dt, psi]).scale(&S::from_ratio(1, 6))
            + &einsum("iabc,abc->i", &[&cd.nabla_t, psi]).scale(&third))
            .max_abs()
    };
    out.push(
        Check::zero(
            "dt_psi_traces",
            max_residual([ricnew(s.psi_plus_tensor()), ricnew(s.psi_minus_tensor())]),
            tol,
        )
        .given(acyt, "ACYT"),
    );
    out
}

/// Evaluates a scalar identity under the full-contraction norm; if that
/// fails, retries with norms of 3-forms divided by `3!`. Passing only under
/// the second normalization, or under neither, is reported as
/// convention-sensitive with the residual of the first.
fn convention_check<S: Scalar>(
    id: &str,
    lhs: S,
    rhs: impl Fn(&dyn Fn(&S) -> S) -> S,
    tol: Tolerance,
) -> Check<S> {
    let full = Check::scalars(id, lhs.clone(), rhs(&|v: &S| v.clone()), tol);
    if full.passed() {
        return full;
    }
    let six = S::from_int(6);
    let alt = Check::<S>::scalars(id, lhs, rhs(&|v: &S| v.clone() / six.clone()), tol);
    let note = if alt.passed() {
        "holds only with norms divided by p!"
    } else {
        "fails with both norm normalizations"
    };
    Check {
        status: Status::ConventionSensitive,
        note: Some(note.into()),
        ..full
    }
}

/// One implication between verdicts computed on the same input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Implication {
    pub id: String,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn new(id: &str, hypothesis: bool, conclusion: bool) -> Self {
        Self {
            id: id.into(),
            hypothesis,
            conclusion,
        }
    }

    pub fn violated(&self) -> bool {
        self.hypothesis && !self.conclusion
    }

    pub fn to_check<S: Scalar>(&self) -> Check<S> {
        let (status, note) = match (self.hypothesis, self.conclusion) {
            (false, _) => (Status::Vacuous, "hypotheses not met"),
            (true, true) => (Status::Pass, "hypotheses and conclusions hold"),
            (true, false) => (Status::Fail, "conclusion fails although hypotheses hold"),
        };
        Check::with_status(self.id.clone(), status, note)
    }
}

/// Evaluates the hypotheses and conclusions of the structure theorems on
/// the torsion connection and lists every implication.
pub fn theorem_level_report<S: Scalar>(
    alg: &LieAlgebra<S>,
    s: &Su3Structure<S>,
    tor: &TorsionData<S>,
    cd: &CurvatureData<S>,
    tol: Tolerance,
) -> Vec<Implication> {
    let v = cd.verdicts(tol);
    let acyt = tor.is_acyt();
    let lee = LeeData::compute(tor);
    let zero = |t: &Tensor<S>| t.is_zero(tol);
    let conn = &tor.connection;
    let nabla_n = zero(&conn.covariant_derivative(&tor.n.to_tensor()));
    let nabla_df = zero(&conn.covariant_derivative(&tor.d_f.to_tensor()));
    let nabla_g_t = zero(&cd.nabla_g_t);
    let delta_t = cd.ricci.delta_t.is_zero(tol);
    let ric = &cd.ricci.ric;
    let ric_sym = zero(&(ric - &ric.permute(&[1, 0])));
    let nth = &lee.nabla_theta;
    let ric_minus_nabla_theta = zero(&(ric + nth));
    let balanced = tor.theta.is_zero(tol);
    let dtheta = alg.d(&tor.theta);
    let dtheta_j = (&dtheta - &s.j_action(&dtheta)).is_zero(tol);
    let dtheta_closed = dtheta.is_zero(tol);
    let dtheta_su3 = dtheta_j
        && dtheta
            .full_contraction(s.f())
            .expect("grade 2")
            .is_negligible(tol)
        && dtheta.wedge(s.phi()).expect("fits").is_zero(tol);
    let f = s.f_tensor();
    let dt_trace = zero(&einsum("xyab,ba->xy", &[&cd.d_t.to_tensor(), f]));
    let n_sq = tor.n.norm_sq();
    let dfp_sq = tor.df_plus.norm_sq();
    let sdt = (S::from_int(16) * dfp_sq.clone() - S::from_int(3) * n_sq.clone()).is_negligible(tol);
    let scal_zero = cd.ricci.scal.is_negligible(tol);
    // (∇_X θ)(JY) + (∇_Y θ)(JX) = 0
    let nth_j = einsum("xa,ay->xy", &[nth, f]);
    let j_theta_killing = zero(&(&nth_j + &nth_j.permute(&[1, 0])));
    let nth_sym = zero(&(nth - &nth.permute(&[1, 0])));
    let nth_jinv = zero(&(nth - &s.eval_j(nth, &[0, 1])));
    let scal_g_formula = (cd.ricci.scal_g.clone()
        - (S::from_ratio(5, 64) * n_sq - S::from_ratio(1, 12) * dfp_sq))
        .is_negligible(tol);
    let ric_j_inv = zero(&(ric - &s.eval_j(ric, &[0, 1])));
    let rho = einsum("xyab,ba->xy", &[&cd.r, f]).scale(&S::from_ratio(1, 2));
    let ric_rho = zero(&(&einsum("xa,ay->xy", &[ric, f]) - &rho));
    let four = cd.lemma_4form(tol);
    let tfbi = cd.tfbi(tol);

    vec![
        Implication::new("lemma_4form_equivalence", true, four.consistent()),
        Implication::new("tfbi_equivalence", true, tfbi.consistent()),
        Implication::new(
            "rb_implies_kahler_like_ricci",
            v.riemannian_bianchi,
            v.pair_symmetry && ric_sym && ric_j_inv && ric_rho,
        ),
        Implication::new(
            "acyt_iff_psi_conditions",
            true,
            acyt == tor.psi_differential_residual(alg, s).is_negligible(tol),
        ),
        Implication::new(
            "s2l2_implies_parallel_torsion",
            acyt && v.pair_symmetry && v.ricci_flat,
            nabla_g_t
                && v.torsion_parallel
                && nabla_n
                && nabla_df
                && v.riemannian_bianchi
                && v.torsion_closed
                && delta_t,
        ),
        Implication::new(
            "parallel_torsion_implies_s2l2",
            acyt && nabla_g_t && v.torsion_parallel,
            v.pair_symmetry && v.ricci_flat,
        ),
        Implication::new(
            "acyt_rb_implies_s2l2",
            acyt && v.riemannian_bianchi,
            v.pair_symmetry && v.ricci_flat,
        ),
        Implication::new("acyt_lee_form_type", acyt, dtheta_j && nabla_n),
        Implication::new("closed_lee_form_parallel_n", acyt && dtheta_closed, nabla_n),
        Implication::new(
            "balanced_coclosed",
            acyt && balanced,
            nabla_n && delta_t && ric_sym,
        ),
        Implication::new(
            "balanced_ricci_flat_iff_harmonic",
            acyt && balanced,
            v.ricci_flat == (v.torsion_closed && delta_t),
        ),
        Implication::new(
            "closed_torsion_iff_ricci_nabla_theta",
            acyt,
            v.torsion_closed == (dtheta_su3 && ric_minus_nabla_theta),
        ),
        Implication::new(
            "parallel_n_ricci_nabla_theta_implies_closed",
            acyt && nabla_n && ric_minus_nabla_theta,
            v.torsion_closed,
        ),
        Implication::new(
            "pair_symmetry_j_theta_killing",
            acyt && v.pair_symmetry,
            j_theta_killing && nabla_n && nth_sym && nth_jinv,
        ),
        Implication::new(
            "pair_symmetry_balanced_parallel",
            acyt && v.pair_symmetry && balanced,
            v.torsion_parallel && nabla_df && nabla_n && scal_g_formula,
        ),
        Implication::new(
            "balanced_scalar_flat_norms",
            acyt && balanced && scal_zero,
            sdt,
        ),
        Implication::new(
            "balanced_ricci_flat_norms",
            acyt && balanced && v.ricci_flat,
            sdt && dt_trace,
        ),
    ]
}

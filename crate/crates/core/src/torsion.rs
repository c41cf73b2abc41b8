//! The torsion connection of a `G₁` almost Hermitian structure on a Lie
//! algebra: Nijenhuis tensor, Lee form, torsion 3-form and the
//! reconstructions of the torsion that hold on ACYT inputs.

use serde::{Deserialize, Serialize};

use crate::check::{max_residual, Check};
use crate::error::{Error, Result};
use crate::form::AltForm;
use crate::lie::{Connection, LieAlgebra};
use crate::scalar::{Scalar, Tolerance};
use crate::su3::Su3Structure;
use crate::tensor::{einsum, Tensor};

/// How much of the structure the torsion connection preserves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureClass {
    /// Nijenhuis tensor is not a 3-form; no torsion connection exists.
    NotG1,
    /// Torsion connection exists and preserves `(g, J)` but not `Ψ^±`.
    G1Only,
    /// `∇Ψ⁺ = ∇Ψ⁻ = 0` as well.
    Acyt,
}

impl StructureClass {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureClass::NotG1 => "not-g1",
            StructureClass::G1Only => "g1-only",
            StructureClass::Acyt => "acyt",
        }
    }
}

/// `N_{ijk} = g(N(e_i, e_j), e_k)` as a raw tensor, with
/// `N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]`.
pub fn nijenhuis_tensor<S: Scalar>(alg: &LieAlgebra<S>, s: &Su3Structure<S>) -> Tensor<S> {
    let cl = alg.lowered();
    // g(-J W, Z) = g(W, JZ), so the J in front of a bracket moves to the
    // output slot.
    let a = s.eval_j(&cl, &[0, 1]);
    let b = s.eval_j(&cl, &[0, 2]);
    let c = s.eval_j(&cl, &[1, 2]);
    &(&(&a - &cl) + &b) + &c
}

/// The Nijenhuis tensor as a 3-form, or [`Error::NotG1`] carrying the size
/// of its part that is symmetric in the last two slots.
pub fn nijenhuis<S: Scalar>(
    alg: &LieAlgebra<S>,
    s: &Su3Structure<S>,
    tol: Tolerance,
) -> Result<AltForm<S>> {
    let n = nijenhuis_tensor(alg, s);
    let sym = (&n + &n.permute(&[0, 2, 1])).scale(&S::from_ratio(1, 2));
    if !sym.is_zero(tol) {
        return Err(Error::NotG1(sym.max_abs().render()));
    }
    Ok(AltForm::from_tensor(&n))
}

/// `δ = -*d*`.
pub fn codifferential<S: Scalar>(
    alg: &LieAlgebra<S>,
    s: &Su3Structure<S>,
    a: &AltForm<S>,
) -> AltForm<S> {
    -&s.star(&alg.d(&s.star(a)))
}

/// `θ_i = ½ J^k_i T_{kjl} F_{jl}`.
pub fn lee_form_from_torsion<S: Scalar>(t: &AltForm<S>, s: &Su3Structure<S>) -> AltForm<S> {
    let f = s.f_tensor();
    let v = einsum("ki,kjl,jl->i", &[f, &t.to_tensor(), f]);
    AltForm::from_tensor(&v.scale(&S::from_ratio(1, 2)))
}

/// `θ_i = ⅙ T_{jkl} Φ_{jkli}`.
pub fn lee_form_from_phi<S: Scalar>(t: &AltForm<S>, s: &Su3Structure<S>) -> AltForm<S> {
    let v = einsum("jkl,jkli->i", &[&t.to_tensor(), s.phi_tensor()]);
    AltForm::from_tensor(&v.scale(&S::from_ratio(1, 6)))
}

/// `θ(X) = δF(JX)`.
pub fn lee_form_from_codifferential<S: Scalar>(
    alg: &LieAlgebra<S>,
    s: &Su3Structure<S>,
) -> AltForm<S> {
    let df = codifferential(alg, s, s.f()).to_tensor();
    AltForm::from_tensor(&einsum("k,ki->i", &[&df, s.f_tensor()]))
}

/// Everything derived from `(alg, s)` up to the torsion connection.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionData<S> {
    pub d_f: AltForm<S>,
    pub n: AltForm<S>,
    pub t: AltForm<S>,
    pub theta: AltForm<S>,
    pub lambda: S,
    pub mu: S,
    pub df_plus: AltForm<S>,
    pub df_minus: AltForm<S>,
    pub connection: Connection<S>,
    pub class: StructureClass,
}

impl<S: Scalar> TorsionData<S> {
    /// `T = JdF + N`, `θ` from the torsion, `λ = (N,Ψ⁺)/4`, `μ = (N,Ψ⁻)/4`
    /// and `∇ = ∇ᵍ + ½T`.
    pub fn compute(alg: &LieAlgebra<S>, s: &Su3Structure<S>, tol: Tolerance) -> Result<Self> {
        if alg.dim() != s.f().dim() {
            return Err(Error::DimensionMismatch {
                expected: s.f().dim(),
                found: alg.dim(),
            });
        }
        let n = nijenhuis(alg, s, tol)?;
        let d_f = alg.d(s.f());
        let t = &s.j_action(&d_f) + &n;
        let theta = lee_form_from_torsion(&t, s);
        let quarter = S::from_ratio(1, 4);
        let lambda = n.normalized_pairing(s.psi_plus())? * quarter.clone();
        let mu = n.normalized_pairing(s.psi_minus())? * quarter;
        let df_minus =
            AltForm::from_tensor(&s.eval_j(&n.to_tensor(), &[0]).scale(&S::from_ratio(3, 4)));
        let df_plus = &d_f - &df_minus;
        let connection = torsion_connection(alg, &t);

        let nabla_f = connection.covariant_derivative(s.f_tensor());
        if !nabla_f.is_zero(tol) || !S::is_negligible(&connection.metric_defect(), tol) {
            return Err(Error::EngineBug(format!(
                "torsion connection of a G1 structure does not preserve (g, J): |∇F| = {}",
                nabla_f.max_abs().render()
            )));
        }
        let parallel = |p: &Tensor<S>| connection.covariant_derivative(p).is_zero(tol);
        let class = if parallel(s.psi_plus_tensor()) && parallel(s.psi_minus_tensor()) {
            StructureClass::Acyt
        } else {
            StructureClass::G1Only
        };
        Ok(Self {
            d_f,
            n,
            t,
            theta,
            lambda,
            mu,
            df_plus,
            df_minus,
            connection,
            class,
        })
    }

    pub fn is_acyt(&self) -> bool {
        self.class == StructureClass::Acyt
    }

    pub fn torsion_tensor(&self) -> Tensor<S> {
        self.t.to_tensor()
    }

    /// `T = -*dF + *(θ∧F) + λΨ⁺ + μΨ⁻`.
    pub fn torsion_from_star(&self, s: &Su3Structure<S>) -> AltForm<S> {
        let tf = self.theta.wedge(s.f()).expect("grades fit");
        let a = &(-&s.star(&self.d_f)) + &s.star(&tf);
        &(&a + &s.psi_plus().scale(&self.lambda)) + &s.psi_minus().scale(&self.mu)
    }

    /// `T_{klm} = -½T_{jsk}Φ_{jslm} + ½T_{jsl}Φ_{jskm} - ½T_{jsm}Φ_{jskl}
    /// - θ_sΦ_{sklm} + λΨ⁺ + μΨ⁻`.
    pub fn torsion_from_phi(&self, s: &Su3Structure<S>) -> AltForm<S> {
        let t = self.torsion_tensor();
        let phi = s.phi_tensor();
        let half = S::from_ratio(1, 2);
        let a = einsum("jsk,jslm->klm", &[&t, phi]);
        let b = einsum("jsl,jskm->klm", &[&t, phi]);
        let c = einsum("jsm,jskl->klm", &[&t, phi]);
        let d = einsum("s,sklm->klm", &[&self.theta.to_tensor(), phi]);
        let sum = &(&(&b - &a) - &c).scale(&half) - &d;
        let out = &(&sum + &s.psi_plus_tensor().scale(&self.lambda))
            + &s.psi_minus_tensor().scale(&self.mu);
        AltForm::from_tensor(&out)
    }

    /// `T = T(J,J,·) + T(J,·,J) + T(·,J,J) + λΨ⁺ + μΨ⁻`.
    pub fn torsion_from_j(&self, s: &Su3Structure<S>) -> AltForm<S> {
        let t = self.torsion_tensor();
        let sum = &(&s.eval_j(&t, &[0, 1]) + &s.eval_j(&t, &[0, 2])) + &s.eval_j(&t, &[1, 2]);
        let out = &(&sum + &s.psi_plus_tensor().scale(&self.lambda))
            + &s.psi_minus_tensor().scale(&self.mu);
        AltForm::from_tensor(&out)
    }

    /// Residual records for every torsion identity. Identities that need
    /// the ACYT hypothesis become vacuous on other inputs.
    pub fn checks(
        &self,
        alg: &LieAlgebra<S>,
        s: &Su3Structure<S>,
        tol: Tolerance,
    ) -> Vec<Check<S>> {
        let acyt = self.is_acyt();
        let tt = self.torsion_tensor();
        let n_t = self.n.to_tensor();
        let mut out = Vec::new();

        out.push(Check::zero(
            "nijenhuis_totally_skew",
            (&n_t + &n_t.permute(&[0, 2, 1])).max_abs(),
            tol,
        ));
        out.push(Check::tensors(
            "connection_torsion_equals_t",
            &self.connection.torsion(alg),
            &tt,
            tol,
        ));
        out.push(Check::zero("nabla_g", self.connection.metric_defect(), tol));
        out.push(Check::zero(
            "nabla_f",
            self.connection.covariant_derivative(s.f_tensor()).max_abs(),
            tol,
        ));
        out.push(
            Check::zero(
                "nabla_psi",
                max_residual([
                    self.connection
                        .covariant_derivative(s.psi_plus_tensor())
                        .max_abs(),
                    self.connection
                        .covariant_derivative(s.psi_minus_tensor())
                        .max_abs(),
                ]),
                tol,
            )
            .given(acyt, "ACYT"),
        );

        // T = -dF⁺(J,J,J) + ¼N
        let jdf_plus = -&AltForm::from_tensor(&s.eval_j(&self.df_plus.to_tensor(), &[0, 1, 2]));
        out.push(Check::forms(
            "torsion_via_df_plus",
            &self.t,
            &(&jdf_plus + &self.n.scale(&S::from_ratio(1, 4))),
            tol,
        ));
        out.push(Check::zero(
            "df_plus_mixed_type",
            s.mixed_type_residual(&self.df_plus),
            tol,
        ));
        out.push(Check::zero(
            "df_plus_norm_identity",
            s.norm_h_residual(&self.df_plus),
            tol,
        ));
        let dfm = self.df_minus.to_tensor();
        out.push(Check::zero(
            "df_minus_j_slot_invariance",
            max_residual([
                (&s.eval_j(&dfm, &[0]) - &s.eval_j(&dfm, &[1])).max_abs(),
                (&s.eval_j(&dfm, &[1]) - &s.eval_j(&dfm, &[2])).max_abs(),
            ]),
            tol,
        ));

        let theta_phi = lee_form_from_phi(&self.t, s);
        let theta_delta = lee_form_from_codifferential(alg, s);
        out.push(Check::forms(
            "lee_form_phi_trace",
            &self.theta,
            &theta_phi,
            tol,
        ));
        out.push(Check::forms(
            "lee_form_codifferential",
            &self.theta,
            &theta_delta,
            tol,
        ));
        let tf = einsum("i,iq->q", &[&self.theta.to_tensor(), s.f_tensor()]);
        let tr = einsum("qjk,jk->q", &[&tt, s.f_tensor()]).scale(&S::from_ratio(-1, 2));
        out.push(Check::tensors("lee_form_j_trace", &tf, &tr, tol));

        out.push(
            Check::forms(
                "torsion_star_formula",
                &self.t,
                &self.torsion_from_star(s),
                tol,
            )
            .given(acyt, "ACYT"),
        );
        out.push(
            Check::forms(
                "torsion_phi_formula",
                &self.t,
                &self.torsion_from_phi(s),
                tol,
            )
            .given(acyt, "ACYT"),
        );
        out.push(
            Check::forms("torsion_j_formula", &self.t, &self.torsion_from_j(s), tol)
                .given(acyt, "ACYT"),
        );
        let sixth = S::from_ratio(1, 6);
        let lam_t = self.t.full_contraction(s.psi_plus()).unwrap() * sixth.clone();
        let mu_t = self.t.full_contraction(s.psi_minus()).unwrap() * sixth;
        out.push(
            Check::zero(
                "lambda_mu_from_torsion",
                max_residual([lam_t - self.lambda.clone(), mu_t - self.mu.clone()]),
                tol,
            )
            .given(acyt, "ACYT"),
        );
        let n_rec = &s.psi_plus().scale(&self.lambda) + &s.psi_minus().scale(&self.mu);
        let norm_rec = S::from_int(24)
            * (self.lambda.clone() * self.lambda.clone() + self.mu.clone() * self.mu.clone());
        out.push(
            Check::zero(
                "nijenhuis_psi_expansion",
                max_residual([(&self.n - &n_rec).max_abs(), self.n.norm_sq() - norm_rec]),
                tol,
            )
            .given(acyt, "ACYT"),
        );
        out.push(
            Check::zero(
                "psi_differentials",
                self.psi_differential_residual(alg, s),
                tol,
            )
            .given(acyt, "ACYT"),
        );
        let dtheta = alg.d(&self.theta);
        out.push(
            Check::forms("dtheta_j_invariant", &dtheta, &s.j_action(&dtheta), tol)
                .given(acyt, "ACYT"),
        );
        out.push(Check::automatic(
            "lambda_mu_holomorphic",
            "λ and μ are constant, so dμ = Jdλ holds with both sides zero",
        ));
        out
    }

    /// Largest residual of `dΨ^± = θ∧Ψ^± - ¼(N,Ψ^±)*F`.
    pub fn psi_differential_residual(&self, alg: &LieAlgebra<S>, s: &Su3Structure<S>) -> S {
        let star_f = s.star(s.f());
        let rhs = |psi: &AltForm<S>, c: &S| {
            &self.theta.wedge(psi).expect("grades fit") - &star_f.scale(c)
        };
        max_residual([
            (&alg.d(s.psi_plus()) - &rhs(s.psi_plus(), &self.lambda)).max_abs(),
            (&alg.d(s.psi_minus()) - &rhs(s.psi_minus(), &self.mu)).max_abs(),
        ])
    }
}

/// `∇ = ∇ᵍ + ½T`.
pub fn torsion_connection<S: Scalar>(alg: &LieAlgebra<S>, t: &AltForm<S>) -> Connection<S> {
    alg.levi_civita().plus_half(&t.to_tensor())
}

//! SU(3)-structures on an orthonormal frame: the forms `F`, `Ψ⁺`, `Ψ⁻`,
//! `Φ = ½F∧F`, the almost complex structure, the algebraic identity
//! batteries, the type decompositions of 2- and 3-forms and the
//! isomorphism `γ : S²₋ → Λ³₁₂`.
//!
//! Conventions: `J^k_j = F_{kj}`, so `J e_1 = e_2`, and `F = g(·, J·)`.
//! On forms `Jβ = (-1)^p β(J·, …, J·)`.

use crate::check::{max_residual, Check};
use crate::error::{Error, Result};
use crate::form::{increasing_tuples, AltForm};
use crate::linalg::Matrix;
use crate::metric::{hodge_star, Metric, Orientation};
use crate::scalar::{Scalar, Tolerance};
use crate::tensor::{einsum, Tensor};

pub const DIM: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct Su3Structure<S> {
    f: AltForm<S>,
    psi_plus: AltForm<S>,
    psi_minus: AltForm<S>,
    phi: AltForm<S>,
    ft: Tensor<S>,
    ppt: Tensor<S>,
    pmt: Tensor<S>,
    phit: Tensor<S>,
    orientation: Orientation,
    metric: Metric<S>,
}

/// `Λ² = Λ²₁ ⊕ Λ²₆ ⊕ Λ²₈`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition2<S> {
    pub part_1: AltForm<S>,
    pub part_6: AltForm<S>,
    pub part_8: AltForm<S>,
}

/// `a = re·Ψ⁺ + im·Ψ⁻ + α∧F + part_12`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition3<S> {
    pub re: S,
    pub im: S,
    pub alpha: AltForm<S>,
    pub part_6: AltForm<S>,
    pub part_12: AltForm<S>,
}

impl<S: Scalar> Decomposition3<S> {
    /// The `(1,2)+(2,1)` part, `part_6 + part_12`.
    pub fn mixed_type(&self) -> AltForm<S> {
        &self.part_6 + &self.part_12
    }
}

/// Symmetric 2-tensor with `h(JX, JY) = -h(X, Y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMinus<S> {
    h: Tensor<S>,
}

impl<S: Scalar> SymMinus<S> {
    /// Accepts `h` only if it is symmetric and J-anti-invariant.
    pub fn new(h: Tensor<S>, s: &Su3Structure<S>, tol: Tolerance) -> Result<Self> {
        if h.rank() != 2 || h.dim() != DIM {
            return Err(Error::DimensionMismatch {
                expected: DIM,
                found: h.dim(),
            });
        }
        if !(&h - &h.permute(&[1, 0])).is_zero(tol) {
            return Err(Error::Subspace("h is not symmetric".into()));
        }
        if !(&h + &s.eval_j(&h, &[0, 1])).is_zero(tol) {
            return Err(Error::Subspace("h(J·,J·) != -h".into()));
        }
        Ok(Self { h })
    }

    /// `½(h - h(J·,J·))` of the symmetric part of `h`.
    pub fn project(h: &Tensor<S>, s: &Su3Structure<S>) -> Self {
        let half = S::from_ratio(1, 2);
        let sym = (h + &h.permute(&[1, 0])).scale(&half);
        let h = (&sym - &s.eval_j(&sym, &[0, 1])).scale(&half);
        Self { h }
    }

    pub fn tensor(&self) -> &Tensor<S> {
        &self.h
    }
}

/// Rank report for the linear map behind the 4-form vanishing criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub domain_dim: usize,
    pub rank: usize,
}

impl KernelReport {
    pub fn kernel_dim(&self) -> usize {
        self.domain_dim - self.rank
    }
}

impl<S: Scalar> Su3Structure<S> {
    /// `F = -e12 - e34 - e56`, `Ψ⁺ = -e135 + e236 + e146 + e245`,
    /// `Ψ⁻ = -e136 - e145 - e235 + e246` on the identity metric.
    pub fn standard() -> Self {
        let one = S::one;
        let f = AltForm::from_terms(DIM, &[(-one(), "12"), (-one(), "34"), (-one(), "56")]);
        let pp = AltForm::from_terms(
            DIM,
            &[
                (-one(), "135"),
                (one(), "236"),
                (one(), "146"),
                (one(), "245"),
            ],
        );
        let pm = AltForm::from_terms(
            DIM,
            &[
                (-one(), "136"),
                (-one(), "145"),
                (-one(), "235"),
                (one(), "246"),
            ],
        );
        Self::assemble(f, pp, pm, Orientation::Positive)
    }

    fn assemble(f: AltForm<S>, pp: AltForm<S>, pm: AltForm<S>, orientation: Orientation) -> Self {
        let phi = f
            .wedge(&f)
            .expect("same dimension")
            .scale(&S::from_ratio(1, 2));
        Self {
            ft: f.to_tensor(),
            ppt: pp.to_tensor(),
            pmt: pm.to_tensor(),
            phit: phi.to_tensor(),
            f,
            psi_plus: pp,
            psi_minus: pm,
            phi,
            orientation,
            metric: Metric::identity(DIM),
        }
    }

    /// Builds a structure from explicit forms on an orthonormal frame and
    /// validates it: `J² = -1`, compatibility relations, and the Hodge star
    /// table under `orientation`. A failing star table is reported as an
    /// orientation error instead of silently flipping the sign.
    pub fn from_forms(
        f: AltForm<S>,
        psi_plus: AltForm<S>,
        psi_minus: AltForm<S>,
        orientation: Orientation,
        tol: Tolerance,
    ) -> Result<Self> {
        for (name, form, grade) in [
            ("F", &f, 2),
            ("Psi+", &psi_plus, 3),
            ("Psi-", &psi_minus, 3),
        ] {
            if form.dim() != DIM {
                return Err(Error::DimensionMismatch {
                    expected: DIM,
                    found: form.dim(),
                });
            }
            if form.grade() != grade {
                return Err(Error::Structure(format!("{name} must have degree {grade}")));
            }
        }
        let s = Self::assemble(f, psi_plus, psi_minus, orientation);
        let bad: Vec<String> = s
            .compatibility(tol)
            .into_iter()
            .chain(s.iden_battery(tol))
            .filter(Check::failed)
            .map(|c| c.id)
            .collect();
        if !bad.is_empty() {
            return Err(Error::Structure(format!(
                "failing relations: {}",
                bad.join(", ")
            )));
        }
        let bad: Vec<String> = s
            .star_battery(tol)
            .into_iter()
            .filter(Check::failed)
            .map(|c| c.id)
            .collect();
        if !bad.is_empty() {
            return Err(Error::Orientation(format!(
                "Hodge star relations fail under {:?} orientation: {}",
                orientation,
                bad.join(", ")
            )));
        }
        Ok(s)
    }

    pub fn f(&self) -> &AltForm<S> {
        &self.f
    }

    pub fn psi_plus(&self) -> &AltForm<S> {
        &self.psi_plus
    }

    pub fn psi_minus(&self) -> &AltForm<S> {
        &self.psi_minus
    }

    pub fn phi(&self) -> &AltForm<S> {
        &self.phi
    }

    pub fn f_tensor(&self) -> &Tensor<S> {
        &self.ft
    }

    pub fn psi_plus_tensor(&self) -> &Tensor<S> {
        &self.ppt
    }

    pub fn psi_minus_tensor(&self) -> &Tensor<S> {
        &self.pmt
    }

    pub fn phi_tensor(&self) -> &Tensor<S> {
        &self.phit
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn metric(&self) -> &Metric<S> {
        &self.metric
    }

    /// `J^k_j` as a rank-2 tensor `[k, j]`.
    pub fn j(&self) -> &Tensor<S> {
        &self.ft
    }

    pub fn star(&self, a: &AltForm<S>) -> AltForm<S> {
        hodge_star(a, &self.metric, self.orientation).expect("identity metric")
    }

    /// `(JX)^k = F_{kj} X^j`.
    pub fn j_vector(&self, v: &[S]) -> Vec<S> {
        (0..DIM)
            .map(|k| {
                (0..DIM).fold(S::zero(), |acc, j| {
                    acc + self.ft.get(&[k, j]).clone() * v[j].clone()
                })
            })
            .collect()
    }

    /// Evaluates `t` with `J` inserted in each listed slot:
    /// `t(…, J e_i, …) = t(…, e_k, …) F_{ki}`.
    pub fn eval_j(&self, t: &Tensor<S>, slots: &[usize]) -> Tensor<S> {
        slots
            .iter()
            .fold(t.clone(), |acc, &s| acc.contract_slot(s, &self.ft))
    }

    /// `Jβ = (-1)^p β(J·, …, J·)`.
    pub fn j_action(&self, a: &AltForm<S>) -> AltForm<S> {
        let p = a.grade();
        if p == 0 {
            return a.clone();
        }
        let slots: Vec<usize> = (0..p).collect();
        let t = self.eval_j(&a.to_tensor(), &slots);
        let out = AltForm::from_tensor(&t);
        if p % 2 == 1 {
            -&out
        } else {
            out
        }
    }

    /// `J² = -1`, orthogonality of `J`, `F∧Ψ^± = 0`, `Ψ⁺∧Ψ⁻ = -⅔F³`.
    pub fn compatibility(&self, tol: Tolerance) -> Vec<Check<S>> {
        let id = Tensor::identity(DIM);
        let jj = einsum("ip,pj->ij", &[&self.ft, &self.ft]);
        let gjj = einsum("ka,kb->ab", &[&self.ft, &self.ft]);
        let f3 = self.f.wedge(&self.f).unwrap().wedge(&self.f).unwrap();
        vec![
            Check::tensors("j_squared", &jj, &(-&id), tol),
            Check::tensors("j_orthogonal", &gjj, &id, tol),
            Check::forms(
                "f_wedge_psi_plus",
                &self.f.wedge(&self.psi_plus).unwrap(),
                &AltForm::zero(DIM, 5),
                tol,
            ),
            Check::forms(
                "f_wedge_psi_minus",
                &self.f.wedge(&self.psi_minus).unwrap(),
                &AltForm::zero(DIM, 5),
                tol,
            ),
            Check::forms(
                "psi_plus_wedge_psi_minus",
                &self.psi_plus.wedge(&self.psi_minus).unwrap(),
                &f3.scale(&S::from_ratio(-2, 3)),
                tol,
            ),
        ]
    }

    /// The algebraic identities between `F`, `Ψ^±`, `Φ`, one record per
    /// equation.
    pub fn iden_battery(&self, tol: Tolerance) -> Vec<Check<S>> {
        let (f, pp, pm, phi) = (&self.ft, &self.ppt, &self.pmt, &self.phit);
        let d = Tensor::identity(DIM);
        let z1 = Tensor::zeros(DIM, 1);
        let int = S::from_int;
        let rows: Vec<(&str, Tensor<S>, Tensor<S>)> = vec![
            (
                "phi_expansion",
                phi.clone(),
                &(&einsum("js,lm->jslm", &[f, f]) + &einsum("sl,jm->jslm", &[f, f]))
                    + &einsum("lj,sm->jslm", &[f, f]),
            ),
            (
                "psi_plus_trace_f",
                einsum("ipq,pq->i", &[pp, f]),
                z1.clone(),
            ),
            (
                "psi_minus_trace_f",
                einsum("ipq,pq->i", &[pm, f]),
                z1.clone(),
            ),
            (
                "phi_trace_psi_plus",
                einsum("ijkl,jkl->i", &[phi, pp]),
                z1.clone(),
            ),
            ("phi_trace_psi_minus", einsum("ijkl,jkl->i", &[phi, pm]), z1),
            ("f_squared", einsum("ip,pj->ij", &[f, f]), -&d),
            ("psi_plus_f", einsum("ijs,sk->ijk", &[pp, f]), -pm),
            ("psi_minus_f", einsum("ijs,sk->ijk", &[pm, f]), pp.clone()),
            (
                "psi_plus_psi_minus",
                einsum("ipq,jpq->ij", &[pp, pm]),
                f.scale(&int(-4)),
            ),
            (
                "psi_plus_psi_plus",
                einsum("ipq,jpq->ij", &[pp, pp]),
                d.scale(&int(4)),
            ),
            (
                "psi_minus_psi_minus",
                einsum("ipq,jpq->ij", &[pm, pm]),
                d.scale(&int(4)),
            ),
            (
                "psi_plus_psi_minus_4",
                einsum("kls,ijs->klij", &[pp, pm]),
                &(&(&einsum("kj,li->klij", &[&d, f]) + &einsum("li,kj->klij", &[&d, f]))
                    - &einsum("ki,lj->klij", &[&d, f]))
                    - &einsum("lj,ki->klij", &[&d, f]),
            ),
            (
                "psi_plus_psi_plus_4",
                einsum("kls,ijs->klij", &[pp, pp]),
                &(&(&einsum("kj,li->klij", &[f, f]) - &einsum("li,kj->klij", &[&d, &d]))
                    - &einsum("ki,lj->klij", &[f, f]))
                    + &einsum("lj,ki->klij", &[&d, &d]),
            ),
            ("phi_f", einsum("ijkl,kl->ij", &[phi, f]), f.scale(&int(4))),
            (
                "phi_psi_plus",
                einsum("ijkl,klp->ijp", &[phi, pp]),
                pp.scale(&int(2)),
            ),
            (
                "phi_psi_minus",
                einsum("ijkl,klp->ijp", &[phi, pm]),
                pm.scale(&int(2)),
            ),
            (
                "phi_psi_plus_5",
                einsum("ijkl,lqp->ijkqp", &[phi, pp]),
                -&(&(&einsum("ij,pqk->ijkqp", &[f, pm]) + &einsum("jk,pqi->ijkqp", &[f, pm]))
                    + &einsum("ki,pqj->ijkqp", &[f, pm])),
            ),
            (
                "phi_psi_minus_5",
                einsum("ijkl,lqp->ijkqp", &[phi, pm]),
                &(&einsum("ij,pqk->ijkqp", &[f, pp]) + &einsum("jk,pqi->ijkqp", &[f, pp]))
                    + &einsum("ki,pqj->ijkqp", &[f, pp]),
            ),
            (
                "phi_phi",
                einsum("ijkl,rjkl->ir", &[phi, phi]),
                d.scale(&int(12)),
            ),
            (
                "phi_phi_4",
                einsum("ijkl,klqr->ijqr", &[phi, phi]),
                (&(&einsum("ij,qr->ijqr", &[f, f]) - &einsum("jq,ir->ijqr", &[&d, &d]))
                    + &einsum("iq,jr->ijqr", &[&d, &d]))
                    .scale(&int(2)),
            ),
        ];
        rows.into_iter()
            .map(|(id, lhs, rhs)| Check::tensors(id, &lhs, &rhs, tol))
            .collect()
    }

    /// `½ β_{ij} Ψ_{ijk}` for a 2-form `β` and 3-form `Ψ`.
    fn contract_2(&self, beta: &AltForm<S>, psi: &Tensor<S>) -> AltForm<S> {
        let t = einsum("ij,ijk->k", &[&beta.to_tensor(), psi]).scale(&S::from_ratio(1, 2));
        AltForm::from_tensor(&t)
    }

    /// Hodge star relations; 1- and 2-form rows are checked on every basis
    /// element.
    pub fn star_battery(&self, tol: Tolerance) -> Vec<Check<S>> {
        let mut out = vec![
            Check::forms("star_phi", &self.star(&self.phi), &-&self.f, tol),
            Check::forms("star_f", &self.star(&self.f), &-&self.phi, tol),
            Check::forms(
                "star_psi_plus",
                &self.star(&self.psi_plus),
                &self.psi_minus,
                tol,
            ),
            Check::forms(
                "star_psi_minus",
                &self.star(&self.psi_minus),
                &-&self.psi_plus,
                tol,
            ),
        ];
        let basis1: Vec<AltForm<S>> = (0..DIM)
            .map(|i| AltForm::monomial(DIM, S::one(), &[i]))
            .collect();
        let unit = |i: usize| {
            let mut v = vec![S::zero(); DIM];
            v[i] = S::one();
            v
        };
        let row1 = |f: &dyn Fn(usize, &AltForm<S>) -> S| {
            max_residual(basis1.iter().enumerate().map(|(i, a)| f(i, a)))
        };
        let wedge_star = |a: &AltForm<S>, b: &AltForm<S>| self.star(&a.wedge(b).unwrap());
        out.push(Check::zero(
            "star_alpha_f",
            row1(&|i, a| {
                (&wedge_star(a, &self.f) + &self.phi.interior(&unit(i)).unwrap()).max_abs()
            }),
            tol,
        ));
        out.push(Check::zero(
            "star_alpha_phi",
            row1(&|_, a| (&wedge_star(a, &self.phi) - &self.j_action(a)).max_abs()),
            tol,
        ));
        out.push(Check::zero(
            "j_alpha_f",
            row1(&|i, a| (&self.j_action(a) + &self.f.interior(&unit(i)).unwrap()).max_abs()),
            tol,
        ));
        out.push(Check::zero(
            "star_alpha_psi_plus",
            row1(&|i, a| {
                (&wedge_star(a, &self.psi_plus) + &self.psi_minus.interior(&unit(i)).unwrap())
                    .max_abs()
            }),
            tol,
        ));
        out.push(Check::zero(
            "star_alpha_psi_minus",
            row1(&|i, a| {
                (&wedge_star(a, &self.psi_minus) - &self.psi_plus.interior(&unit(i)).unwrap())
                    .max_abs()
            }),
            tol,
        ));
        let basis2: Vec<AltForm<S>> = increasing_tuples(DIM, 2)
            .iter()
            .map(|idx| AltForm::monomial(DIM, S::one(), idx))
            .collect();
        out.push(Check::zero(
            "star_beta_psi_plus",
            max_residual(basis2.iter().map(|b| {
                (&wedge_star(b, &self.psi_plus) - &self.contract_2(b, &self.pmt)).max_abs()
            })),
            tol,
        ));
        out.push(Check::zero(
            "star_beta_psi_minus",
            max_residual(basis2.iter().map(|b| {
                (&wedge_star(b, &self.psi_minus) + &self.contract_2(b, &self.ppt)).max_abs()
            })),
            tol,
        ));
        out
    }

    pub fn decompose_2form(&self, a: &AltForm<S>) -> Result<Decomposition2<S>> {
        if a.grade() != 2 {
            return Err(Error::GradeMismatch(2, a.grade()));
        }
        let half = S::from_ratio(1, 2);
        let c = a.full_contraction(&self.f)? / self.f.norm_sq();
        let part_1 = self.f.scale(&c);
        let ja = self.j_action(a);
        let part_6 = (a - &ja).scale(&half);
        let part_8 = &(a + &ja).scale(&half) - &part_1;
        Ok(Decomposition2 {
            part_1,
            part_6,
            part_8,
        })
    }

    pub fn decompose_3form(&self, a: &AltForm<S>) -> Result<Decomposition3<S>> {
        if a.grade() != 3 {
            return Err(Error::GradeMismatch(3, a.grade()));
        }
        let re = a.full_contraction(&self.psi_plus)? / self.psi_plus.norm_sq();
        let im = a.full_contraction(&self.psi_minus)? / self.psi_minus.norm_sq();
        // For a = α∧F one has a_{ijk} F_{jk} = 4 α_i; the other summands
        // are annihilated by this trace.
        let alpha_t = einsum("ijk,jk->i", &[&a.to_tensor(), &self.ft]).scale(&S::from_ratio(1, 4));
        let alpha = AltForm::from_tensor(&alpha_t);
        let part_6 = alpha.wedge(&self.f)?;
        let part_12 = &(&(a - &self.psi_plus.scale(&re)) - &self.psi_minus.scale(&im)) - &part_6;
        Ok(Decomposition3 {
            re,
            im,
            alpha,
            part_6,
            part_12,
        })
    }

    /// `γ ∧ F = γ ∧ Ψ⁺ = γ ∧ Ψ⁻ = 0`.
    pub fn in_lambda3_12(&self, b: &AltForm<S>, tol: Tolerance) -> bool {
        b.grade() == 3
            && [&self.f, &self.psi_plus, &self.psi_minus]
                .iter()
                .all(|w| b.wedge(w).map(|x| x.is_zero(tol)).unwrap_or(false))
    }

    /// `γ(h)_{ijk} = h_{ip}Ψ⁺_{pjk} + h_{jp}Ψ⁺_{pki} + h_{kp}Ψ⁺_{pij}`.
    pub fn gamma(&self, h: &SymMinus<S>) -> AltForm<S> {
        let h = &h.h;
        let p = &self.ppt;
        let t = &(&einsum("ip,pjk->ijk", &[h, p]) + &einsum("jp,pki->ijk", &[h, p]))
            + &einsum("kp,pij->ijk", &[h, p]);
        AltForm::from_tensor(&t)
    }

    /// `h_{im} = ¼ B_{ijk} Ψ⁺_{mjk}` for `B ∈ Λ³₁₂`.
    pub fn gamma_inv(&self, b: &AltForm<S>, tol: Tolerance) -> Result<SymMinus<S>> {
        if !self.in_lambda3_12(b, tol) {
            return Err(Error::Subspace(
                "3-form is not in the 12-dimensional summand".into(),
            ));
        }
        let h = einsum("ijk,mjk->im", &[&b.to_tensor(), &self.ppt]).scale(&S::from_ratio(1, 4));
        SymMinus::new(h, self, tol)
    }

    /// Ranks of the projections onto `Λ²₁, Λ²₆, Λ²₈`.
    pub fn lambda2_ranks(&self, tol: Tolerance) -> Result<[usize; 3]> {
        let basis = form_basis::<S>(2);
        let mut cols: [Vec<Vec<S>>; 3] = Default::default();
        for b in &basis {
            let d = self.decompose_2form(b)?;
            for (k, part) in [&d.part_1, &d.part_6, &d.part_8].into_iter().enumerate() {
                cols[k].push(coords(part));
            }
        }
        Ok(cols.map(|c| Matrix::from_columns(&c).rank(tol)))
    }

    /// Ranks of the projections onto `Λ³_Re, Λ³_Im, Λ³₆, Λ³₁₂`.
    pub fn lambda3_ranks(&self, tol: Tolerance) -> Result<[usize; 4]> {
        let basis = form_basis::<S>(3);
        let mut cols: [Vec<Vec<S>>; 4] = Default::default();
        for b in &basis {
            let d = self.decompose_3form(b)?;
            let parts = [
                self.psi_plus.scale(&d.re),
                self.psi_minus.scale(&d.im),
                d.part_6.clone(),
                d.part_12.clone(),
            ];
            for (k, part) in parts.iter().enumerate() {
                cols[k].push(coords(part));
            }
        }
        Ok(cols.map(|c| Matrix::from_columns(&c).rank(tol)))
    }

    /// Dimension of `{γ : γ∧F = γ∧Ψ⁺ = γ∧Ψ⁻ = 0}`, computed as a nullspace
    /// independently of the projector.
    pub fn lambda3_12_dim(&self, tol: Tolerance) -> usize {
        let basis = form_basis::<S>(3);
        let cols: Vec<Vec<S>> = basis
            .iter()
            .map(|b| {
                let mut v = coords(&b.wedge(&self.f).unwrap());
                v.extend(coords(&b.wedge(&self.psi_plus).unwrap()));
                v.extend(coords(&b.wedge(&self.psi_minus).unwrap()));
                v
            })
            .collect();
        Matrix::from_columns(&cols).nullspace(tol).len()
    }

    /// Dimension of `{φ : Jφ = φ, φ∧F² = 0}`.
    pub fn lambda2_8_dim(&self, tol: Tolerance) -> usize {
        let basis = form_basis::<S>(2);
        let f2 = self.f.wedge(&self.f).unwrap();
        let cols: Vec<Vec<S>> = basis
            .iter()
            .map(|b| {
                let mut v = coords(&(&self.j_action(b) - b));
                v.extend(coords(&b.wedge(&f2).unwrap()));
                v
            })
            .collect();
        Matrix::from_columns(&cols).nullspace(tol).len()
    }

    /// Rank of `A ↦ (components of e_i ⌟ A outside Λ³₁₂)_i` on `Λ⁴`.
    /// Rank 15 means only `A = 0` has every contraction in `Λ³₁₂`.
    pub fn prop_4form_kernel(&self, tol: Tolerance) -> Result<KernelReport> {
        let basis = form_basis::<S>(4);
        let mut cols = Vec::with_capacity(basis.len());
        for a in &basis {
            let mut col = Vec::new();
            for i in 0..DIM {
                let d = self.decompose_3form(&a.interior_basis(i)?)?;
                col.push(d.re);
                col.push(d.im);
                col.extend(coords(&d.alpha));
            }
            cols.push(col);
        }
        Ok(KernelReport {
            domain_dim: basis.len(),
            rank: Matrix::from_columns(&cols).rank(tol),
        })
    }

    /// `a(X,Y,Z) - a(JX,JY,Z) - a(JX,Y,JZ) - a(X,JY,JZ)`; vanishes on forms of
    /// type `(1,2)+(2,1)`.
    pub fn mixed_type_residual(&self, a: &AltForm<S>) -> S {
        let t = a.to_tensor();
        let rhs =
            &(&self.eval_j(&t, &[0, 1]) + &self.eval_j(&t, &[0, 2])) + &self.eval_j(&t, &[1, 2]);
        (&t - &rhs).max_abs()
    }

    /// `a(Je_k, Je_i, e_j) a(e_k, e_i, e_j) - ⅓‖a‖²`.
    pub fn norm_h_residual(&self, a: &AltForm<S>) -> S {
        let t = a.to_tensor();
        let lhs = einsum("abj,ak,bi,kij->", &[&t, &self.ft, &self.ft, &t]);
        lhs.get(&[]).clone() - a.norm_sq() / S::from_int(3)
    }
}

fn form_basis<S: Scalar>(p: usize) -> Vec<AltForm<S>> {
    increasing_tuples(DIM, p)
        .iter()
        .map(|idx| AltForm::monomial(DIM, S::one(), idx))
        .collect()
}

/// Components on increasing tuples in lexicographic order.
pub fn coords<S: Scalar>(a: &AltForm<S>) -> Vec<S> {
    increasing_tuples(a.dim(), a.grade())
        .iter()
        .map(|idx| a.get(idx))
        .collect()
}

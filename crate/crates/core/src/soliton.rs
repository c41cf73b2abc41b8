//! Generalized Ricci soliton residuals, the second Bianchi and divergence
//! identities, Lie derivatives along left-invariant fields and
//! `∇`-parallel vector fields.

use crate::check::{max_residual, Check};
use crate::curvature::CurvatureData;
use crate::form::AltForm;
use crate::lie::{Connection, LieAlgebra};
use crate::scalar::{Scalar, Tolerance};
use crate::su3::Su3Structure;
use crate::tensor::{einsum, Tensor};
use crate::torsion::TorsionData;

/// `L_V t = -Σ_slots t(…, [V, e_i], …)` for left-invariant `V` and `t`.
pub fn lie_derivative<S: Scalar>(alg: &LieAlgebra<S>, v: &[S], t: &Tensor<S>) -> Tensor<S> {
    let m = ad_matrix(alg, v);
    let mut out = Tensor::zeros(t.dim(), t.rank());
    for slot in 0..t.rank() {
        out = &out - &t.contract_slot(slot, &m);
    }
    out
}

/// `[V, e_i] = Σ_k M[k, i] e_k`.
fn ad_matrix<S: Scalar>(alg: &LieAlgebra<S>, v: &[S]) -> Tensor<S> {
    einsum("kai,a->ki", &[alg.structure_constants(), &vector(v)])
}

fn vector<S: Scalar>(v: &[S]) -> Tensor<S> {
    Tensor::from_fn(v.len(), 1, |i| v[i[0]].clone())
}

/// `(L_V J)e_j = [V, J e_j] - J[V, e_j]` as `[k, j]`.
pub fn lie_derivative_of_j<S: Scalar>(
    alg: &LieAlgebra<S>,
    v: &[S],
    s: &Su3Structure<S>,
) -> Tensor<S> {
    let m = ad_matrix(alg, v);
    let j = s.j();
    &einsum("km,mj->kj", &[&m, j]) - &einsum("km,mj->kj", &[j, &m])
}

/// `(X ⌟ T)_{ij} = X_s T_{sij}`.
fn contract_first<S: Scalar>(x: &[S], t: &Tensor<S>) -> Tensor<S> {
    einsum("s,sij->ij", &[&vector(x), t])
}

/// `-2∇_i Ric_{ji} + δT_{ab}T_{abj} + ⅙T_{abc}dT_{jabc}`; the gradient
/// terms of the identity vanish on left-invariant data.
pub fn second_bianchi_residual<S: Scalar>(cd: &CurvatureData<S>) -> S {
    let n_ric = cd.connection.covariant_derivative(&cd.ricci.ric);
    let tt = cd.t.to_tensor();
    let a = einsum("iji->j", &[&n_ric]).scale(&S::from_int(-2));
    let b = einsum("ab,abj->j", &[&cd.ricci.delta_t.to_tensor(), &tt]);
    let c = einsum("abc,jabc->j", &[&tt, &cd.d_t.to_tensor()]).scale(&S::from_ratio(1, 6));
    (&(&a + &b) + &c).max_abs()
}

/// `∇_i δT_{ij} - ½ δT_{ia} T_{iaj}`.
pub fn div_delta_t_residual<S: Scalar>(cd: &CurvatureData<S>) -> S {
    let dt = cd.ricci.delta_t.to_tensor();
    let div = einsum("iij->j", &[&cd.connection.covariant_derivative(&dt)]);
    let corr = einsum("ia,iaj->j", &[&dt, &cd.t.to_tensor()]).scale(&S::from_ratio(1, 2));
    (&div - &corr).max_abs()
}

/// A candidate soliton vector field, optionally with the 2-form `B` or the
/// constant gradient `df`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolitonCandidate<S> {
    pub x: Vec<S>,
    pub b: Option<AltForm<S>>,
    pub df: Option<Vec<S>>,
}

impl<S: Scalar> SolitonCandidate<S> {
    pub fn zero(dim: usize) -> Self {
        Self {
            x: vec![S::zero(); dim],
            b: None,
            df: None,
        }
    }
}

/// Residuals of `Ricᵍ = ¼T² - ½L_Xg`, `δT = -X⌟T` (or `δT = B` with
/// `d(B + X⌟T) = 0`) and `dT = 0`, and in gradient mode of
/// `Ric = -∇df`, `δT = -df⌟T`.
pub fn soliton_residuals<S: Scalar>(
    alg: &LieAlgebra<S>,
    cd: &CurvatureData<S>,
    cand: &SolitonCandidate<S>,
    tol: Tolerance,
) -> Vec<Check<S>> {
    let n = alg.dim();
    let tt = cd.t.to_tensor();
    let rc = &cd.ricci;
    let half = S::from_ratio(1, 2);
    let lxg = lie_derivative(alg, &cand.x, &Tensor::identity(n));
    let metric_eq = &(&rc.ric_g - &rc.t_squared.scale(&S::from_ratio(1, 4))) + &lxg.scale(&half);
    let xt = contract_first(&cand.x, &tt);
    let dtt = rc.delta_t.to_tensor();
    let mut out = vec![Check::zero("soliton_metric", metric_eq.max_abs(), tol)];
    match &cand.b {
        None => out.push(Check::tensors("soliton_codifferential", &dtt, &(-&xt), tol)),
        Some(b) => {
            out.push(Check::tensors(
                "soliton_codifferential",
                &dtt,
                &b.to_tensor(),
                tol,
            ));
            let closed = alg.d(&(b + &AltForm::from_tensor(&xt)));
            out.push(Check::zero("soliton_b_closed", closed.max_abs(), tol));
        }
    }
    out.push(Check::zero("soliton_closed_torsion", cd.d_t.max_abs(), tol));
    if let Some(df) = &cand.df {
        let exact = alg.d(&AltForm::from_vector(df));
        out.push(Check::zero("gradient_df_closed", exact.max_abs(), tol));
        let hess = cd.connection.covariant_derivative(&vector(df));
        out.push(Check::tensors("gradient_ricci", &rc.ric, &(-&hess), tol));
        let dft = contract_first(df, &tt);
        out.push(Check::tensors(
            "gradient_codifferential",
            &dtt,
            &(-&dft),
            tol,
        ));
    }
    out
}

/// Basis of constant vector fields with `∇V = 0`.
pub fn parallel_vector_fields<S: Scalar>(conn: &Connection<S>, tol: Tolerance) -> Vec<Vec<S>> {
    conn.parallel_vectors(tol)
}

/// Structure preservation by a `∇`-parallel field `V`. The identities
/// that need `dθ = V⌟T` on a closed ACYT input are marked vacuous
/// elsewhere.
pub fn parallel_field_battery<S: Scalar>(
    alg: &LieAlgebra<S>,
    s: &Su3Structure<S>,
    tor: &TorsionData<S>,
    cd: &CurvatureData<S>,
    v: &[S],
    label: &str,
    tol: Tolerance,
) -> Vec<Check<S>> {
    let tt = tor.torsion_tensor();
    let dtheta = alg.d(&tor.theta).to_tensor();
    let vt = contract_first(v, &tt);
    let determines = (&dtheta - &vt).is_zero(tol);
    let closed_acyt = tor.is_acyt() && cd.d_t.is_zero(tol);
    let is_lee = AltForm::from_vector(v) == tor.theta;
    let hyp = closed_acyt && determines;
    let conn = &tor.connection;
    let id = |name: &str| format!("parallel_field_{label}_{name}");
    let lie = |t: &Tensor<S>| lie_derivative(alg, v, t);
    let mut out = Vec::new();

    out.push(Check::zero(
        id("killing"),
        lie(&Tensor::identity(alg.dim())).max_abs(),
        tol,
    ));
    let jv = s.j_vector(v);
    out.push(Check::zero(
        id("j_parallel"),
        conn.derivative_of_vector(&jv).max_abs(),
        tol,
    ));
    // L_V t = ∇_V t + Σ_slots t(…, T(V, e_i), …) when ∇V = 0.
    let expansion = |t: &Tensor<S>| {
        let nt = conn.covariant_derivative(t);
        let mut src = vec![0; t.rank() + 1];
        let mut rhs = Tensor::from_fn(t.dim(), t.rank(), |idx| {
            src[1..].copy_from_slice(idx);
            (0..v.len()).fold(S::zero(), |acc, a| {
                src[0] = a;
                acc + v[a].clone() * nt.get(&src).clone()
            })
        });
        for slot in 0..t.rank() {
            rhs = &rhs + &t.contract_slot(slot, &vt.permute(&[1, 0]));
        }
        (&lie(t) - &rhs).max_abs()
    };
    out.push(Check::zero(
        id("lie_expansion"),
        max_residual([
            expansion(s.f_tensor()),
            expansion(s.psi_plus_tensor()),
            expansion(&tt),
        ]),
        tol,
    ));
    out.push(
        Check::tensors(id("dtheta"), &dtheta, &vt, tol)
            .given(closed_acyt && is_lee, "closed ACYT with V = θ"),
    );
    let zero_lie = |name: &str, t: &Tensor<S>| {
        Check::zero(id(name), lie(t).max_abs(), tol).given(hyp, "closed ACYT with dθ = V⌟T")
    };
    out.push(zero_lie("lie_f", s.f_tensor()));
    out.push(
        Check::zero(id("lie_j"), lie_derivative_of_j(alg, v, s).max_abs(), tol)
            .given(hyp, "closed ACYT with dθ = V⌟T"),
    );
    out.push(zero_lie("lie_psi_plus", s.psi_plus_tensor()));
    out.push(zero_lie("lie_psi_minus", s.psi_minus_tensor()));
    out.push(zero_lie("lie_n", &tor.n.to_tensor()));
    let lieps = |psi: &Tensor<S>| {
        let a = einsum("is,sjk->ijk", &[&dtheta, psi]);
        let sum = &(&a + &a.permute(&[1, 2, 0])) + &a.permute(&[2, 0, 1]);
        (&lie(psi) - &sum).max_abs()
    };
    out.push(
        Check::zero(
            id("lie_psi_formula"),
            max_residual([lieps(s.psi_plus_tensor()), lieps(s.psi_minus_tensor())]),
            tol,
        )
        .given(hyp, "closed ACYT with dθ = V⌟T"),
    );
    out
}

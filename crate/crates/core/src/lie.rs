//! Left-invariant geometry on a Lie algebra with a fixed orthonormal frame:
//! structure constants, the Chevalley–Eilenberg differential, connection
//! coefficients, covariant derivatives and curvature.
//!
//! `[e_i, e_j] = c^k_{ij} e_k` is stored as `c[k, i, j]`. For 1-forms
//! `dα(X, Y) = -α([X, Y])`, so `de_k = -Σ_{i<j} c^k_{ij} e_{ij}`.

use crate::error::{Error, Result};
use crate::form::{increasing_tuples, AltForm};
use crate::linalg::Matrix;
use crate::scalar::{Scalar, Tolerance};
use crate::tensor::{einsum, Tensor};

#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<S> {
    c: Tensor<S>,
}

impl<S: Scalar> LieAlgebra<S> {
    pub fn abelian(dim: usize) -> Self {
        Self {
            c: Tensor::zeros(dim, 3),
        }
    }

    /// Validates antisymmetry and the Jacobi identity.
    pub fn from_structure_constants(c: Tensor<S>, tol: Tolerance) -> Result<Self> {
        if c.rank() != 3 {
            return Err(Error::Parse(
                "structure constants need three indices".into(),
            ));
        }
        let n = c.dim();
        for k in 0..n {
            for i in 0..n {
                for j in i..n {
                    let s = c.get(&[k, i, j]).clone() + c.get(&[k, j, i]).clone();
                    if !s.is_negligible(tol) {
                        return Err(Error::NotAntisymmetric(i + 1, j + 1));
                    }
                }
            }
        }
        let alg = Self { c };
        if let Some((i, j, k)) = alg.jacobi_violation(tol) {
            return Err(Error::Jacobi(i + 1, j + 1, k + 1));
        }
        Ok(alg)
    }

    /// From the differentials `de_k` of the dual coframe.
    pub fn from_differentials(de: &[AltForm<S>], tol: Tolerance) -> Result<Self> {
        let n = de.len();
        let mut c = Tensor::zeros(n, 3);
        for (k, form) in de.iter().enumerate() {
            if form.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: form.dim(),
                });
            }
            if form.grade() != 2 {
                return Err(Error::GradeMismatch(2, form.grade()));
            }
            for (idx, v) in form.terms() {
                c.set(&[k, idx[0], idx[1]], -v.clone());
                c.set(&[k, idx[1], idx[0]], v.clone());
            }
        }
        Self::from_structure_constants(c, tol)
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    /// `c[k, i, j] = c^k_{ij}`.
    pub fn structure_constants(&self) -> &Tensor<S> {
        &self.c
    }

    /// `c_{ijk} = g([e_i, e_j], e_k)` in the orthonormal frame.
    pub fn lowered(&self) -> Tensor<S> {
        self.c.permute(&[2, 0, 1])
    }

    pub fn is_abelian(&self) -> bool {
        self.c.data().iter().all(|v| v.is_zero())
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c.get(&[k, i, j]);
                    if !c.is_zero() {
                        *o += c.clone() * xy.clone();
                    }
                }
            }
        }
        out
    }

    /// First basis triple with `[[e_i,e_j],e_k] + cyclic ≠ 0`.
    pub fn jacobi_violation(&self, tol: Tolerance) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        // J^l_{ijk} = c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj}
        let a = einsum("mij,lmk->ijkl", &[&self.c, &self.c]);
        let jac = &(&a + &a.permute(&[1, 2, 0, 3])) + &a.permute(&[2, 0, 1, 3]);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if (0..n).any(|l| !jac.get(&[i, j, k, l]).is_negligible(tol)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `d e_k`.
    pub fn differential_of_basis(&self, k: usize) -> AltForm<S> {
        self.d(&AltForm::monomial(self.dim(), S::one(), &[k]))
    }

    /// `d(de_k) = 0` for every `k`; equivalent to the Jacobi identity.
    pub fn d_squared_vanishes(&self, tol: Tolerance) -> bool {
        (0..self.dim()).all(|k| self.d(&self.differential_of_basis(k)).is_zero(tol))
    }

    /// Chevalley–Eilenberg differential:
    /// `(dα)_{i_0…i_p} = Σ_{r<s} (-1)^{r+s} c^m_{i_r i_s} α_{m, i_0…î_r…î_s…i_p}`.
    pub fn d(&self, a: &AltForm<S>) -> AltForm<S> {
        let n = self.dim();
        let p = a.grade();
        let mut out = AltForm::zero(n, p + 1);
        if p == 0 || p >= n {
            return out;
        }
        let mut idx = Vec::with_capacity(p);
        for tuple in increasing_tuples(n, p + 1) {
            let mut v = S::zero();
            for r in 0..=p {
                for s in r + 1..=p {
                    for m in 0..n {
                        let c = self.c.get(&[m, tuple[r], tuple[s]]);
                        if c.is_zero() {
                            continue;
                        }
                        idx.clear();
                        idx.push(m);
                        idx.extend(
                            tuple
                                .iter()
                                .enumerate()
                                .filter(|&(t, _)| t != r && t != s)
                                .map(|(_, &x)| x),
                        );
                        let term = c.clone() * a.get(&idx);
                        if (r + s) % 2 == 0 {
                            v += term;
                        } else {
                            v -= term;
                        }
                    }
                }
            }
            out.add_component(&tuple, v);
        }
        out
    }

    /// Structure constants in the frame `e'_a = A_{ia} e_i`.
    pub fn change_frame(&self, a: &Matrix<S>, tol: Tolerance) -> Result<Self> {
        let inv = a
            .inverse(tol)
            .ok_or_else(|| Error::Structure("frame change is singular".into()))?;
        let at = matrix_tensor(a);
        let it = matrix_tensor(&inv);
        let c = einsum("kij,ia,jb,ck->cab", &[&self.c, &at, &at, &it]);
        Ok(Self { c })
    }

    /// Multiplies every bracket by `s`.
    pub fn scaled(&self, s: &S) -> Self {
        Self { c: self.c.scale(s) }
    }

    /// Levi-Civita connection of the orthonormal frame, from the Koszul
    /// formula `Γ_{ijk} = ½(c_{ijk} - c_{jki} + c_{kij})`.
    pub fn levi_civita(&self) -> Connection<S> {
        let cl = self.lowered();
        let g = &(&cl - &cl.permute(&[1, 2, 0])) + &cl.permute(&[2, 0, 1]);
        Connection {
            gamma: g.scale(&S::from_ratio(1, 2)),
        }
    }
}

pub(crate) fn matrix_tensor<S: Scalar>(m: &Matrix<S>) -> Tensor<S> {
    Tensor::from_fn(m.rows(), 2, |i| m[(i[0], i[1])].clone())
}

/// Connection coefficients `Γ_{ijk} = g(∇_{e_i} e_j, e_k)` of a
/// left-invariant connection in an orthonormal frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection<S> {
    gamma: Tensor<S>,
}

impl<S: Scalar> Connection<S> {
    pub fn new(gamma: Tensor<S>) -> Self {
        Self { gamma }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            gamma: Tensor::zeros(dim, 3),
        }
    }

    /// `Γ + ½ T` for a 3-form `T`.
    pub fn plus_half(&self, t: &Tensor<S>) -> Self {
        Self {
            gamma: &self.gamma + &t.scale(&S::from_ratio(1, 2)),
        }
    }

    pub fn coefficients(&self) -> &Tensor<S> {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `Γ_{ijk} + Γ_{ikj}`; zero for metric connections.
    pub fn metric_defect(&self) -> S {
        (&self.gamma + &self.gamma.permute(&[0, 2, 1])).max_abs()
    }

    /// `T_{ijk} = Γ_{ijk} - Γ_{jik} - c_{ijk}`.
    pub fn torsion(&self, alg: &LieAlgebra<S>) -> Tensor<S> {
        &(&self.gamma - &self.gamma.permute(&[1, 0, 2])) - &alg.lowered()
    }

    /// `(∇_i t)_{a…} = -Σ_slots Γ_{i a m} t_{…m…}`; the derivative index is
    /// placed first.
    pub fn covariant_derivative(&self, t: &Tensor<S>) -> Tensor<S> {
        let r = t.rank();
        let n = self.dim();
        let mut out = Tensor::zeros(n, r + 1);
        let mut src = vec![0; r];
        for slot in 0..r {
            let term = Tensor::from_fn(n, r + 1, |idx| {
                let i = idx[0];
                src.copy_from_slice(&idx[1..]);
                let a = idx[1 + slot];
                let mut v = S::zero();
                for m in 0..n {
                    let g = self.gamma.get(&[i, a, m]);
                    if g.is_zero() {
                        continue;
                    }
                    src[slot] = m;
                    v += g.clone() * t.get(&src).clone();
                }
                v
            });
            out = &out - &term;
        }
        out
    }

    /// `(∇_i V)_k = Γ_{ijk} V_j` for a constant vector.
    pub fn derivative_of_vector(&self, v: &[S]) -> Tensor<S> {
        let n = self.dim();
        Tensor::from_fn(n, 2, |idx| {
            (0..n).fold(S::zero(), |acc, j| {
                acc + self.gamma.get(&[idx[0], j, idx[1]]).clone() * v[j].clone()
            })
        })
    }

    /// `R_{ijkl} = g(R(e_i, e_j) e_k, e_l)` with
    /// `R(X,Y) = [∇_X, ∇_Y] - ∇_{[X,Y]}`.
    pub fn curvature(&self, alg: &LieAlgebra<S>) -> Tensor<S> {
        let g = &self.gamma;
        let a = einsum("jkm,iml->ijkl", &[g, g]);
        let b = einsum("ikm,jml->ijkl", &[g, g]);
        let c = einsum("mij,mkl->ijkl", &[alg.structure_constants(), g]);
        &(&a - &b) - &c
    }

    /// Basis of constant vectors `V` with `∇V = 0`.
    pub fn parallel_vectors(&self, tol: Tolerance) -> Vec<Vec<S>> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|j| self.gamma.get(&[i, j, k]).clone()).collect());
            }
        }
        Matrix::from_rows(rows).nullspace(tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{nilmanifold_4_1 as nil41, su2_su2};
    use crate::scalar::{q, Rational};

    #[test]
    fn differentials_roundtrip() {
        let g = nil41();
        assert_eq!(
            g.differential_of_basis(0),
            AltForm::from_terms(6, &[(q(1, 1), "36")])
        );
        assert_eq!(g.structure_constants().get(&[0, 2, 5]), &q(-1, 1));
        assert!(g.d_squared_vanishes(Tolerance::DEFAULT));
        let ab = LieAlgebra::<Rational>::abelian(6);
        assert!((0..6).all(|k| ab.differential_of_basis(k).is_zero(Tolerance::DEFAULT)));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e3 violates Jacobi.
        let mut c = Tensor::zeros(3, 3);
        for (k, i, j) in [(2, 0, 1), (0, 1, 2), (2, 2, 0)] {
            c.set(&[k, i, j], q(1, 1));
            c.set(&[k, j, i], q(-1, 1));
        }
        let err = LieAlgebra::from_structure_constants(c.clone(), Tolerance::DEFAULT);
        assert!(matches!(err, Err(Error::Jacobi(1, 2, 3))));
        let alg = LieAlgebra { c };
        assert!(!alg.d_squared_vanishes(Tolerance::DEFAULT));
        let mut bad = Tensor::zeros(2, 3);
        bad.set(&[0, 0, 1], q(1, 1));
        assert!(matches!(
            LieAlgebra::from_structure_constants(bad, Tolerance::DEFAULT),
            Err(Error::NotAntisymmetric(1, 2))
        ));
    }

    #[test]
    fn levi_civita_is_metric_and_torsion_free() {
        for alg in [nil41::<Rational>(), su2_su2()] {
            let lc = alg.levi_civita();
            assert_eq!(lc.metric_defect(), q(0, 1));
            assert!(lc.torsion(&alg).is_zero(Tolerance::DEFAULT));
        }
        assert!(LieAlgebra::<Rational>::abelian(6)
            .levi_civita()
            .coefficients()
            .is_zero(Tolerance::DEFAULT));
    }

    #[test]
    fn biinvariant_levi_civita_is_half_bracket() {
        let alg = su2_su2();
        let lc = alg.levi_civita();
        let half = alg.lowered().scale(&q(1, 2));
        assert_eq!(lc.coefficients(), &half);
    }

    #[test]
    fn covariant_derivative_of_metric_vanishes() {
        let lc = nil41::<Rational>().levi_civita();
        assert!(lc
            .covariant_derivative(&Tensor::identity(6))
            .is_zero(Tolerance::DEFAULT));
    }

    #[test]
    fn frame_change_preserves_jacobi() {
        let alg = su2_su2();
        let mut a = Matrix::identity(6);
        a[(0, 1)] = q(1, 2);
        let b = alg.change_frame(&a, Tolerance::DEFAULT).unwrap();
        assert!(b.jacobi_violation(Tolerance::DEFAULT).is_none());
    }
}

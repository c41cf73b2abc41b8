//! Constant metrics, orientation and the Hodge star.

use crate::error::{Error, Result};
use crate::form::{increasing_tuples, AltForm};
use crate::linalg::Matrix;
use crate::scalar::{Scalar, Tolerance};
use crate::tensor::{permutation_sign, Tensor};

#[derive(Clone, Debug, PartialEq)]
pub struct Metric<S> {
    g: Matrix<S>,
    inv: Matrix<S>,
    identity: bool,
}

impl<S: Scalar> Metric<S> {
    pub fn identity(dim: usize) -> Self {
        Self {
            g: Matrix::identity(dim),
            inv: Matrix::identity(dim),
            identity: true,
        }
    }

    /// Validates symmetry and positive definiteness (leading principal
    /// minors) and caches the inverse.
    pub fn new(g: Matrix<S>, tol: Tolerance) -> Result<Self> {
        let n = g.rows();
        if g.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.cols(),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if !(g[(i, j)].clone() - g[(j, i)].clone()).is_negligible(tol) {
                    return Err(Error::MetricNotSymmetric(i + 1, j + 1));
                }
            }
        }
        for (k, m) in g.leading_minors().into_iter().enumerate() {
            if m.is_negligible(tol) || m < S::zero() {
                return Err(Error::MetricNotPositive(k + 1));
            }
        }
        let inv = g.inverse(tol).ok_or(Error::MetricNotPositive(n))?;
        let identity = g == Matrix::identity(n);
        Ok(Self { g, inv, identity })
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.identity
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.g
    }

    pub fn inverse(&self) -> &Matrix<S> {
        &self.inv
    }

    pub fn as_tensor(&self) -> Tensor<S> {
        Tensor::from_fn(self.dim(), 2, |i| self.g[(i[0], i[1])].clone())
    }

    pub fn inverse_tensor(&self) -> Tensor<S> {
        Tensor::from_fn(self.dim(), 2, |i| self.inv[(i[0], i[1])].clone())
    }

    /// `sqrt(det g)`, the factor in front of the metric volume form.
    pub fn volume_factor(&self) -> Result<S> {
        if self.identity {
            return Ok(S::one());
        }
        let det = self.g.determinant();
        det.sqrt_checked()
            .ok_or_else(|| Error::IrrationalVolume(det.render()))
    }

    /// Components of `a` with all indices raised, on increasing tuples.
    fn raise(&self, a: &AltForm<S>) -> AltForm<S> {
        if self.identity {
            return a.clone();
        }
        let p = a.grade();
        let mut out = AltForm::zero(a.dim(), p);
        let rows = increasing_tuples(a.dim(), p);
        for i_set in &rows {
            let mut v = S::zero();
            for (k_set, val) in a.terms() {
                let mut minor = Matrix::zeros(p, p);
                for (r, &i) in i_set.iter().enumerate() {
                    for (c, &k) in k_set.iter().enumerate() {
                        minor[(r, c)] = self.inv[(i, k)].clone();
                    }
                }
                v += minor.determinant() * val.clone();
            }
            out.add_component(i_set, v);
        }
        out
    }

    /// Normalized inner product `<a, b>` with `<e_I, e_I> = 1` for an
    /// orthonormal frame.
    pub fn inner_product(&self, a: &AltForm<S>, b: &AltForm<S>) -> Result<S> {
        if a.grade() != b.grade() {
            return Err(Error::GradeMismatch(a.grade(), b.grade()));
        }
        self.raise(a).normalized_pairing(b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    /// `vol = e_1 ∧ ... ∧ e_n`.
    #[default]
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }
}

/// Hodge star `α ∧ *β = <α, β> vol_g` with `vol_g = sqrt(det g) e_{1…n}`
/// (times the orientation sign).
pub fn hodge_star<S: Scalar>(
    a: &AltForm<S>,
    metric: &Metric<S>,
    orientation: Orientation,
) -> Result<AltForm<S>> {
    let n = a.dim();
    if metric.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: metric.dim(),
            found: n,
        });
    }
    let p = a.grade();
    let vol = metric.volume_factor()?;
    let raised = metric.raise(a);
    let mut out = AltForm::zero(n, n - p);
    for (idx, v) in raised.terms() {
        let comp: Vec<usize> = (0..n).filter(|i| !idx.contains(i)).collect();
        let mut cat = idx.to_vec();
        cat.extend_from_slice(&comp);
        let sign = permutation_sign(&cat) * orientation.sign();
        let val = v.clone() * vol.clone();
        out.add_component(&comp, if sign < 0 { -val } else { val });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    #[test]
    fn star_of_orthonormal_monomial() {
        let g = Metric::identity(6);
        let e12 = AltForm::from_terms(6, &[(q(1, 1), "12")]);
        let s = hodge_star(&e12, &g, Orientation::Positive).unwrap();
        assert_eq!(s, AltForm::from_terms(6, &[(q(1, 1), "3456")]));
        let s = hodge_star(&e12, &g, Orientation::Negative).unwrap();
        assert_eq!(s, AltForm::from_terms(6, &[(q(-1, 1), "3456")]));
    }

    #[test]
    fn metric_validation() {
        let bad = Matrix::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(1, 1)]]);
        assert!(matches!(
            Metric::<Rational>::new(bad, Tolerance::DEFAULT),
            Err(Error::MetricNotPositive(2))
        ));
        let asym = Matrix::from_rows(vec![vec![q(1, 1), q(1, 2)], vec![q(0, 1), q(1, 1)]]);
        assert!(matches!(
            Metric::<Rational>::new(asym, Tolerance::DEFAULT),
            Err(Error::MetricNotSymmetric(1, 2))
        ));
    }

    #[test]
    fn star_with_diagonal_metric() {
        // g = diag(4, 1): vol = 2 e12, e1 has norm^2 1/4 after raising.
        let g = Metric::new(
            Matrix::from_rows(vec![vec![q(4, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]]),
            Tolerance::DEFAULT,
        )
        .unwrap();
        let e1 = AltForm::from_terms(2, &[(q(1, 1), "1")]);
        let s = hodge_star(&e1, &g, Orientation::Positive).unwrap();
        // e1 ∧ *e1 = <e1,e1> vol = 1/4 · 2 e12.
        assert_eq!(
            e1.wedge(&s).unwrap(),
            AltForm::from_terms(2, &[(q(1, 2), "12")])
        );
        let irrational = Metric::new(
            Matrix::from_rows(vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]]),
            Tolerance::DEFAULT,
        )
        .unwrap();
        assert!(matches!(
            hodge_star(&e1, &irrational, Orientation::Positive),
            Err(Error::IrrationalVolume(_))
        ));
    }
}

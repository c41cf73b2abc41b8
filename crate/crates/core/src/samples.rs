//! Built-in Lie algebras used by the bundled fixtures and the tests.

use crate::form::AltForm;
use crate::lie::LieAlgebra;
use crate::scalar::{Scalar, Tolerance};
use crate::tensor::Tensor;

/// Two-step nilpotent algebra with `de1 = e36`, `de4 = e26`, `de5 = e23`.
pub fn nilmanifold_4_1<S: Scalar>() -> LieAlgebra<S> {
    let n = 6;
    let mut de = vec![AltForm::zero(n, 2); n];
    de[0] = AltForm::from_terms(n, &[(S::one(), "36")]);
    de[3] = AltForm::from_terms(n, &[(S::one(), "26")]);
    de[4] = AltForm::from_terms(n, &[(S::one(), "23")]);
    LieAlgebra::from_differentials(&de, Tolerance::DEFAULT).expect("valid structure equations")
}

/// `su(2) ⊕ su(2)` with `[e1,e2] = e3` (cyclic) and the same on `e4, e5, e6`.
pub fn su2_su2<S: Scalar>() -> LieAlgebra<S> {
    let mut c = Tensor::zeros(6, 3);
    for off in [0, 3] {
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c.set(&[k + off, i + off, j + off], S::one());
            c.set(&[k + off, j + off, i + off], -S::one());
        }
    }
    LieAlgebra::from_structure_constants(c, Tolerance::DEFAULT).expect("Jacobi holds")
}

pub fn abelian<S: Scalar>() -> LieAlgebra<S> {
    LieAlgebra::abelian(6)
}

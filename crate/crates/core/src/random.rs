//! Seeded generators for randomized checks.
//!
//! Every generator draws small rationals from a `ChaCha8Rng`, so a seed
//! reproduces the same exact data on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::form::{increasing_tuples, AltForm};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::samples;
use crate::scalar::{Scalar, Tolerance};
use crate::su3::{Su3Structure, SymMinus};
use crate::tensor::Tensor;

pub struct RandomSource {
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn seeded(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `p/q` with `|p| <= 3` and `1 <= q <= 3`.
    pub fn small<S: Scalar>(&mut self) -> S {
        let p = self.rng.random_range(-3..=3);
        let q = self.rng.random_range(1..=3);
        S::from_ratio(p, q)
    }

    pub fn nonzero<S: Scalar>(&mut self) -> S {
        loop {
            let v: S = self.small();
            if v != S::zero() {
                return v;
            }
        }
    }

    pub fn form<S: Scalar>(&mut self, dim: usize, grade: usize) -> AltForm<S> {
        let mut out = AltForm::zero(dim, grade);
        for idx in increasing_tuples(dim, grade) {
            let v = self.small();
            out.add_component(&idx, v);
        }
        out
    }

    pub fn sym_minus<S: Scalar>(&mut self, s: &Su3Structure<S>) -> SymMinus<S> {
        let h = Tensor::from_fn(6, 2, |_| self.small());
        SymMinus::project(&h, s)
    }

    /// Product of two random unitary rotations with Pythagorean entries:
    /// a phase in one complex line, or a real rotation mixing two complex
    /// coordinates. Each factor commutes with the standard `J`.
    pub fn unitary<S: Scalar>(&mut self) -> Matrix<S> {
        const TRIPLES: [(i64, i64, i64); 3] = [(3, 4, 5), (5, 12, 13), (8, 15, 17)];
        let mut out = Matrix::identity(6);
        for _ in 0..2 {
            let (a, b, c) = TRIPLES[self.rng.random_range(0..TRIPLES.len())];
            let sign = if self.rng.random_bool(0.5) { 1 } else { -1 };
            let (cos, sin) = (S::from_ratio(a, c), S::from_ratio(sign * b, c));
            let p = self.rng.random_range(0..3);
            let mut r = Matrix::identity(6);
            if self.rng.random_bool(0.5) {
                let (x, y) = (2 * p, 2 * p + 1);
                r[(x, x)] = cos.clone();
                r[(y, y)] = cos;
                r[(x, y)] = -sin.clone();
                r[(y, x)] = sin;
            } else {
                let q = (p + 1 + self.rng.random_range(0..2)) % 3;
                for off in 0..2 {
                    let (x, y) = (2 * p + off, 2 * q + off);
                    r[(x, x)] = cos.clone();
                    r[(y, y)] = cos.clone();
                    r[(x, y)] = -sin.clone();
                    r[(y, x)] = sin.clone();
                }
            }
            out = out.mul(&r);
        }
        out
    }

    /// A random `G₁` algebra: one of the bundled bases, rescaled and moved
    /// by a random unitary frame change. `J` and `g` stay standard, so the
    /// class of the structure is unchanged.
    pub fn g1_algebra<S: Scalar>(&mut self) -> Result<LieAlgebra<S>> {
        let bases = g1_bases::<S>();
        let base = &bases[self.rng.random_range(0..bases.len())];
        let a = self.unitary();
        let scale = self.nonzero::<S>();
        Ok(base.change_frame(&a, Tolerance::DEFAULT)?.scaled(&scale))
    }
}

fn from_terms<S: Scalar>(terms: &[(usize, &str)]) -> LieAlgebra<S> {
    let mut de = vec![AltForm::zero(6, 2); 6];
    for &(k, idx) in terms {
        de[k - 1] = &de[k - 1] + &AltForm::from_terms(6, &[(S::one(), idx)]);
    }
    LieAlgebra::from_differentials(&de, Tolerance::DEFAULT).expect("nilpotent bases satisfy d² = 0")
}

/// Algebras whose standard structure is of class `G₁`.
pub fn g1_bases<S: Scalar>() -> Vec<LieAlgebra<S>> {
    vec![
        samples::nilmanifold_4_1(),
        samples::su2_su2(),
        from_terms(&[(6, "12")]),
        from_terms(&[(3, "12")]),
        from_terms(&[(5, "12"), (6, "34")]),
        from_terms(&[(4, "12"), (5, "13"), (6, "14")]),
    ]
}

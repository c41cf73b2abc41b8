//! Alternating forms on a frame `e_1, ..., e_n`.
//!
//! A p-form is stored by its components on strictly increasing index
//! tuples; `e_{145}` means `e_1 ∧ e_4 ∧ e_5` and has full-tensor component
//! `+1` at `(1,4,5)` and `-1` at `(4,1,5)`. Indices are 0-based in the API
//! and 1-based when printed.
//!
//! Contractions in this module assume an orthonormal frame.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerance};
use crate::tensor::{permutation_sign, Tensor};

#[derive(Clone, Debug, PartialEq)]
pub struct AltForm<S> {
    dim: usize,
    grade: usize,
    comps: BTreeMap<Vec<usize>, S>,
}

/// Sorts `idx` and returns the sign of the sorting permutation (0 on repeats).
fn sort_with_sign(idx: &[usize]) -> (Vec<usize>, i32) {
    let sign = permutation_sign(idx);
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    (sorted, sign)
}

fn signed<S: Scalar>(v: S, sign: i32) -> S {
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// All strictly increasing `k`-tuples drawn from `0..n`.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

pub(crate) fn factorial(p: usize) -> i64 {
    (1..=p as i64).product()
}

impl<S: Scalar> AltForm<S> {
    pub fn zero(dim: usize, grade: usize) -> Self {
        Self {
            dim,
            grade,
            comps: BTreeMap::new(),
        }
    }

    /// Grade-0 form.
    pub fn constant(dim: usize, value: S) -> Self {
        let mut f = Self::zero(dim, 0);
        f.insert(Vec::new(), value);
        f
    }

    /// `coef · e_{i_1} ∧ ... ∧ e_{i_p}` for 0-based, not necessarily sorted indices.
    pub fn monomial(dim: usize, coef: S, idx: &[usize]) -> Self {
        let mut f = Self::zero(dim, idx.len());
        f.add_component(idx, coef);
        f
    }

    /// Builds a form from `(coefficient, "145")` pairs with 1-based digits.
    pub fn from_terms(dim: usize, terms: &[(S, &str)]) -> Self {
        let grade = terms.first().map_or(0, |(_, s)| s.len());
        let mut f = Self::zero(dim, grade);
        for (c, s) in terms {
            let idx: Vec<usize> = s
                .chars()
                .map(|ch| ch.to_digit(10).expect("index digit") as usize - 1)
                .collect();
            assert_eq!(idx.len(), grade, "mixed grades in from_terms");
            f.add_component(&idx, c.clone());
        }
        f
    }

    /// 1-form with the given components.
    pub fn from_vector(v: &[S]) -> Self {
        let mut f = Self::zero(v.len(), 1);
        for (i, c) in v.iter().enumerate() {
            f.insert(vec![i], c.clone());
        }
        f
    }

    /// Reads the increasing components of an alternating tensor.
    pub fn from_tensor(t: &Tensor<S>) -> Self {
        let mut f = Self::zero(t.dim(), t.rank());
        for idx in increasing_tuples(t.dim(), t.rank()) {
            f.insert(idx.clone(), t.get(&idx).clone());
        }
        f
    }

    /// Like [`from_tensor`](Self::from_tensor) but rejects tensors that are
    /// not totally skew.
    pub fn from_tensor_checked(t: &Tensor<S>, tol: Tolerance) -> Result<Self> {
        if !t.is_totally_skew(tol) {
            return Err(Error::Subspace("tensor is not totally skew".into()));
        }
        Ok(Self::from_tensor(t))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    fn insert(&mut self, idx: Vec<usize>, v: S) {
        if v.is_zero() {
            self.comps.remove(&idx);
        } else {
            self.comps.insert(idx, v);
        }
    }

    /// Adds `v` to the component at `idx` (any order; antisymmetry applied).
    pub fn add_component(&mut self, idx: &[usize], v: S) {
        assert_eq!(idx.len(), self.grade, "index length must equal grade");
        assert!(idx.iter().all(|&i| i < self.dim), "index out of range");
        let (sorted, sign) = sort_with_sign(idx);
        if sign == 0 {
            return;
        }
        let cur = self.comps.get(&sorted).cloned().unwrap_or_else(S::zero);
        self.insert(sorted, cur + signed(v, sign));
    }

    /// Full-index component, antisymmetrized on the fly.
    pub fn get(&self, idx: &[usize]) -> S {
        let (sorted, sign) = sort_with_sign(idx);
        if sign == 0 {
            return S::zero();
        }
        self.comps
            .get(&sorted)
            .cloned()
            .map_or_else(S::zero, |v| signed(v, sign))
    }

    /// Nonzero components on increasing tuples.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &S)> {
        self.comps.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn to_tensor(&self) -> Tensor<S> {
        let mut t = Tensor::zeros(self.dim, self.grade);
        for (idx, v) in &self.comps {
            for (perm, sign) in crate::tensor::permutations_with_sign(self.grade) {
                let p: Vec<usize> = perm.iter().map(|&k| idx[k]).collect();
                t.set(&p, signed(v.clone(), sign));
            }
        }
        t
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        let mut out = Self::zero(self.dim, self.grade);
        for (k, v) in &self.comps {
            out.insert(k.clone(), f(v));
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.comps.values().all(|v| v.is_negligible(tol))
    }

    pub fn max_abs(&self) -> S {
        self.comps
            .values()
            .map(|v| v.abs_value())
            .fold(S::zero(), |m, v| if v > m { v } else { m })
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        if self.grade != other.grade {
            return Err(Error::GradeMismatch(self.grade, other.grade));
        }
        let mut out = self.clone();
        for (k, v) in &other.comps {
            let cur = out.comps.get(k).cloned().unwrap_or_else(S::zero);
            out.insert(k.clone(), cur + v.clone());
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim, self.grade + other.grade);
        if out.grade > self.dim {
            return Ok(out);
        }
        let mut cat = Vec::with_capacity(out.grade);
        for (a, va) in &self.comps {
            for (b, vb) in &other.comps {
                cat.clear();
                cat.extend_from_slice(a);
                cat.extend_from_slice(b);
                let (sorted, sign) = sort_with_sign(&cat);
                if sign == 0 {
                    continue;
                }
                let cur = out.comps.get(&sorted).cloned().unwrap_or_else(S::zero);
                out.insert(sorted, cur + signed(va.clone() * vb.clone(), sign));
            }
        }
        Ok(out)
    }

    /// `(v ⌟ a)(X_2, ...) = a(v, X_2, ...)`.
    pub fn interior(&self, v: &[S]) -> Result<Self> {
        if self.grade == 0 {
            return Err(Error::ZeroGrade);
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut out = Self::zero(self.dim, self.grade - 1);
        for (idx, val) in &self.comps {
            for (r, &i) in idx.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(r);
                let term = signed(v[i].clone() * val.clone(), if r % 2 == 0 { 1 } else { -1 });
                let cur = out.comps.get(&rest).cloned().unwrap_or_else(S::zero);
                out.insert(rest, cur + term);
            }
        }
        Ok(out)
    }

    /// `e_i ⌟ a` for a frame vector.
    pub fn interior_basis(&self, i: usize) -> Result<Self> {
        let mut v = vec![S::zero(); self.dim];
        v[i] = S::one();
        self.interior(&v)
    }

    /// `Σ a_{i_1…i_p} b_{i_1…i_p}` over all index tuples (no `1/p!`).
    /// This is the `‖·‖²` convention.
    pub fn full_contraction(&self, other: &Self) -> Result<S> {
        self.check_dim(other)?;
        if self.grade != other.grade {
            return Err(Error::GradeMismatch(self.grade, other.grade));
        }
        let sum = self
            .comps
            .iter()
            .filter_map(|(k, a)| other.comps.get(k).map(|b| a.clone() * b.clone()))
            .fold(S::zero(), |acc, x| acc + x);
        Ok(sum * S::from_int(factorial(self.grade)))
    }

    /// Full contraction divided by `p!`, the `(·,·)` pairing.
    pub fn normalized_pairing(&self, other: &Self) -> Result<S> {
        let full = self.full_contraction(other)?;
        Ok(full / S::from_int(factorial(self.grade)))
    }

    /// `‖a‖²` with the full-contraction convention.
    pub fn norm_sq(&self) -> S {
        self.full_contraction(self).expect("same grade")
    }
}

impl<S: Scalar> Add for &AltForm<S> {
    type Output = AltForm<S>;

    fn add(self, rhs: &AltForm<S>) -> AltForm<S> {
        self.try_add(rhs)
            .expect("forms of equal dimension and grade")
    }
}

impl<S: Scalar> Sub for &AltForm<S> {
    type Output = AltForm<S>;

    fn sub(self, rhs: &AltForm<S>) -> AltForm<S> {
        self.try_add(&-rhs)
            .expect("forms of equal dimension and grade")
    }
}

impl<S: Scalar> Neg for &AltForm<S> {
    type Output = AltForm<S>;

    fn neg(self) -> AltForm<S> {
        self.map(|v| -v.clone())
    }
}

impl<S: Scalar> fmt::Display for AltForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return f.write_str("0");
        }
        for (n, (idx, v)) in self.comps.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let name: String = idx.iter().map(|i| (i + 1).to_string()).collect();
            if idx.is_empty() {
                write!(f, "{}", v.render())?;
            } else {
                write!(f, "({})e{}", v.render(), name)?;
            }
        }
        Ok(())
    }
}

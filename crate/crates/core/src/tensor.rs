//! Dense tensors over a fixed frame and a small `einsum` evaluator.
//!
//! All indices are 0-based. A rank-`r` tensor on an `n`-dimensional frame
//! stores `n^r` components in row-major order.

use std::ops::{Add, Neg, Sub};

use crate::scalar::{Scalar, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryTag {
    Antisymmetric(usize, usize),
    Symmetric(usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<S> {
    dim: usize,
    rank: usize,
    data: Vec<S>,
    symmetry: Vec<SymmetryTag>,
}

impl<S: Scalar> Tensor<S> {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Self {
            dim,
            rank,
            data: vec![S::zero(); dim.pow(rank as u32)],
            symmetry: Vec::new(),
        }
    }

    pub fn scalar(value: S) -> Self {
        Self {
            dim: 0,
            rank: 0,
            data: vec![value],
            symmetry: Vec::new(),
        }
    }

    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let mut t = Self::zeros(dim, rank);
        let mut idx = vec![0; rank];
        for flat in 0..t.data.len() {
            t.unflatten(flat, &mut idx);
            t.data[flat] = f(&idx);
        }
        t
    }

    /// Kronecker delta as a rank-2 tensor.
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, 2, |i| if i[0] == i[1] { S::one() } else { S::zero() })
    }

    pub fn from_matrix(rows: &[Vec<S>]) -> Self {
        let dim = rows.len();
        Self::from_fn(dim, 2, |i| rows[i[0]][i[1]].clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn symmetry(&self) -> &[SymmetryTag] {
        &self.symmetry
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    fn unflatten(&self, mut flat: usize, out: &mut [usize]) {
        for slot in out.iter_mut().rev() {
            *slot = flat % self.dim.max(1);
            flat /= self.dim.max(1);
        }
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: S) {
        let f = self.flat(idx);
        self.data[f] = value;
    }

    pub fn add_at(&mut self, idx: &[usize], value: S) {
        let f = self.flat(idx);
        self.data[f] += value;
    }

    /// Calls `f` with every multi-index and its component.
    pub fn for_each(&self, mut f: impl FnMut(&[usize], &S)) {
        let mut idx = vec![0; self.rank];
        for (flat, v) in self.data.iter().enumerate() {
            self.unflatten(flat, &mut idx);
            f(&idx, v);
        }
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().map(f).collect(),
            symmetry: self.symmetry.clone(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    /// `result[idx] = self[idx[perm[0]], idx[perm[1]], ...]`.
    ///
    /// With `perm = [2, 3, 0, 1]` this is `R_{ijkl} -> R_{klij}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank, "permutation length must equal rank");
        let mut src = vec![0; self.rank];
        Self::from_fn(self.dim, self.rank, |idx| {
            for (k, &p) in perm.iter().enumerate() {
                src[k] = idx[p];
            }
            self.get(&src).clone()
        })
    }

    /// Contracts slot `slot` with the first index of the rank-2 tensor `m`:
    /// `out[.., i, ..] = Σ_k self[.., k, ..] m[k, i]`.
    pub fn contract_slot(&self, slot: usize, m: &Tensor<S>) -> Self {
        assert_eq!(m.rank, 2, "contract_slot needs a rank-2 tensor");
        let mut src = vec![0; self.rank];
        Self::from_fn(self.dim, self.rank, |idx| {
            src.copy_from_slice(idx);
            let mut v = S::zero();
            for k in 0..self.dim {
                let f = m.get(&[k, idx[slot]]);
                if f.is_zero() {
                    continue;
                }
                src[slot] = k;
                v += self.get(&src).clone() * f.clone();
            }
            v
        })
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.data.iter().all(|v| v.is_negligible(tol))
    }

    /// Largest absolute component (0 for the empty tensor).
    pub fn max_abs(&self) -> S {
        self.data
            .iter()
            .map(|v| v.abs_value())
            .fold(S::zero(), |m, v| if v > m { v } else { m })
    }

    /// Attaches symmetry tags after checking that they hold.
    pub fn with_symmetry(mut self, tags: Vec<SymmetryTag>, tol: Tolerance) -> Option<Self> {
        self.symmetry = tags;
        self.symmetry_holds(tol).then_some(self)
    }

    pub fn symmetry_holds(&self, tol: Tolerance) -> bool {
        self.symmetry.iter().all(|tag| {
            let (a, b, sign) = match *tag {
                SymmetryTag::Antisymmetric(a, b) => (a, b, -S::one()),
                SymmetryTag::Symmetric(a, b) => (a, b, S::one()),
            };
            let mut perm: Vec<usize> = (0..self.rank).collect();
            perm.swap(a, b);
            let swapped = self.permute(&perm);
            self.data
                .iter()
                .zip(swapped.data.iter())
                .all(|(x, y)| (x.clone() - sign.clone() * y.clone()).is_negligible(tol))
        })
    }

    /// Full antisymmetrization without the `1/r!` factor.
    pub fn alternation_sum(&self) -> Self {
        let mut out = Self::zeros(self.dim, self.rank);
        for (perm, sign) in permutations_with_sign(self.rank) {
            let p = self.permute(&perm);
            for (o, v) in out.data.iter_mut().zip(p.data) {
                if sign > 0 {
                    *o += v;
                } else {
                    *o -= v;
                }
            }
        }
        out
    }

    /// `true` when the tensor is alternating in all slots.
    pub fn is_totally_skew(&self, tol: Tolerance) -> bool {
        (0..self.rank.saturating_sub(1)).all(|a| {
            let mut perm: Vec<usize> = (0..self.rank).collect();
            perm.swap(a, a + 1);
            (self + &self.permute(&perm)).is_zero(tol)
        })
    }
}

impl<S: Scalar> Add for &Tensor<S> {
    type Output = Tensor<S>;

    fn add(self, rhs: &Tensor<S>) -> Tensor<S> {
        assert_eq!((self.dim, self.rank), (rhs.dim, rhs.rank), "shape mismatch");
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
            symmetry: Vec::new(),
        }
    }
}

impl<S: Scalar> Sub for &Tensor<S> {
    type Output = Tensor<S>;

    fn sub(self, rhs: &Tensor<S>) -> Tensor<S> {
        assert_eq!((self.dim, self.rank), (rhs.dim, rhs.rank), "shape mismatch");
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
            symmetry: Vec::new(),
        }
    }
}

impl<S: Scalar> Neg for &Tensor<S> {
    type Output = Tensor<S>;

    fn neg(self) -> Tensor<S> {
        self.map(|v| -v.clone())
    }
}

/// Sign of a permutation given as a sequence; 0 when an entry repeats.
pub fn permutation_sign(seq: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// All permutations of `0..n` together with their signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect()
}

struct Operand<'a, S> {
    tensor: &'a Tensor<S>,
    slots: Vec<usize>,
    ready_at: usize,
}

/// Einstein summation over a fixed frame, e.g. `einsum("iab,jab->ij", &[&t, &t])`.
///
/// Repeated letters are summed. The output letters must each appear in some
/// operand. Branches whose partial product is an exact zero are pruned, so
/// sparse inputs are cheap.
pub fn einsum<S: Scalar>(spec: &str, operands: &[&Tensor<S>]) -> Tensor<S> {
    let (inputs, output) = spec.split_once("->").expect("einsum spec needs `->`");
    let inputs: Vec<&str> = inputs.split(',').collect();
    assert_eq!(inputs.len(), operands.len(), "einsum operand count");
    let dim = operands
        .iter()
        .find(|t| t.rank > 0)
        .map(|t| t.dim)
        .unwrap_or(0);

    let mut letters: Vec<char> = Vec::new();
    for s in &inputs {
        for c in s.chars() {
            if !letters.contains(&c) {
                letters.push(c);
            }
        }
    }
    for c in output.chars() {
        assert!(
            letters.contains(&c),
            "output letter `{c}` not bound by any operand"
        );
    }
    let pos = |c: char| letters.iter().position(|&l| l == c).unwrap();

    let mut ops: Vec<Operand<S>> = inputs
        .iter()
        .zip(operands)
        .map(|(s, t)| {
            assert_eq!(s.chars().count(), t.rank, "einsum rank mismatch for `{s}`");
            if t.rank > 0 {
                assert_eq!(t.dim, dim, "einsum dimension mismatch");
            }
            let slots: Vec<usize> = s.chars().map(pos).collect();
            let ready_at = slots.iter().map(|&p| p + 1).max().unwrap_or(0);
            Operand {
                tensor: t,
                slots,
                ready_at,
            }
        })
        .collect();
    ops.sort_by_key(|o| o.ready_at);

    let out_slots: Vec<usize> = output.chars().map(pos).collect();
    let mut out = Tensor::zeros(dim, out_slots.len());
    let mut assign = vec![0usize; letters.len()];

    // Operands with no free letters contribute a constant factor.
    let mut base = S::one();
    let mut first = 0;
    while first < ops.len() && ops[first].ready_at == 0 {
        base *= ops[first].tensor.data[0].clone();
        first += 1;
    }
    if base.is_zero() {
        return out;
    }

    struct Ctx<'a, 'b, S> {
        ops: &'b [Operand<'a, S>],
        out_slots: &'b [usize],
        dim: usize,
        depth_total: usize,
    }

    fn rec<S: Scalar>(
        ctx: &Ctx<S>,
        depth: usize,
        next_op: usize,
        acc: &S,
        assign: &mut [usize],
        out: &mut Tensor<S>,
    ) {
        if depth == ctx.depth_total {
            let mut idx = Vec::with_capacity(ctx.out_slots.len());
            idx.extend(ctx.out_slots.iter().map(|&s| assign[s]));
            out.add_at(&idx, acc.clone());
            return;
        }
        let mut buf = Vec::new();
        for v in 0..ctx.dim {
            assign[depth] = v;
            let mut value = acc.clone();
            let mut k = next_op;
            let mut dead = false;
            while k < ctx.ops.len() && ctx.ops[k].ready_at == depth + 1 {
                buf.clear();
                buf.extend(ctx.ops[k].slots.iter().map(|&s| assign[s]));
                let c = ctx.ops[k].tensor.get(&buf);
                if c.is_zero() {
                    dead = true;
                    break;
                }
                value *= c.clone();
                k += 1;
            }
            if dead {
                continue;
            }
            rec(ctx, depth + 1, k, &value, assign, out);
        }
    }

    let ctx = Ctx {
        ops: &ops,
        out_slots: &out_slots,
        dim,
        depth_total: letters.len(),
    };
    rec(&ctx, 0, first, &base, &mut assign, &mut out);
    out
}

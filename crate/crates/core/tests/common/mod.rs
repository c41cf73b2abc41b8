//! Brute-force reference computations on dense arrays. Nothing here goes
//! through the engine's tensors, forms or einsum.

#![allow(dead_code)]

use acyt_core::scalar::q;
use acyt_core::Rational;
use num_traits::Zero;

pub const N: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct Arr {
    pub rank: usize,
    pub data: Vec<Rational>,
}

impl Arr {
    pub fn zeros(rank: usize) -> Self {
        Self {
            rank,
            data: vec![q(0, 1); N.pow(rank as u32)],
        }
    }

    fn offset(idx: &[usize]) -> usize {
        idx.iter().fold(0, |a, &i| a * N + i)
    }

    pub fn get(&self, idx: &[usize]) -> Rational {
        self.at(idx).clone()
    }

    pub fn at(&self, idx: &[usize]) -> &Rational {
        &self.data[Self::offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Rational) {
        self.data[Self::offset(idx)] = v;
    }

    pub fn add(&mut self, idx: &[usize], v: Rational) {
        self.data[Self::offset(idx)] += v;
    }

    pub fn indices(&self) -> Vec<Vec<usize>> {
        (0..self.data.len())
            .map(|mut o| {
                let mut idx = vec![0; self.rank];
                for slot in (0..self.rank).rev() {
                    idx[slot] = o % N;
                    o /= N;
                }
                idx
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn scaled(&self, s: Rational) -> Self {
        Self {
            rank: self.rank,
            data: self.data.iter().map(|v| v * &s).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        Self {
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            } else if p[i] == p[j] {
                return 0;
            }
        }
    }
    s
}

/// Fully antisymmetric array with the given components on 1-based
/// increasing index strings such as `"236"`.
pub fn form(rank: usize, terms: &[(i64, &str)]) -> Arr {
    let mut a = Arr::zeros(rank);
    for &(v, idx) in terms {
        let base: Vec<usize> = idx.bytes().map(|b| (b - b'1') as usize).collect();
        for idx in a.indices() {
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            if sorted == base {
                // sign of the permutation taking `base` to `idx`
                let pos: Vec<usize> = idx
                    .iter()
                    .map(|i| base.iter().position(|b| b == i).unwrap())
                    .collect();
                a.set(&idx, q(v * perm_sign(&pos), 1));
            }
        }
    }
    a
}

/// `c[i][j][k]` with `[e_i, e_j] = Σ_k c e_k`, from 1-based `(i, j, k, v)`.
pub fn brackets(terms: &[(usize, usize, usize, i64)]) -> Arr {
    let mut c = Arr::zeros(3);
    for &(i, j, k, v) in terms {
        c.add(&[i - 1, j - 1, k - 1], q(v, 1));
        c.add(&[j - 1, i - 1, k - 1], q(-v, 1));
    }
    c
}

pub fn nilmanifold() -> Arr {
    // de1 = e36, de4 = e26, de5 = e23 with de(X,Y) = -e([X,Y])
    brackets(&[(3, 6, 1, -1), (2, 6, 4, -1), (2, 3, 5, -1)])
}

pub fn su2_su2() -> Arr {
    brackets(&[
        (1, 2, 3, 1),
        (2, 3, 1, 1),
        (3, 1, 2, 1),
        (4, 5, 6, 1),
        (5, 6, 4, 1),
        (6, 4, 5, 1),
    ])
}

/// `J e1 = e2`, `J e3 = e4`, `J e5 = e6`.
pub fn j_matrix() -> Arr {
    let mut j = Arr::zeros(2);
    for p in [0, 2, 4] {
        j.set(&[p + 1, p], q(1, 1));
        j.set(&[p, p + 1], q(-1, 1));
    }
    j
}

fn apply(m: &Arr, v: &[Rational]) -> Vec<Rational> {
    (0..N)
        .map(|r| (0..N).fold(q(0, 1), |a, c| a + m.get(&[r, c]) * &v[c]))
        .collect()
}

fn bracket(c: &Arr, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![q(0, 1); N];
    for i in 0..N {
        for j in 0..N {
            let xy = &x[i] * &y[j];
            if xy == q(0, 1) {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &xy * c.get(&[i, j, k]);
            }
        }
    }
    out
}

fn unit(i: usize) -> Vec<Rational> {
    (0..N).map(|k| q((k == i) as i64, 1)).collect()
}

/// `N(e_i, e_j)_k` from `N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]`.
pub fn nijenhuis(c: &Arr) -> Arr {
    let j = j_matrix();
    let mut out = Arr::zeros(3);
    for a in 0..N {
        for b in 0..N {
            let (x, y) = (unit(a), unit(b));
            let (jx, jy) = (apply(&j, &x), apply(&j, &y));
            let t1 = bracket(c, &jx, &jy);
            let t2 = bracket(c, &x, &y);
            let t3 = apply(&j, &bracket(c, &jx, &y));
            let t4 = apply(&j, &bracket(c, &x, &jy));
            for k in 0..N {
                out.set(&[a, b, k], &t1[k] - &t2[k] - &t3[k] - &t4[k]);
            }
        }
    }
    out
}

/// Exterior derivative of a left-invariant p-form.
pub fn d(c: &Arr, a: &Arr) -> Arr {
    let p = a.rank;
    let mut out = Arr::zeros(p + 1);
    for idx in out.indices() {
        let mut v = q(0, 1);
        for s in 0..=p {
            for t in s + 1..=p {
                let sign = if (s + t) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = (0..=p)
                    .filter(|&m| m != s && m != t)
                    .map(|m| idx[m])
                    .collect();
                for k in 0..N {
                    let ck = c.at(&[idx[s], idx[t], k]);
                    if ck.is_zero() {
                        continue;
                    }
                    let mut args = vec![k];
                    args.extend(&rest);
                    let term = ck * a.at(&args);
                    if sign > 0 {
                        v += term;
                    } else {
                        v -= term;
                    }
                }
            }
        }
        out.set(&idx, v);
    }
    out
}

/// `G[i][j][k] = g(∇ᵍ_{e_i} e_j, e_k)` from the Koszul formula.
pub fn levi_civita(c: &Arr) -> Arr {
    let mut g = Arr::zeros(3);
    for idx in g.indices() {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let v = c.get(&[i, j, k]) - c.get(&[j, k, i]) + c.get(&[k, i, j]);
        g.set(&idx, v * q(1, 2));
    }
    g
}

pub fn with_torsion(lc: &Arr, t: &Arr) -> Arr {
    let mut g = lc.clone();
    for idx in g.indices() {
        g.add(&idx, t.get(&idx) * q(1, 2));
    }
    g
}

/// `R[i][j][k][l] = g(R(e_i, e_j) e_k, e_l)` with
/// `R(X,Y) = [∇_X, ∇_Y] - ∇_[X,Y]`.
pub fn curvature(c: &Arr, g: &Arr) -> Arr {
    let mut r = Arr::zeros(4);
    for idx in r.indices() {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        let mut v = q(0, 1);
        for m in 0..N {
            v += g.at(&[j, k, m]) * g.at(&[i, m, l]);
            v -= g.at(&[i, k, m]) * g.at(&[j, m, l]);
            v -= c.at(&[i, j, m]) * g.at(&[m, k, l]);
        }
        r.set(&idx, v);
    }
    r
}

/// `Ric(X, Y) = Σ_a R(e_a, X, Y, e_a)`.
pub fn ricci(r: &Arr) -> Arr {
    let mut out = Arr::zeros(2);
    for idx in out.indices() {
        let v = (0..N).fold(q(0, 1), |a, m| a + r.at(&[m, idx[0], idx[1], m]));
        out.set(&idx, v);
    }
    out
}

/// `(∇_{e_i} A)(e_j, …)` stored at `[i, j, …]`.
pub fn covariant(g: &Arr, a: &Arr) -> Arr {
    let p = a.rank;
    let mut out = Arr::zeros(p + 1);
    for idx in out.indices() {
        let i = idx[0];
        let mut v = q(0, 1);
        for slot in 0..p {
            for m in 0..N {
                let gm = g.at(&[i, idx[slot + 1], m]);
                if gm.is_zero() {
                    continue;
                }
                let mut args = idx[1..].to_vec();
                args[slot] = m;
                v -= gm * a.at(&args);
            }
        }
        out.set(&idx, v);
    }
    out
}

/// `R_{ijkl} + R_{jkil} + R_{kijl}`.
pub fn bianchi_defect(r: &Arr) -> Arr {
    let mut out = Arr::zeros(4);
    for idx in out.indices() {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        out.set(
            &idx,
            r.get(&[i, j, k, l]) + r.get(&[j, k, i, l]) + r.get(&[k, i, j, l]),
        );
    }
    out
}

/// `R_{ijkl} - R_{klij}`.
pub fn pair_defect(r: &Arr) -> Arr {
    let mut out = Arr::zeros(4);
    for idx in out.indices() {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        out.set(&idx, r.get(&[i, j, k, l]) - r.get(&[k, l, i, j]));
    }
    out
}

/// `σᵀ(X,Y,Z,V) = Σ_cyclic(X,Y,Z) g(T(X,Y), T(Z,V))`.
pub fn sigma(t: &Arr) -> Arr {
    let mut out = Arr::zeros(4);
    for idx in out.indices() {
        let (x, y, z, v) = (idx[0], idx[1], idx[2], idx[3]);
        let mut s = q(0, 1);
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            for m in 0..N {
                s += t.at(&[a, b, m]) * t.at(&[c, v, m]);
            }
        }
        out.set(&idx, s);
    }
    out
}

/// Engine tensor data into an oracle array.
pub fn from_engine(t: &acyt_core::Tensor<Rational>) -> Arr {
    Arr {
        rank: t.rank(),
        data: t.data().to_vec(),
    }
}

/// Engine structure constants are stored upper index first, `c[k][i][j]`.
pub fn brackets_from_engine(c: &acyt_core::Tensor<Rational>) -> Arr {
    let mut out = Arr::zeros(3);
    for idx in out.indices() {
        out.set(&idx, c.get(&[idx[2], idx[0], idx[1]]).clone());
    }
    out
}

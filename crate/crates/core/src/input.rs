//! Geometry descriptions in TOML.
//!
//! ```toml
//! name = "nilmanifold_4_1"
//! dim = 6
//! arithmetic = "exact"
//! metric = "identity"
//! su3 = "standard"
//! # de_k = Σ value · e_i ∧ e_j, written as indices = [k, i, j]
//! basis_differentials = [
//!     { indices = [1, 3, 6], value = "1" },
//! ]
//! ```
//!
//! Indices are 1-based. `structure_constants` entries use
//! `indices = [i, j, k]` for `[e_i, e_j] = value · e_k`. A non-identity
//! metric is a 6×6 matrix of rational strings; the engine works in the
//! Gram–Schmidt orthonormal frame of the given basis, and explicit `su3`
//! forms are read in that frame.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::form::AltForm;
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::metric::{Metric, Orientation};
use crate::scalar::{parse_rational, Arithmetic, Rational, Scalar, Tolerance};
use crate::soliton::SolitonCandidate;
use crate::su3::Su3Structure;
use crate::tensor::Tensor;

pub const DIM: usize = 6;

/// Bundled fixtures, by name.
pub const FIXTURES: [(&str, &str); 4] = [
    (
        "nilmanifold_4_1",
        include_str!("../fixtures/nilmanifold_4_1.toml"),
    ),
    ("abelian", include_str!("../fixtures/abelian.toml")),
    (
        "su2_su2_cartan",
        include_str!("../fixtures/su2_su2_cartan.toml"),
    ),
    (
        "perturbed_connection",
        include_str!("../fixtures/perturbed_connection.toml"),
    ),
];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    indices: Vec<usize>,
    value: String,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum MetricSpec {
    Named(String),
    Matrix(Vec<Vec<String>>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitSu3 {
    #[serde(default)]
    orientation: Option<String>,
    f: Vec<Entry>,
    psi_plus: Vec<Entry>,
    psi_minus: Vec<Entry>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Su3Spec {
    Named(String),
    Explicit(ExplicitSu3),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSoliton {
    x: Vec<String>,
    #[serde(default)]
    b: Option<Vec<Entry>>,
    #[serde(default)]
    df: Option<Vec<String>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExpected {
    df: Option<Vec<Entry>>,
    nijenhuis: Option<Vec<Entry>>,
    torsion: Option<Vec<Entry>>,
    dt: Option<Vec<Entry>>,
    lee_form: Option<Vec<Entry>>,
    lambda: Option<String>,
    mu: Option<String>,
    ricci_factor: Option<String>,
    connection: Option<Vec<Entry>>,
    riemannian_bianchi: Option<bool>,
    pair_symmetry: Option<bool>,
    torsion_parallel: Option<bool>,
    lemma_4form: Option<bool>,
    tfbi: Option<bool>,
    levi_civita_holonomy_su3: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    name: String,
    dim: usize,
    #[serde(default)]
    arithmetic: Option<String>,
    #[serde(default)]
    basis_differentials: Option<Vec<Entry>>,
    #[serde(default)]
    structure_constants: Option<Vec<Entry>>,
    #[serde(default)]
    metric: Option<MetricSpec>,
    #[serde(default)]
    su3: Option<Su3Spec>,
    #[serde(default)]
    torsion_perturbation: Option<Vec<Entry>>,
    #[serde(default)]
    soliton: Option<RawSoliton>,
    #[serde(default)]
    expected: Option<RawExpected>,
}

/// Explicit structure forms, orthonormal frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Su3Forms {
    pub orientation: Orientation,
    pub f: AltForm<Rational>,
    pub psi_plus: AltForm<Rational>,
    pub psi_minus: AltForm<Rational>,
}

/// Reference values an input may declare. Each present field becomes a
/// `*_match` check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Expected {
    pub df: Option<AltForm<Rational>>,
    pub nijenhuis: Option<AltForm<Rational>>,
    pub torsion: Option<AltForm<Rational>>,
    pub dt: Option<AltForm<Rational>>,
    pub lee_form: Option<AltForm<Rational>>,
    pub lambda: Option<Rational>,
    pub mu: Option<Rational>,
    /// `Ric = ricci_factor · g`.
    pub ricci_factor: Option<Rational>,
    /// `Γ_{ijk}` with `∇_{e_i} e_j = Σ_k Γ_{ijk} e_k`, completed by
    /// `Γ_{ikj} = -Γ_{ijk}`; unlisted coefficients are zero.
    pub connection: Option<Tensor<Rational>>,
    pub riemannian_bianchi: Option<bool>,
    pub pair_symmetry: Option<bool>,
    pub torsion_parallel: Option<bool>,
    pub lemma_4form: Option<bool>,
    pub tfbi: Option<bool>,
    pub levi_civita_holonomy_su3: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolitonSpec {
    pub x: Vec<Rational>,
    pub b: Option<AltForm<Rational>>,
    pub df: Option<Vec<Rational>>,
}

/// A parsed and validated input, still in exact arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometryInput {
    pub name: String,
    pub dim: usize,
    /// `c[k, i, j] = c^k_{ij}` in the given basis.
    pub structure_constants: Tensor<Rational>,
    pub metric: Matrix<Rational>,
    /// `None` for the standard structure.
    pub su3: Option<Su3Forms>,
    pub arithmetic: Arithmetic,
    pub torsion_perturbation: Option<AltForm<Rational>>,
    pub soliton: Option<SolitonSpec>,
    pub expected: Expected,
}

/// An input converted to the working arithmetic, in an orthonormal frame.
#[derive(Clone, Debug)]
pub struct Prepared<S> {
    pub algebra: LieAlgebra<S>,
    pub structure: Su3Structure<S>,
    pub perturbation: Option<AltForm<S>>,
    pub soliton: Option<SolitonCandidate<S>>,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.len(), |p| before.len() - p - 1)
        + 1;
    (line, column)
}

fn rational(text: &str, what: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn check_indices(e: &Entry, len: usize, what: &str) -> Result<Vec<usize>> {
    if e.indices.len() != len {
        return Err(Error::Parse(format!(
            "{what}: expected {len} indices, found {:?}",
            e.indices
        )));
    }
    if let Some(&bad) = e.indices.iter().find(|&&i| i == 0 || i > DIM) {
        return Err(Error::Parse(format!(
            "{what}: index {bad} outside 1..={DIM}"
        )));
    }
    Ok(e.indices.iter().map(|i| i - 1).collect())
}

fn form(entries: &[Entry], grade: usize, what: &str) -> Result<AltForm<Rational>> {
    let mut out = AltForm::zero(DIM, grade);
    for e in entries {
        let idx = check_indices(e, grade, what)?;
        out.add_component(&idx, rational(&e.value, what)?);
    }
    Ok(out)
}

fn vector(values: &[String], what: &str) -> Result<Vec<Rational>> {
    if values.len() != DIM {
        return Err(Error::Parse(format!("{what}: expected {DIM} components")));
    }
    values.iter().map(|v| rational(v, what)).collect()
}

impl GeometryInput {
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawInput = toml::from_str(text).map_err(|e| match e.span() {
            Some(span) => {
                let (line, column) = position(text, span.start);
                Error::ParseAt {
                    line,
                    column,
                    message: e.message().to_string(),
                }
            }
            None => Error::Parse(e.message().to_string()),
        })?;
        Self::from_raw(raw)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn fixture(name: &str) -> Result<Self> {
        let (_, text) = FIXTURES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::Parse(format!("no bundled fixture named `{name}`")))?;
        Self::from_toml(text)
    }

    fn from_raw(raw: RawInput) -> Result<Self> {
        if raw.dim != DIM {
            return Err(Error::DimensionMismatch {
                expected: DIM,
                found: raw.dim,
            });
        }
        let arithmetic = match &raw.arithmetic {
            Some(a) => a.parse()?,
            None => Arithmetic::Exact,
        };
        let mut c = Tensor::<Rational>::zeros(DIM, 3);
        match (&raw.basis_differentials, &raw.structure_constants) {
            (Some(_), Some(_)) | (None, None) => {
                return Err(Error::Parse(
                    "give exactly one of `basis_differentials` and `structure_constants`".into(),
                ))
            }
            (Some(de), None) => {
                let mut forms = vec![AltForm::zero(DIM, 2); DIM];
                for e in de {
                    let idx = check_indices(e, 3, "basis_differentials")?;
                    if idx[1] == idx[2] {
                        return Err(Error::Parse(format!(
                            "basis_differentials: repeated index in {:?}",
                            e.indices
                        )));
                    }
                    forms[idx[0]]
                        .add_component(&idx[1..], rational(&e.value, "basis_differentials")?);
                }
                c = LieAlgebra::from_differentials(&forms, Tolerance::DEFAULT)?
                    .structure_constants()
                    .clone();
            }
            (None, Some(sc)) => {
                for e in sc {
                    let idx = check_indices(e, 3, "structure_constants")?;
                    let (i, j, k) = (idx[0], idx[1], idx[2]);
                    if i == j {
                        return Err(Error::Parse(format!(
                            "structure_constants: [e{0}, e{0}] must vanish",
                            i + 1
                        )));
                    }
                    let v = rational(&e.value, "structure_constants")?;
                    c.add_at(&[k, i, j], v.clone());
                    c.add_at(&[k, j, i], -v);
                }
                LieAlgebra::from_structure_constants(c.clone(), Tolerance::DEFAULT)?;
            }
        }
        let metric = match raw.metric {
            None => Matrix::identity(DIM),
            Some(MetricSpec::Named(n)) if n == "identity" => Matrix::identity(DIM),
            Some(MetricSpec::Named(n)) => {
                return Err(Error::Parse(format!("unknown metric `{n}`")))
            }
            Some(MetricSpec::Matrix(rows)) => {
                if rows.len() != DIM || rows.iter().any(|r| r.len() != DIM) {
                    return Err(Error::Parse(format!("metric must be a {DIM}x{DIM} matrix")));
                }
                let rows = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|v| rational(v, "metric"))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let m = Matrix::from_rows(rows);
                Metric::new(m.clone(), Tolerance::DEFAULT)?;
                m
            }
        };
        let su3 = match raw.su3 {
            None => None,
            Some(Su3Spec::Named(n)) if n == "standard" => None,
            Some(Su3Spec::Named(n)) => {
                return Err(Error::Parse(format!("unknown su3 structure `{n}`")))
            }
            Some(Su3Spec::Explicit(x)) => {
                let orientation = match x.orientation.as_deref() {
                    None | Some("positive") => Orientation::Positive,
                    Some("negative") => Orientation::Negative,
                    Some(o) => return Err(Error::Parse(format!("unknown orientation `{o}`"))),
                };
                Some(Su3Forms {
                    orientation,
                    f: form(&x.f, 2, "su3.f")?,
                    psi_plus: form(&x.psi_plus, 3, "su3.psi_plus")?,
                    psi_minus: form(&x.psi_minus, 3, "su3.psi_minus")?,
                })
            }
        };
        let torsion_perturbation = raw
            .torsion_perturbation
            .map(|e| form(&e, 3, "torsion_perturbation"))
            .transpose()?;
        let soliton = raw
            .soliton
            .map(|s| -> Result<SolitonSpec> {
                Ok(SolitonSpec {
                    x: vector(&s.x, "soliton.x")?,
                    b: s.b.map(|b| form(&b, 2, "soliton.b")).transpose()?,
                    df: s.df.map(|d| vector(&d, "soliton.df")).transpose()?,
                })
            })
            .transpose()?;
        let expected = Expected::from_raw(raw.expected.unwrap_or_default())?;
        let input = Self {
            name: raw.name,
            dim: raw.dim,
            structure_constants: c,
            metric,
            su3,
            arithmetic,
            torsion_perturbation,
            soliton,
            expected,
        };
        // Surface frame and structure problems at parse time.
        input.prepare::<Rational>(Tolerance::DEFAULT)?;
        Ok(input)
    }

    /// Orthonormal frame `e'_a = Σ_i A_{ia} e_i` by Gram–Schmidt. Exact
    /// arithmetic needs every norm along the way to be a rational square.
    pub fn orthonormal_frame<S: Scalar>(&self) -> Result<Matrix<S>> {
        let g: Matrix<S> = convert_matrix(&self.metric);
        let inner = |u: &[S], v: &[S]| {
            let gv = g.mul_vec(v);
            u.iter()
                .zip(&gv)
                .fold(S::zero(), |a, (x, y)| a + x.clone() * y.clone())
        };
        let mut basis: Vec<Vec<S>> = Vec::with_capacity(DIM);
        for k in 0..DIM {
            let mut v: Vec<S> = (0..DIM)
                .map(|i| if i == k { S::one() } else { S::zero() })
                .collect();
            for u in &basis {
                let p = inner(&v, u);
                for (x, y) in v.iter_mut().zip(u) {
                    *x -= p.clone() * y.clone();
                }
            }
            let n2 = inner(&v, &v);
            let n = n2.sqrt_checked().ok_or_else(|| {
                Error::IrrationalFrame(format!("|e{}|² = {} after projection", k + 1, n2.render()))
            })?;
            basis.push(v.into_iter().map(|x| x / n.clone()).collect());
        }
        Ok(Matrix::from_columns(&basis))
    }

    pub fn prepare<S: Scalar>(&self, tol: Tolerance) -> Result<Prepared<S>> {
        let sc = &self.structure_constants;
        let c = Tensor::from_fn(DIM, 3, |i| S::from_rational(sc.get(i)));
        let mut algebra = LieAlgebra::from_structure_constants(c, tol)?;
        if self.metric != Matrix::identity(DIM) {
            algebra = algebra.change_frame(&self.orthonormal_frame()?, tol)?;
        }
        let structure = match &self.su3 {
            None => Su3Structure::standard(),
            Some(x) => Su3Structure::from_forms(
                convert_form(&x.f),
                convert_form(&x.psi_plus),
                convert_form(&x.psi_minus),
                x.orientation,
                tol,
            )?,
        };
        let soliton = self.soliton.as_ref().map(|s| SolitonCandidate {
            x: s.x.iter().map(S::from_rational).collect(),
            b: s.b.as_ref().map(convert_form),
            df: s
                .df
                .as_ref()
                .map(|d| d.iter().map(S::from_rational).collect()),
        });
        Ok(Prepared {
            algebra,
            structure,
            perturbation: self.torsion_perturbation.as_ref().map(convert_form),
            soliton,
        })
    }
}

impl Expected {
    fn from_raw(raw: RawExpected) -> Result<Self> {
        let f = |e: Option<Vec<Entry>>, grade: usize, what: &str| {
            e.map(|e| form(&e, grade, what)).transpose()
        };
        let r = |v: Option<String>, what: &str| v.map(|v| rational(&v, what)).transpose();
        let connection = raw
            .connection
            .map(|entries| -> Result<Tensor<Rational>> {
                let mut g = Tensor::zeros(DIM, 3);
                for e in &entries {
                    let idx = check_indices(e, 3, "expected.connection")?;
                    let v = rational(&e.value, "expected.connection")?;
                    g.set(&idx, v.clone());
                    g.set(&[idx[0], idx[2], idx[1]], -v);
                }
                Ok(g)
            })
            .transpose()?;
        Ok(Self {
            df: f(raw.df, 3, "expected.df")?,
            nijenhuis: f(raw.nijenhuis, 3, "expected.nijenhuis")?,
            torsion: f(raw.torsion, 3, "expected.torsion")?,
            dt: f(raw.dt, 4, "expected.dt")?,
            lee_form: f(raw.lee_form, 1, "expected.lee_form")?,
            lambda: r(raw.lambda, "expected.lambda")?,
            mu: r(raw.mu, "expected.mu")?,
            ricci_factor: r(raw.ricci_factor, "expected.ricci_factor")?,
            connection,
            riemannian_bianchi: raw.riemannian_bianchi,
            pair_symmetry: raw.pair_symmetry,
            torsion_parallel: raw.torsion_parallel,
            lemma_4form: raw.lemma_4form,
            tfbi: raw.tfbi,
            levi_civita_holonomy_su3: raw.levi_civita_holonomy_su3,
        })
    }
}

pub fn convert_form<S: Scalar>(a: &AltForm<Rational>) -> AltForm<S> {
    let mut out = AltForm::zero(a.dim(), a.grade());
    for (idx, v) in a.terms() {
        out.add_component(idx, S::from_rational(v));
    }
    out
}

fn convert_matrix<S: Scalar>(m: &Matrix<Rational>) -> Matrix<S> {
    Matrix::from_rows(
        (0..m.rows())
            .map(|i| m.row(i).iter().map(S::from_rational).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::scalar::q;

    #[test]
    fn bundled_fixtures_parse() {
        let nil = GeometryInput::fixture("nilmanifold_4_1").unwrap();
        assert_eq!(
            &nil.structure_constants,
            samples::nilmanifold_4_1::<Rational>().structure_constants()
        );
        let ab = GeometryInput::fixture("abelian").unwrap();
        assert!(ab.structure_constants.is_zero(Tolerance::DEFAULT));
        let cartan = GeometryInput::fixture("su2_su2_cartan").unwrap();
        assert_eq!(
            &cartan.structure_constants,
            samples::su2_su2::<Rational>().structure_constants()
        );
        let pert = GeometryInput::fixture("perturbed_connection").unwrap();
        assert!(pert.torsion_perturbation.is_some());
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let text =
            "name = \"x\"\ndim = 6\nbasis_differentials = [ { indices = [1, 2, 3], value = } ]\n";
        match GeometryInput::from_toml(text) {
            Err(Error::ParseAt { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn jacobi_violation_names_the_triple() {
        let text = r#"
name = "bad"
dim = 6
structure_constants = [
    { indices = [1, 2, 3], value = "1" },
    { indices = [1, 3, 1], value = "1" },
]
"#;
        let err = GeometryInput::from_toml(text).unwrap_err();
        assert!(matches!(err, Error::Jacobi(..)), "{err}");
    }

    #[test]
    fn both_bracket_descriptions_are_rejected() {
        let text = r#"
name = "bad"
dim = 6
basis_differentials = []
structure_constants = []
"#;
        assert!(matches!(
            GeometryInput::from_toml(text),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn rationals_parse_exactly() {
        let text = r#"
name = "scaled"
dim = 6
basis_differentials = [ { indices = [6, 1, 2], value = "2/6" } ]
"#;
        let input = GeometryInput::from_toml(text).unwrap();
        assert_eq!(input.structure_constants.get(&[5, 1, 0]), &q(1, 3));
        assert!(GeometryInput::from_toml(&text.replace("2/6", "0.1.2")).is_err());
    }

    #[test]
    fn diagonal_metric_is_orthonormalized() {
        let mut rows = vec![vec!["0".to_string(); 6]; 6];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = if i == 5 { "4".into() } else { "1".into() };
        }
        let metric = rows
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|v| format!("\"{v}\""))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect::<Vec<_>>()
            .join(", ");
        let text = format!(
            "name = \"m\"\ndim = 6\nmetric = [{metric}]\nbasis_differentials = [ {{ indices = [6, 1, 2], value = \"1\" }} ]\n"
        );
        let input = GeometryInput::from_toml(&text).unwrap();
        let p = input.prepare::<Rational>(Tolerance::DEFAULT).unwrap();
        // e'_6 = e_6 / 2 so de'^6 = 2 e'^{12}
        assert_eq!(
            p.algebra.differential_of_basis(5),
            AltForm::from_terms(6, &[(q(2, 1), "12")])
        );
        let irrational = text.replace("\"4\"", "\"2\"");
        assert!(matches!(
            GeometryInput::from_toml(&irrational),
            Err(Error::IrrationalFrame(_))
        ));
    }
}

//! JSON documents: `lie-algebra/v1`, `involution/v1`, `family/v1`.
//!
//! Indices are 1-based on the wire. Writers emit entries sorted by
//! `(i, j, k)` so equal objects serialize to identical bytes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::family::{AlgebraicFamily, FamilyInvolution};
use crate::lie::{Field, LieAlgebra, RawTable, StructureConstants};
use crate::linalg::{LinearMap, Matrix};
use crate::scalars::{GaussianRational, Polynomial};
use crate::so_catalog::CatalogName;
use crate::symmetric::Involution;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry<C> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraDoc {
    pub dim: usize,
    pub field: String,
    pub basis: Vec<String>,
    pub sc: Vec<Entry<String>>,
}

/// Either an inline algebra or a catalog name such as `so:3,0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Reference(String),
    Inline(LieAlgebraDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvolutionDoc {
    pub algebra: AlgebraSource,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub rank: usize,
    pub basis: Vec<String>,
    pub sc: Vec<Entry<Vec<String>>>,
    pub involution: Option<String>,
}

const COEFFICIENT_CONJUGATION: &str = "coefficient-conjugation";

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn field_err(path: String, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

fn scalar(path: impl FnOnce() -> String, s: &str) -> Result<GaussianRational, Error> {
    s.parse().map_err(|e: Error| field_err(path(), e))
}

/// 1-based wire indices to 0-based, with range checks.
fn indices<C>(e: &Entry<C>, n: usize, at: usize) -> Result<(usize, usize, usize), Error> {
    for (name, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
        if v == 0 || v > n {
            return Err(field_err(format!("sc[{at}].{name}"), format!("index {v} outside 1..={n}")));
        }
    }
    Ok((e.i - 1, e.j - 1, e.k - 1))
}

impl LieAlgebraDoc {
    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_json(text)
    }

    fn field(&self) -> Result<Field, Error> {
        match self.field.as_str() {
            "real" => Ok(Field::Real),
            "complex" => Ok(Field::Complex),
            other => Err(field_err("field".into(), format!("expected \"real\" or \"complex\", got {other:?}"))),
        }
    }

    fn check_shape(&self) -> Result<(), Error> {
        if self.basis.len() != self.dim {
            return Err(field_err(
                "basis".into(),
                format!("{} names for dim {}", self.basis.len(), self.dim),
            ));
        }
        Ok(())
    }

    /// The entries as given, including any with `i ≥ j`, for diagnostics.
    pub fn raw_table(&self) -> Result<RawTable<GaussianRational>, Error> {
        self.field()?;
        self.check_shape()?;
        let entries = self
            .sc
            .iter()
            .enumerate()
            .map(|(at, e)| {
                let (i, j, k) = indices(e, self.dim, at)?;
                Ok((i, j, k, scalar(|| format!("sc[{at}].c"), &e.c)?))
            })
            .collect::<Result<_, Error>>()?;
        Ok(RawTable { dim: self.dim, entries })
    }

    /// Strict reading: every entry must have `i < j`.
    pub fn to_algebra(&self) -> Result<LieAlgebra, Error> {
        let field = self.field()?;
        self.check_shape()?;
        let mut sc: StructureConstants<GaussianRational> = StructureConstants::new(self.dim);
        let mut seen = BTreeSet::new();
        for (at, e) in self.sc.iter().enumerate() {
            let (i, j, k) = indices(e, self.dim, at)?;
            if i >= j {
                return Err(field_err(format!("sc[{at}]"), format!("i < j required, got ({}, {})", e.i, e.j)));
            }
            if !seen.insert((i, j, k)) {
                return Err(field_err(format!("sc[{at}]"), "duplicate entry"));
            }
            sc.set(i, j, k, scalar(|| format!("sc[{at}].c"), &e.c)?);
        }
        LieAlgebra::new(field, self.basis.clone(), sc)
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let mut sc: Vec<Entry<String>> = g
            .structure_constants()
            .iter()
            .map(|(&(i, j, k), c)| Entry { i: i + 1, j: j + 1, k: k + 1, c: c.to_string() })
            .collect();
        sc.sort_by_key(|e| (e.i, e.j, e.k));
        LieAlgebraDoc { dim: g.dim(), field: g.field().as_str().to_string(), basis: g.basis_names().to_vec(), sc }
    }
}

impl AlgebraSource {
    pub fn resolve(&self) -> Result<LieAlgebra, Error> {
        match self {
            AlgebraSource::Reference(name) => Ok(name.parse::<CatalogName>()?.algebra()),
            AlgebraSource::Inline(doc) => doc.to_algebra(),
        }
    }
}

impl InvolutionDoc {
    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_json(text)
    }

    pub fn to_involution(&self) -> Result<Involution, Error> {
        let g = self.algebra.resolve()?;
        let n = g.dim();
        if self.matrix.len() != n {
            return Err(field_err("matrix".into(), format!("{} rows for dim {n}", self.matrix.len())));
        }
        let mut rows = Vec::with_capacity(n);
        for (r, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(field_err(format!("matrix[{r}]"), format!("{} entries for dim {n}", row.len())));
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .map(|(c, s)| scalar(|| format!("matrix[{r}][{c}]"), s))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        let m = Matrix::from_rows(rows);
        if !m.is_real() {
            return Err(field_err("matrix".into(), "involutions must be real"));
        }
        Involution::new(g, m)
    }

    pub fn from_involution(theta: &Involution) -> Self {
        InvolutionDoc {
            algebra: AlgebraSource::Inline(LieAlgebraDoc::from_algebra(theta.algebra())),
            matrix: matrix_strings(theta.matrix()),
        }
    }
}

fn matrix_strings(m: &LinearMap) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect()
}

impl FamilyDoc {
    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_json(text)
    }

    pub fn to_family(&self) -> Result<AlgebraicFamily, Error> {
        if self.basis.len() != self.rank {
            return Err(field_err("basis".into(), format!("{} names for rank {}", self.basis.len(), self.rank)));
        }
        let involution = match self.involution.as_deref() {
            None => None,
            Some(COEFFICIENT_CONJUGATION) => Some(FamilyInvolution::CoefficientConjugation),
            Some(other) => {
                return Err(field_err(
                    "involution".into(),
                    format!("expected \"{COEFFICIENT_CONJUGATION}\" or null, got {other:?}"),
                ))
            }
        };
        let mut sc: StructureConstants<Polynomial> = StructureConstants::new(self.rank);
        let mut seen = BTreeSet::new();
        for (at, e) in self.sc.iter().enumerate() {
            let (i, j, k) = indices(e, self.rank, at)?;
            if i >= j {
                return Err(field_err(format!("sc[{at}]"), format!("i < j required, got ({}, {})", e.i, e.j)));
            }
            let coeffs = e
                .c
                .iter()
                .enumerate()
                .map(|(d, s)| scalar(|| format!("sc[{at}].c[{d}]"), s))
                .collect::<Result<Vec<_>, _>>()?;
            if !seen.insert((i, j, k)) {
                return Err(field_err(format!("sc[{at}]"), "duplicate entry"));
            }
            sc.set(i, j, k, Polynomial::from_coeffs(coeffs));
        }
        AlgebraicFamily::new(self.basis.clone(), sc, involution)
    }

    /// Fails for twisted involutions, which the schema cannot carry.
    pub fn from_family(fam: &AlgebraicFamily) -> Result<Self, Error> {
        let involution = match fam.involution() {
            None => None,
            Some(FamilyInvolution::CoefficientConjugation) => Some(COEFFICIENT_CONJUGATION.to_string()),
            Some(FamilyInvolution::Twisted(_)) => {
                return Err(Error::InvalidParameters(
                    "family/v1 only encodes coefficient conjugation; transport to an adapted basis first".into(),
                ))
            }
        };
        let mut sc: Vec<Entry<Vec<String>>> = fam
            .structure_constants()
            .iter()
            .map(|(&(i, j, k), f)| Entry {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                c: f.coeffs().iter().map(|c| c.to_string()).collect(),
            })
            .collect();
        sc.sort_by_key(|e| (e.i, e.j, e.k));
        Ok(FamilyDoc { rank: fam.rank(), basis: fam.basis_names().to_vec(), sc, involution })
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents are plain data");
    s.push('\n');
    s
}

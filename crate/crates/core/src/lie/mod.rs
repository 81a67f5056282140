//! Structure-constant Lie algebras over `Q(i)`.
//!
//! A [`LieAlgebra`] is a named basis together with sparse structure constants
//! `[e_i, e_j] = Σ_k C_ij^k e_k`, stored only for `i < j` (antisymmetry is
//! implied). Indices are 0-based in the API and 1-based in reports and JSON.

mod invariants;
mod table;

pub use invariants::{
    center, congruence_signature, derived_series, fingerprint, killing_form, killing_signature,
    lower_central_series, radical, Fingerprint,
};
pub use table::{RawTable, StructureConstants, ValidationReport};

use num_traits::Zero;

use crate::linalg::{LinearMap, Matrix, Subspace, Vector};
use crate::scalars::GaussianRational;
use crate::Error;

/// Scalar field of a Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// Rationals inside the reals; every structure constant has zero
    /// imaginary part.
    Real,
    /// Gaussian rationals inside the complex numbers.
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    field: Field,
    basis: Vec<String>,
    sc: StructureConstants<GaussianRational>,
}

impl LieAlgebra {
    /// Fails if the basis length disagrees with the table, or a real algebra
    /// has a non-real constant. Jacobi is *not* checked here; see
    /// [`LieAlgebra::validate`].
    pub fn new(
        field: Field,
        basis: Vec<String>,
        sc: StructureConstants<GaussianRational>,
    ) -> Result<Self, Error> {
        if basis.len() != sc.dim() {
            return Err(Error::DimensionMismatch {
                expected: sc.dim(),
                found: basis.len(),
            });
        }
        if field == Field::Real {
            if let Some((&(i, j, k), _)) = sc.iter().find(|(_, c)| !c.is_real()) {
                return Err(Error::NonRealConstant(i, j, k));
            }
        }
        Ok(LieAlgebra { field, basis, sc })
    }

    /// Abelian algebra with the given basis names.
    pub fn abelian_named(field: Field, basis: Vec<String>) -> Self {
        let sc = StructureConstants::new(basis.len());
        LieAlgebra { field, basis, sc }
    }

    /// Builds a real algebra from integer brackets `(i, j, [(k, c), ...])`.
    pub fn real_from_brackets(names: &[&str], brackets: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let mut sc = StructureConstants::new(names.len());
        for &(i, j, terms) in brackets {
            for &(k, c) in terms {
                sc.add(i, j, k, GaussianRational::from_int(c));
            }
        }
        LieAlgebra {
            field: Field::Real,
            basis: names.iter().map(|s| s.to_string()).collect(),
            sc,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn structure_constants(&self) -> &StructureConstants<GaussianRational> {
        &self.sc
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, Error> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        self.basis = names;
        Ok(self)
    }

    /// Same algebra viewed over the complex numbers.
    pub fn as_complex(&self) -> Self {
        LieAlgebra {
            field: Field::Complex,
            ..self.clone()
        }
    }

    /// Same basis and same constants; names and field are ignored.
    pub fn same_table(&self, other: &LieAlgebra) -> bool {
        self.sc == other.sc
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (k, c) in self.sc.bracket(i, j) {
            out[k] = c;
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (&(i, j, k), c) in self.sc.iter() {
            // coefficient of e_i ∧ e_j in x ∧ y
            let w = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !w.is_zero() {
                out[k] += &(&w * c);
            }
        }
        out
    }

    /// Exact antisymmetry and Jacobi check.
    pub fn validate(&self) -> ValidationReport<GaussianRational> {
        self.sc.validate()
    }

    /// The algebra with bracket `[x, y]_T = T⁻¹[Tx, Ty]`.
    pub fn transport_bracket(&self, t: &LinearMap) -> Result<LieAlgebra, Error> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.rows(),
            });
        }
        let t_inv = t.try_inverse()?;
        let images: Vec<Vector> = (0..n).map(|i| t.column(i)).collect();
        let mut sc = StructureConstants::new(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = t_inv.apply(&self.bracket_unchecked(&images[i], &images[j]));
                for (k, c) in v.into_coords().into_iter().enumerate() {
                    sc.set(i, j, k, c);
                }
            }
        }
        let field = if self.field == Field::Real && !t.is_real() {
            Field::Complex
        } else {
            self.field
        };
        LieAlgebra::new(field, self.basis.clone(), sc)
    }

    /// Span of the brackets of two families of vectors.
    pub fn bracket_span(&self, xs: &[Vector], ys: &[Vector]) -> Subspace {
        let brackets: Vec<Vector> = xs
            .iter()
            .flat_map(|x| ys.iter().map(move |y| self.bracket_unchecked(x, y)))
            .collect();
        Subspace::span(self.dim(), &brackets)
    }

    /// Whether `span(vs)` is closed under the bracket. On failure returns the
    /// offending pair of indices into `vs`.
    pub fn check_subalgebra(&self, vs: &[Vector]) -> Result<(), Error> {
        let s = Subspace::span(self.dim(), vs);
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                if !s.contains(&self.bracket_unchecked(&vs[a], &vs[b])) {
                    return Err(Error::NotSubalgebra(a, b));
                }
            }
        }
        Ok(())
    }

    /// Whether `span(vs)` is an ideal.
    pub fn is_ideal(&self, vs: &[Vector]) -> bool {
        let s = Subspace::span(self.dim(), vs);
        let basis: Vec<Vector> = (0..self.dim()).map(|i| Vector::unit(self.dim(), i)).collect();
        s.contains_subspace(&self.bracket_span(&basis, vs))
    }

    pub fn is_abelian_subspace(&self, vs: &[Vector]) -> bool {
        self.bracket_span(vs, vs).dim() == 0
    }

    /// Matrix of `ad x` (column `j` is `[x, e_j]`).
    pub fn ad(&self, x: &Vector) -> LinearMap {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.bracket_unchecked(x, &Vector::unit(n, j)))
            .collect();
        Matrix::from_columns(&cols, n)
    }
}

/// Failure of a homomorphism check: the basis pair `(i, j)` of the source on
/// which `φ[e_i, e_j] ≠ [φe_i, φe_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismFailure {
    pub i: usize,
    pub j: usize,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Checks that `map` (columns = images of the source basis in target
/// coordinates) preserves brackets on all basis pairs.
pub fn check_homomorphism(
    source: &LieAlgebra,
    target: &LieAlgebra,
    map: &LinearMap,
) -> Result<(), HomomorphismFailure> {
    assert_eq!(map.cols(), source.dim(), "map/source dimension mismatch");
    assert_eq!(map.rows(), target.dim(), "map/target dimension mismatch");
    let images: Vec<Vector> = (0..source.dim()).map(|i| map.column(i)).collect();
    for i in 0..source.dim() {
        for j in i + 1..source.dim() {
            let lhs = map.apply(&source.bracket_basis(i, j));
            let rhs = target.bracket_unchecked(&images[i], &images[j]);
            if lhs != rhs {
                return Err(HomomorphismFailure { i, j, lhs, rhs });
            }
        }
    }
    Ok(())
}

/// Outcome of certifying a map as a Lie algebra isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsomorphismCheck {
    Verified,
    NotSquare,
    Singular,
    BracketMismatch(HomomorphismFailure),
}

impl IsomorphismCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, IsomorphismCheck::Verified)
    }
}

/// Exact certificate that `map` is a Lie algebra isomorphism `source → target`.
pub fn check_isomorphism(source: &LieAlgebra, target: &LieAlgebra, map: &LinearMap) -> IsomorphismCheck {
    if source.dim() != target.dim() || !map.is_square() || map.rows() != source.dim() {
        return IsomorphismCheck::NotSquare;
    }
    if map.inverse().is_none() {
        return IsomorphismCheck::Singular;
    }
    match check_homomorphism(source, target, map) {
        Ok(()) => IsomorphismCheck::Verified,
        Err(f) => IsomorphismCheck::BracketMismatch(f),
    }
}

/// Direct sum `g ⊕ h` on the concatenated basis.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let n = g.dim();
    let mut sc = StructureConstants::new(n + h.dim());
    for (&(i, j, k), c) in g.sc.iter() {
        sc.set(i, j, k, c.clone());
    }
    for (&(i, j, k), c) in h.sc.iter() {
        sc.set(n + i, n + j, n + k, c.clone());
    }
    let field = if g.field == Field::Complex || h.field == Field::Complex {
        Field::Complex
    } else {
        Field::Real
    };
    let basis = g.basis.iter().chain(&h.basis).cloned().collect();
    LieAlgebra { field, basis, sc }
}

/// Human-readable name for a vector in the given basis, e.g. `L12+L34`.
pub fn describe_vector(names: &[String], v: &Vector) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v.iter()) {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let term = if s == "1" {
            name.clone()
        } else if s == "-1" {
            format!("-{name}")
        } else if c.is_real() || c.re.is_zero() {
            format!("{s}*{name}")
        } else {
            format!("({s})*{name}")
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

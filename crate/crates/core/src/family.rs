//! Algebraic families of Lie algebras over the affine line: free modules
//! over `Q(i)[z]` with polynomial structure constants.

use num_traits::{One, Zero};

use crate::contraction::iw_contract;
use crate::lie::{check_isomorphism, Field, IsomorphismCheck, LieAlgebra, StructureConstants, ValidationReport};
use crate::linalg::{LinearMap, Matrix, Subspace, Vector};
use crate::scalars::{rational_sqrt, GaussianRational, Polynomial, Rational};
use crate::symmetric::{dual_form, SymmetricPair};
use crate::Error;

/// Anti-holomorphic involution of a family, `σ(Σ f_i e_i) = Σ conj(f_i)·S e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyInvolution {
    /// `S = I`: conjugate the coefficients in the given basis.
    CoefficientConjugation,
    /// A constant matrix `S` with `S·conj(S) = I`.
    Twisted(LinearMap),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicFamily {
    basis: Vec<String>,
    sc: StructureConstants<Polynomial>,
    involution: Option<FamilyInvolution>,
}

impl AlgebraicFamily {
    pub fn new(
        basis: Vec<String>,
        sc: StructureConstants<Polynomial>,
        involution: Option<FamilyInvolution>,
    ) -> Result<Self, Error> {
        if basis.len() != sc.dim() {
            return Err(Error::DimensionMismatch { expected: sc.dim(), found: basis.len() });
        }
        if let Some(FamilyInvolution::Twisted(s)) = &involution {
            if s.rows() != sc.dim() || !s.is_square() {
                return Err(Error::DimensionMismatch { expected: sc.dim(), found: s.rows() });
            }
        }
        Ok(AlgebraicFamily { basis, sc, involution })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn structure_constants(&self) -> &StructureConstants<Polynomial> {
        &self.sc
    }

    pub fn involution(&self) -> Option<&FamilyInvolution> {
        self.involution.as_ref()
    }

    pub fn with_involution(mut self, inv: Option<FamilyInvolution>) -> Self {
        self.involution = inv;
        self
    }

    /// The complex algebra with constants `C_ij^k(α)`.
    pub fn fiber(&self, alpha: &GaussianRational) -> LieAlgebra {
        let sc = self.sc.map(|f| f.eval(alpha));
        LieAlgebra::new(Field::Complex, self.basis.clone(), sc).expect("shape checked")
    }
}

/// A family over `Q[z]`: every coefficient of every constant is real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealFamily {
    basis: Vec<String>,
    sc: StructureConstants<Polynomial>,
}

impl RealFamily {
    pub fn new(basis: Vec<String>, sc: StructureConstants<Polynomial>) -> Result<Self, Error> {
        if basis.len() != sc.dim() {
            return Err(Error::DimensionMismatch { expected: sc.dim(), found: basis.len() });
        }
        if let Some((&(i, j, k), _)) = sc.iter().find(|(_, f)| !f.is_real()) {
            return Err(Error::NonRealConstant(i, j, k));
        }
        Ok(RealFamily { basis, sc })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn structure_constants(&self) -> &StructureConstants<Polynomial> {
        &self.sc
    }

    pub fn fiber(&self, alpha: &Rational) -> LieAlgebra {
        let a = GaussianRational::from_rational(alpha.clone());
        let sc = self.sc.map(|f| f.eval(&a));
        LieAlgebra::new(Field::Real, self.basis.clone(), sc).expect("real coefficients")
    }

    pub fn check(&self) -> ValidationReport<Polynomial> {
        self.sc.validate()
    }

    /// The complexified family, with coefficient conjugation as its real
    /// structure.
    pub fn complexify(&self) -> AlgebraicFamily {
        AlgebraicFamily {
            basis: self.basis.clone(),
            sc: self.sc.clone(),
            involution: Some(FamilyInvolution::CoefficientConjugation),
        }
    }
}

/// Antisymmetry holds by construction; Jacobi is checked as a polynomial
/// identity, reporting the full residue polynomial.
pub fn check_family(fam: &AlgebraicFamily) -> ValidationReport<Polynomial> {
    fam.sc.validate()
}

/// The family with every coefficient conjugated.
pub fn conjugate_family(fam: &AlgebraicFamily) -> AlgebraicFamily {
    AlgebraicFamily {
        basis: fam.basis.clone(),
        sc: fam.sc.map(Polynomial::conj),
        involution: fam.involution.clone(),
    }
}

/// `[x, y]` for constant coordinate vectors, with polynomial result.
fn poly_bracket(sc: &StructureConstants<Polynomial>, x: &Vector, y: &Vector) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(); sc.dim()];
    for (&(i, j, k), c) in sc.iter() {
        let w = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
        if !w.is_zero() {
            out[k] = &out[k] + &c.scale(&w);
        }
    }
    out
}

/// Constants of the family in the basis given by the columns of `t`.
fn transport_poly(sc: &StructureConstants<Polynomial>, t: &LinearMap) -> Result<StructureConstants<Polynomial>, Error> {
    let n = sc.dim();
    let t_inv = t.try_inverse()?;
    let cols: Vec<Vector> = (0..n).map(|i| t.column(i)).collect();
    let mut out = StructureConstants::new(n);
    for a in 0..n {
        for b in a + 1..n {
            let v = poly_bracket(sc, &cols[a], &cols[b]);
            for k in 0..n {
                let mut acc = Polynomial::zero();
                for (m, f) in v.iter().enumerate() {
                    if !t_inv[(k, m)].is_zero() {
                        acc = &acc + &f.scale(&t_inv[(k, m)]);
                    }
                }
                out.set(a, b, k, acc);
            }
        }
    }
    Ok(out)
}

/// The real family of `σ`-fixed points.
///
/// With coefficient conjugation the constants must already be real. With a
/// twisted `S` an adapted basis is chosen greedily from `e_j + Se_j` and
/// `(e_j − Se_j)/i`, which are `σ`-fixed, and the constants are rewritten
/// in it.
pub fn real_points(fam: &AlgebraicFamily) -> Result<RealFamily, Error> {
    match &fam.involution {
        None => Err(Error::NotRealStructure("family has no involution".into())),
        Some(FamilyInvolution::CoefficientConjugation) => {
            if let Some((&(i, j, k), _)) = fam.sc.iter().find(|(_, f)| !f.is_real()) {
                return Err(Error::NotRealStructure(format!(
                    "constant ({}, {}, {}) has a non-real coefficient",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            RealFamily::new(fam.basis.clone(), fam.sc.clone())
        }
        Some(FamilyInvolution::Twisted(s)) => {
            let n = fam.rank();
            if s.mul(&s.conj()) != Matrix::identity(n) {
                return Err(Error::NotRealStructure("σ² ≠ id".into()));
            }
            for i in 0..n {
                for j in i + 1..n {
                    let lhs: Vec<Polynomial> = (0..n)
                        .map(|r| {
                            (0..n).fold(Polynomial::zero(), |acc, k| {
                                &acc + &fam.sc.get(i, j, k).conj().scale(&s[(r, k)])
                            })
                        })
                        .collect();
                    if lhs != poly_bracket(&fam.sc, &s.column(i), &s.column(j)) {
                        return Err(Error::NotRealStructure(format!(
                            "bracket not preserved on ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
            let minus_i = -GaussianRational::i();
            let mut chosen: Vec<Vector> = Vec::new();
            for j in 0..n {
                let e = Vector::unit(n, j);
                let se = s.column(j);
                for cand in [e.add(&se), e.sub(&se).scale(&minus_i)] {
                    let mut trial = chosen.clone();
                    trial.push(cand);
                    if chosen.len() < n && Subspace::span(n, &trial).dim() == trial.len() {
                        chosen = trial;
                    }
                }
            }
            let b = Matrix::from_columns(&chosen, n);
            let sc = transport_poly(&fam.sc, &b)?;
            if sc.iter().any(|(_, f)| !f.is_real()) {
                return Err(Error::NotRealStructure("constants not real in the adapted basis".into()));
            }
            let names = chosen
                .iter()
                .map(|v| crate::lie::describe_vector(&fam.basis, v))
                .collect();
            RealFamily::new(names, sc)
        }
    }
}

/// The family on `k ⊕ p` whose `p×p→k` constants are multiplied by `z`.
pub fn contraction_family(sp: &SymmetricPair) -> RealFamily {
    let a = sp.adapted();
    let m = sp.dims().0;
    let mut sc = StructureConstants::new(a.dim());
    for (&(i, j, k), c) in a.structure_constants().iter() {
        let f = if i >= m && k < m {
            Polynomial::monomial(c.clone(), 1)
        } else {
            Polynomial::constant(c.clone())
        };
        sc.set(i, j, k, f);
    }
    RealFamily::new(a.basis_names().to_vec(), sc).expect("constants of a real algebra")
}

/// Which side of the trichotomy a certificate lands on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberTarget {
    /// `g` itself (`α > 0`).
    Original,
    /// `k ⋉ p` (`α = 0`).
    Contraction,
    /// `g*` (`α < 0`).
    Dual,
}

impl FiberTarget {
    pub fn for_alpha(alpha: &Rational) -> Self {
        if alpha.is_zero() {
            FiberTarget::Contraction
        } else if *alpha > Rational::zero() {
            FiberTarget::Original
        } else {
            FiberTarget::Dual
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberCertificate {
    /// `map` is a verified isomorphism from the fiber onto the target (both
    /// in the adapted basis), and transporting the target's table by `map`
    /// reproduces the fiber's table exactly.
    Verified { target: FiberTarget, map: LinearMap },
    /// `|α|` is not the square of a rational.
    Unavailable,
    Failed(IsomorphismCheck),
}

impl FiberCertificate {
    pub fn is_verified(&self) -> bool {
        matches!(self, FiberCertificate::Verified { .. })
    }
}

/// For `α = ±β²` the map `diag(1_k, β·1_p)` carries the fiber onto `g`
/// (plus sign) or `g*` (minus sign); at `α = 0` the identity carries it onto
/// the contraction.
pub fn fiber_isomorphism_certificate(
    sp: &SymmetricPair,
    fam: &RealFamily,
    alpha: &Rational,
) -> Result<FiberCertificate, Error> {
    let fiber = fam.fiber(alpha);
    let (m, r) = sp.dims();
    let target = FiberTarget::for_alpha(alpha);
    let Some(beta) = rational_sqrt(&num_traits::Signed::abs(alpha)) else {
        return Ok(FiberCertificate::Unavailable);
    };
    let beta = if beta.is_zero() { Rational::one() } else { beta };
    let map = Matrix::diagonal(
        (0..m + r)
            .map(|t| if t < m { GaussianRational::one() } else { GaussianRational::from_rational(beta.clone()) })
            .collect(),
    );
    let target_algebra = match target {
        FiberTarget::Original => sp.adapted(),
        FiberTarget::Contraction => iw_contract(sp.decomposition()),
        FiberTarget::Dual => dual_form(sp)?.0,
    };
    let check = check_isomorphism(&fiber, &target_algebra, &map);
    if !check.is_verified() {
        return Ok(FiberCertificate::Failed(check));
    }
    if !target_algebra.transport_bracket(&map)?.same_table(&fiber) {
        return Ok(FiberCertificate::Failed(IsomorphismCheck::Singular));
    }
    Ok(FiberCertificate::Verified { target, map })
}

/// Structure constants of the `Q(i)[z]`-span of polynomial matrices.
///
/// Each matrix must own a pivot entry: a position where it is a nonzero
/// constant and every other matrix vanishes. Coefficients are read off
/// those entries and the whole commutator is then reconstructed to confirm
/// closure.
pub fn from_matrix_span(basis: Vec<String>, mats: &[Matrix<Polynomial>]) -> Result<AlgebraicFamily, Error> {
    let n = mats.len();
    let mut pivots = Vec::with_capacity(n);
    for (c, m) in mats.iter().enumerate() {
        let pos = (0..m.rows())
            .flat_map(|r| (0..m.cols()).map(move |s| (r, s)))
            .find(|&(r, s)| {
                m[(r, s)].degree() == Some(0)
                    && mats.iter().enumerate().all(|(d, o)| d == c || o[(r, s)].is_zero())
            })
            .ok_or_else(|| Error::InvalidParameters(format!("matrix {} has no pivot entry", c + 1)))?;
        let inv = m[pos].coeff(0).inv().expect("nonzero constant");
        pivots.push((pos, inv));
    }
    let mut sc = StructureConstants::new(n);
    for a in 0..n {
        for b in a + 1..n {
            let br = mats[a].commutator(&mats[b]);
            let coeffs: Vec<Polynomial> = pivots.iter().map(|(pos, inv)| br[*pos].scale(inv)).collect();
            let rebuilt = coeffs.iter().zip(mats).fold(Matrix::zeros(br.rows(), br.cols()), |acc, (f, m)| {
                acc.add(&m.map(|x| x * f))
            });
            if rebuilt != br {
                return Err(Error::InvalidTable(format!("span not closed under [{}, {}]", a + 1, b + 1)));
            }
            for (k, f) in coeffs.into_iter().enumerate() {
                sc.set(a, b, k, f);
            }
        }
    }
    AlgebraicFamily::new(basis, sc, None)
}

fn elementary(n: usize, r: usize, c: usize, f: Polynomial) -> Matrix<Polynomial> {
    let mut m = Matrix::zeros(n, n);
    m[(r, c)] = f;
    m
}

/// The 3×3 family spanned by `A = E12 − E21`, `B = E13 + z·E31`,
/// `C = E23 + z·E32`, with entrywise conjugation as its involution.
pub fn matrix_family_so3() -> AlgebraicFamily {
    let one = Polynomial::one;
    let z = Polynomial::z;
    let a = elementary(3, 0, 1, one()).sub(&elementary(3, 1, 0, one()));
    let b = elementary(3, 0, 2, one()).add(&elementary(3, 2, 0, z()));
    let c = elementary(3, 1, 2, one()).add(&elementary(3, 2, 1, z()));
    from_matrix_span(vec!["A".into(), "B".into(), "C".into()], &[a, b, c])
        .expect("pivot entries (1,2), (1,3), (2,3)")
        .with_involution(Some(FamilyInvolution::CoefficientConjugation))
}

/// The `2n×2n` blocks `[[X₊, X₋], [z·X₋, X₊]]` with `X± = (X ± JXJ⁻¹)/2`,
/// for `X` the matrix of each adapted basis vector of `sp`.
///
/// `rep[i]` is the matrix of the `i`-th basis vector of `g`, and `θ` must
/// act on it as conjugation by `j`.
pub fn block_matrices(sp: &SymmetricPair, rep: &[LinearMap], j: &LinearMap) -> Result<Vec<Matrix<Polynomial>>, Error> {
    let g = sp.algebra();
    if rep.len() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: rep.len() });
    }
    let j_inv = j.try_inverse()?;
    let half = GaussianRational::frac(1, 2);
    let as_poly = |m: &LinearMap| m.map(|c| Polynomial::constant(c.clone()));
    let n = rep.first().map_or(0, |m| m.rows());
    let vectors = sp.k_basis().iter().chain(sp.p_basis());
    Ok(vectors
        .map(|v| {
            let x = v.iter().zip(rep).fold(Matrix::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)));
            let tx = j.mul(&x).mul(&j_inv);
            let plus = as_poly(&x.add(&tx).scale(&half));
            let minus = as_poly(&x.sub(&tx).scale(&half));
            let lower = minus.map(|f| f * &Polynomial::z());
            Matrix::block2(&plus, &minus, &lower, &plus)
        })
        .collect())
}

/// Structure constants of the block-matrix algebra at `z = α`, in the basis
/// of evaluated block matrices.
pub fn block_fiber(sp: &SymmetricPair, rep: &[LinearMap], j: &LinearMap, alpha: &Rational) -> Result<LieAlgebra, Error> {
    let a = GaussianRational::from_rational(alpha.clone());
    let mats: Vec<LinearMap> = block_matrices(sp, rep, j)?
        .iter()
        .map(|m| m.map(|f| f.eval(&a)))
        .collect();
    let n = mats.len();
    let flat = |m: &LinearMap| Vector::new((0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect());
    let cols: Vec<Vector> = mats.iter().map(flat).collect();
    let len = cols.first().map_or(0, |v| v.len());
    let span = Matrix::from_columns(&cols, len);
    if span.rank() != n {
        return Err(Error::NotABasis { rank: span.rank(), dim: n });
    }
    let mut sc = StructureConstants::new(n);
    for x in 0..n {
        for y in x + 1..n {
            let c = span
                .solve(&flat(&mats[x].commutator(&mats[y])))
                .ok_or(Error::NotSubalgebra(x, y))?;
            for (k, v) in c.into_coords().into_iter().enumerate() {
                sc.set(x, y, k, v);
            }
        }
    }
    LieAlgebra::new(Field::Real, sp.adapted().basis_names().to_vec(), sc)
}

/// Outcome of comparing the abstract family with the block-matrix picture
/// at one parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    pub matrix_fiber: LieAlgebra,
    pub family_fiber: LieAlgebra,
}

impl RealizationReport {
    pub fn is_pass(&self) -> bool {
        self.matrix_fiber.same_table(&self.family_fiber)
    }
}

pub fn matrix_realization_check(
    sp: &SymmetricPair,
    rep: &[LinearMap],
    j: &LinearMap,
    alpha: &Rational,
) -> Result<RealizationReport, Error> {
    Ok(RealizationReport {
        matrix_fiber: block_fiber(sp, rep, j, alpha)?,
        family_fiber: contraction_family(sp).fiber(alpha),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{fingerprint, killing_signature};
    use crate::scalars::rational;
    use crate::symmetric::{split, Involution};
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    fn family3(entries: &[(usize, usize, usize, Polynomial)]) -> AlgebraicFamily {
        let mut sc = StructureConstants::new(3);
        for (i, j, k, f) in entries {
            sc.set(*i, *j, *k, f.clone());
        }
        AlgebraicFamily::new(vec!["e1".into(), "e2".into(), "e3".into()], sc, None).unwrap()
    }

    fn so3() -> LieAlgebra {
        LieAlgebra::real_from_brackets(
            &["L12", "L13", "L23"],
            &[(0, 1, &[(2, -1)]), (0, 2, &[(1, 1)]), (1, 2, &[(0, -1)])],
        )
    }

    fn so3_pair() -> SymmetricPair {
        let m = Matrix::diagonal(vec![1.into(), (-1).into(), (-1).into()]);
        split(&Involution::new(so3(), m).unwrap()).unwrap()
    }

    #[test]
    fn constant_family_fibers_agree() {
        let f = family3(&[(0, 1, 2, p(&[1])), (1, 2, 0, p(&[1])), (2, 0, 1, p(&[1]))]);
        assert!(f.fiber(&3.into()).same_table(&f.fiber(&GaussianRational::frac(-1, 2))));
    }

    #[test]
    fn rescaling_patterns_pass() {
        // [e1,e2] = z e3, [e2,e3] = e1, [e3,e1] = e2
        let f = family3(&[(0, 1, 2, p(&[0, 1])), (1, 2, 0, p(&[1])), (2, 0, 1, p(&[1]))]);
        assert!(check_family(&f).is_pass());
        // [e1,e2] = z e3, [e2,e3] = z e1, [e3,e1] = e2: still a rescaled so(3)
        let f = family3(&[(0, 1, 2, p(&[0, 1])), (1, 2, 0, p(&[0, 1])), (2, 0, 1, p(&[1]))]);
        assert!(check_family(&f).is_pass());
    }

    #[test]
    fn jacobi_failure_is_a_polynomial() {
        // [e1,e2] = z e1, [e1,e3] = e3:
        // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = z[e1,e3] + 0 − [e3,e2] = z e3.
        let f = family3(&[(0, 1, 0, p(&[0, 1])), (0, 2, 2, p(&[1]))]);
        assert_eq!(
            check_family(&f),
            ValidationReport::Jacobi { i: 0, j: 1, k: 2, l: 2, residue: p(&[0, 1]) }
        );
    }

    #[test]
    fn matrix_family_fibers() {
        let fam = matrix_family_so3();
        let sc = fam.structure_constants();
        // [A,B] = −C, [A,C] = B, [B,C] = z·A
        assert_eq!(sc.get(0, 1, 2), p(&[-1]));
        assert_eq!(sc.get(0, 2, 1), p(&[1]));
        assert_eq!(sc.get(1, 2, 0), p(&[0, 1]));
        assert!(check_family(&fam).is_pass());
        let real = real_points(&fam).unwrap();
        assert_eq!(killing_signature(&real.fiber(&rational(-1, 1))), Ok((0, 3)));
        assert_eq!(killing_signature(&real.fiber(&rational(1, 1))), Ok((2, 1)));
        let zero = real.fiber(&rational(0, 1));
        assert_eq!(crate::lie::center(&zero).dim(), 0);
        assert_eq!(crate::lie::derived_series(&zero), vec![3, 2, 0]);
    }

    #[test]
    fn so3c_family_has_abelian_ideal_at_zero() {
        let fam = matrix_family_so3();
        let f0 = fam.fiber(&GaussianRational::zero());
        let ideal = [Vector::from_ints(&[0, 1, 0]), Vector::from_ints(&[0, 0, 1])];
        assert!(f0.is_ideal(&ideal) && f0.is_abelian_subspace(&ideal));
        let f2 = fam.fiber(&GaussianRational::i());
        assert_eq!(fingerprint(&f2), fingerprint(&so3().as_complex()));
    }

    #[test]
    fn contraction_family_so3() {
        let sp = so3_pair();
        let fam = contraction_family(&sp);
        let sc = fam.structure_constants();
        // e = L23, f = L13: [L12,e] = f, [L12,f] = −e, [e,f] = z·L12
        assert_eq!(sc.get(0, 2, 1), p(&[1]));
        assert_eq!(sc.get(0, 1, 2), p(&[-1]));
        assert_eq!(sc.get(2, 1, 0), p(&[0, 1]));
        assert!(fam.check().is_pass());
        assert!(fam.fiber(&rational(1, 1)).same_table(&so3()));
        assert!(fam.fiber(&rational(-1, 1)).same_table(&dual_form(&sp).unwrap().0));
        assert!(fam.fiber(&rational(0, 1)).same_table(&iw_contract(sp.decomposition())));
    }

    #[test]
    fn identity_involution_gives_constant_family() {
        let sp = split(&Involution::identity(so3()).unwrap()).unwrap();
        let fam = contraction_family(&sp);
        assert!(fam.structure_constants().iter().all(|(_, f)| f.degree() == Some(0)));
    }

    #[test]
    fn certificates() {
        let sp = so3_pair();
        let fam = contraction_family(&sp);
        match fiber_isomorphism_certificate(&sp, &fam, &rational(1, 1)).unwrap() {
            FiberCertificate::Verified { target, map } => {
                assert_eq!(target, FiberTarget::Original);
                assert_eq!(map, Matrix::identity(3));
            }
            other => panic!("{other:?}"),
        }
        match fiber_isomorphism_certificate(&sp, &fam, &rational(4, 1)).unwrap() {
            FiberCertificate::Verified { map, .. } => {
                assert_eq!(map, Matrix::diagonal(vec![1.into(), 2.into(), 2.into()]))
            }
            other => panic!("{other:?}"),
        }
        let c = fiber_isomorphism_certificate(&sp, &fam, &rational(-1, 1)).unwrap();
        assert!(matches!(c, FiberCertificate::Verified { target: FiberTarget::Dual, .. }));
        let c = fiber_isomorphism_certificate(&sp, &fam, &rational(0, 1)).unwrap();
        assert!(matches!(c, FiberCertificate::Verified { target: FiberTarget::Contraction, .. }));
        assert_eq!(
            fiber_isomorphism_certificate(&sp, &fam, &rational(1, 3)).unwrap(),
            FiberCertificate::Unavailable
        );
    }

    #[test]
    fn real_points_coefficient_conjugation() {
        let fam = contraction_family(&so3_pair()).complexify();
        assert_eq!(real_points(&fam).unwrap(), contraction_family(&so3_pair()));
        let bad = family3(&[(0, 1, 2, Polynomial::constant(GaussianRational::i()))])
            .with_involution(Some(FamilyInvolution::CoefficientConjugation));
        assert!(matches!(real_points(&bad), Err(Error::NotRealStructure(_))));
    }

    #[test]
    fn real_points_twisted() {
        // Rewrite the so(3) z-family on u = e + i·f, v = e − i·f (e = L23,
        // f = L13). Conjugation then swaps u and v.
        let real = contraction_family(&so3_pair());
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let zero = GaussianRational::zero();
        let t = Matrix::from_rows(vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), i.clone(), -i.clone()],
            vec![zero.clone(), one.clone(), one.clone()],
        ]);
        let sc = transport_poly(real.structure_constants(), &t).unwrap();
        assert!(sc.iter().any(|(_, f)| !f.is_real()));
        let swap = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let twisted = AlgebraicFamily::new(
            vec!["L12".into(), "u".into(), "v".into()],
            sc,
            Some(FamilyInvolution::Twisted(swap)),
        )
        .unwrap();
        assert!(check_family(&twisted).is_pass());
        let back = real_points(&twisted).unwrap();
        assert!(back.check().is_pass());
        for a in [-4, -1, 0, 1, 4] {
            let a = rational(a, 1);
            assert_eq!(fingerprint(&back.fiber(&a)), fingerprint(&real.fiber(&a)));
        }
        // a twist that is not an automorphism is rejected
        let bad = twisted.clone().with_involution(Some(FamilyInvolution::Twisted(Matrix::identity(3))));
        assert!(real_points(&bad).is_err());
    }

    #[test]
    fn block_realization_so3() {
        // defining matrices of L12, L13, L23 and J = diag(1, 1, −1)
        let e = |r: usize, c: usize| {
            let mut m = Matrix::zeros(3, 3);
            m[(r, c)] = GaussianRational::one();
            m
        };
        let rep = vec![e(0, 1).sub(&e(1, 0)), e(0, 2).sub(&e(2, 0)), e(1, 2).sub(&e(2, 1))];
        let j = Matrix::diagonal(vec![1.into(), 1.into(), (-1).into()]);
        let sp = so3_pair();
        for a in [-1, 0, 1, 4] {
            assert!(matrix_realization_check(&sp, &rep, &j, &rational(a, 1)).unwrap().is_pass());
        }
        let mats = block_matrices(&sp, &rep, &j).unwrap();
        let poly = from_matrix_span(contraction_family(&sp).basis_names().to_vec(), &mats).unwrap();
        assert_eq!(poly.structure_constants(), contraction_family(&sp).structure_constants());
    }

    fn gauss() -> impl Strategy<Value = GaussianRational> {
        (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| {
            GaussianRational::new(rational(a, b), rational(c, d))
        })
    }

    proptest! {
        #[test]
        fn fiber_commutes_with_conjugation(alpha in gauss()) {
            let fam = matrix_family_so3();
            let i = GaussianRational::i();
            // make the family genuinely complex
            let mut sc = fam.structure_constants().clone();
            sc.add(0, 1, 0, Polynomial::monomial(i.clone(), 2));
            let fam = AlgebraicFamily::new(fam.basis_names().to_vec(), sc, None).unwrap();
            let lhs = conjugate_family(&fam).fiber(&alpha);
            let rhs = fam.fiber(&alpha.conj()).structure_constants().map(|c| c.conj());
            prop_assert_eq!(lhs.structure_constants(), &rhs);
        }

        #[test]
        fn certificate_inverts(num in 1i64..6, den in 1i64..6, neg in any::<bool>()) {
            let sp = so3_pair();
            let fam = contraction_family(&sp);
            let b2 = rational(num * num, den * den);
            let alpha = if neg { -b2 } else { b2 };
            match fiber_isomorphism_certificate(&sp, &fam, &alpha).unwrap() {
                FiberCertificate::Verified { map, .. } => {
                    let inv = map.try_inverse().unwrap();
                    prop_assert_eq!(map.mul(&inv), Matrix::identity(3));
                }
                other => prop_assert!(false, "{:?}", other),
            }
        }
    }
}

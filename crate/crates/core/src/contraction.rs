//! Inönü–Wigner contractions and the canonical semidirect quotient.
//!
//! The simple contraction with respect to `g = k ⊕ p` is the limit at `ε = 0`
//! of the bracket transported by `pr_k + ε·pr_p`. Its output lives in the
//! adapted basis (k-vectors first, then p-vectors), named `k:…` and `p:…`.

use num_traits::One;
use serde::Serialize;

use crate::lie::{check_isomorphism, describe_vector, IsomorphismCheck, LieAlgebra, StructureConstants};
use crate::linalg::{coordinates, rank_of, LinearMap, Matrix, Subspace, Vector};
use crate::scalars::{GaussianRational, Rational};
use crate::Error;

/// A subalgebra `k` together with a vector-space complement `p`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    algebra: LieAlgebra,
    k_basis: Vec<Vector>,
    p_basis: Vec<Vector>,
}

impl Decomposition {
    /// Fails unless `k_basis ∪ p_basis` is a basis and `span(k_basis)` is
    /// closed under the bracket.
    pub fn new(algebra: LieAlgebra, k_basis: Vec<Vector>, p_basis: Vec<Vector>) -> Result<Self, Error> {
        let n = algebra.dim();
        for v in k_basis.iter().chain(&p_basis) {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        let all: Vec<Vector> = k_basis.iter().chain(&p_basis).cloned().collect();
        let rank = rank_of(n, &all);
        if all.len() != n || rank != n {
            return Err(Error::NotABasis { rank, dim: n });
        }
        algebra.check_subalgebra(&k_basis)?;
        Ok(Decomposition { algebra, k_basis, p_basis })
    }

    /// `k` spanned by the listed basis vectors, `p` by the remaining ones.
    pub fn from_indices(algebra: LieAlgebra, k: &[usize]) -> Result<Self, Error> {
        let n = algebra.dim();
        if let Some(&bad) = k.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidParameters(format!("basis index {} out of range", bad + 1)));
        }
        let k_basis = k.iter().map(|&i| Vector::unit(n, i)).collect();
        let p_basis = (0..n).filter(|i| !k.contains(i)).map(|i| Vector::unit(n, i)).collect();
        Decomposition::new(algebra, k_basis, p_basis)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn k_basis(&self) -> &[Vector] {
        &self.k_basis
    }

    pub fn p_basis(&self) -> &[Vector] {
        &self.p_basis
    }

    pub fn k_dim(&self) -> usize {
        self.k_basis.len()
    }

    /// Columns are the k-vectors followed by the p-vectors.
    pub fn adapted_basis(&self) -> LinearMap {
        let all: Vec<Vector> = self.k_basis.iter().chain(&self.p_basis).cloned().collect();
        Matrix::from_columns(&all, self.algebra.dim())
    }

    /// `g` rewritten in the adapted basis.
    pub fn adapted_algebra(&self) -> LieAlgebra {
        let names = self.adapted_names();
        self.algebra
            .transport_bracket(&self.adapted_basis())
            .and_then(|a| a.with_names(names))
            .expect("adapted basis is invertible")
    }

    /// Names are kept verbatim when the adapted basis is the standard one.
    fn adapted_names(&self) -> Vec<String> {
        let names = self.algebra.basis_names();
        if self.adapted_basis() == Matrix::identity(self.algebra.dim()) {
            return names.to_vec();
        }
        let k = self.k_basis.iter().map(|v| format!("k:{}", describe_vector(names, v)));
        let p = self.p_basis.iter().map(|v| format!("p:{}", describe_vector(names, v)));
        k.chain(p).collect()
    }
}

/// Simple IW contraction: k×k as in `g`, k×p projected to p, p×p zero.
pub fn iw_contract(d: &Decomposition) -> LieAlgebra {
    let a = d.adapted_algebra();
    let m = d.k_dim();
    let n = a.dim();
    let mut sc = StructureConstants::new(n);
    for (&(i, j, k), c) in a.structure_constants().iter() {
        let keep = match (i < m, j < m) {
            (true, true) => true,
            (true, false) => k >= m,
            _ => false,
        };
        if keep {
            sc.set(i, j, k, c.clone());
        }
    }
    LieAlgebra::new(a.field(), a.basis_names().to_vec(), sc).expect("subset of a valid table")
}

/// Exponents `n_1 … n_dim` of the diagonal scaling `T_ε = diag(ε^{n_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentAssignment(pub Vec<i64>);

impl ExponentAssignment {
    /// Power of ε multiplying `C_ij^k` after transport: `n_i + n_j − n_k`.
    pub fn exponent(&self, i: usize, j: usize, k: usize) -> i64 {
        self.0[i] + self.0[j] - self.0[k]
    }

    /// `diag(ε^{n_i})`.
    pub fn scaling(&self, eps: &Rational) -> LinearMap {
        Matrix::diagonal(self.0.iter().map(|&e| GaussianRational::from_rational(rational_pow(eps, e))).collect())
    }
}

fn rational_pow(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// A nonzero constant whose transported value blows up as ε → 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivergentConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractionLimit {
    Exists(LieAlgebra),
    /// Every constant with negative exponent, in table order.
    Diverges(Vec<DivergentConstant>),
}

impl ContractionLimit {
    pub fn algebra(&self) -> Option<&LieAlgebra> {
        match self {
            ContractionLimit::Exists(a) => Some(a),
            ContractionLimit::Diverges(_) => None,
        }
    }
}

/// Limit of `T_ε⁻¹[T_ε·, T_ε·]` decided from the exponents alone: constants
/// with exponent 0 survive, positive exponents vanish, any negative exponent
/// on a nonzero constant means no limit.
pub fn generalized_iw_contract(g: &LieAlgebra, e: &ExponentAssignment) -> Result<ContractionLimit, Error> {
    if e.0.len() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: e.0.len() });
    }
    let mut sc = StructureConstants::new(g.dim());
    let mut bad = Vec::new();
    for (&(i, j, k), c) in g.structure_constants().iter() {
        match e.exponent(i, j, k) {
            0 => sc.set(i, j, k, c.clone()),
            x if x < 0 => bad.push(DivergentConstant { i, j, k, exponent: x }),
            _ => {}
        }
    }
    if !bad.is_empty() {
        return Ok(ContractionLimit::Diverges(bad));
    }
    Ok(ContractionLimit::Exists(LieAlgebra::new(g.field(), g.basis_names().to_vec(), sc)?))
}

/// The table predicted by the exponent law at a fixed ε: `C_ij^k · ε^{n_i+n_j−n_k}`.
pub fn scaled_table(g: &LieAlgebra, e: &ExponentAssignment, eps: &Rational) -> LieAlgebra {
    let mut sc = StructureConstants::new(g.dim());
    for (&(i, j, k), c) in g.structure_constants().iter() {
        let f = GaussianRational::from_rational(rational_pow(eps, e.exponent(i, j, k)));
        sc.set(i, j, k, c * &f);
    }
    LieAlgebra::new(g.field(), g.basis_names().to_vec(), sc).expect("scaling keeps reality")
}

/// Limit verdict read off numerically from transported tables at a
/// decreasing sequence of ε: the limit exists iff no constant grows in
/// modulus along the sequence. Cross-check only.
pub fn sweep_verdict(g: &LieAlgebra, e: &ExponentAssignment, eps: &[Rational]) -> Result<bool, Error> {
    let tables = eps
        .iter()
        .map(|x| g.transport_bracket(&e.scaling(x)))
        .collect::<Result<Vec<_>, _>>()?;
    for w in tables.windows(2) {
        for (&(i, j, k), _) in g.structure_constants().iter() {
            let before = w[0].structure_constants().get(i, j, k).norm_sqr();
            let after = w[1].structure_constants().get(i, j, k).norm_sqr();
            if after > before {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `k ⋉ (g/k)` with `g/k` abelian and `k` acting by `X·(Y+k) = [X,Y]+k`.
///
/// The quotient is coordinatized by the basis vectors `e_f` at the free
/// (non-pivot) positions of the row-reduced `k`, so the result depends on
/// `k` only through its span and the chosen `k_basis`.
pub fn semidirect_quotient(g: &LieAlgebra, k_basis: &[Vector]) -> Result<LieAlgebra, Error> {
    let n = g.dim();
    let ks = Subspace::span(n, k_basis);
    if ks.dim() != k_basis.len() {
        return Err(Error::NotABasis { rank: ks.dim(), dim: k_basis.len() });
    }
    g.check_subalgebra(k_basis)?;
    let m = k_basis.len();
    let free = ks.free_coordinates();
    let mut sc = StructureConstants::new(n);
    for a in 0..m {
        for b in a + 1..m {
            let c = coordinates(k_basis, &g.bracket_unchecked(&k_basis[a], &k_basis[b]))
                .expect("k is a subalgebra");
            for (t, x) in c.into_coords().into_iter().enumerate() {
                sc.set(a, b, t, x);
            }
        }
        for (s, &f) in free.iter().enumerate() {
            let r = ks.reduce(&g.bracket_unchecked(&k_basis[a], &Vector::unit(n, f)));
            for (t, &f2) in free.iter().enumerate() {
                sc.set(a, m + s, m + t, r[f2].clone());
            }
        }
    }
    let names = g.basis_names();
    let basis = k_basis
        .iter()
        .map(|v| format!("k:{}", describe_vector(names, v)))
        .chain(free.iter().map(|&f| format!("[{}]", names[f])))
        .collect();
    LieAlgebra::new(g.field(), basis, sc)
}

/// Free-coordinate class of `v + k` in the quotient basis of
/// [`semidirect_quotient`].
fn quotient_coords(ks: &Subspace, v: &Vector) -> Vec<GaussianRational> {
    let r = ks.reduce(v);
    ks.free_coordinates().into_iter().map(|f| r[f].clone()).collect()
}

/// Isomorphism from `iw_contract(d)` onto `semidirect_quotient(g, k)`:
/// identity on k, `p_b ↦ p_b + k`.
pub fn canonical_identification(d: &Decomposition) -> LinearMap {
    let n = d.algebra.dim();
    let m = d.k_dim();
    let ks = Subspace::span(n, &d.k_basis);
    let mut psi = Matrix::zeros(n, n);
    for a in 0..m {
        psi[(a, a)] = GaussianRational::one();
    }
    for (b, p) in d.p_basis.iter().enumerate() {
        for (t, c) in quotient_coords(&ks, p).into_iter().enumerate() {
            psi[(m + t, m + b)] = c;
        }
    }
    psi
}

/// Compares the contractions for two complements of the same `k`: the map
/// through `g/k` must carry one table exactly onto the other, and both onto
/// the semidirect quotient.
pub fn complements_agree(d1: &Decomposition, d2: &Decomposition) -> Result<bool, Error> {
    if d1.k_basis != d2.k_basis || !d1.algebra.same_table(&d2.algebra) {
        return Err(Error::InvalidParameters("decompositions do not share g and k".into()));
    }
    let (c1, c2) = (iw_contract(d1), iw_contract(d2));
    let sq = semidirect_quotient(&d1.algebra, &d1.k_basis)?;
    let (psi1, psi2) = (canonical_identification(d1), canonical_identification(d2));
    let between = psi2.try_inverse()?.mul(&psi1);
    Ok(c2.transport_bracket(&between)?.same_table(&c1)
        && sq.transport_bracket(&psi1)?.same_table(&c1)
        && sq.transport_bracket(&psi2)?.same_table(&c2))
}

/// Outcome of checking a candidate witness `ν` for `k ∼ k'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessReport {
    /// Both conditions hold and the induced `ν̃` is a verified isomorphism
    /// between the semidirect quotients.
    Pass {
        nu_tilde: LinearMap,
        source: LieAlgebra,
        target: LieAlgebra,
    },
    /// `ν(k) ≠ k'`.
    NotOnto,
    /// `ν[k_a, k_b] ≠ [ν k_a, ν k_b]`.
    RestrictionNotHomomorphism { a: usize, b: usize },
    /// `ν[k_a, e_j] − [ν k_a, ν e_j] ∉ k'`.
    DefectOutside { a: usize, j: usize, defect: Vector },
    /// Conditions hold but the constructed `ν̃` failed certification.
    InducedMapFailed(IsomorphismCheck),
}

impl WitnessReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, WitnessReport::Pass { .. })
    }
}

/// Sufficient condition for `k ∼ k'` via a linear automorphism `ν` of `g`,
/// followed by construction and certification of
/// `ν̃(X, Y+k) = (νX, νY+k')`.
pub fn check_equivalence_witness(
    g: &LieAlgebra,
    k: &[Vector],
    k_prime: &[Vector],
    nu: &LinearMap,
) -> Result<WitnessReport, Error> {
    let n = g.dim();
    if !nu.is_square() || nu.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: nu.rows() });
    }
    nu.try_inverse()?;
    let source = semidirect_quotient(g, k)?;
    let target = semidirect_quotient(g, k_prime)?;
    let ks2 = Subspace::span(n, k_prime);

    let images: Vec<Vector> = k.iter().map(|v| nu.apply(v)).collect();
    if k.len() != k_prime.len() || !ks2.contains_all(&images) {
        return Ok(WitnessReport::NotOnto);
    }
    for a in 0..k.len() {
        for b in a + 1..k.len() {
            let lhs = nu.apply(&g.bracket_unchecked(&k[a], &k[b]));
            if lhs != g.bracket_unchecked(&images[a], &images[b]) {
                return Ok(WitnessReport::RestrictionNotHomomorphism { a, b });
            }
        }
    }
    for (a, x) in k.iter().enumerate() {
        for j in 0..n {
            let y = Vector::unit(n, j);
            let defect = nu
                .apply(&g.bracket_unchecked(x, &y))
                .sub(&g.bracket_unchecked(&images[a], &nu.apply(&y)));
            if !ks2.contains(&defect) {
                return Ok(WitnessReport::DefectOutside { a, j, defect });
            }
        }
    }

    let m = k.len();
    let ks = Subspace::span(n, k);
    let mut nu_tilde = Matrix::zeros(n, n);
    for (a, img) in images.iter().enumerate() {
        let c = coordinates(k_prime, img).expect("image lies in k'");
        for (t, x) in c.into_coords().into_iter().enumerate() {
            nu_tilde[(t, a)] = x;
        }
    }
    for (s, f) in ks.free_coordinates().into_iter().enumerate() {
        for (t, x) in quotient_coords(&ks2, &nu.apply(&Vector::unit(n, f))).into_iter().enumerate() {
            nu_tilde[(m + t, m + s)] = x;
        }
    }
    let check = check_isomorphism(&source, &target, &nu_tilde);
    if !check.is_verified() {
        return Ok(WitnessReport::InducedMapFailed(check));
    }
    Ok(WitnessReport::Pass { nu_tilde, source, target })
}

/// Structural facts about `T₀ = pr_k` for a simple IW contraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T0Report {
    pub image_subalgebra_of_g: bool,
    pub image_subalgebra_of_contraction: bool,
    pub kernel_abelian_ideal: bool,
    pub semidirect_split: bool,
    /// `[k, p] = 0` in the contraction.
    pub kernel_action_trivial: bool,
}

impl T0Report {
    pub fn all_pass(&self) -> bool {
        self.image_subalgebra_of_g
            && self.image_subalgebra_of_contraction
            && self.kernel_abelian_ideal
            && self.semidirect_split
    }
}

pub fn t0_analysis(d: &Decomposition) -> T0Report {
    let c = iw_contract(d);
    let n = c.dim();
    let m = d.k_dim();
    let image: Vec<Vector> = (0..m).map(|i| Vector::unit(n, i)).collect();
    let kernel: Vec<Vector> = (m..n).map(|i| Vector::unit(n, i)).collect();
    let split = Subspace::span(n, &image).sum(&Subspace::span(n, &kernel)).dim() == n;
    T0Report {
        image_subalgebra_of_g: d.algebra.check_subalgebra(&d.k_basis).is_ok(),
        image_subalgebra_of_contraction: c.check_subalgebra(&image).is_ok(),
        kernel_abelian_ideal: c.is_ideal(&kernel) && c.is_abelian_subspace(&kernel),
        semidirect_split: split,
        kernel_action_trivial: c.bracket_span(&image, &kernel).dim() == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{fingerprint, Field};
    use crate::scalars::rational;

    fn so3() -> LieAlgebra {
        LieAlgebra::real_from_brackets(
            &["e1", "e2", "e3"],
            &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (2, 0, &[(1, 1)])],
        )
    }

    fn so3_e3() -> Decomposition {
        Decomposition::new(so3(), vec![Vector::from_ints(&[0, 0, 1])], vec![
            Vector::from_ints(&[1, 0, 0]),
            Vector::from_ints(&[0, 1, 0]),
        ])
        .unwrap()
    }

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn so3_contracts_to_iso2() {
        let c = iw_contract(&so3_e3());
        // basis (e3, e1, e2): [e3,e1] = e2, [e3,e2] = -e1, [e1,e2] = 0
        let sc = c.structure_constants();
        assert_eq!(sc.get(0, 1, 2), g(1));
        assert_eq!(sc.get(0, 2, 1), g(-1));
        assert_eq!(sc.len(), 2);
        assert_eq!(c.basis_names(), ["k:e3", "p:e1", "p:e2"]);
        assert!(c.validate().is_pass());
    }

    #[test]
    fn decomposition_rejects_bad_input() {
        let e = |v: &[i64]| Vector::from_ints(v);
        assert_eq!(
            Decomposition::new(so3(), vec![e(&[1, 0, 0]), e(&[0, 1, 0])], vec![e(&[0, 0, 1])]).unwrap_err(),
            Error::NotSubalgebra(0, 1)
        );
        assert_eq!(
            Decomposition::new(so3(), vec![e(&[1, 0, 0])], vec![e(&[1, 0, 0]), e(&[0, 1, 0])]).unwrap_err(),
            Error::NotABasis { rank: 2, dim: 3 }
        );
    }

    #[test]
    fn exponent_zero_is_identity() {
        let lim = generalized_iw_contract(&so3(), &ExponentAssignment(vec![0, 0, 0])).unwrap();
        assert!(lim.algebra().unwrap().same_table(&so3()));
    }

    #[test]
    fn exponents_01_reproduce_simple_iw() {
        let adapted = so3_e3().adapted_algebra();
        let lim = generalized_iw_contract(&adapted, &ExponentAssignment(vec![0, 1, 1])).unwrap();
        assert!(lim.algebra().unwrap().same_table(&iw_contract(&so3_e3())));
    }

    #[test]
    fn scaling_only_e3_diverges() {
        // n = (0, 0, 1): [e1,e2]=e3 gets 0+0-1 = -1, [e2,e3]=e1 gets 1, [e3,e1]=e2 gets 1.
        let lim = generalized_iw_contract(&so3(), &ExponentAssignment(vec![0, 0, 1])).unwrap();
        assert_eq!(
            lim,
            ContractionLimit::Diverges(vec![DivergentConstant { i: 0, j: 1, k: 2, exponent: -1 }])
        );
        // n = (1, 0, 0): [e2,e3]=e1 gets 0+0-1 = -1.
        let lim = generalized_iw_contract(&so3(), &ExponentAssignment(vec![1, 0, 0])).unwrap();
        assert_eq!(
            lim,
            ContractionLimit::Diverges(vec![DivergentConstant { i: 1, j: 2, k: 0, exponent: -1 }])
        );
    }

    #[test]
    fn exponent_law_matches_transport() {
        let eps = [rational(1, 2), rational(1, 4), rational(1, 8)];
        for e in [vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 1], vec![2, -1, 3]] {
            let e = ExponentAssignment(e);
            for x in &eps {
                let t = so3().transport_bracket(&e.scaling(x)).unwrap();
                assert!(t.same_table(&scaled_table(&so3(), &e, x)));
            }
            let exists = matches!(generalized_iw_contract(&so3(), &e).unwrap(), ContractionLimit::Exists(_));
            assert_eq!(sweep_verdict(&so3(), &e, &eps).unwrap(), exists);
        }
    }

    #[test]
    fn semidirect_quotient_edge_cases() {
        let all: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
        assert!(semidirect_quotient(&so3(), &all).unwrap().same_table(&so3()));
        let q = semidirect_quotient(&so3(), &[]).unwrap();
        assert_eq!(q.structure_constants().len(), 0);
        assert_eq!(q.dim(), 3);
    }

    #[test]
    fn semidirect_quotient_matches_contraction() {
        let d = so3_e3();
        let sq = semidirect_quotient(&so3(), d.k_basis()).unwrap();
        assert!(sq.same_table(&iw_contract(&d)));
        assert_eq!(sq.basis_names(), ["k:e3", "[e1]", "[e2]"]);
    }

    #[test]
    fn other_complement_gives_same_quotient() {
        let d2 = Decomposition::new(so3(), vec![Vector::from_ints(&[0, 0, 1])], vec![
            Vector::from_ints(&[1, 1, 1]),
            Vector::from_ints(&[0, 2, -1]),
        ])
        .unwrap();
        assert!(complements_agree(&so3_e3(), &d2).unwrap());
        assert!(!iw_contract(&so3_e3()).same_table(&iw_contract(&d2)));
    }

    #[test]
    fn identity_witness_passes() {
        let k = vec![Vector::from_ints(&[0, 0, 1])];
        let r = check_equivalence_witness(&so3(), &k, &k, &Matrix::identity(3)).unwrap();
        match r {
            WitnessReport::Pass { nu_tilde, source, target } => {
                assert_eq!(nu_tilde, Matrix::identity(3));
                assert!(target.transport_bracket(&nu_tilde).unwrap().same_table(&source));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn center_witness_passes() {
        let h = LieAlgebra::real_from_brackets(&["x", "y", "z"], &[(0, 1, &[(2, 1)])]);
        let z = crate::lie::center(&h).basis().to_vec();
        let r = check_equivalence_witness(&h, &z, &z, &Matrix::identity(3)).unwrap();
        assert!(r.is_pass());
    }

    #[test]
    fn automorphism_witness_moves_subalgebra() {
        // cyclic permutation e1→e2→e3→e1 is an automorphism of so(3)
        let nu = Matrix::from_int_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let k = vec![Vector::from_ints(&[1, 0, 0])];
        let k2 = vec![Vector::from_ints(&[0, 1, 0])];
        assert!(check_equivalence_witness(&so3(), &k, &k2, &nu).unwrap().is_pass());
        // the same map cannot send k onto span(e3)
        let k3 = vec![Vector::from_ints(&[0, 0, 1])];
        assert_eq!(check_equivalence_witness(&so3(), &k, &k3, &nu).unwrap(), WitnessReport::NotOnto);
    }

    #[test]
    fn singular_witness_is_an_error() {
        let k = vec![Vector::from_ints(&[0, 0, 1])];
        assert_eq!(
            check_equivalence_witness(&so3(), &k, &k, &Matrix::zeros(3, 3)).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn t0_reports() {
        let r = t0_analysis(&so3_e3());
        assert!(r.all_pass());
        assert!(!r.kernel_action_trivial);
        let all: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
        let whole = Decomposition::new(so3(), all, vec![]).unwrap();
        assert!(t0_analysis(&whole).all_pass());
        assert!(iw_contract(&whole).same_table(&so3()));
    }

    #[test]
    fn contraction_changes_fingerprint() {
        let c = iw_contract(&so3_e3());
        assert_ne!(fingerprint(&c), fingerprint(&so3()));
        assert_eq!(c.field(), Field::Real);
    }

    #[test]
    fn negative_exponents_scale_up() {
        let e = ExponentAssignment(vec![-1, 0, 2]);
        assert_eq!(e.scaling(&rational(1, 2))[(0, 0)], g(2));
        assert_eq!(e.scaling(&rational(1, 2))[(2, 2)], GaussianRational::frac(1, 4));
    }
}

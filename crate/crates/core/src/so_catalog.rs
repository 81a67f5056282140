//! Orthogonal algebras `so(p,q)` with their defining matrices, the
//! involutions `θ_{p,d,q} = Ad(J_{p,d,q})`, and reference algebras used for
//! fingerprint comparisons.
//!
//! Basis convention: `L_ab = E_ab − J_aa·J_bb·E_ba` for `a < b` in
//! lexicographic order, where `J = diag(1^p, −1^q)`. The coordinate of an
//! element `X` on `L_ab` is the entry `X[a][b]`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::contraction::{Decomposition, ExponentAssignment};
use crate::family::{matrix_realization_check, RealizationReport};
use crate::lie::{check_isomorphism, direct_sum, Field, LieAlgebra, StructureConstants};
use crate::linalg::{LinearMap, Matrix, Vector};
use crate::scalars::{GaussianRational, Rational};
use crate::symmetric::{dual_form, split, Involution, SymmetricPair};
use crate::Error;

/// `(p, d, q)` with `d > 0` and `p + d + q ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SOParams {
    pub p: usize,
    pub d: usize,
    pub q: usize,
}

impl SOParams {
    pub fn new(p: usize, d: usize, q: usize) -> Result<Self, Error> {
        if d == 0 || p + d + q < 2 {
            return Err(Error::InvalidParameters(format!(
                "need d > 0 and p + d + q ≥ 2, got ({p}, {d}, {q})"
            )));
        }
        Ok(SOParams { p, d, q })
    }

    pub fn n(&self) -> usize {
        self.p + self.d + self.q
    }

    /// `(dim k, dim p)` from the block shapes.
    pub fn block_dims(&self) -> (usize, usize) {
        let t = |m: usize| m * m.saturating_sub(1) / 2;
        let SOParams { p, d, q } = *self;
        (t(p) + t(d) + t(q) + p * q, p * d + d * q)
    }
}

impl fmt::Display for SOParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.d, self.q)
    }
}

/// All `(p, d, q)` with `d ≥ 1` and `2 ≤ p + d + q ≤ max_n`.
pub fn catalog_params(max_n: usize) -> Vec<SOParams> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in 1..=n {
            for p in 0..=n - d {
                out.push(SOParams { p, d, q: n - d - p });
            }
        }
    }
    out
}

fn sign_matrix(signs: &[i64]) -> LinearMap {
    Matrix::diagonal(signs.iter().map(|&s| GaussianRational::from_int(s)).collect())
}

fn unit_matrix(n: usize, r: usize, c: usize) -> LinearMap {
    let mut m = Matrix::zeros(n, n);
    m[(r, c)] = GaussianRational::one();
    m
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn l_name(n: usize, a: usize, b: usize) -> String {
    if n < 10 {
        format!("L{}{}", a + 1, b + 1)
    } else {
        format!("L{}_{}", a + 1, b + 1)
    }
}

/// An orthogonal algebra with its defining matrices.
#[derive(Clone, Debug)]
pub struct SoAlgebra {
    pub algebra: LieAlgebra,
    /// Matrix of each basis vector, in basis order.
    pub matrices: Vec<LinearMap>,
    /// Diagonal of the form `J`.
    pub signs: Vec<i64>,
}

impl SoAlgebra {
    /// `{X : XᵗJ = −JX}` for `J = diag(signs)`; any size, including 0 and 1.
    pub fn from_signs(signs: &[i64]) -> Self {
        let n = signs.len();
        let idx = pairs(n);
        let matrices: Vec<LinearMap> = idx
            .iter()
            .map(|&(a, b)| {
                unit_matrix(n, a, b).sub(&unit_matrix(n, b, a).scale(&GaussianRational::from_int(signs[a] * signs[b])))
            })
            .collect();
        let mut sc = StructureConstants::new(idx.len());
        for x in 0..idx.len() {
            for y in x + 1..idx.len() {
                let c = matrices[x].commutator(&matrices[y]);
                let coords = coordinates_in(&idx, &c);
                debug_assert_eq!(combine(&matrices, &coords, n), c);
                for (k, v) in coords.into_coords().into_iter().enumerate() {
                    sc.set(x, y, k, v);
                }
            }
        }
        let names = idx.iter().map(|&(a, b)| l_name(n, a, b)).collect();
        let algebra = LieAlgebra::new(Field::Real, names, sc).expect("integer constants");
        SoAlgebra { algebra, matrices, signs: signs.to_vec() }
    }

    pub fn j(&self) -> LinearMap {
        sign_matrix(&self.signs)
    }

    /// Coordinates of a matrix in the `L_ab` basis, or `None` if it is not
    /// in the algebra.
    pub fn coordinates(&self, m: &LinearMap) -> Option<Vector> {
        let n = self.signs.len();
        let c = coordinates_in(&pairs(n), m);
        (combine(&self.matrices, &c, n) == *m).then_some(c)
    }
}

fn coordinates_in(idx: &[(usize, usize)], m: &LinearMap) -> Vector {
    Vector::new(idx.iter().map(|&(a, b)| m[(a, b)].clone()).collect())
}

fn combine(mats: &[LinearMap], coords: &Vector, n: usize) -> LinearMap {
    mats.iter()
        .zip(coords.iter())
        .fold(Matrix::zeros(n, n), |acc, (m, c)| acc.add(&m.scale(c)))
}

fn so_signs(p: usize, q: usize) -> Vec<i64> {
    std::iter::repeat(1).take(p).chain(std::iter::repeat(-1).take(q)).collect()
}

/// `so(p, q)` with its defining representation.
pub fn so_realization(p: usize, q: usize) -> Result<SoAlgebra, Error> {
    if p + q < 2 {
        return Err(Error::InvalidParameters(format!("so({p},{q}) needs p + q ≥ 2")));
    }
    Ok(SoAlgebra::from_signs(&so_signs(p, q)))
}

pub fn build_so(p: usize, q: usize) -> Result<LieAlgebra, Error> {
    Ok(so_realization(p, q)?.algebra)
}

/// `J_{p,d,q} = diag(1^p, −1^d, 1^q)`.
pub fn j_pdq(params: SOParams) -> LinearMap {
    let SOParams { p, d, q } = params;
    let s: Vec<i64> = std::iter::repeat(1)
        .take(p)
        .chain(std::iter::repeat(-1).take(d))
        .chain(std::iter::repeat(1).take(q))
        .collect();
    sign_matrix(&s)
}

/// `(so(p+d, q), θ_{p,d,q})` with the matrix realization kept alongside.
#[derive(Clone, Debug)]
pub struct SoPair {
    pub params: SOParams,
    pub so: SoAlgebra,
    pub pair: SymmetricPair,
}

impl SoPair {
    pub fn new(params: SOParams) -> Self {
        let so = SoAlgebra::from_signs(&so_signs(params.p + params.d, params.q));
        let theta = theta_matrix(&so, &j_pdq(params));
        let inv = Involution::new(so.algebra.clone(), theta).expect("Ad(J) is an involutive automorphism");
        let pair = split(&inv).expect("eigenspaces of an involution are graded");
        SoPair { params, so, pair }
    }

    pub fn j(&self) -> LinearMap {
        j_pdq(self.params)
    }

    /// Block-matrix realization `[[X+, X−], [zX−, X+]]` checked at `z = α`.
    pub fn realization_check(&self, alpha: &Rational) -> Result<RealizationReport, Error> {
        matrix_realization_check(&self.pair, &self.so.matrices, &self.j(), alpha)
    }
}

/// Matrix of `X ↦ JXJ⁻¹` on the `L_ab` basis.
fn theta_matrix(so: &SoAlgebra, j: &LinearMap) -> LinearMap {
    let j_inv = j.try_inverse().expect("diagonal ±1");
    let cols: Vec<Vector> = so
        .matrices
        .iter()
        .map(|m| so.coordinates(&j.mul(m).mul(&j_inv)).expect("Ad(J) preserves the algebra"))
        .collect();
    Matrix::from_columns(&cols, so.algebra.dim())
}

/// `θ_{p,d,q} = Ad(J_{p,d,q})` on `so(p+d, q)`.
pub fn build_theta(params: SOParams) -> Involution {
    SoPair::new(params).pair.involution().clone()
}

/// The isomorphism `g* → so(p, d+q)` induced by `Ad(J^{1/2})` with
/// `J^{1/2} = diag(1^p, i^d, 1^q)`.
#[derive(Clone, Debug)]
pub struct JhalfCertificate {
    pub dual: LieAlgebra,
    pub target: LieAlgebra,
    pub map: LinearMap,
    /// Every image matrix is real and satisfies the target's defining
    /// equation.
    pub images_in_target: bool,
    /// `map` is a bracket-preserving bijection and transports the target's
    /// table onto the dual's exactly.
    pub verified: bool,
}

pub fn dual_iso_via_jhalf(params: SOParams) -> Result<JhalfCertificate, Error> {
    let sp = SoPair::new(params);
    let (dual, _) = dual_form(&sp.pair)?;
    let target = SoAlgebra::from_signs(&so_signs(params.p, params.d + params.q));
    let n = params.n();
    let h: Vec<GaussianRational> = (0..n)
        .map(|r| {
            if r >= params.p && r < params.p + params.d {
                GaussianRational::i()
            } else {
                GaussianRational::one()
            }
        })
        .collect();
    let i = GaussianRational::i();
    let dual_vectors = sp
        .pair
        .k_basis()
        .iter()
        .cloned()
        .chain(sp.pair.p_basis().iter().map(|v| v.scale(&i)));
    let mut cols = Vec::new();
    let mut images_in_target = true;
    for v in dual_vectors {
        let x = combine(&sp.so.matrices, &v, n);
        let y = Matrix::from_fn(n, n, |r, c| &(&x[(r, c)] * &h[r]) / &h[c]);
        match target.coordinates(&y) {
            Some(c) if y.is_real() => cols.push(c),
            _ => {
                images_in_target = false;
                cols.push(Vector::zeros(target.algebra.dim()));
            }
        }
    }
    let map = Matrix::from_columns(&cols, target.algebra.dim());
    let verified = images_in_target
        && check_isomorphism(&dual, &target.algebra, &map).is_verified()
        && target.algebra.transport_bracket(&map)?.same_table(&dual);
    Ok(JhalfCertificate { dual, target: target.algebra, map, images_in_target, verified })
}

/// Identities of the `P`-conjugation applied to the embedding
/// `τ(X) = diag(X, JXJ)` of `g(C)`, with `σ*(X) = J·conj(X)·J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PConjugationReport {
    /// `τ(σ*X) = S·conj(τX)·S` on every basis element and its `i`-multiple.
    pub twisted: bool,
    /// `φ(σ*X) = conj(φX)` for `φ = P τ P⁻¹`.
    pub untwisted: bool,
    /// `φ` maps the dual basis `k_a`, `i·p_b` to real matrices.
    pub dual_is_real: bool,
    /// `φ` preserves commutators on the basis.
    pub homomorphism: bool,
}

impl PConjugationReport {
    pub fn all_pass(&self) -> bool {
        self.twisted && self.untwisted && self.dual_is_real && self.homomorphism
    }
}

pub fn p_conjugation_check(params: SOParams) -> PConjugationReport {
    let sp = SoPair::new(params);
    let n = params.n();
    let j = sp.j();
    let id = Matrix::<GaussianRational>::identity(n);
    let zero = Matrix::zeros(n, n);
    let s = Matrix::block2(&zero, &id, &id, &zero);
    let i = GaussianRational::i();
    let p = Matrix::block2(&id, &id, &id.scale(&i), &id.scale(&-i.clone()));
    let p_inv = p.try_inverse().expect("P is invertible");
    let tau = |x: &LinearMap| Matrix::block2(x, &zero, &zero, &j.mul(x).mul(&j));
    let phi = |x: &LinearMap| p.mul(&tau(x)).mul(&p_inv);
    let sigma_star = |x: &LinearMap| j.mul(&x.conj()).mul(&j);

    let mut elems: Vec<LinearMap> = sp.so.matrices.clone();
    elems.extend(sp.so.matrices.iter().map(|m| m.scale(&i)));
    let twisted = elems.iter().all(|x| tau(&sigma_star(x)) == s.mul(&tau(x).conj()).mul(&s));
    let untwisted = elems.iter().all(|x| phi(&sigma_star(x)) == phi(x).conj());
    let dual_is_real = sp
        .pair
        .k_basis()
        .iter()
        .cloned()
        .chain(sp.pair.p_basis().iter().map(|v| v.scale(&i)))
        .all(|v| phi(&combine(&sp.so.matrices, &v, n)).is_real());
    let m = &sp.so.matrices;
    let homomorphism = (0..m.len())
        .all(|a| (a + 1..m.len()).all(|b| phi(&m[a].commutator(&m[b])) == phi(&m[a]).commutator(&phi(&m[b]))));
    PConjugationReport { twisted, untwisted, dual_is_real, homomorphism }
}

/// `k ⋉ V` with `V` abelian and `k_a` acting on `V` by `action[a]`.
pub fn semidirect_with_module(k: &LieAlgebra, action: &[LinearMap], v_names: Vec<String>) -> LieAlgebra {
    let m = k.dim();
    let r = v_names.len();
    assert_eq!(action.len(), m, "one action matrix per basis vector of k");
    let mut sc = StructureConstants::new(m + r);
    for (&(i, j, t), c) in k.structure_constants().iter() {
        sc.set(i, j, t, c.clone());
    }
    for (a, act) in action.iter().enumerate() {
        for s in 0..r {
            for t in 0..r {
                sc.set(a, m + s, m + t, act[(t, s)].clone());
            }
        }
    }
    let basis = k.basis_names().iter().cloned().chain(v_names).collect();
    LieAlgebra::new(k.field(), basis, sc).expect("shapes agree")
}

/// `so(n) ⋉ Rⁿ`.
pub fn iso(n: usize) -> LieAlgebra {
    let so = SoAlgebra::from_signs(&vec![1; n]);
    semidirect_with_module(&so.algebra, &so.matrices, (1..=n).map(|i| format!("t{i}")).collect())
}

/// `(so(p,q) ⊕ so(d)) ⋉ M_{(p+q)×d}` with `(A, B)·Y = AY − YB`.
pub fn motion(p: usize, d: usize, q: usize) -> LieAlgebra {
    let a = SoAlgebra::from_signs(&so_signs(p, q));
    let b = SoAlgebra::from_signs(&vec![1; d]);
    let rows = p + q;
    let dim_v = rows * d;
    let left = |x: &LinearMap| {
        Matrix::from_fn(dim_v, dim_v, |out, inp| {
            let (r1, c1) = (out / d, out % d);
            let (r2, c2) = (inp / d, inp % d);
            if c1 == c2 { x[(r1, r2)].clone() } else { GaussianRational::zero() }
        })
    };
    let right = |x: &LinearMap| {
        Matrix::from_fn(dim_v, dim_v, |out, inp| {
            let (r1, c1) = (out / d, out % d);
            let (r2, c2) = (inp / d, inp % d);
            // (−YB)[r1][c1] = −Σ_c Y[r1][c] B[c][c1]
            if r1 == r2 { -x[(c2, c1)].clone() } else { GaussianRational::zero() }
        })
    };
    let action: Vec<LinearMap> = a.matrices.iter().map(left).chain(b.matrices.iter().map(right)).collect();
    let k = direct_sum(&a.algebra, &rename(&b.algebra, "M"));
    let names = (0..rows)
        .flat_map(|r| (0..d).map(move |c| (r, c)))
        .map(|(r, c)| format!("Y{}_{}", r + 1, c + 1))
        .collect();
    semidirect_with_module(&k, &action, names)
}

fn rename(g: &LieAlgebra, letter: &str) -> LieAlgebra {
    let names = g.basis_names().iter().map(|s| s.replacen('L', letter, 1)).collect();
    g.clone().with_names(names).expect("same length")
}

/// Heisenberg algebra of odd dimension `2k+1`: `[x_i, y_i] = z`.
pub fn heisenberg(dim: usize) -> Result<LieAlgebra, Error> {
    if dim % 2 == 0 || dim < 3 {
        return Err(Error::InvalidParameters(format!("heisenberg dimension must be odd and ≥ 3, got {dim}")));
    }
    let k = dim / 2;
    let mut sc = StructureConstants::new(dim);
    for i in 0..k {
        sc.set(i, k + i, dim - 1, GaussianRational::one());
    }
    let names = (1..=k)
        .map(|i| format!("x{i}"))
        .chain((1..=k).map(|i| format!("y{i}")))
        .chain(std::iter::once("z".to_string()))
        .collect();
    LieAlgebra::new(Field::Real, names, sc)
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian_named(Field::Real, (1..=n).map(|i| format!("e{i}")).collect())
}

/// `so(n) ⊕ Rᵐ`.
pub fn so_plus_abelian(n: usize, m: usize) -> LieAlgebra {
    let mut a = abelian(m);
    a = a.clone().with_names((1..=m).map(|i| format!("a{i}")).collect()).expect("same length");
    direct_sum(&SoAlgebra::from_signs(&vec![1; n]).algebra, &a)
}

/// A parsed catalog name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    So(usize, usize),
    Theta(SOParams),
    Iso(usize),
    Heisenberg(usize),
    Abelian(usize),
    SoPlusAbelian(usize, usize),
    Motion(usize, usize, usize),
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let unknown = || Error::UnknownCatalog(s.to_string());
        let (head, args) = s.split_once(':').ok_or_else(unknown)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| unknown())?;
        let arity = |k: usize| if nums.len() == k { Ok(()) } else { Err(unknown()) };
        Ok(match head {
            "so" => {
                arity(2)?;
                if nums[0] + nums[1] < 2 {
                    return Err(Error::InvalidParameters(format!("so({},{}) needs p + q ≥ 2", nums[0], nums[1])));
                }
                CatalogName::So(nums[0], nums[1])
            }
            "theta" => {
                arity(3)?;
                CatalogName::Theta(SOParams::new(nums[0], nums[1], nums[2])?)
            }
            "iso" => {
                arity(1)?;
                CatalogName::Iso(nums[0])
            }
            "heisenberg" => {
                arity(1)?;
                heisenberg(nums[0])?;
                CatalogName::Heisenberg(nums[0])
            }
            "abelian" => {
                arity(1)?;
                CatalogName::Abelian(nums[0])
            }
            "so+abelian" => {
                arity(2)?;
                CatalogName::SoPlusAbelian(nums[0], nums[1])
            }
            "motion" => {
                arity(3)?;
                CatalogName::Motion(nums[0], nums[1], nums[2])
            }
            _ => return Err(unknown()),
        })
    }
}

impl CatalogName {
    /// The algebra; for `theta:` names, the algebra `so(p+d, q)` carrying θ.
    pub fn algebra(&self) -> LieAlgebra {
        match *self {
            CatalogName::So(p, q) => SoAlgebra::from_signs(&so_signs(p, q)).algebra,
            CatalogName::Theta(params) => SoPair::new(params).so.algebra,
            CatalogName::Iso(n) => iso(n),
            CatalogName::Heisenberg(n) => heisenberg(n).expect("validated when parsed"),
            CatalogName::Abelian(n) => abelian(n),
            CatalogName::SoPlusAbelian(n, m) => so_plus_abelian(n, m),
            CatalogName::Motion(p, d, q) => motion(p, d, q),
        }
    }
}

/// Reference algebra by catalog name, e.g. `iso:3` or `so:2,1`.
pub fn build_reference(name: &str) -> Result<LieAlgebra, Error> {
    Ok(name.parse::<CatalogName>()?.algebra())
}

/// Same `k`, with each `p_b` shifted by a `k`-vector (or doubled when `k = 0`).
pub fn alternate_complement(d: &Decomposition) -> Decomposition {
    let k = d.k_basis();
    let p: Vec<Vector> = d
        .p_basis()
        .iter()
        .enumerate()
        .map(|(b, v)| {
            if k.is_empty() {
                v.scale(&GaussianRational::from_int(2))
            } else {
                v.add(&k[b % k.len()].scale(&GaussianRational::from_int(b as i64 + 1)))
            }
        })
        .collect();
    Decomposition::new(d.algebra().clone(), k.to_vec(), p).expect("shifting by k keeps a basis")
}

/// Exponent assignments exercised for an algebra of dimension `n` carrying
/// a pair: all zeros, the `{0, 1}` assignment adapted to `(k, p)` when both
/// are coordinate subspaces, a ramp and its reverse, and each single unit.
pub fn exponent_catalog(sp: &SymmetricPair) -> Vec<ExponentAssignment> {
    let n = sp.algebra().dim();
    let mut out = vec![ExponentAssignment(vec![0; n])];
    let theta = sp.involution().matrix();
    let diagonal = (0..n).all(|r| (0..n).all(|c| r == c || theta[(r, c)].is_zero()));
    if diagonal {
        out.push(ExponentAssignment(
            (0..n).map(|i| if theta[(i, i)].is_one() { 0 } else { 1 }).collect(),
        ));
    }
    out.push(ExponentAssignment((0..n as i64).collect()));
    out.push(ExponentAssignment((0..n as i64).rev().collect()));
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        out.push(ExponentAssignment(e));
    }
    out
}

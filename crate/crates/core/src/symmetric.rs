//! Symmetric pairs `(g, θ)`, real structures on the complexification, and
//! the dual real form `g* = g^θ ⊕ i·g^{−θ}`.
//!
//! Conjugate-linear maps are stored as a matrix `M` acting by
//! `x ↦ M·conj(x)` on coordinate vectors.

use num_traits::One;
use serde::Serialize;

use crate::contraction::{iw_contract, Decomposition};
use crate::lie::{Field, LieAlgebra, StructureConstants};
use crate::linalg::{coordinates, LinearMap, Matrix, Subspace, Vector};
use crate::scalars::GaussianRational;
use crate::Error;

/// An involutive automorphism of a real Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    algebra: LieAlgebra,
    matrix: LinearMap,
}

impl Involution {
    pub fn new(algebra: LieAlgebra, matrix: LinearMap) -> Result<Self, Error> {
        let n = algebra.dim();
        if algebra.field() != Field::Real || !matrix.is_real() {
            return Err(Error::RequiresReal);
        }
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.rows() });
        }
        if matrix.mul(&matrix) != Matrix::identity(n) {
            return Err(Error::NotInvolutive);
        }
        if let Err(f) = crate::lie::check_homomorphism(&algebra, &algebra, &matrix) {
            return Err(Error::NotAutomorphism(f.i, f.j));
        }
        Ok(Involution { algebra, matrix })
    }

    pub fn identity(algebra: LieAlgebra) -> Result<Self, Error> {
        let n = algebra.dim();
        Involution::new(algebra, Matrix::identity(n))
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn matrix(&self) -> &LinearMap {
        &self.matrix
    }
}

/// `g = k ⊕ p` with `k = g^θ`, `p = g^{−θ}`.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    involution: Involution,
    decomposition: Decomposition,
}

impl SymmetricPair {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.involution.algebra
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn k_basis(&self) -> &[Vector] {
        self.decomposition.k_basis()
    }

    pub fn p_basis(&self) -> &[Vector] {
        self.decomposition.p_basis()
    }

    /// `(dim k, dim p)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.k_basis().len(), self.p_basis().len())
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    /// `g` in the basis `k_1 … k_m, p_1 … p_r`.
    pub fn adapted(&self) -> LieAlgebra {
        self.decomposition.adapted_algebra()
    }
}

/// Eigenspace decomposition of `θ`, with the grading checked exactly.
pub fn split(theta: &Involution) -> Result<SymmetricPair, Error> {
    let g = &theta.algebra;
    let n = g.dim();
    let id = Matrix::identity(n);
    let k = theta.matrix.sub(&id).nullspace();
    let p = theta.matrix.add(&id).nullspace();
    let (ks, ps) = (Subspace::span(n, &k), Subspace::span(n, &p));
    for (a, x) in k.iter().enumerate() {
        for (b, y) in k.iter().enumerate().skip(a + 1) {
            if !ks.contains(&g.bracket_unchecked(x, y)) {
                return Err(Error::GradingViolated(a, b));
            }
        }
        for (b, y) in p.iter().enumerate() {
            if !ps.contains(&g.bracket_unchecked(x, y)) {
                return Err(Error::GradingViolated(a, k.len() + b));
            }
        }
    }
    for (a, x) in p.iter().enumerate() {
        for (b, y) in p.iter().enumerate().skip(a + 1) {
            if !ks.contains(&g.bracket_unchecked(x, y)) {
                return Err(Error::GradingViolated(k.len() + a, k.len() + b));
            }
        }
    }
    let decomposition = Decomposition::new(g.clone(), k, p)?;
    Ok(SymmetricPair { involution: theta.clone(), decomposition })
}

/// Conjugate-linear map `x ↦ M·conj(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semilinear(pub LinearMap);

impl Semilinear {
    pub fn apply(&self, x: &Vector) -> Vector {
        self.0.apply(&x.conj())
    }

    /// `self ∘ other`, which is linear.
    pub fn then_semilinear(&self, other: &Semilinear) -> LinearMap {
        self.0.mul(&other.0.conj())
    }

    /// `self ∘ l`.
    pub fn after_linear(&self, l: &LinearMap) -> Semilinear {
        Semilinear(self.0.mul(&l.conj()))
    }

    /// `l ∘ self`.
    pub fn before_linear(&self, l: &LinearMap) -> Semilinear {
        Semilinear(l.mul(&self.0))
    }
}

/// An anti-holomorphic involution of a complex Lie algebra.
#[derive(Clone, Debug)]
pub struct RealStructure {
    algebra: LieAlgebra,
    sigma: Semilinear,
}

impl RealStructure {
    /// Checks `σ² = id` and `σ[e_i, e_j] = [σe_i, σe_j]`; conjugate
    /// linearity is built into the representation.
    pub fn new(algebra: LieAlgebra, sigma: Semilinear) -> Result<Self, Error> {
        let n = algebra.dim();
        if sigma.0.rows() != n || sigma.0.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: sigma.0.rows() });
        }
        if sigma.then_semilinear(&sigma) != Matrix::identity(n) {
            return Err(Error::NotRealStructure("σ² ≠ id".into()));
        }
        let images: Vec<Vector> = (0..n).map(|i| sigma.0.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = sigma.apply(&algebra.bracket_basis(i, j));
                if lhs != algebra.bracket_unchecked(&images[i], &images[j]) {
                    return Err(Error::NotRealStructure(format!(
                        "bracket not preserved on ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(RealStructure { algebra: algebra.as_complex(), sigma })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn sigma(&self) -> &Semilinear {
        &self.sigma
    }

    /// A basis of the real subspace `{x : σx = x}`.
    pub fn fixed_points(&self) -> Vec<Vector> {
        fixed_points(&self.sigma)
    }

    /// The real form `{x : σx = x}` on the basis [`RealStructure::fixed_points`].
    pub fn real_form(&self) -> Result<LieAlgebra, Error> {
        let f = self.fixed_points();
        let n = self.algebra.dim();
        if f.len() != n || Subspace::span(n, &f).dim() != n {
            return Err(Error::NotRealStructure("fixed points do not span".into()));
        }
        let mut sc = StructureConstants::new(n);
        for a in 0..n {
            for b in a + 1..n {
                let c = coordinates(&f, &self.algebra.bracket_unchecked(&f[a], &f[b]))
                    .expect("f spans over C");
                if !c.is_real() {
                    return Err(Error::NotRealStructure("fixed points not closed".into()));
                }
                for (k, x) in c.into_coords().into_iter().enumerate() {
                    sc.set(a, b, k, x);
                }
            }
        }
        let names = (1..=n).map(|i| format!("f{i}")).collect();
        LieAlgebra::new(Field::Real, names, sc)
    }
}

/// Real basis of the fixed points of `x ↦ M·conj(x)`, from the real system
/// `(A−I)u + Bv = 0`, `Bu − (A+I)v = 0` for `M = A + iB`, `x = u + iv`.
pub fn fixed_points(sigma: &Semilinear) -> Vec<Vector> {
    let m = &sigma.0;
    let n = m.rows();
    let re = m.map(|c| GaussianRational::from_rational(c.re.clone()));
    let im = m.map(|c| GaussianRational::from_rational(c.im.clone()));
    let id = Matrix::identity(n);
    let system = Matrix::block2(&re.sub(&id), &im, &im, &re.add(&id).scale(&-GaussianRational::one()));
    system
        .nullspace()
        .into_iter()
        .map(|w| {
            let c = w.coords();
            Vector::new((0..n).map(|t| &c[t] + &(&c[n + t] * &GaussianRational::i())).collect())
        })
        .collect()
}

/// `g(C)` with `σ` = coefficient conjugation.
pub fn complexify(g: &LieAlgebra) -> (LieAlgebra, RealStructure) {
    let gc = g.as_complex();
    let sigma = RealStructure {
        algebra: gc.clone(),
        sigma: Semilinear(Matrix::identity(g.dim())),
    };
    (gc, sigma)
}

/// `σ* = σ ∘ θ̃` on `g(C)`.
pub fn sigma_star(sp: &SymmetricPair) -> Result<RealStructure, Error> {
    let (gc, sigma) = complexify(sp.algebra());
    RealStructure::new(gc, sigma.sigma.after_linear(sp.involution().matrix()))
}

fn toggle_i(name: &str) -> String {
    match name.strip_prefix("i*") {
        Some(rest) => rest.to_string(),
        None => format!("i*{name}"),
    }
}

/// The dual real form on the basis `k_a`, `i·p_b`.
///
/// Only the p×p→k constants change, by `i² = −1`. The second component is
/// `(g*, θ̃|g*)`, where `θ̃` is `+1` on `k` and `−1` on `i·p`.
pub fn dual_form(sp: &SymmetricPair) -> Result<(LieAlgebra, SymmetricPair), Error> {
    let a = sp.adapted();
    let (m, r) = sp.dims();
    let n = m + r;
    let mut sc = StructureConstants::new(n);
    for (&(i, j, k), c) in a.structure_constants().iter() {
        let c = if i >= m && k < m { -c.clone() } else { c.clone() };
        sc.set(i, j, k, c);
    }
    let names = a
        .basis_names()
        .iter()
        .enumerate()
        .map(|(t, s)| if t < m { s.clone() } else { toggle_i(s) })
        .collect();
    let dual = LieAlgebra::new(Field::Real, names, sc)?;
    let theta = Matrix::diagonal(
        (0..n)
            .map(|t| GaussianRational::from_int(if t < m { 1 } else { -1 }))
            .collect(),
    );
    let pair = split(&Involution::new(dual.clone(), theta)?)?;
    Ok((dual, pair))
}

/// Independent construction of `g*` as the `σ*`-fixed points of `g(C)`,
/// re-expressed on the basis `k_a`, `i·p_b` of [`dual_form`].
pub fn dual_form_via_fixed_points(sp: &SymmetricPair) -> Result<LieAlgebra, Error> {
    let star = sigma_star(sp)?;
    let oracle = star.real_form()?;
    let f = star.fixed_points();
    let i = GaussianRational::i();
    let targets: Vec<Vector> = sp
        .k_basis()
        .iter()
        .cloned()
        .chain(sp.p_basis().iter().map(|p| p.scale(&i)))
        .collect();
    let n = f.len();
    let cols: Vec<Vector> = targets
        .iter()
        .map(|t| coordinates(&f, t).ok_or_else(|| Error::NotRealStructure("i·p not fixed by σ*".into())))
        .collect::<Result<_, _>>()?;
    oracle.transport_bracket(&Matrix::from_columns(&cols, n))
}

/// Dual applied twice, with `i·i·p_b = −p_b` normalized back to `p_b`,
/// equals `g` in the adapted basis, and transports back to the original
/// basis of `g` exactly.
pub fn double_dual_check(sp: &SymmetricPair) -> Result<bool, Error> {
    let (_, d1) = dual_form(sp)?;
    let (dd, _) = dual_form(&d1)?;
    let (m, r) = sp.dims();
    let normalize = Matrix::diagonal(
        (0..m + r)
            .map(|t| GaussianRational::from_int(if t < m { 1 } else { -1 }))
            .collect(),
    );
    let dd = dd.transport_bracket(&normalize)?;
    let adapted = sp.adapted();
    let back = dd.transport_bracket(&sp.decomposition().adapted_basis().try_inverse()?)?;
    Ok(dd.same_table(&adapted)
        && dd.basis_names() == adapted.basis_names()
        && back.same_table(sp.algebra()))
}

/// IW contraction of `(g*, θ̃)` with respect to `k`.
pub fn dual_contraction(sp: &SymmetricPair) -> Result<LieAlgebra, Error> {
    let (_, dual_pair) = dual_form(sp)?;
    Ok(iw_contract(dual_pair.decomposition()))
}

/// The commutation identities between `σ`, `θ̃` and `σ* = σθ̃`, each as an
/// exact matrix equality on `g(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub sigma_theta: bool,
    pub sigma_star_theta: bool,
    pub sigma_sigma_star: bool,
    pub sigma_star_involutive: bool,
    pub sigma_star_automorphism: bool,
    pub dual_dims: (usize, usize),
}

impl CommutationReport {
    pub fn all_pass(&self) -> bool {
        self.sigma_theta
            && self.sigma_star_theta
            && self.sigma_sigma_star
            && self.sigma_star_involutive
            && self.sigma_star_automorphism
    }
}

pub fn commutation_report(sp: &SymmetricPair) -> Result<CommutationReport, Error> {
    let n = sp.algebra().dim();
    let theta = sp.involution().matrix();
    let sigma = Semilinear(Matrix::identity(n));
    let star = sigma.after_linear(theta);
    let (_, dual_pair) = dual_form(sp)?;
    Ok(CommutationReport {
        sigma_theta: sigma.after_linear(theta) == sigma.before_linear(theta),
        sigma_star_theta: star.after_linear(theta) == star.before_linear(theta),
        sigma_sigma_star: sigma.then_semilinear(&star) == star.then_semilinear(&sigma),
        sigma_star_involutive: star.then_semilinear(&star) == Matrix::identity(n),
        sigma_star_automorphism: sigma_star(sp).is_ok(),
        dual_dims: dual_pair.dims(),
    })
}

//! Isomorphism invariants: Killing form and its signature, derived and lower
//! central series, center, radical.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{Field, LieAlgebra};
use crate::linalg::{LinearMap, Matrix, Subspace, Vector};
use crate::scalars::{GaussianRational, Ring};
use crate::Error;

/// `K(x, y) = tr(ad x ∘ ad y)` in the given basis, summed directly as
/// `K_ab = Σ_{k,l} C_al^k · C_bk^l`.
pub fn killing_form(g: &LieAlgebra) -> LinearMap {
    let n = g.dim();
    let d = g.structure_constants().dense();
    let mut k = Matrix::zeros(n, n);
    for a in 0..n {
        for b in a..n {
            let mut t = GaussianRational::zero();
            for l in 0..n {
                for (kk, x) in d[a][l].iter().enumerate() {
                    if !x.is_zero() && !d[b][kk][l].is_zero() {
                        t.add_product(x, &d[b][kk][l]);
                    }
                }
            }
            k[(b, a)] = t.clone();
            k[(a, b)] = t;
        }
    }
    k
}

/// `(n_plus, n_minus)` of the Killing form of a real algebra.
pub fn killing_signature(g: &LieAlgebra) -> Result<(usize, usize), Error> {
    if g.field() != Field::Real {
        return Err(Error::RequiresReal);
    }
    Ok(congruence_signature(&killing_form(g)))
}

/// Signature of a real symmetric matrix by fraction-free symmetric Gaussian
/// elimination.
///
/// Each step removes either a nonzero diagonal pivot `p` (replacing the
/// rest by `|p|` times its Schur complement) or, when the whole remaining
/// diagonal vanishes, a hyperbolic 2×2 block `[[0, x], [x, 0]]` of signature
/// (1, 1) (replacing the rest by `x²` times its Schur complement). Positive
/// rescalings do not change the signature.
///
/// Panics if the matrix is not square or not real.
pub fn congruence_signature(m: &LinearMap) -> (usize, usize) {
    assert!(m.is_square() && m.is_real(), "expected a real square matrix");
    let n = m.rows();
    let lcm = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .fold(BigInt::from(1), |acc, (r, c)| acc.lcm(m[(r, c)].re.denom()));
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let x = &m[(r, c)].re;
                    x.numer() * (&lcm / x.denom())
                })
                .collect()
        })
        .collect();

    let (mut pos, mut neg) = (0, 0);
    while !a.is_empty() {
        let size = a.len();
        if let Some(p) = (0..size).find(|&i| !a[i][i].is_zero()) {
            let piv = a[p][p].clone();
            if piv.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let rest: Vec<usize> = (0..size).filter(|&i| i != p).collect();
            let mut b: Vec<Vec<BigInt>> = rest
                .iter()
                .map(|&r| {
                    rest.iter()
                        .map(|&c| &piv * &a[r][c] - &a[r][p] * &a[p][c])
                        .collect()
                })
                .collect();
            if piv.is_negative() {
                b.iter_mut().flatten().for_each(|x| *x = -x.clone());
            }
            a = reduce_content(b);
        } else if let Some((r0, c0)) = (0..size)
            .flat_map(|r| (r + 1..size).map(move |c| (r, c)))
            .find(|&(r, c)| !a[r][c].is_zero())
        {
            pos += 1;
            neg += 1;
            let x = a[r0][c0].clone();
            let x2 = &x * &x;
            let rest: Vec<usize> = (0..size).filter(|&i| i != r0 && i != c0).collect();
            let b: Vec<Vec<BigInt>> = rest
                .iter()
                .map(|&m| {
                    rest.iter()
                        .map(|&l| {
                            &x2 * &a[m][l]
                                - &x * (&a[m][r0] * &a[l][c0] + &a[m][c0] * &a[l][r0])
                        })
                        .collect()
                })
                .collect();
            a = reduce_content(b);
        } else {
            break;
        }
    }
    (pos, neg)
}

/// Divides out the positive gcd of all entries.
fn reduce_content(mut b: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let g = b.iter().flatten().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g > BigInt::from(1) {
        b.iter_mut().flatten().for_each(|x| *x = &*x / &g);
    }
    b
}

fn unit_basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::unit(n, i)).collect()
}

/// Dimensions of `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …`, ending at the first term
/// that repeats the previous dimension or is zero.
pub fn derived_series(g: &LieAlgebra) -> Vec<usize> {
    series(g, |g, cur| g.bracket_span(cur, cur))
}

/// Dimensions of `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, with the same stopping rule
/// as [`derived_series`].
pub fn lower_central_series(g: &LieAlgebra) -> Vec<usize> {
    let all = unit_basis(g.dim());
    series(g, move |g, cur| g.bracket_span(&all, cur))
}

fn series(g: &LieAlgebra, step: impl Fn(&LieAlgebra, &[Vector]) -> Subspace) -> Vec<usize> {
    let mut cur = unit_basis(g.dim());
    let mut dims = vec![g.dim()];
    while !cur.is_empty() {
        let next = step(g, &cur);
        dims.push(next.dim());
        if next.dim() == cur.len() {
            break;
        }
        cur = next.basis().to_vec();
    }
    dims
}

/// `{x : [x, g] = 0}`.
pub fn center(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    // Row block j of the system expresses [x, e_j] = 0; column i is e_i's
    // contribution, namely [e_i, e_j].
    let m = Matrix::from_fn(n * n, n, |r, i| {
        let (j, k) = (r / n, r % n);
        g.structure_constants().get(i, j, k)
    });
    Subspace::span(n, &m.nullspace())
}

/// The solvable radical, computed as the Killing-orthogonal complement of
/// `[g, g]` (valid in characteristic zero).
pub fn radical(g: &LieAlgebra) -> Subspace {
    radical_with(g, &killing_form(g))
}

fn radical_with(g: &LieAlgebra, k: &LinearMap) -> Subspace {
    let n = g.dim();
    let all = unit_basis(n);
    let derived = g.bracket_span(&all, &all);
    if derived.dim() == 0 {
        return Subspace::whole(n);
    }
    let rows: Vec<Vec<GaussianRational>> = derived
        .basis()
        .iter()
        .map(|y| k.apply(y).into_coords())
        .collect();
    Subspace::span(n, &Matrix::from_rows(rows).nullspace())
}

/// Tuple of isomorphism invariants.
///
/// Equal fingerprints are a *necessary* condition for isomorphism, never a
/// proof of it. Complex algebras carry no Killing signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dims: Vec<usize>,
    pub lcs_dims: Vec<usize>,
    pub killing_rank: usize,
    pub killing_signature: Option<(usize, usize)>,
    pub radical_dim: usize,
}

pub fn fingerprint(g: &LieAlgebra) -> Fingerprint {
    let k = killing_form(g);
    Fingerprint {
        dim: g.dim(),
        center_dim: center(g).dim(),
        derived_dims: derived_series(g),
        lcs_dims: lower_central_series(g),
        killing_rank: k.rank(),
        killing_signature: match g.field() {
            Field::Real => Some(congruence_signature(&k)),
            Field::Complex => None,
        },
        radical_dim: radical_with(g, &k).dim(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so3() -> LieAlgebra {
        LieAlgebra::real_from_brackets(
            &["e1", "e2", "e3"],
            &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (2, 0, &[(1, 1)])],
        )
    }

    fn abelian(n: usize) -> LieAlgebra {
        LieAlgebra::abelian_named(Field::Real, (1..=n).map(|i| format!("e{i}")).collect())
    }

    fn heisenberg3() -> LieAlgebra {
        LieAlgebra::real_from_brackets(&["x", "y", "z"], &[(0, 1, &[(2, 1)])])
    }

    fn gq(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    // Brute-force oracle: K_ab = Σ_{c,d} C_ac^d C_bd^c straight from the table.
    /// `tr(ad e_a · ad e_b)` through explicit ad matrices.
    fn killing_oracle(g: &LieAlgebra) -> LinearMap {
        let n = g.dim();
        let ads: Vec<LinearMap> = (0..n).map(|i| g.ad(&Vector::unit(n, i))).collect();
        Matrix::from_fn(n, n, |a, b| ads[a].mul(&ads[b]).trace())
    }

    #[test]
    fn killing_examples() {
        assert!(killing_form(&abelian(3)).is_zero());
        assert_eq!(killing_form(&so3()), Matrix::identity(3).scale(&gq(-2)));
        assert!(killing_form(&heisenberg3()).is_zero());
        for g in [so3(), heisenberg3()] {
            assert_eq!(killing_form(&g), killing_oracle(&g));
        }
    }

    #[test]
    fn signature_examples() {
        assert_eq!(killing_signature(&so3()), Ok((0, 3)));
        assert_eq!(killing_signature(&abelian(3)), Ok((0, 0)));
        assert_eq!(killing_signature(&so3().as_complex()), Err(Error::RequiresReal));
    }

    #[test]
    fn congruence_handles_zero_diagonal() {
        // [[0,1],[1,0]] has eigenvalues ±1.
        let m = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(congruence_signature(&m), (1, 1));
        let m = Matrix::from_int_rows(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
        // det = 0, trace 0, nonzero: eigenvalues ±√5, 0.
        assert_eq!(congruence_signature(&m), (1, 1));
        let m = Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -3]]);
        assert_eq!(congruence_signature(&m), (1, 2));
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::frac(1, 2), GaussianRational::frac(1, 3)],
            vec![GaussianRational::frac(1, 3), GaussianRational::frac(1, 5)],
        ]);
        // det = 1/10 - 1/9 < 0
        assert_eq!(congruence_signature(&m), (1, 1));
    }

    #[test]
    fn series_examples() {
        assert_eq!(derived_series(&so3()), vec![3, 3]);
        assert_eq!(lower_central_series(&so3()), vec![3, 3]);
        assert_eq!(center(&so3()).dim(), 0);
        assert_eq!(radical(&so3()).dim(), 0);

        assert_eq!(derived_series(&abelian(4)), vec![4, 0]);
        assert_eq!(center(&abelian(4)).dim(), 4);
        assert_eq!(radical(&abelian(4)).dim(), 4);

        let h = heisenberg3();
        assert_eq!(derived_series(&h), vec![3, 1, 0]);
        assert_eq!(lower_central_series(&h), vec![3, 1, 0]);
        assert_eq!(center(&h).dim(), 1);
        assert_eq!(radical(&h).dim(), 3);
    }

    #[test]
    fn iso2_series() {
        // so(2) ⋉ R²: [r, t1] = t2, [r, t2] = -t1.
        let g = LieAlgebra::real_from_brackets(
            &["r", "t1", "t2"],
            &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)])],
        );
        assert_eq!(derived_series(&g), vec![3, 2, 0]);
        assert_eq!(lower_central_series(&g), vec![3, 2, 2]);
        assert_eq!(center(&g).dim(), 0);
        assert_eq!(radical(&g).dim(), 3);
    }

    #[test]
    fn fingerprint_is_transport_invariant() {
        let g = so3();
        let t = Matrix::from_int_rows(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(fingerprint(&g), fingerprint(&g.transport_bracket(&t).unwrap()));
        let fp = fingerprint(&g);
        assert_eq!(fp.killing_rank, 3);
        assert_eq!(fp.killing_signature, Some((0, 3)));
        assert_eq!(fingerprint(&g.as_complex()).killing_signature, None);
    }
}

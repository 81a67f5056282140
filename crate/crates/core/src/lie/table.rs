use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Ring;
use crate::Error;

/// Sparse structure constants over a coefficient ring.
///
/// Entries are keyed `(i, j, k)` with `i < j`; zero entries are never
/// stored, so equality of tables is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureConstants<T> {
    dim: usize,
    entries: BTreeMap<(usize, usize, usize), T>,
}

impl<T: Ring> StructureConstants<T> {
    pub fn new(dim: usize) -> Self {
        StructureConstants {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Sets `C_ij^k = c` (and implicitly `C_ji^k = -c`).
    ///
    /// Panics if `i == j` and `c` is nonzero, or an index is out of range.
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: T) {
        assert!(i < self.dim && j < self.dim && k < self.dim, "index out of range");
        if i == j {
            assert!(c.is_zero(), "nonzero [e_i, e_i]");
            return;
        }
        let (key, c) = if i < j { ((i, j, k), c) } else { ((j, i, k), -c) };
        if c.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, c);
        }
    }

    /// Adds `c` to `C_ij^k`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: T) {
        let cur = self.get(i, j, k);
        self.set(i, j, k, cur + c);
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => T::zero(),
            std::cmp::Ordering::Less => self.entries.get(&(i, j, k)).cloned().unwrap_or_else(T::zero),
            std::cmp::Ordering::Greater => {
                self.entries.get(&(j, i, k)).map(|c| -c.clone()).unwrap_or_else(T::zero)
            }
        }
    }

    /// Nonzero `(k, C_ij^k)` for the bracket `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, T)> {
        if i == j {
            return Vec::new();
        }
        let (a, b) = (i.min(j), i.max(j));
        self.entries
            .range((a, b, 0)..=(a, b, usize::MAX))
            .map(|(&(_, _, k), c)| (k, if i < j { c.clone() } else { -c.clone() }))
            .collect()
    }

    /// Canonical entries `((i, j, k), c)` with `i < j`, sorted.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &T)> {
        self.entries.iter()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> StructureConstants<U> {
        let mut out = StructureConstants::new(self.dim);
        for (&(i, j, k), c) in &self.entries {
            out.set(i, j, k, f(c));
        }
        out
    }

    /// Dense `C[i][j][k]` including both orders of `(i, j)`.
    pub fn dense(&self) -> Vec<Vec<Vec<T>>> {
        let n = self.dim;
        let mut d = vec![vec![vec![T::zero(); n]; n]; n];
        for (&(i, j, k), c) in &self.entries {
            d[i][j][k] = c.clone();
            d[j][i][k] = -c.clone();
        }
        d
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` as coordinates.
    pub fn jacobi_residue(&self, i: usize, j: usize, k: usize) -> Vec<T> {
        jacobi_residue_dense(&self.dense(), i, j, k)
    }

    /// Antisymmetry holds by construction; checks Jacobi on all `i < j < k`.
    pub fn validate(&self) -> ValidationReport<T> {
        let d = self.dense();
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let res = jacobi_residue_dense(&d, i, j, k);
                    if let Some(l) = res.iter().position(|c| !c.is_zero()) {
                        return ValidationReport::Jacobi {
                            i,
                            j,
                            k,
                            l,
                            residue: res[l].clone(),
                        };
                    }
                }
            }
        }
        ValidationReport::Pass
    }
}

fn jacobi_residue_dense<T: Ring>(d: &[Vec<Vec<T>>], i: usize, j: usize, k: usize) -> Vec<T> {
    let n = d.len();
    let mut out = vec![T::zero(); n];
    for m in 0..n {
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let x = &d[a][b][m];
            if x.is_zero() {
                continue;
            }
            for (l, slot) in out.iter_mut().enumerate() {
                let y = &d[m][c][l];
                if !y.is_zero() {
                    slot.add_product(x, y);
                }
            }
        }
    }
    out
}

/// Result of checking the Lie algebra axioms. Indices are 0-based; the
/// `Display` form is 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidationReport<T> {
    Pass,
    /// `C_ij^k + C_ji^k ≠ 0` (or `C_ii^k ≠ 0` when `i == j`).
    Antisymmetry { i: usize, j: usize, k: usize, sum: T },
    /// Coefficient `l` of the Jacobi residue of `(e_i, e_j, e_k)` is nonzero.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        residue: T,
    },
}

impl<T> ValidationReport<T> {
    pub fn is_pass(&self) -> bool {
        matches!(self, ValidationReport::Pass)
    }
}

impl<T: fmt::Display> fmt::Display for ValidationReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationReport::Pass => write!(f, "pass"),
            ValidationReport::Antisymmetry { i, j, k, sum } => write!(
                f,
                "antisymmetry violation at ({}, {}, {}): C_ij^k + C_ji^k = {sum}",
                i + 1,
                j + 1,
                k + 1
            ),
            ValidationReport::Jacobi { i, j, k, l, residue } => write!(
                f,
                "Jacobi violation at ({}, {}, {}), component {}: residue {residue}",
                i + 1,
                j + 1,
                k + 1,
                l + 1
            ),
        }
    }
}

/// Unnormalized table as read from input, with entries in any order.
///
/// Used to diagnose antisymmetry violations that a canonical
/// [`StructureConstants`] cannot represent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTable<T> {
    pub dim: usize,
    pub entries: Vec<(usize, usize, usize, T)>,
}

impl<T: Ring> RawTable<T> {
    /// Full check: antisymmetry of the raw entries, then Jacobi.
    pub fn validate(&self) -> Result<ValidationReport<T>, Error> {
        let mut seen: BTreeMap<(usize, usize, usize), T> = BTreeMap::new();
        for (i, j, k, c) in &self.entries {
            if *i >= self.dim || *j >= self.dim || *k >= self.dim {
                return Err(Error::InvalidTable(format!(
                    "index ({}, {}, {}) out of range for dim {}",
                    i + 1,
                    j + 1,
                    k + 1,
                    self.dim
                )));
            }
            if seen.insert((*i, *j, *k), c.clone()).is_some() {
                return Err(Error::InvalidTable(format!(
                    "duplicate entry ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
        }
        for (&(i, j, k), c) in &seen {
            if i == j && !c.is_zero() {
                return Ok(ValidationReport::Antisymmetry { i, j, k, sum: c.clone() + c.clone() });
            }
            if i < j {
                if let Some(d) = seen.get(&(j, i, k)) {
                    let sum = c.clone() + d.clone();
                    if !sum.is_zero() {
                        return Ok(ValidationReport::Antisymmetry { i, j, k, sum });
                    }
                }
            }
        }
        Ok(self.canonical()?.validate())
    }

    /// Canonical table. Fails on antisymmetry violations.
    pub fn canonical(&self) -> Result<StructureConstants<T>, Error> {
        let mut sc = StructureConstants::new(self.dim);
        let mut seen: BTreeMap<(usize, usize, usize), T> = BTreeMap::new();
        for (i, j, k, c) in &self.entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= self.dim || j >= self.dim || k >= self.dim {
                return Err(Error::InvalidTable(format!("index out of range for dim {}", self.dim)));
            }
            if i == j {
                if !c.is_zero() {
                    return Err(Error::InvalidTable(format!(
                        "nonzero [e_{0}, e_{0}] component {1}",
                        i + 1,
                        k + 1
                    )));
                }
                continue;
            }
            let (key, val) = if i < j { ((i, j, k), c.clone()) } else { ((j, i, k), -c.clone()) };
            if let Some(prev) = seen.get(&key) {
                if *prev != val {
                    return Err(Error::InvalidTable(format!(
                        "antisymmetry violation at ({}, {}, {})",
                        key.0 + 1,
                        key.1 + 1,
                        key.2 + 1
                    )));
                }
                continue;
            }
            seen.insert(key, val.clone());
            sc.set(key.0, key.1, key.2, val);
        }
        Ok(sc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussianRational;

    fn one() -> GaussianRational {
        GaussianRational::from_int(1)
    }

    #[test]
    fn so3_passes_brute_force_jacobi() {
        let mut sc = StructureConstants::new(3);
        sc.set(0, 1, 2, one());
        sc.set(1, 2, 0, one());
        sc.set(2, 0, 1, one());
        assert!(sc.validate().is_pass());
        assert_eq!(sc.get(1, 0, 2), -one());
        assert_eq!(sc.bracket(2, 0), vec![(1, one())]);
    }

    #[test]
    fn raw_antisymmetry_violation() {
        let raw = RawTable {
            dim: 3,
            entries: vec![(0, 1, 2, one()), (1, 0, 2, one())],
        };
        assert_eq!(
            raw.validate().unwrap(),
            ValidationReport::Antisymmetry { i: 0, j: 1, k: 2, sum: GaussianRational::from_int(2) }
        );
        assert!(raw.canonical().is_err());
        assert_eq!(raw.validate().unwrap().to_string(), "antisymmetry violation at (1, 2, 3): C_ij^k + C_ji^k = 2");
    }

    #[test]
    fn raw_consistent_reverse_entries_are_accepted() {
        let raw = RawTable {
            dim: 3,
            entries: vec![(0, 1, 2, one()), (1, 0, 2, -one())],
        };
        assert!(raw.validate().unwrap().is_pass());
        assert_eq!(raw.canonical().unwrap().len(), 1);
    }

    #[test]
    fn jacobi_violation_reported() {
        // [e1,e2]=e1, [e1,e3]=e3, [e2,e3]=0.
        // Hand expansion: [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e1,e3] + 0 + [-e3,e2] = e3.
        let mut sc = StructureConstants::new(3);
        sc.set(0, 1, 0, one());
        sc.set(0, 2, 2, one());
        assert_eq!(sc.jacobi_residue(0, 1, 2), vec![GaussianRational::from_int(0), 0.into(), one()]);
        assert_eq!(
            sc.validate(),
            ValidationReport::Jacobi { i: 0, j: 1, k: 2, l: 2, residue: one() }
        );
    }
}

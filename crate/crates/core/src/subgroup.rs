//! Finite-index subgroups of `Z^n` in column Hermite normal form.
//!
//! A [`Subgroup`] is presented by integer generator columns and canonicalized
//! on construction to a lower-triangular column HNF `H`: column `j` has its
//! first nonzero entry on row `j`, diagonal entries are positive, and in each
//! row the entries left of the diagonal are reduced into `[0, H[i][i])`.
//!
//! With this convention `Delta ∩ Z·e_n = H[n-1][n-1] · Z·e_n`, so the
//! smallest positive element of the subgroup is `H[n-1][n-1] · e_n` and the
//! initial index reads off the last diagonal entry.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lex::{GroupError, LexVector};
use crate::snf;

/// A finite-index subgroup of `Z^n` given by generator columns, canonicalized
/// to column Hermite normal form.
///
/// Equality compares the canonical form (and therefore the lattice), not the
/// presentation.
#[derive(Clone)]
pub struct Subgroup {
    n: usize,
    /// Nonzero generator columns, as supplied.
    gens: Vec<Vec<BigInt>>,
    /// Canonical lower-triangular basis, column major: `hnf[j][i]` is row `i`
    /// of column `j`.
    hnf: Vec<Vec<BigInt>>,
}

/// Invariant factors `d_1 | d_2 | ... | d_n` of the quotient `Z^n / Delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientStructure {
    pub invariant_factors: Vec<BigInt>,
}

/// Shift representatives `gamma_0 < gamma_1 < ...` covering the nonnegative
/// semigroup: every `gamma >= 0` decomposes as `gamma_i + delta` with
/// `delta` in the subgroup and `delta >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCover {
    pub representatives: Vec<LexVector>,
}

/// The three initial indices of a nested chain `Delta ⊆ Sigma ⊆ Z^n`,
/// together with the corresponding group indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonChain {
    pub epsilon_gamma_sigma: BigInt,
    pub epsilon_sigma_delta: BigInt,
    pub epsilon_gamma_delta: BigInt,
    pub index_gamma_sigma: BigInt,
    pub index_sigma_delta: BigInt,
    pub index_gamma_delta: BigInt,
}

impl Subgroup {
    /// Canonicalizes generator columns into a subgroup of `Z^n`.
    ///
    /// Zero columns are ignored. Fails with [`GroupError::NotFiniteIndex`]
    /// when the columns do not span a full-rank sublattice.
    pub fn from_generators(n: usize, columns: Vec<Vec<BigInt>>) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidInput("rank n must be >= 1".into()));
        }
        for (k, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(GroupError::InvalidInput(format!(
                    "generator column {k} has length {}, expected {n}",
                    col.len()
                )));
            }
        }
        let gens: Vec<Vec<BigInt>> = columns
            .into_iter()
            .filter(|col| col.iter().any(|c| !c.is_zero()))
            .collect();
        let hnf = column_hnf(n, gens.clone())?;
        Ok(Subgroup { n, gens, hnf })
    }

    pub fn from_generators_i64(n: usize, columns: &[&[i64]]) -> Result<Self, GroupError> {
        Self::from_generators(
            n,
            columns
                .iter()
                .map(|col| col.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    /// The full lattice `Z^n`.
    pub fn full(n: usize) -> Self {
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut col = vec![BigInt::zero(); n];
            col[j] = BigInt::one();
            cols.push(col);
        }
        Self::from_generators(n, cols).expect("identity columns are full rank")
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The generator columns the subgroup was constructed from (zero columns
    /// dropped).
    pub fn generator_columns(&self) -> &[Vec<BigInt>] {
        &self.gens
    }

    /// The canonical basis, column major.
    pub fn hnf_columns(&self) -> &[Vec<BigInt>] {
        &self.hnf
    }

    /// Diagonal entry `H[j][j]`.
    pub fn diagonal(&self, j: usize) -> &BigInt {
        &self.hnf[j][j]
    }

    /// The group index `(Z^n : Delta)`, the product of the diagonal entries.
    pub fn group_index(&self) -> BigInt {
        self.hnf
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (j, col)| acc * &col[j])
    }

    /// The initial index: the number of nonnegative lattice points strictly
    /// below every positive element of the subgroup. Equal to the last
    /// diagonal entry `H[n-1][n-1]`, which generates `Delta ∩ Z·e_n`.
    pub fn initial_index(&self) -> BigInt {
        self.hnf[self.n - 1][self.n - 1].clone()
    }

    /// The smallest positive element of the subgroup, `H[n-1][n-1] · e_n`.
    pub fn min_positive(&self) -> LexVector {
        LexVector::last_unit_scaled(self.n, self.initial_index())
    }

    /// The full increasing list `[0, e_n, 2·e_n, ..., (eps-1)·e_n]` of
    /// nonnegative points strictly below every positive subgroup element.
    ///
    /// Materializes `initial_index` vectors.
    pub fn smallest_positive_elements(&self) -> Vec<LexVector> {
        let eps = self.initial_index();
        let count = usize::try_from(&eps).expect("initial index exceeds addressable memory");
        let mut out = Vec::with_capacity(count);
        let mut k = BigInt::zero();
        for _ in 0..count {
            out.push(LexVector::last_unit_scaled(self.n, k.clone()));
            k += 1;
        }
        out
    }

    /// True exactly when every diagonal entry above the last equals 1, i.e.
    /// the canonical basis contains elements `(1, *, ..), (0, 1, *, ..), ...`.
    /// Contract: equivalent to `initial_index == group_index`.
    pub fn unit_triangular_criterion(&self) -> bool {
        (0..self.n - 1).all(|j| self.hnf[j][j].is_one())
    }

    /// The semigroup coset cover `[(0,..,0,i)]` for `i < eps` when
    /// `initial_index == group_index`, and `None` otherwise (no finite cover
    /// exists in that case).
    pub fn semigroup_cover(&self) -> Option<CosetCover> {
        if self.initial_index() != self.group_index() {
            return None;
        }
        Some(CosetCover {
            representatives: self.smallest_positive_elements(),
        })
    }

    /// Invariant factors of `Z^n / Delta` via Smith normal form.
    pub fn quotient_invariants(&self) -> QuotientStructure {
        QuotientStructure {
            invariant_factors: snf::invariant_factors(self.n, &self.hnf),
        }
    }

    /// Exact membership test by forward substitution on the triangular
    /// canonical basis. `v` must have length `n`.
    pub fn contains(&self, v: &LexVector) -> bool {
        assert_eq!(v.len(), self.n, "membership query of wrong length");
        let mut rem: Vec<BigInt> = v.coords().to_vec();
        for j in 0..self.n {
            let d = &self.hnf[j][j];
            let (q, r) = rem[j].div_rem(d);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for i in j..self.n {
                    let t = &q * &self.hnf[j][i];
                    rem[i] -= t;
                }
            }
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        true
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.hnf == other.hnf
    }
}

impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(n={}, hnf_columns={:?})", self.n, self.hnf)
    }
}

/// Initial indices along a nested chain `Delta ⊆ Sigma ⊆ Z^n`.
///
/// `epsilon_sigma_delta` counts the elements of `Sigma_{>=0}` strictly below
/// `Delta_{>0}`, computed as `H_Delta[n-1][n-1] / H_Sigma[n-1][n-1]`. The
/// product law `eps(Γ|Σ) · eps(Σ|Δ) = eps(Γ|Δ)` holds exactly.
pub fn epsilon_chain(delta: &Subgroup, sigma: &Subgroup) -> Result<EpsilonChain, GroupError> {
    if delta.rank() != sigma.rank() {
        return Err(GroupError::LengthMismatch {
            left: delta.rank(),
            right: sigma.rank(),
        });
    }
    for col in delta.hnf_columns() {
        let v = LexVector::new(col.clone());
        if !sigma.contains(&v) {
            return Err(GroupError::NotNested {
                generator: v.to_string(),
            });
        }
    }
    let eps_gs = sigma.initial_index();
    let eps_gd = delta.initial_index();
    let (eps_sd, r) = eps_gd.div_rem(&eps_gs);
    assert!(r.is_zero(), "nested last diagonals must divide");
    let ind_gs = sigma.group_index();
    let ind_gd = delta.group_index();
    let (ind_sd, r) = ind_gd.div_rem(&ind_gs);
    assert!(r.is_zero(), "nested indices must divide");
    Ok(EpsilonChain {
        epsilon_gamma_sigma: eps_gs,
        epsilon_sigma_delta: eps_sd,
        epsilon_gamma_delta: eps_gd,
        index_gamma_sigma: ind_gs,
        index_sigma_delta: ind_sd,
        index_gamma_delta: ind_gd,
    })
}

/// Column-style Hermite normal form of an integer matrix with `n` rows.
///
/// Returns the `n` canonical columns, or `NotFiniteIndex` when the columns
/// span a proper sublattice.
fn column_hnf(n: usize, mut cols: Vec<Vec<BigInt>>) -> Result<Vec<Vec<BigInt>>, GroupError> {
    for row in 0..n {
        let pivot = row;
        if pivot >= cols.len() {
            return Err(GroupError::NotFiniteIndex { n, rank: pivot });
        }
        // Bring some column with support on this row into the pivot slot.
        let found = (pivot..cols.len()).find(|&k| !cols[k][row].is_zero());
        let Some(k) = found else {
            return Err(GroupError::NotFiniteIndex { n, rank: pivot });
        };
        cols.swap(pivot, k);

        // Fold the remaining columns into the pivot with 2x2 unimodular
        // column operations, leaving gcd on the pivot and 0 elsewhere.
        for k in (pivot + 1)..cols.len() {
            if cols[k][row].is_zero() {
                continue;
            }
            let a = cols[pivot][row].clone();
            let b = cols[k][row].clone();
            let ext = a.extended_gcd(&b);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let u = &a / &g;
            let v = &b / &g;
            for i in 0..n {
                let x = cols[pivot][i].clone();
                let y = cols[k][i].clone();
                cols[pivot][i] = &s * &x + &t * &y;
                cols[k][i] = &u * &y - &v * &x;
            }
            debug_assert!(cols[k][row].is_zero());
        }
        if cols[pivot][row].is_negative() {
            for c in cols[pivot].iter_mut() {
                *c = -(c.clone());
            }
        }
        // Reduce earlier columns on this row into [0, d).
        let d = cols[pivot][row].clone();
        for k in 0..pivot {
            let q = cols[k][row].div_floor(&d);
            if q.is_zero() {
                continue;
            }
            for i in row..n {
                let t = &q * &cols[pivot][i];
                cols[k][i] -= t;
            }
        }
    }
    cols.truncate(n);
    debug_assert!(cols
        .iter()
        .enumerate()
        .all(|(j, col)| { col[..j].iter().all(|c| c.is_zero()) && col[j].is_positive() }));
    Ok(cols)
}

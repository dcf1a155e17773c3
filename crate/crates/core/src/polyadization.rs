//! Cyclic shift weighted matrices and their nonderived n-ary product.
//!
//! An arity-`n` [`ZMatrix`] is the `(n-1) x (n-1)` matrix with `z_i` at
//! `(i, i+1)` and `z_{n-1}` at `(n-1, 1)`. Only the weights are stored.
//! The product of exactly `n` such matrices has the same shape; entry `i` is
//! `z'_i z''_{i+1} ... z^(n)_{i+n-1}` with indices taken mod `n-1`.

use crate::error::{Error, Result};
use crate::hypercomplex::Coefficient;

pub const MIN_ARITY: usize = 3;

#[derive(Clone, PartialEq)]
pub struct ZMatrix<A: Coefficient> {
    entries: Vec<A>,
}

impl<A: Coefficient> std::fmt::Debug for ZMatrix<A> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Z[{}]{:?}", self.arity(), self.entries)
    }
}

impl<A: Coefficient> ZMatrix<A> {
    /// Builds the arity-`entries.len() + 1` matrix.
    pub fn new(entries: Vec<A>) -> Result<Self> {
        if entries.len() + 1 < MIN_ARITY {
            return Err(Error::InvalidArity(entries.len() + 1));
        }
        let kind = entries[0].kind();
        if let Some(other) = entries.iter().find(|e| e.kind() != kind) {
            return Err(Error::AlgebraMismatch { left: A::name_of(kind), right: other.name() });
        }
        if !A::is_associative_kind(kind) {
            return Err(Error::NonAssociative(A::name_of(kind)));
        }
        Ok(ZMatrix { entries })
    }

    pub fn identity(arity: usize, kind: A::Kind) -> Result<Self> {
        Self::filled(arity, A::one_of(kind))
    }

    pub fn zero(arity: usize, kind: A::Kind) -> Result<Self> {
        Self::filled(arity, A::zero_of(kind))
    }

    fn filled(arity: usize, value: A) -> Result<Self> {
        if arity < MIN_ARITY {
            return Err(Error::InvalidArity(arity));
        }
        Self::new(vec![value; arity - 1])
    }

    pub fn arity(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn kind(&self) -> A::Kind {
        self.entries[0].kind()
    }

    pub fn algebra_name(&self) -> String {
        A::name_of(self.kind())
    }

    /// Weights `z_1 .. z_{n-1}` (0-based storage).
    pub fn entries(&self) -> &[A] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<A> {
        self.entries
    }

    /// Number of real parameters, `D (n - 1)`.
    pub fn parameter_count(&self) -> usize {
        A::dim_of(self.kind()) * self.entries.len()
    }

    /// Flattened real coordinates, entry by entry.
    pub fn coords(&self) -> Vec<A::Scalar> {
        self.entries.iter().flat_map(Coefficient::coords).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Coefficient::is_zero)
    }

    /// 1-based index of the first entry without an inverse.
    pub fn first_non_invertible(&self) -> Option<usize> {
        self.entries.iter().position(|e| e.try_inverse().is_none()).map(|i| i + 1)
    }

    /// Every entry is invertible, i.e. the matrix lies in the division subset.
    pub fn is_invertible(&self) -> bool {
        self.first_non_invertible().is_none()
    }

    pub fn scale(&self, s: &A::Scalar) -> Self {
        ZMatrix { entries: self.entries.iter().map(|e| e.scale(s)).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_compatible(self, rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.plus(b)).collect();
        Ok(ZMatrix { entries })
    }

    pub fn to_dense(&self) -> DenseMatrix<A> {
        let m = self.entries.len();
        let mut d = DenseMatrix::zero(m, self.kind());
        for (i, z) in self.entries.iter().enumerate() {
            d.set(i, (i + 1) % m, z.clone());
        }
        d
    }

    /// Reads the weights back from a dense matrix with the cyclic shift pattern.
    pub fn from_dense(d: &DenseMatrix<A>) -> Result<Self> {
        d.check_shift_pattern()?;
        let m = d.size();
        Self::new((0..m).map(|i| d.get(i, (i + 1) % m).clone()).collect())
    }
}

fn check_compatible<A: Coefficient>(a: &ZMatrix<A>, b: &ZMatrix<A>) -> Result<()> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch { expected: a.arity(), found: b.arity() });
    }
    if a.kind() != b.kind() {
        return Err(Error::AlgebraMismatch { left: a.algebra_name(), right: b.algebra_name() });
    }
    Ok(())
}

/// The n-ary product of exactly `n` matrices of arity `n`.
pub fn nary_mul<A: Coefficient>(factors: &[ZMatrix<A>]) -> Result<ZMatrix<A>> {
    let refs: Vec<&ZMatrix<A>> = factors.iter().collect();
    nary_mul_refs(&refs)
}

pub fn nary_mul_refs<A: Coefficient>(factors: &[&ZMatrix<A>]) -> Result<ZMatrix<A>> {
    let first = factors.first().ok_or(Error::WrongFactorCount { expected: MIN_ARITY, found: 0 })?;
    let n = first.arity();
    if factors.len() != n {
        return Err(Error::WrongFactorCount { expected: n, found: factors.len() });
    }
    for f in &factors[1..] {
        check_compatible(first, f)?;
    }
    let m = n - 1;
    let entries = (0..m)
        .map(|i| {
            factors[1..]
                .iter()
                .enumerate()
                .fold(factors[0].entries[i].clone(), |acc, (k, f)| acc.times(&f.entries[(i + k + 1) % m]))
        })
        .collect();
    Ok(ZMatrix { entries })
}

pub fn polyadic_identity<A: Coefficient>(arity: usize, kind: A::Kind) -> Result<ZMatrix<A>> {
    ZMatrix::identity(arity, kind)
}

/// Querelement: `z~_i = (z_{i+1} z_{i+2} ... z_{i-1})^{-1}`.
pub fn querelement<A: Coefficient>(z: &ZMatrix<A>) -> Result<ZMatrix<A>> {
    let inverses = z
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| e.try_inverse().ok_or(Error::NonInvertibleEntry { index: i + 1 }))
        .collect::<Result<Vec<_>>>()?;
    let m = z.entries.len();
    let entries = (0..m)
        .map(|i| {
            // z_{i-1}^{-1} z_{i-2}^{-1} ... z_{i+1}^{-1}
            (1..m - 1).fold(inverses[(i + m - 1) % m].clone(), |acc, k| acc.times(&inverses[(i + m - 1 - k) % m]))
        })
        .collect();
    Ok(ZMatrix { entries })
}

/// `z^<ell>`: `ell` nested products over `ell (n - 1) + 1` copies of `z`.
pub fn polyadic_power<A: Coefficient>(z: &ZMatrix<A>, ell: usize) -> ZMatrix<A> {
    let n = z.arity();
    let mut acc = z.clone();
    for _ in 0..ell {
        let mut args = Vec::with_capacity(n);
        args.push(&acc);
        args.extend(std::iter::repeat_n(z, n - 1));
        acc = nary_mul_refs(&args).expect("copies of one matrix are compatible");
    }
    acc
}

pub fn is_idempotent<A: Coefficient>(z: &ZMatrix<A>, ell: usize) -> bool {
    polyadic_power(z, ell) == *z
}

pub fn is_nilpotent<A: Coefficient>(z: &ZMatrix<A>, ell: usize) -> bool {
    polyadic_power(z, ell).is_zero()
}

/// Whether `mu[probe, polyad]` returns `probe`.
pub fn is_neutral_polyad<A: Coefficient>(polyad: &[ZMatrix<A>], probe: &ZMatrix<A>) -> bool {
    let mut args = vec![probe];
    args.extend(polyad);
    matches!(nary_mul_refs(&args), Ok(r) if r == *probe)
}

/// Inserts `inner` at `slot` among `fill` copies and multiplies.
pub fn mul_with_at<A: Coefficient>(fill: &ZMatrix<A>, inner: &ZMatrix<A>, slot: usize) -> Result<ZMatrix<A>> {
    let n = fill.arity();
    let mut args = vec![fill; n];
    args[slot] = inner;
    nary_mul_refs(&args)
}

/// Square matrix over a coefficient algebra, used as an oracle.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<A: Coefficient> {
    size: usize,
    kind: A::Kind,
    cells: Vec<A>,
}

impl<A: Coefficient> std::fmt::Debug for DenseMatrix<A> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.cells.chunks(self.size)).finish()
    }
}

impl<A: Coefficient> DenseMatrix<A> {
    pub fn zero(size: usize, kind: A::Kind) -> Self {
        DenseMatrix { size, kind, cells: vec![A::zero_of(kind); size * size] }
    }

    pub fn from_rows(rows: Vec<Vec<A>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::InvalidDimension(0));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::SizeMismatch { left: size, right: r.len() });
        }
        let kind = rows[0][0].kind();
        let cells: Vec<A> = rows.into_iter().flatten().collect();
        if let Some(c) = cells.iter().find(|c| c.kind() != kind) {
            return Err(Error::AlgebraMismatch { left: A::name_of(kind), right: c.name() });
        }
        Ok(DenseMatrix { size, kind, cells })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn kind(&self) -> A::Kind {
        self.kind
    }

    /// 0-based access.
    pub fn get(&self, row: usize, col: usize) -> &A {
        &self.cells[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: A) {
        self.cells[row * self.size + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[A]> {
        self.cells.chunks(self.size)
    }

    /// Nonzero cells as 1-based positions, row-major.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|r| (0..self.size).map(move |c| (r, c)))
            .filter(|&(r, c)| !self.get(r, c).is_zero())
            .map(|(r, c)| (r + 1, c + 1))
            .collect()
    }

    /// First nonzero cell off the `(i, i+1 mod size)` pattern.
    pub fn check_shift_pattern(&self) -> Result<()> {
        let m = self.size;
        for r in 0..m {
            for c in 0..m {
                if c != (r + 1) % m && !self.get(r, c).is_zero() {
                    return Err(Error::PatternViolation { row: r + 1, col: c + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn has_shift_pattern(&self) -> bool {
        self.check_shift_pattern().is_ok()
    }
}

pub fn to_dense<A: Coefficient>(z: &ZMatrix<A>) -> DenseMatrix<A> {
    z.to_dense()
}

pub fn dense_mul<A: Coefficient>(a: &DenseMatrix<A>, b: &DenseMatrix<A>) -> Result<DenseMatrix<A>> {
    if a.size != b.size {
        return Err(Error::SizeMismatch { left: a.size, right: b.size });
    }
    if a.kind != b.kind {
        return Err(Error::AlgebraMismatch { left: A::name_of(a.kind), right: A::name_of(b.kind) });
    }
    let m = a.size;
    let mut out = DenseMatrix::zero(m, a.kind);
    for r in 0..m {
        for c in 0..m {
            let cell = (0..m).fold(A::zero_of(a.kind), |acc, k| acc.plus(&a.get(r, k).times(b.get(k, c))));
            out.set(r, c, cell);
        }
    }
    Ok(out)
}

/// Left-to-right dense product of a nonempty chain.
pub fn dense_chain<A: Coefficient>(factors: &[DenseMatrix<A>]) -> Result<DenseMatrix<A>> {
    let (first, rest) = factors.split_first().ok_or(Error::WrongFactorCount { expected: 1, found: 0 })?;
    rest.iter().try_fold(first.clone(), |acc, f| dense_mul(&acc, f))
}

/// Oracle for [`nary_mul`]: dense product of the factors, read back as weights.
pub fn nary_mul_dense<A: Coefficient>(factors: &[ZMatrix<A>]) -> Result<ZMatrix<A>> {
    let n = factors.first().map(ZMatrix::arity).unwrap_or(MIN_ARITY);
    if factors.len() != n {
        return Err(Error::WrongFactorCount { expected: n, found: factors.len() });
    }
    for f in factors {
        check_compatible(&factors[0], f)?;
    }
    let dense: Vec<_> = factors.iter().map(ZMatrix::to_dense).collect();
    ZMatrix::from_dense(&dense_chain(&dense)?)
}

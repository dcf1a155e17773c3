//! The `(m+1)`-ary product of vectors in an `m`-dimensional space.
//!
//! Component `j` of `mu[x', x'', ..., x^(m+1)]` is
//! `x'_j x''_{j+1} ... x^(m+1)_{j+m}`, indices mod `m`. Under
//! [`shift_matrix`] the product becomes the ordinary product of `m + 1`
//! cyclic shift matrices.

use crate::error::{Error, Result};
use crate::hypercomplex::Coefficient;
use crate::numeric::Field;
use crate::polyadization::DenseMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct PolyVector<S> {
    coords: Vec<S>,
}

impl<S: Field> PolyVector<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidDimension(coords.len()));
        }
        Ok(PolyVector { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| S::from_i64(x)).collect())
    }

    /// The polyadic unit `e_1 + ... + e_m`.
    pub fn ones(dim: usize) -> Result<Self> {
        Self::new(vec![S::one(); dim])
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        let mut v = vec![S::zero(); dim];
        v[index] = S::one();
        Self::new(v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.dim(), rhs.dim())?;
        Ok(PolyVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() + b.clone()).collect() })
    }

    pub fn scale(&self, s: &S) -> Self {
        PolyVector { coords: self.coords.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Field::is_zero)
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimMismatch { expected, found });
    }
    Ok(())
}

pub fn poly_product<S: Field>(factors: &[PolyVector<S>]) -> Result<PolyVector<S>> {
    let refs: Vec<&PolyVector<S>> = factors.iter().collect();
    poly_product_refs(&refs)
}

pub fn poly_product_refs<S: Field>(factors: &[&PolyVector<S>]) -> Result<PolyVector<S>> {
    let m = factors.first().map(|v| v.dim()).ok_or(Error::WrongFactorCount { expected: 3, found: 0 })?;
    if factors.len() != m + 1 {
        return Err(Error::WrongFactorCount { expected: m + 1, found: factors.len() });
    }
    for f in factors {
        check_dim(m, f.dim())?;
    }
    let coords = (0..m)
        .map(|j| factors.iter().enumerate().fold(S::one(), |acc, (k, f)| acc * f.coords[(j + k) % m].clone()))
        .collect();
    Ok(PolyVector { coords })
}

/// One nonzero structure constant `f_{i_1 ... i_{m+1}}^j`, indices 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstant {
    pub inputs: Vec<usize>,
    pub output: usize,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub dim: usize,
    pub nonzero: Vec<StructureConstant>,
}

impl StructureConstants {
    pub fn get(&self, inputs: &[usize], output: usize) -> i64 {
        self.nonzero.iter().find(|f| f.output == output && f.inputs == inputs).map_or(0, |f| f.value)
    }
}

pub fn structure_constants(m: usize) -> Result<StructureConstants> {
    if m < 2 {
        return Err(Error::InvalidDimension(m));
    }
    let nonzero = (0..m)
        .map(|i| StructureConstant { inputs: (0..=m).map(|k| (i + k) % m + 1).collect(), output: i + 1, value: 1 })
        .collect();
    Ok(StructureConstants { dim: m, nonzero })
}

/// Expands the product through the structure constants.
pub fn product_from_constants<S: Field>(
    constants: &StructureConstants,
    factors: &[PolyVector<S>],
) -> Result<PolyVector<S>> {
    let m = constants.dim;
    if factors.len() != m + 1 {
        return Err(Error::WrongFactorCount { expected: m + 1, found: factors.len() });
    }
    let mut coords = vec![S::zero(); m];
    for f in &constants.nonzero {
        let term =
            f.inputs.iter().zip(factors).fold(S::from_i64(f.value), |acc, (&i, v)| acc * v.coords[i - 1].clone());
        coords[f.output - 1] = coords[f.output - 1].clone() + term;
    }
    PolyVector::new(coords)
}

/// Quervector: component `j` is `1 / (x_{j+1} x_{j+2} ... x_{j-1})`.
pub fn quervector<S: Field>(v: &PolyVector<S>) -> Result<PolyVector<S>> {
    if let Some(j) = v.coords.iter().position(Field::is_zero) {
        return Err(Error::ZeroCoordinate { index: j + 1 });
    }
    let m = v.dim();
    let coords = (0..m)
        .map(|j| (1..m).fold(S::one(), |acc, k| acc * v.coords[(j + k) % m].clone()).inv())
        .collect::<Result<Vec<_>>>()?;
    let q = PolyVector { coords };
    debug_assert!((0..=m).all(|slot| product_at(v, &q, slot).as_ref() == Ok(v)));
    Ok(q)
}

/// `mu[v, ..., w, ..., v]` with `w` in the given 0-based slot.
pub fn product_at<S: Field>(v: &PolyVector<S>, w: &PolyVector<S>, slot: usize) -> Result<PolyVector<S>> {
    let mut args = vec![v; v.dim() + 1];
    args[slot] = w;
    poly_product_refs(&args)
}

pub fn shift_matrix<S: Field + Coefficient<Kind = ()>>(v: &PolyVector<S>) -> DenseMatrix<S> {
    let m = v.dim();
    let mut d = DenseMatrix::zero(m, ());
    for (j, x) in v.coords.iter().enumerate() {
        d.set(j, (j + 1) % m, x.clone());
    }
    d
}

pub fn reduced_vectorization<S: Field + Coefficient<Kind = ()>>(d: &DenseMatrix<S>) -> Result<PolyVector<S>> {
    d.check_shift_pattern()?;
    let m = d.size();
    PolyVector::new((0..m).map(|j| d.get(j, (j + 1) % m).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;
    use crate::polyadization::dense_chain;

    type Q = Rational;

    fn v(c: &[i64]) -> PolyVector<Q> {
        PolyVector::from_ints(c).unwrap()
    }

    fn qv(c: &[(i64, i64)]) -> PolyVector<Q> {
        PolyVector::new(c.iter().map(|&(n, d)| Q::new(n, d).unwrap()).collect()).unwrap()
    }

    #[test]
    fn four_ary_example() {
        let f = [v(&[2, 3, 4]), v(&[3, 1, 5]), v(&[4, 3, 5]), v(&[5, 3, 2])];
        assert_eq!(poly_product(&f).unwrap(), v(&[50, 180, 72]));
    }

    #[test]
    fn quervectors() {
        assert_eq!(quervector(&v(&[2, 3, 4])).unwrap(), qv(&[(1, 12), (1, 8), (1, 6)]));
        assert_eq!(quervector(&v(&[3, 1, 5])).unwrap(), qv(&[(1, 5), (1, 15), (1, 3)]));
        assert_eq!(quervector(&v(&[4, 3, 5])).unwrap(), qv(&[(1, 15), (1, 20), (1, 12)]));
        assert_eq!(quervector(&v(&[5, 3, 2])).unwrap(), qv(&[(1, 6), (1, 10), (1, 15)]));
        assert_eq!(quervector(&v(&[1, 1, 1, 1])).unwrap(), v(&[1, 1, 1, 1]));
        assert_eq!(quervector(&v(&[1, 0, 2])).unwrap_err(), Error::ZeroCoordinate { index: 2 });
    }

    #[test]
    fn unit_vector() {
        let e = PolyVector::<Q>::ones(3).unwrap();
        assert_eq!(poly_product(&vec![e.clone(); 4]).unwrap(), e);
    }

    #[test]
    fn constants() {
        let f = structure_constants(3).unwrap();
        assert_eq!(f.nonzero.len(), 3);
        assert_eq!(f.get(&[1, 2, 3, 1], 1), 1);
        assert_eq!(f.get(&[2, 3, 1, 2], 2), 1);
        assert_eq!(f.get(&[3, 1, 2, 3], 3), 1);
        assert_eq!(f.get(&[1, 2, 3, 1], 2), 0);
        let f2 = structure_constants(2).unwrap();
        assert_eq!(f2.get(&[1, 2, 1], 1), 1);
        assert_eq!(f2.get(&[2, 1, 2], 2), 1);
        assert!(structure_constants(1).is_err());
    }

    #[test]
    fn constants_reproduce_products_on_basis() {
        for m in 2..5usize {
            let f = structure_constants(m).unwrap();
            let total = (m as u32 + 1) as usize;
            for code in 0..m.pow(total as u32) {
                let idx: Vec<usize> = (0..total).map(|k| code / m.pow(k as u32) % m).collect();
                let args: Vec<_> = idx.iter().map(|&i| PolyVector::<Q>::basis(m, i).unwrap()).collect();
                assert_eq!(poly_product(&args).unwrap(), product_from_constants(&f, &args).unwrap());
            }
        }
    }

    #[test]
    fn shift_matrix_layout() {
        let d = shift_matrix(&v(&[7, 8, 9]));
        assert_eq!(d.support(), vec![(1, 2), (2, 3), (3, 1)]);
        assert_eq!(reduced_vectorization(&d).unwrap(), v(&[7, 8, 9]));
    }

    #[test]
    fn homomorphism_on_example() {
        let f = [v(&[2, 3, 4]), v(&[3, 1, 5]), v(&[4, 3, 5]), v(&[5, 3, 2])];
        let dense: Vec<_> = f.iter().map(shift_matrix).collect();
        assert_eq!(reduced_vectorization(&dense_chain(&dense).unwrap()).unwrap(), v(&[50, 180, 72]));
    }

    #[test]
    fn off_pattern_rejected() {
        let mut d = shift_matrix(&v(&[1, 2, 3]));
        d.set(0, 0, Q::from(5));
        assert_eq!(reduced_vectorization(&d).unwrap_err(), Error::PatternViolation { row: 1, col: 1 });
    }

    #[test]
    fn zero_coordinate_is_a_zero_divisor() {
        let z = v(&[0, 2, 3]);
        assert!(poly_product(&vec![z; 4]).unwrap().is_zero());
    }
}

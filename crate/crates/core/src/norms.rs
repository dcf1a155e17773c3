//! Polyadic norm of cyclic shift matrices: the product of the entry norms.
//!
//! Norms are carried squared so that rational mode stays exact.

use crate::error::{Error, Result};
use crate::hypercomplex::Coefficient;
use crate::numeric::{Field, Float64, ABS_TOL, REL_TOL};
use crate::polyadization::ZMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct PolyNorm<S> {
    pub arity: usize,
    pub value_sq: S,
}

impl PolyNorm<Float64> {
    pub fn value(&self) -> Float64 {
        self.value_sq.sqrt()
    }
}

fn entry_norms<A: Coefficient>(z: &ZMatrix<A>) -> Result<Vec<A::Scalar>> {
    z.entries().iter().map(|e| e.norm_sq().ok_or_else(|| Error::UnnormedAlgebra(e.name()))).collect()
}

pub fn polyadic_norm<A: Coefficient>(z: &ZMatrix<A>) -> Result<PolyNorm<A::Scalar>> {
    let value_sq = entry_norms(z)?.into_iter().fold(A::Scalar::one(), |acc, n| acc * n);
    Ok(PolyNorm { arity: z.arity(), value_sq })
}

/// Norm of the querelement in closed form, `1 / |Z|^(n-2)`.
pub fn quer_norm<A: Coefficient>(z: &ZMatrix<A>) -> Result<PolyNorm<A::Scalar>> {
    let norm = polyadic_norm(z)?;
    if let Some(index) = z.first_non_invertible() {
        return Err(Error::NonInvertibleEntry { index });
    }
    let value_sq = norm.value_sq.pow(z.arity() as u32 - 2).inv()?;
    Ok(PolyNorm { arity: z.arity(), value_sq })
}

/// `|Z' + Z''| <= |Z'| + |Z''|`, with the float tolerance as slack.
pub fn triangle_holds<A>(x: &ZMatrix<A>, y: &ZMatrix<A>) -> Result<bool>
where
    A: Coefficient<Scalar = Float64>,
{
    let lhs = polyadic_norm(&x.add(y)?)?.value().value();
    let rhs = polyadic_norm(x)?.value().value() + polyadic_norm(y)?.value().value();
    Ok(lhs <= rhs + ABS_TOL + REL_TOL * rhs.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::{CdElement, DualNumber};
    use crate::numeric::Rational;
    use crate::polyadization::querelement;

    type Q = Rational;

    fn cds(v: &[&[i64]]) -> ZMatrix<CdElement<Q>> {
        ZMatrix::new(v.iter().map(|c| CdElement::from_ints(c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn complex_four_ary_norm() {
        let z = cds(&[&[1, 2], &[3, -1], &[0, 2]]);
        assert_eq!(polyadic_norm(&z).unwrap().value_sq, Q::from(5 * 10 * 4));
        assert_eq!(quer_norm(&z).unwrap().value_sq, Q::new(1, 200 * 200).unwrap());
        assert_eq!(quer_norm(&z).unwrap(), polyadic_norm(&querelement(&z).unwrap()).unwrap());
    }

    #[test]
    fn ternary_quaternion_norm() {
        let z = cds(&[&[1, 1, 1, 1], &[2, 0, -1, 0]]);
        assert_eq!(polyadic_norm(&z).unwrap().value_sq, Q::from(20));
        assert_eq!(quer_norm(&z).unwrap().value_sq, Q::new(1, 20).unwrap());
    }

    #[test]
    fn unit_has_norm_one() {
        for n in 3..7 {
            let e = ZMatrix::<CdElement<Q>>::identity(n, 2).unwrap();
            assert_eq!(polyadic_norm(&e).unwrap().value_sq, Q::from(1));
            assert_eq!(quer_norm(&e).unwrap().value_sq, Q::from(1));
        }
    }

    #[test]
    fn zero_norm_iff_zero_entry() {
        let z = cds(&[&[1, 2], &[0, 0], &[3, 3]]);
        assert_eq!(polyadic_norm(&z).unwrap().value_sq, Q::from(0));
        assert_eq!(quer_norm(&z).unwrap_err(), Error::NonInvertibleEntry { index: 2 });
    }

    #[test]
    fn dual_numbers_are_unnormed() {
        let z = ZMatrix::<DualNumber<Q>>::identity(4, ()).unwrap();
        assert_eq!(polyadic_norm(&z).unwrap_err(), Error::UnnormedAlgebra("dual".into()));
    }

    #[test]
    fn float_norm_and_triangle() {
        let c = |a: f64, b: f64| CdElement::new(1, vec![Float64(a), Float64(b)]).unwrap();
        let x = ZMatrix::new(vec![c(3.0, 4.0), c(0.0, 2.0)]).unwrap();
        let y = x.scale(&Float64(-0.5));
        assert_eq!(polyadic_norm(&x).unwrap().value(), Float64(10.0));
        assert!(triangle_holds(&x, &y).unwrap());
    }

    #[test]
    fn triangle_fails_for_higher_degree_norm() {
        // |2Z| = 2^(n-1) |Z| exceeds |Z| + |Z| once n > 2.
        let z = ZMatrix::new(vec![Float64(1.0), Float64(1.0)]).unwrap();
        assert!(!triangle_holds(&z, &z).unwrap());
    }
}

//! Ternary algebras of the imaginary tower.
//!
//! Each algebra is the imaginary half of the next Cayley-Dickson level:
//! multiples of `i1` in C, the span of `{j, k}` in H and the span of
//! `{e4, e5, e6, e7}` in O. None of them is closed under binary products, but
//! each is closed under the triple product. Octonion triples are multiplied
//! as the mean of the two association orders.

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypercomplex::{cd_mul, CdElement};
use crate::numeric::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct ImaginaryComplex<S> {
    pub b: S,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalfQuaternion<S> {
    pub c: S,
    pub d: S,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalfOctonion<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

/// Shared shape of the three algebras, used by generic property checks.
pub trait TernaryAlgebra: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    type Scalar: Field;
    const KIND: &'static str;

    fn ternary(x: &Self, y: &Self, z: &Self) -> Self;
    fn quer(&self) -> Result<Self>;
    fn norm_sq(&self) -> Self::Scalar;
    fn coords(&self) -> Vec<Self::Scalar>;
    fn from_coords(coords: &[Self::Scalar]) -> Result<Self>;
    /// Binary Cayley-Dickson product of the embedded elements.
    fn binary(x: &Self, y: &Self) -> CdElement<Self::Scalar>;

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let n = Self::dim();
        let coords: Vec<_> = (0..n).map(|_| Self::Scalar::sample(rng)).collect();
        Self::from_coords(&coords).expect("sampled coordinate count")
    }

    fn dim() -> usize;

    fn to_json(&self) -> Value {
        let names = ["a", "b", "c", "d"];
        let names = match Self::dim() {
            1 => &names[1..2],
            2 => &names[2..4],
            _ => &names[..],
        };
        let mut map = serde_json::Map::new();
        map.insert("kind".into(), json!(Self::KIND));
        for (k, v) in names.iter().zip(self.coords()) {
            map.insert((*k).into(), v.to_json());
        }
        Value::Object(map)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let names = match Self::dim() {
            1 => vec!["b"],
            2 => vec!["c", "d"],
            _ => vec!["a", "b", "c", "d"],
        };
        let coords = match v {
            Value::Object(map) => {
                if let Some(kind) = map.get("kind") {
                    if kind != Self::KIND {
                        return Err(Error::Malformed(format!("expected kind {:?}, got {kind}", Self::KIND)));
                    }
                }
                names
                    .iter()
                    .map(|k| {
                        map.get(*k)
                            .ok_or_else(|| Error::Malformed(format!("{} needs {k:?}", Self::KIND)))
                            .and_then(Self::Scalar::from_json)
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            Value::Array(items) => items.iter().map(Self::Scalar::from_json).collect::<Result<Vec<_>>>()?,
            other => return Err(Error::Malformed(format!("expected {}, got {other}", Self::KIND))),
        };
        Self::from_coords(&coords)
    }
}

fn dim_check<S>(coords: &[S], n: usize) -> Result<()> {
    if coords.len() != n {
        return Err(Error::DimMismatch { expected: n, found: coords.len() });
    }
    Ok(())
}

fn sum_sq<S: Field>(xs: &[&S]) -> S {
    xs.iter().fold(S::zero(), |acc, x| acc + x.square())
}

/// `-x / |x|^2`, shared by all three algebras.
fn negated_reciprocal<S: Field>(coords: &[S]) -> Result<Vec<S>> {
    let n = coords.iter().fold(S::zero(), |acc, x| acc + x.square());
    if n.is_zero() {
        return Err(Error::ZeroElement);
    }
    let k = -n.inv()?;
    Ok(coords.iter().map(|x| x.clone() * k.clone()).collect())
}

impl<S: Field> ImaginaryComplex<S> {
    pub fn new(b: S) -> Self {
        ImaginaryComplex { b }
    }

    pub fn embed(&self) -> CdElement<S> {
        CdElement::new(1, vec![S::zero(), self.b.clone()]).expect("level 1")
    }
}

/// `b = -b' b'' b'''`.
pub fn ternary_mul_c<S: Field>(
    x: &ImaginaryComplex<S>,
    y: &ImaginaryComplex<S>,
    z: &ImaginaryComplex<S>,
) -> ImaginaryComplex<S> {
    ImaginaryComplex { b: -(x.b.clone() * y.b.clone() * z.b.clone()) }
}

pub fn quer_c<S: Field>(x: &ImaginaryComplex<S>) -> Result<ImaginaryComplex<S>> {
    let v = negated_reciprocal(std::slice::from_ref(&x.b))?;
    Ok(ImaginaryComplex { b: v[0].clone() })
}

pub fn norm_sq_c<S: Field>(x: &ImaginaryComplex<S>) -> S {
    x.b.square()
}

impl<S: Field> TernaryAlgebra for ImaginaryComplex<S> {
    type Scalar = S;
    const KIND: &'static str = "imaginary_complex";

    fn ternary(x: &Self, y: &Self, z: &Self) -> Self {
        ternary_mul_c(x, y, z)
    }
    fn quer(&self) -> Result<Self> {
        quer_c(self)
    }
    fn norm_sq(&self) -> S {
        norm_sq_c(self)
    }
    fn coords(&self) -> Vec<S> {
        vec![self.b.clone()]
    }
    fn from_coords(coords: &[S]) -> Result<Self> {
        dim_check(coords, 1)?;
        Ok(ImaginaryComplex { b: coords[0].clone() })
    }
    fn binary(x: &Self, y: &Self) -> CdElement<S> {
        cd_mul(&x.embed(), &y.embed()).expect("same level")
    }
    fn dim() -> usize {
        1
    }
}

impl<S: Field> HalfQuaternion<S> {
    pub fn new(c: S, d: S) -> Self {
        HalfQuaternion { c, d }
    }

    pub fn from_ints(c: i64, d: i64) -> Self {
        HalfQuaternion { c: S::from_i64(c), d: S::from_i64(d) }
    }

    /// `c j + d k` as the quaternion `(0, 0, c, d)`.
    pub fn embed(&self) -> CdElement<S> {
        CdElement::new(2, vec![S::zero(), S::zero(), self.c.clone(), self.d.clone()]).expect("level 2")
    }

    /// Inverse of [`embed`](Self::embed); `None` off the `{j, k}` plane.
    pub fn restrict(q: &CdElement<S>) -> Option<Self> {
        let v = q.coeffs();
        (q.level() == 2 && v[0].is_zero() && v[1].is_zero())
            .then(|| HalfQuaternion { c: v[2].clone(), d: v[3].clone() })
    }
}

/// Triple product of the embedded quaternions.
pub fn ternary_mul_h<S: Field>(
    x: &HalfQuaternion<S>,
    y: &HalfQuaternion<S>,
    z: &HalfQuaternion<S>,
) -> HalfQuaternion<S> {
    let p = x.embed().mul(&y.embed()).and_then(|xy| xy.mul(&z.embed())).expect("same level");
    HalfQuaternion::restrict(&p).expect("triple products stay in the {j, k} plane")
}

/// Closed form of [`ternary_mul_h`].
pub fn ternary_mul_h_components<S: Field>(
    x: &HalfQuaternion<S>,
    y: &HalfQuaternion<S>,
    z: &HalfQuaternion<S>,
) -> HalfQuaternion<S> {
    let (c1, d1) = (x.c.clone(), x.d.clone());
    let (c2, d2) = (y.c.clone(), y.d.clone());
    let (c3, d3) = (z.c.clone(), z.d.clone());
    let c = d1.clone() * c2.clone() * d3.clone()
        - c1.clone() * d2.clone() * d3.clone()
        - d1.clone() * d2.clone() * c3.clone()
        - c1.clone() * c2.clone() * c3.clone();
    let d = c1.clone() * d2.clone() * c3.clone() - d1.clone() * c2.clone() * c3 - c1 * c2 * d3.clone() - d1 * d2 * d3;
    HalfQuaternion { c, d }
}

pub fn quer_h<S: Field>(x: &HalfQuaternion<S>) -> Result<HalfQuaternion<S>> {
    let v = negated_reciprocal(&[x.c.clone(), x.d.clone()])?;
    Ok(HalfQuaternion { c: v[0].clone(), d: v[1].clone() })
}

pub fn norm_sq_h<S: Field>(x: &HalfQuaternion<S>) -> S {
    sum_sq(&[&x.c, &x.d])
}

/// Both sides of the ternary two-squares identity: the sum of the squared
/// product components, and the product of the three sums of squares.
pub fn two_squares_identity<S: Field>(x: &HalfQuaternion<S>, y: &HalfQuaternion<S>, z: &HalfQuaternion<S>) -> (S, S) {
    let p = ternary_mul_h_components(x, y, z);
    let lhs = p.c.square() + p.d.square();
    let rhs = norm_sq_h(x) * norm_sq_h(y) * norm_sq_h(z);
    (lhs, rhs)
}

impl<S: Field> TernaryAlgebra for HalfQuaternion<S> {
    type Scalar = S;
    const KIND: &'static str = "half_quaternion";

    fn ternary(x: &Self, y: &Self, z: &Self) -> Self {
        ternary_mul_h(x, y, z)
    }
    fn quer(&self) -> Result<Self> {
        quer_h(self)
    }
    fn norm_sq(&self) -> S {
        norm_sq_h(self)
    }
    fn coords(&self) -> Vec<S> {
        vec![self.c.clone(), self.d.clone()]
    }
    fn from_coords(coords: &[S]) -> Result<Self> {
        dim_check(coords, 2)?;
        Ok(HalfQuaternion { c: coords[0].clone(), d: coords[1].clone() })
    }
    fn binary(x: &Self, y: &Self) -> CdElement<S> {
        cd_mul(&x.embed(), &y.embed()).expect("same level")
    }
    fn dim() -> usize {
        2
    }
}

impl<S: Field> HalfOctonion<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        HalfOctonion { a, b, c, d }
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        let [a, b, c, d] = v.map(S::from_i64);
        HalfOctonion { a, b, c, d }
    }

    /// `a e4 + b e5 + c e6 + d e7` as a level-3 element.
    pub fn embed(&self) -> CdElement<S> {
        let mut v = vec![S::zero(); 4];
        v.extend([self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]);
        CdElement::new(3, v).expect("level 3")
    }

    /// Inverse of [`embed`](Self::embed); `None` off `span{e4..e7}`.
    pub fn restrict(o: &CdElement<S>) -> Option<Self> {
        let v = o.coeffs();
        (o.level() == 3 && v[..4].iter().all(Field::is_zero)).then(|| HalfOctonion {
            a: v[4].clone(),
            b: v[5].clone(),
            c: v[6].clone(),
            d: v[7].clone(),
        })
    }

    fn parts(&self) -> [&S; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

/// Binary octonion product of two half-octonions; leaves `span{e4..e7}`.
pub fn binary_mul_o<S: Field>(x: &HalfOctonion<S>, y: &HalfOctonion<S>) -> CdElement<S> {
    cd_mul(&x.embed(), &y.embed()).expect("same level")
}

/// Mean of `(x y) z` and `x (y z)` in the octonions.
pub fn ternary_mul_o<S: Field>(x: &HalfOctonion<S>, y: &HalfOctonion<S>, z: &HalfOctonion<S>) -> HalfOctonion<S> {
    let (ex, ey, ez) = (x.embed(), y.embed(), z.embed());
    let left = cd_mul(&cd_mul(&ex, &ey).expect("level 3"), &ez).expect("level 3");
    let right = cd_mul(&ex, &cd_mul(&ey, &ez).expect("level 3")).expect("level 3");
    let mean = left.add(&right).expect("level 3").scale(&S::from_ratio(1, 2));
    HalfOctonion::restrict(&mean).expect("triple products stay in span{e4..e7}")
}

/// Closed form of [`ternary_mul_o`]. For each coordinate `u`:
/// `u''(x'.x''' - u'u''') - u'''(x'.x'' - u'u'') - u'(x''.x''' - u''u''') - u'u''u'''`.
pub fn ternary_mul_o_components<S: Field>(
    x: &HalfOctonion<S>,
    y: &HalfOctonion<S>,
    z: &HalfOctonion<S>,
) -> HalfOctonion<S> {
    let (px, py, pz) = (x.parts(), y.parts(), z.parts());
    let dot_without = |p: &[&S; 4], q: &[&S; 4], skip: usize| {
        (0..4).filter(|&k| k != skip).fold(S::zero(), |acc, k| acc + p[k].clone() * q[k].clone())
    };
    let coord = |u: usize| {
        let (u1, u2, u3) = (px[u].clone(), py[u].clone(), pz[u].clone());
        u2.clone() * dot_without(&px, &pz, u)
            - u3.clone() * dot_without(&px, &py, u)
            - u1.clone() * dot_without(&py, &pz, u)
            - u1 * u2 * u3
    };
    HalfOctonion { a: coord(0), b: coord(1), c: coord(2), d: coord(3) }
}

pub fn quer_o<S: Field>(x: &HalfOctonion<S>) -> Result<HalfOctonion<S>> {
    let v = negated_reciprocal(&x.parts().map(Clone::clone))?;
    HalfOctonion::from_coords(&v)
}

pub fn norm_sq_o<S: Field>(x: &HalfOctonion<S>) -> S {
    sum_sq(&x.parts())
}

impl<S: Field> TernaryAlgebra for HalfOctonion<S> {
    type Scalar = S;
    const KIND: &'static str = "half_octonion";

    fn ternary(x: &Self, y: &Self, z: &Self) -> Self {
        ternary_mul_o(x, y, z)
    }
    fn quer(&self) -> Result<Self> {
        quer_o(self)
    }
    fn norm_sq(&self) -> S {
        norm_sq_o(self)
    }
    fn coords(&self) -> Vec<S> {
        self.parts().map(Clone::clone).to_vec()
    }
    fn from_coords(coords: &[S]) -> Result<Self> {
        dim_check(coords, 4)?;
        Ok(HalfOctonion { a: coords[0].clone(), b: coords[1].clone(), c: coords[2].clone(), d: coords[3].clone() })
    }
    fn binary(x: &Self, y: &Self) -> CdElement<S> {
        binary_mul_o(x, y)
    }
    fn dim() -> usize {
        4
    }
}

/// Nestings of a ternary product over five factors, inner product at
/// positions 0, 1 and 2.
pub fn ternary_nestings<T: TernaryAlgebra>(f: &[T; 5]) -> [T; 3] {
    let m = T::ternary;
    [
        m(&m(&f[0], &f[1], &f[2]), &f[3], &f[4]),
        m(&f[0], &m(&f[1], &f[2], &f[3]), &f[4]),
        m(&f[0], &f[1], &m(&f[2], &f[3], &f[4])),
    ]
}

/// `mu[x, x, w]` with `w` moved to the given 0-based slot.
pub fn ternary_at<T: TernaryAlgebra>(x: &T, w: &T, slot: usize) -> T {
    match slot {
        0 => T::ternary(w, x, x),
        1 => T::ternary(x, w, x),
        _ => T::ternary(x, x, w),
    }
}

/// Searches `candidates` for a left-right unit: `mu[x, e, e] = x` and
/// `mu[e, e, x] = x` for every probe `x`.
pub fn find_unit<T: TernaryAlgebra>(candidates: &[T], probes: &[T]) -> Option<T> {
    candidates.iter().find(|e| probes.iter().all(|x| T::ternary(x, e, e) == *x && T::ternary(e, e, x) == *x)).cloned()
}

/// Every coordinate vector with entries in `lo..=hi`.
pub fn grid<T: TernaryAlgebra>(lo: i64, hi: i64) -> Vec<T> {
    let n = T::dim();
    let width = (hi - lo + 1) as usize;
    (0..width.pow(n as u32))
        .map(|code| {
            let coords: Vec<T::Scalar> =
                (0..n).map(|k| T::Scalar::from_i64(lo + (code / width.pow(k as u32) % width) as i64)).collect();
            T::from_coords(&coords).expect("grid dimension")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    type Q = Rational;

    fn h(c: i64, d: i64) -> HalfQuaternion<Q> {
        HalfQuaternion::from_ints(c, d)
    }

    fn o(v: [i64; 4]) -> HalfOctonion<Q> {
        HalfOctonion::from_ints(v)
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d).unwrap()
    }

    #[test]
    fn imaginary_complexes() {
        let c = |b: i64| ImaginaryComplex::new(Q::from(b));
        assert_eq!(ternary_mul_c(&c(1), &c(1), &c(1)), c(-1));
        assert_eq!(ternary_mul_c(&c(2), &c(3), &c(4)), c(-24));
        assert_eq!(quer_c(&c(2)).unwrap().b, q(-1, 2));
        assert_eq!(quer_c(&c(0)).unwrap_err(), Error::ZeroElement);
        let (x, y, z) = (c(2), c(-3), c(5));
        let p = x.embed().mul(&y.embed()).unwrap().mul(&z.embed()).unwrap();
        assert_eq!(p.coeffs(), &[Q::from(0), ternary_mul_c(&x, &y, &z).b]);
    }

    #[test]
    fn half_quaternion_products() {
        let (j, k) = (h(1, 0), h(0, 1));
        assert_eq!(ternary_mul_h(&j, &j, &j), h(-1, 0));
        assert_eq!(ternary_mul_h(&j, &j, &k), h(0, -1));
        let (x, y, z) = (h(2, -3), h(5, 1), h(-4, 7));
        assert_eq!(ternary_mul_h(&x, &y, &z), ternary_mul_h_components(&x, &y, &z));
    }

    #[test]
    fn half_quaternion_printed_formula_differs() {
        // As typeset, the last term of the c component repeats c'.
        let printed_c = |x: &HalfQuaternion<Q>, y: &HalfQuaternion<Q>, z: &HalfQuaternion<Q>| {
            x.d.clone() * y.c.clone() * z.d.clone()
                - x.c.clone() * y.d.clone() * z.d.clone()
                - x.d.clone() * y.d.clone() * z.c.clone()
                - x.c.clone() * x.c.clone() * z.c.clone()
        };
        let (x, y, z) = (h(2, 0), h(3, 0), h(1, 0));
        assert_eq!(ternary_mul_h(&x, &y, &z).c, Q::from(-6));
        assert_eq!(printed_c(&x, &y, &z), Q::from(-4));
    }

    #[test]
    fn half_quaternion_querelements() {
        assert_eq!(quer_h(&h(1, 0)).unwrap(), h(-1, 0));
        assert_eq!(quer_h(&h(3, 4)).unwrap(), HalfQuaternion::new(q(-3, 25), q(-4, 25)));
        assert_eq!(quer_h(&h(0, 0)).unwrap_err(), Error::ZeroElement);
        let x = h(3, 4);
        let xq = quer_h(&x).unwrap();
        for slot in 0..3 {
            assert_eq!(ternary_at(&x, &xq, slot), x);
        }
    }

    #[test]
    fn half_quaternion_norms() {
        assert_eq!(norm_sq_h(&h(3, 4)), Q::from(25));
        assert_eq!(norm_sq_h(&h(0, 0)), Q::from(0));
        assert_eq!(two_squares_identity(&h(1, 0), &h(1, 0), &h(1, 0)), (Q::from(1), Q::from(1)));
        assert_eq!(two_squares_identity(&h(1, 1), &h(1, 0), &h(0, 1)), (Q::from(2), Q::from(2)));
    }

    #[test]
    fn half_octonion_products() {
        let e4 = o([1, 0, 0, 0]);
        assert_eq!(ternary_mul_o(&e4, &e4, &e4), o([-1, 0, 0, 0]));
        let (x, y, z) = (o([1, -2, 3, 0]), o([2, 1, -1, 4]), o([0, 3, 5, -2]));
        assert_eq!(ternary_mul_o(&x, &y, &z), ternary_mul_o_components(&x, &y, &z));
    }

    #[test]
    fn half_octonion_printed_formula_differs() {
        // As typeset, the a' term of the e4 component carries a plus sign.
        let (x, y, z) = (o([1, 1, 0, 0]), o([0, 1, 0, 0]), o([0, 1, 0, 0]));
        let printed_a = y.a.clone() * (x.b.clone() * z.b.clone()) - z.a.clone() * (x.b.clone() * y.b.clone())
            + x.a.clone() * (y.b.clone() * z.b.clone())
            - x.a.clone() * y.a.clone() * z.a.clone();
        assert_eq!(printed_a, Q::from(1));
        assert_eq!(ternary_mul_o(&x, &y, &z).a, Q::from(-1));
    }

    #[test]
    fn half_octonion_querelements() {
        assert_eq!(quer_o(&o([1, 0, 0, 0])).unwrap(), o([-1, 0, 0, 0]));
        let x = o([1, 1, 1, 1]);
        let xq = quer_o(&x).unwrap();
        assert_eq!(xq, HalfOctonion::new(q(-1, 4), q(-1, 4), q(-1, 4), q(-1, 4)));
        for slot in 0..3 {
            assert_eq!(ternary_at(&x, &xq, slot), x);
        }
        assert_eq!(quer_o(&o([0, 0, 0, 0])).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn binary_products_escape() {
        let p = binary_mul_o(&o([1, 0, 0, 0]), &o([0, 1, 0, 0]));
        assert!(HalfOctonion::restrict(&p).is_none());
        assert!(HalfQuaternion::restrict(&HalfQuaternion::binary(&h(1, 0), &h(0, 1))).is_none());
    }

    #[test]
    fn half_octonion_associativity_witness() {
        let f = [o([1, 0, 0, 0]), o([0, 1, 0, 0]), o([1, 0, 0, 0]), o([0, 1, 0, 0]), o([0, 0, 1, 0])];
        let [left, middle, right] = ternary_nestings(&f);
        assert_eq!(left, o([0, 0, -1, 0]));
        assert_eq!(middle, o([0, 0, -1, 0]));
        assert_eq!(right, o([0, 0, 0, 0]));
    }

    #[test]
    fn unitless_on_small_grid() {
        let probes = grid::<HalfQuaternion<Q>>(-1, 1);
        assert_eq!(find_unit(&grid::<HalfQuaternion<Q>>(-2, 2), &probes), None);
        let probes = grid::<ImaginaryComplex<Q>>(-2, 2);
        assert_eq!(find_unit(&probes, &probes), None);
    }

    #[test]
    fn json_round_trip() {
        let x = o([1, -2, 3, 4]);
        assert_eq!(HalfOctonion::from_json(&x.to_json()).unwrap(), x);
        let y = h(5, -1);
        assert_eq!(y.to_json()["kind"], "half_quaternion");
        assert_eq!(HalfQuaternion::from_json(&y.to_json()).unwrap(), y);
        assert!(HalfQuaternion::<Q>::from_json(&x.to_json()).is_err());
    }
}

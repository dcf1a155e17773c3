//! Seeded property suites.
//!
//! Case `i` of a run draws from a ChaCha stream keyed by `(seed, i)`, so a
//! report depends only on the suite, mode, seed and case count. Cases run in
//! parallel; failures are reported in case order with an input that the CLI
//! accepts as-is.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypercomplex::{cd_mul, cd_norm_sq, CdElement, Coefficient, DualNumber, Real};
use crate::imaginary::{
    self, ternary_at, ternary_nestings, HalfOctonion, HalfQuaternion, ImaginaryComplex, TernaryAlgebra,
};
use crate::norms::{polyadic_norm, quer_norm, triangle_holds};
use crate::numeric::{Field, Float64, Mode, Rational};
use crate::polyadization::{
    dense_chain, mul_with_at, nary_mul, nary_mul_dense, nary_mul_refs, polyadic_power, querelement, ZMatrix,
};
use crate::tower::{build_shape, tower_dimension, TowerSpec};
use crate::vectoralg::{
    poly_product, poly_product_refs, product_at, quervector, reduced_vectorization, shift_matrix, PolyVector,
};
use crate::wire::{vector_to_json, zmatrix_to_json};

pub const DEFAULT_CASES: usize = 500;

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub case: usize,
    pub input: Value,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: String,
    pub mode: Mode,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "mode": self.mode.name(),
            "seed": self.seed,
            "cases": self.cases,
            "failures": self.failures.iter().map(|f| json!({
                "case": f.case,
                "input": f.input,
                "detail": f.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
    /// Suites that only make sense in one mode ignore the requested one.
    pub fixed_mode: Option<Mode>,
}

const fn suite(name: &'static str, description: &'static str) -> SuiteInfo {
    SuiteInfo { name, description, fixed_mode: None }
}

pub const SUITES: &[SuiteInfo] = &[
    suite("field-axioms", "scalar associativity and distributivity"),
    suite("cd-associativity", "Cayley-Dickson products associate at levels 0-2"),
    suite("cd-commutativity", "Cayley-Dickson products commute at levels 0-1"),
    suite("hurwitz", "norm-squared multiplicativity at Cayley-Dickson levels 0-3"),
    suite("nary-oracle", "cyclic n-ary product equals the dense matrix chain (n=3..5, R/C/H/dual)"),
    suite("unit-placement", "the polyadic unit fixes Z in every slot"),
    suite("querelement-placement", "matrix querelement satisfies its defining equation in every slot"),
    suite("power-oracle", "polyadic powers equal dense chain products"),
    suite("zmatrix-associativity", "total associativity of the n-ary matrix product (n=3,4)"),
    suite("norm-multiplicativity", "polyadic norm is n-ary multiplicative"),
    suite("norm-scaling", "|lambda Z|^2 = |lambda|^(2(n-1)) |Z|^2"),
    suite("quer-norm", "|Z~|^2 = 1 / (|Z|^2)^(n-2), and matches the norm of the querelement"),
    SuiteInfo {
        name: "norm-triangle",
        description: "triangle inequality for the polyadic norm (float only)",
        fixed_mode: Some(Mode::Float),
    },
    suite("vector-oracle", "vector product equals the reduced dense shift-matrix chain (m=2..5)"),
    suite("quervector-placement", "quervector satisfies its defining equation in every slot"),
    suite("vector-associativity", "total associativity of the 4-ary vector product"),
    suite("vector-multilinearity", "additivity in each slot and compatibility with scalars"),
    suite("tower-shapes", "random towers are monomial, sized and composable"),
    suite("imaginary-complex-norm", "ternary multiplicativity of the imaginary-complex norm"),
    suite("half-quaternion-closure", "triple products of {j, k} elements stay in the plane"),
    suite("half-quaternion-components", "closed-form half-quaternion product equals the embedding"),
    suite("half-quaternion-associativity", "ternary total associativity of half-quaternions"),
    suite("half-quaternion-quer", "half-quaternion querelement in every slot"),
    suite("half-quaternion-norm", "ternary multiplicativity of the half-quaternion norm"),
    suite("two-squares", "ternary two-squares identity"),
    suite("half-octonion-components", "closed-form half-octonion product equals the averaged embedding"),
    suite("half-octonion-associativity", "ternary total associativity of half-octonions"),
    suite("half-octonion-quer", "half-octonion querelement in every slot"),
    suite("half-octonion-norm", "ternary multiplicativity of the half-octonion norm (measured)"),
];

pub fn suite_info(name: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name)
}

type CaseResult = std::result::Result<(), (Value, String)>;
type Check = fn(&mut ChaCha8Rng) -> CaseResult;

fn check_for<S: Real>(name: &str) -> Option<Check> {
    let f: Check = match name {
        "field-axioms" => field_axioms::<S>,
        "cd-associativity" => cd_associativity::<S>,
        "cd-commutativity" => cd_commutativity::<S>,
        "hurwitz" => hurwitz::<S>,
        "nary-oracle" => nary_oracle::<S>,
        "unit-placement" => unit_placement::<S>,
        "querelement-placement" => querelement_placement::<S>,
        "power-oracle" => power_oracle::<S>,
        "zmatrix-associativity" => zmatrix_associativity::<S>,
        "norm-multiplicativity" => norm_multiplicativity::<S>,
        "norm-scaling" => norm_scaling::<S>,
        "quer-norm" => quer_norm_law::<S>,
        "norm-triangle" => norm_triangle,
        "vector-oracle" => vector_oracle::<S>,
        "quervector-placement" => quervector_placement::<S>,
        "vector-associativity" => vector_associativity::<S>,
        "vector-multilinearity" => vector_multilinearity::<S>,
        "tower-shapes" => tower_shapes,
        "imaginary-complex-norm" => ternary_norm::<ImaginaryComplex<S>>,
        "half-quaternion-closure" => half_quaternion_closure::<S>,
        "half-quaternion-components" => half_quaternion_components::<S>,
        "half-quaternion-associativity" => ternary_associativity::<HalfQuaternion<S>>,
        "half-quaternion-quer" => ternary_quer::<HalfQuaternion<S>>,
        "half-quaternion-norm" => ternary_norm::<HalfQuaternion<S>>,
        "two-squares" => two_squares::<S>,
        "half-octonion-components" => half_octonion_components::<S>,
        "half-octonion-associativity" => ternary_associativity::<HalfOctonion<S>>,
        "half-octonion-quer" => ternary_quer::<HalfOctonion<S>>,
        "half-octonion-norm" => ternary_norm::<HalfOctonion<S>>,
        _ => return None,
    };
    Some(f)
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

/// Runs `cases` cases of the named suite.
pub fn run_suite(name: &str, mode: Mode, seed: u64, cases: usize) -> Result<Report> {
    let info = suite_info(name).ok_or_else(|| Error::Malformed(format!("unknown suite {name:?}")))?;
    let mode = info.fixed_mode.unwrap_or(mode);
    let check = match mode {
        Mode::Rational => check_for::<Rational>(name),
        Mode::Float => check_for::<Float64>(name),
    }
    .expect("every listed suite has a check");
    let mut failures: Vec<Failure> = (0..cases)
        .into_par_iter()
        .filter_map(|case| {
            check(&mut case_rng(seed, case)).err().map(|(input, detail)| Failure { case, input, detail })
        })
        .collect();
    failures.sort_by_key(|f| f.case);
    Ok(Report { suite: name.to_string(), mode, seed, cases, failures })
}

fn ensure(ok: bool, input: impl FnOnce() -> Value, detail: impl FnOnce() -> String) -> CaseResult {
    if ok {
        Ok(())
    } else {
        Err((input(), detail()))
    }
}

fn random_vec<S: Field>(rng: &mut ChaCha8Rng, n: usize) -> Vec<S> {
    (0..n).map(|_| S::sample(rng)).collect()
}

fn random_cd<S: Field>(rng: &mut ChaCha8Rng, level: u32) -> CdElement<S> {
    <CdElement<S> as Coefficient>::sample(level, rng)
}

fn random_matrix<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, arity: usize) -> ZMatrix<A> {
    ZMatrix::new((0..arity - 1).map(|_| A::sample(kind, rng)).collect()).expect("valid arity")
}

fn random_invertible<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, arity: usize) -> ZMatrix<A> {
    loop {
        let z = random_matrix::<A>(rng, kind, arity);
        if z.is_invertible() {
            return z;
        }
    }
}

fn matrices_json<A: Coefficient>(zs: &[ZMatrix<A>]) -> Value {
    let first = &zs[0];
    json!({
        "arity": first.arity(),
        "algebra": first.algebra_name(),
        "factors": zs.iter().map(zmatrix_to_json).collect::<Vec<_>>(),
    })
}

fn cds_json<S: Field>(xs: &[&CdElement<S>]) -> Value {
    json!({ "factors": xs.iter().map(|x| x.to_json()).collect::<Vec<_>>() })
}

/// Calls `$f::<A>(rng, kind, args..)` for a randomly chosen associative
/// coefficient algebra `A`: R, dual, C or H.
macro_rules! with_random_algebra {
    ($rng:expr, $S:ty, $f:ident $(, $arg:expr)*) => {{
        match $rng.gen_range(0..4) {
            0 => $f::<$S>($rng, () $(, $arg)*),
            1 => $f::<DualNumber<$S>>($rng, () $(, $arg)*),
            2 => $f::<CdElement<$S>>($rng, 1 $(, $arg)*),
            _ => $f::<CdElement<$S>>($rng, 2 $(, $arg)*),
        }
    }};
}

/// As [`with_random_algebra`], restricted to the normed algebras R, C and H.
macro_rules! with_random_normed {
    ($rng:expr, $S:ty, $f:ident $(, $arg:expr)*) => {{
        match $rng.gen_range(0..3) {
            0 => $f::<$S>($rng, () $(, $arg)*),
            1 => $f::<CdElement<$S>>($rng, 1 $(, $arg)*),
            _ => $f::<CdElement<$S>>($rng, 2 $(, $arg)*),
        }
    }};
}

fn field_axioms<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let v = random_vec::<S>(rng, 3);
    let (a, b, c) = (v[0].clone(), v[1].clone(), v[2].clone());
    let assoc = (a.clone() * b.clone()) * c.clone() == a.clone() * (b.clone() * c.clone());
    let distrib = a.clone() * (b.clone() + c.clone()) == a.clone() * b.clone() + a.clone() * c.clone();
    ensure(
        assoc && distrib,
        || json!([Field::to_json(&a), Field::to_json(&b), Field::to_json(&c)]),
        || format!("associative: {assoc}, distributive: {distrib}"),
    )
}

fn cd_associativity<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let level = rng.gen_range(0..=2);
    let (x, y, z) = (random_cd::<S>(rng, level), random_cd(rng, level), random_cd(rng, level));
    let left = cd_mul(&cd_mul(&x, &y).unwrap(), &z).unwrap();
    let right = cd_mul(&x, &cd_mul(&y, &z).unwrap()).unwrap();
    ensure(left == right, || cds_json(&[&x, &y, &z]), || format!("(xy)z = {left:?}, x(yz) = {right:?}"))
}

fn cd_commutativity<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let level = rng.gen_range(0..=1);
    let (x, y) = (random_cd::<S>(rng, level), random_cd(rng, level));
    let (xy, yx) = (cd_mul(&x, &y).unwrap(), cd_mul(&y, &x).unwrap());
    ensure(xy == yx, || cds_json(&[&x, &y]), || format!("xy = {xy:?}, yx = {yx:?}"))
}

fn hurwitz<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let level = rng.gen_range(0..=3);
    let (x, y) = (random_cd::<S>(rng, level), random_cd(rng, level));
    let lhs = cd_norm_sq(&cd_mul(&x, &y).unwrap());
    let rhs = cd_norm_sq(&x) * cd_norm_sq(&y);
    ensure(lhs == rhs, || cds_json(&[&x, &y]), || format!("|xy|^2 = {lhs}, |x|^2 |y|^2 = {rhs}"))
}

fn nary_oracle<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=5);
    with_random_algebra!(rng, S, nary_oracle_in, n)
}

fn nary_oracle_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let f: Vec<ZMatrix<A>> = (0..n).map(|_| random_matrix::<A>(rng, kind, n)).collect();
    let fast = nary_mul(&f).unwrap();
    let dense = nary_mul_dense(&f).unwrap();
    ensure(fast == dense, || matrices_json(&f), || format!("cyclic {fast:?} vs dense {dense:?}"))
}

fn unit_placement<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=6);
    with_random_algebra!(rng, S, unit_placement_in, n)
}

fn unit_placement_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let z = random_matrix::<A>(rng, kind, n);
    let e = ZMatrix::<A>::identity(n, kind).unwrap();
    let bad = (0..n).find(|&slot| mul_with_at(&e, &z, slot).unwrap() != z);
    ensure(
        bad.is_none(),
        || matrices_json(std::slice::from_ref(&z)),
        || format!("slot {} moves Z", bad.unwrap_or(0) + 1),
    )
}

fn querelement_placement<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=5);
    with_random_algebra!(rng, S, querelement_placement_in, n)
}

fn querelement_placement_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let z = random_invertible::<A>(rng, kind, n);
    let zq = querelement(&z).unwrap();
    let bad = (0..n).find(|&slot| mul_with_at(&z, &zq, slot).unwrap() != z);
    ensure(
        bad.is_none(),
        || matrices_json(std::slice::from_ref(&z)),
        || format!("querelement {zq:?} fails in slot {}", bad.unwrap_or(0) + 1),
    )
}

fn power_oracle<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=4);
    let ell = rng.gen_range(1..=3);
    with_random_algebra!(rng, S, power_oracle_in, n, ell)
}

fn power_oracle_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize, ell: usize) -> CaseResult {
    let z = random_matrix::<A>(rng, kind, n);
    let p = polyadic_power(&z, ell);
    let copies = vec![z.to_dense(); ell * (n - 1) + 1];
    let dense = ZMatrix::from_dense(&dense_chain(&copies).unwrap()).unwrap();
    ensure(
        p == dense,
        || json!({ "ell": ell, "matrix": zmatrix_to_json(&z) }),
        || format!("power {p:?} vs dense {dense:?}"),
    )
}

/// All placements of the inner product in a doubly nested n-ary product.
fn nestings<T: Clone>(f: &[T], n: usize, mul: impl Fn(&[&T]) -> T) -> Vec<T> {
    (0..n)
        .map(|p| {
            let inner = mul(&f[p..p + n].iter().collect::<Vec<_>>());
            let mut outer: Vec<&T> = f[..p].iter().collect();
            outer.push(&inner);
            outer.extend(&f[p + n..]);
            mul(&outer)
        })
        .collect()
}

fn zmatrix_associativity<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=4);
    with_random_algebra!(rng, S, zmatrix_associativity_in, n)
}

fn zmatrix_associativity_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let f: Vec<ZMatrix<A>> = (0..2 * n - 1).map(|_| random_matrix::<A>(rng, kind, n)).collect();
    let all = nestings(&f, n, |args| nary_mul_refs(args).unwrap());
    let bad = all.iter().position(|r| *r != all[0]);
    ensure(
        bad.is_none(),
        || matrices_json(&f),
        || {
            let p = bad.unwrap_or(0);
            format!("placement 1 gives {:?}, placement {} gives {:?}", all[0], p + 1, all[p])
        },
    )
}

fn norm_multiplicativity<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=5);
    with_random_normed!(rng, S, norm_multiplicativity_in, n)
}

fn norm_multiplicativity_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let f: Vec<ZMatrix<A>> = (0..n).map(|_| random_matrix::<A>(rng, kind, n)).collect();
    let lhs = polyadic_norm(&nary_mul(&f).unwrap()).unwrap().value_sq;
    let rhs = f.iter().fold(A::Scalar::one(), |acc, z| acc * polyadic_norm(z).unwrap().value_sq);
    ensure(lhs == rhs, || matrices_json(&f), || format!("|mu|^2 = {lhs}, product = {rhs}"))
}

fn norm_scaling<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=5);
    with_random_normed!(rng, S, norm_scaling_in, n)
}

fn norm_scaling_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let lambda = A::Scalar::sample(rng);
    let z = random_matrix::<A>(rng, kind, n);
    let lhs = polyadic_norm(&z.scale(&lambda)).unwrap().value_sq;
    let rhs = lambda.pow(2 * (n as u32 - 1)) * polyadic_norm(&z).unwrap().value_sq;
    ensure(
        lhs == rhs,
        || json!({ "lambda": lambda.to_json(), "matrix": zmatrix_to_json(&z) }),
        || format!("|lambda Z|^2 = {lhs}, |lambda|^(2(n-1)) |Z|^2 = {rhs}"),
    )
}

fn quer_norm_law<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=5);
    with_random_normed!(rng, S, quer_norm_in, n)
}

fn quer_norm_in<A: Coefficient>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let z = random_invertible::<A>(rng, kind, n);
    let closed = quer_norm(&z).unwrap().value_sq;
    let direct = polyadic_norm(&querelement(&z).unwrap()).unwrap().value_sq;
    let law = polyadic_norm(&z).unwrap().value_sq.pow(n as u32 - 2).inv().unwrap();
    ensure(
        closed == direct && closed == law,
        || matrices_json(std::slice::from_ref(&z)),
        || format!("closed form {closed}, norm of querelement {direct}, 1/|Z|^(2(n-2)) {law}"),
    )
}

fn norm_triangle(rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(3..=5);
    with_random_normed!(rng, Float64, norm_triangle_in, n)
}

fn norm_triangle_in<A: Coefficient<Scalar = Float64>>(rng: &mut ChaCha8Rng, kind: A::Kind, n: usize) -> CaseResult {
    let x = random_matrix::<A>(rng, kind, n);
    let y = random_matrix::<A>(rng, kind, n);
    let sum = polyadic_norm(&x.add(&y).unwrap()).unwrap().value();
    let parts = polyadic_norm(&x).unwrap().value() + polyadic_norm(&y).unwrap().value();
    ensure(
        triangle_holds(&x, &y).unwrap(),
        || matrices_json(&[x.clone(), y.clone()]),
        || format!("|Z' + Z''| = {sum} > |Z'| + |Z''| = {parts}"),
    )
}

fn random_vector<S: Field>(rng: &mut ChaCha8Rng, m: usize) -> PolyVector<S> {
    PolyVector::new(random_vec(rng, m)).expect("m >= 2")
}

fn vectors_json<S: Field>(vs: &[PolyVector<S>]) -> Value {
    json!({ "factors": vs.iter().map(vector_to_json).collect::<Vec<_>>() })
}

fn vector_oracle<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let m = rng.gen_range(2..=5);
    let f: Vec<PolyVector<S>> = (0..=m).map(|_| random_vector(rng, m)).collect();
    let direct = poly_product(&f).unwrap();
    let dense: Vec<_> = f.iter().map(shift_matrix).collect();
    let via = reduced_vectorization(&dense_chain(&dense).unwrap()).unwrap();
    ensure(direct == via, || vectors_json(&f), || format!("product {direct:?} vs matrices {via:?}"))
}

fn quervector_placement<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let m = rng.gen_range(2..=5);
    let v = loop {
        let v = random_vector::<S>(rng, m);
        if v.coords().iter().all(|x| !Field::is_zero(x)) {
            break v;
        }
    };
    let q = quervector(&v).unwrap();
    let bad = (0..=m).find(|&slot| product_at(&v, &q, slot).unwrap() != v);
    ensure(bad.is_none(), || vector_to_json(&v), || format!("quervector {q:?} fails in slot {}", bad.unwrap_or(0) + 1))
}

fn vector_associativity<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let m = 3;
    let f: Vec<PolyVector<S>> = (0..2 * m + 1).map(|_| random_vector(rng, m)).collect();
    let all = nestings(&f, m + 1, |args| poly_product_refs(args).unwrap());
    let bad = all.iter().position(|r| *r != all[0]);
    ensure(bad.is_none(), || vectors_json(&f), || format!("placements disagree: {all:?}"))
}

fn vector_multilinearity<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let m = rng.gen_range(2..=5);
    let f: Vec<PolyVector<S>> = (0..=m).map(|_| random_vector(rng, m)).collect();
    let extra = random_vector::<S>(rng, m);
    let slot = rng.gen_range(0..=m);
    let with = |v: PolyVector<S>| {
        let mut g = f.clone();
        g[slot] = v;
        poly_product(&g).unwrap()
    };
    let additive = with(f[slot].add(&extra).unwrap()) == poly_product(&f).unwrap().add(&with(extra.clone())).unwrap();
    let lambdas = random_vec::<S>(rng, m + 1);
    let scaled: Vec<_> = f.iter().zip(&lambdas).map(|(v, l)| v.scale(l)).collect();
    let factor = lambdas.iter().fold(S::one(), |acc, l| acc * l.clone());
    let homogeneous = poly_product(&scaled).unwrap() == poly_product(&f).unwrap().scale(&factor);
    ensure(
        additive && homogeneous,
        || vectors_json(&f),
        || format!("additive in slot {}: {additive}, scalar compatible: {homogeneous}", slot + 1),
    )
}

fn tower_shapes(rng: &mut ChaCha8Rng) -> CaseResult {
    let len = rng.gen_range(1..=3);
    let stages: Vec<usize> = (0..len).map(|_| rng.gen_range(3..=6)).collect();
    let spec = TowerSpec::new(stages.clone()).unwrap();
    let shape = build_shape(&spec);
    let size_ok = shape.size() == spec.size() && shape.pattern().len() == spec.size();
    let dim_ok = tower_dimension(&spec) == (1 << spec.level()) * shape.size();
    let composed = match stages.split_last() {
        Some((last, init)) if !init.is_empty() => {
            build_shape(&TowerSpec::new(init.to_vec()).unwrap()).embed(last - 1) == shape
        }
        _ => true,
    };
    ensure(
        size_ok && dim_ok && shape.is_monomial() && composed,
        || json!({ "arities": stages }),
        || format!("size {size_ok}, dimension {dim_ok}, monomial {}, composition {composed}", shape.is_monomial()),
    )
}

fn ternary_json<T: TernaryAlgebra>(xs: &[T]) -> Value {
    json!({ "kind": T::KIND, "factors": xs.iter().map(TernaryAlgebra::to_json).collect::<Vec<_>>() })
}

fn ternary_associativity<T: TernaryAlgebra>(rng: &mut ChaCha8Rng) -> CaseResult {
    let f: [T; 5] = std::array::from_fn(|_| T::sample(rng));
    let [left, middle, right] = ternary_nestings(&f);
    ensure(
        left == middle && middle == right,
        || ternary_json(&f),
        || format!("nestings give {left:?}, {middle:?}, {right:?}"),
    )
}

fn ternary_quer<T: TernaryAlgebra>(rng: &mut ChaCha8Rng) -> CaseResult {
    let x = loop {
        let x = T::sample(rng);
        if !x.norm_sq().is_zero() {
            break x;
        }
    };
    let q = x.quer().unwrap();
    let bad = (0..3).find(|&slot| ternary_at(&x, &q, slot) != x);
    ensure(
        bad.is_none(),
        || ternary_json(std::slice::from_ref(&x)),
        || format!("querelement {q:?} fails in slot {}", bad.unwrap_or(0) + 1),
    )
}

fn ternary_norm<T: TernaryAlgebra>(rng: &mut ChaCha8Rng) -> CaseResult {
    let f: [T; 3] = std::array::from_fn(|_| T::sample(rng));
    let lhs = T::ternary(&f[0], &f[1], &f[2]).norm_sq();
    let rhs = f[0].norm_sq() * f[1].norm_sq() * f[2].norm_sq();
    ensure(lhs == rhs, || ternary_json(&f), || format!("|mu|^2 = {lhs}, product = {rhs}"))
}

fn half_quaternion_closure<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let f: [HalfQuaternion<S>; 3] = std::array::from_fn(|_| HalfQuaternion::sample(rng));
    let p = cd_mul(&cd_mul(&f[0].embed(), &f[1].embed()).unwrap(), &f[2].embed()).unwrap();
    ensure(
        HalfQuaternion::restrict(&p).is_some(),
        || ternary_json(&f),
        || format!("triple product {p:?} leaves the plane"),
    )
}

fn half_quaternion_components<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let f: [HalfQuaternion<S>; 3] = std::array::from_fn(|_| HalfQuaternion::sample(rng));
    let embedded = imaginary::ternary_mul_h(&f[0], &f[1], &f[2]);
    let closed = imaginary::ternary_mul_h_components(&f[0], &f[1], &f[2]);
    ensure(embedded == closed, || ternary_json(&f), || format!("embedding {embedded:?}, closed form {closed:?}"))
}

fn two_squares<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let f: [HalfQuaternion<S>; 3] = std::array::from_fn(|_| HalfQuaternion::sample(rng));
    let (lhs, rhs) = imaginary::two_squares_identity(&f[0], &f[1], &f[2]);
    ensure(lhs == rhs, || ternary_json(&f), || format!("sum of squares {lhs}, product {rhs}"))
}

fn half_octonion_components<S: Real>(rng: &mut ChaCha8Rng) -> CaseResult {
    let f: [HalfOctonion<S>; 3] = std::array::from_fn(|_| HalfOctonion::sample(rng));
    let averaged = imaginary::ternary_mul_o(&f[0], &f[1], &f[2]);
    let closed = imaginary::ternary_mul_o_components(&f[0], &f[1], &f[2]);
    ensure(averaged == closed, || ternary_json(&f), || format!("average {averaged:?}, closed form {closed:?}"))
}

use polyadica::hypercomplex::{
    cd_conj, cd_inverse, cd_mul, cd_norm_sq, dual_mul, AlgebraTag, CdElement, Coefficient, DualNumber, Real,
};
use polyadica::imaginary::{
    find_unit, grid, ternary_mul_h_components, ternary_mul_o_components, ternary_nestings, two_squares_identity,
    HalfOctonion, HalfQuaternion, ImaginaryComplex, TernaryAlgebra,
};
use polyadica::norms::{polyadic_norm, quer_norm};
use polyadica::numeric::{scalar_add, scalar_inv, scalar_mul, Field, Float64, Mode, Rational, Scalar};
use polyadica::polyadization::{
    is_idempotent, is_neutral_polyad, is_nilpotent, nary_mul, nary_mul_dense, polyadic_identity, polyadic_power,
    querelement, ZMatrix,
};
use polyadica::props::{run_suite, SUITES};
use polyadica::tower::{
    build_shape, chain_warnings, final_arity, render_shape, tower_dimension, validate_arity_chain, TowerSpec,
};
use polyadica::vectoralg::{
    poly_product, quervector, reduced_vectorization, shift_matrix, structure_constants, PolyVector,
};
use polyadica::wire::{vector_from_json, vector_to_json, zmatrix_from_json, zmatrix_to_json};
use polyadica::{Error, Result};
use serde_json::{json, Value};

use crate::{
    Cli, Command, IdentityArgs, IdentityKind, ImaginaryArgs, ImaginaryKind, ImaginaryOp, Input, MulArgs, NormArgs,
    Oracle, Outcome, PowerArgs, PropsArgs, QuerArgs, TowerArgs, VecmulArgs,
};

/// Calls `$f::<A>(kind, args..)` for the coefficient algebra named by `$tag`.
macro_rules! on_algebra {
    ($tag:expr, $S:ty, $f:ident($($arg:expr),*)) => {
        match $tag {
            AlgebraTag::R => $f::<$S>((), $($arg),*),
            AlgebraTag::Dual => $f::<DualNumber<$S>>((), $($arg),*),
            AlgebraTag::C => $f::<CdElement<$S>>(1, $($arg),*),
            AlgebraTag::H => $f::<CdElement<$S>>(2, $($arg),*),
            AlgebraTag::O => $f::<CdElement<$S>>(3, $($arg),*),
        }
    };
}

pub fn run(cli: &Cli, input: &Input) -> Result<Outcome> {
    match &cli.command {
        Command::Props(args) => props(args, cli.mode),
        Command::TowerShape(args) => tower(args).map(ok),
        _ => match cli.mode {
            Mode::Rational => run_in::<Rational>(cli, input),
            Mode::Float => run_in::<Float64>(cli, input),
        }
        .map(ok),
    }
}

fn ok(doc: Value) -> Outcome {
    Outcome { doc, code: 0 }
}

fn run_in<S: Real>(cli: &Cli, input: &Input) -> Result<Value> {
    match &cli.command {
        Command::Mul(args) => mul::<S>(args, &input.read()?, cli.mode),
        Command::Quer(args) => quer::<S>(args, &input.read()?, cli.mode),
        Command::Norm(args) => norm::<S>(args, &input.read()?),
        Command::Power(args) => power::<S>(args, &input.read()?),
        Command::IdentityCheck(args) => identity::<S>(args, input),
        Command::Vecmul(args) => vecmul::<S>(args, input),
        Command::Quervec => Ok(vector_to_json(&quervector(&vector_from_json::<S>(&input.read()?)?)?)),
        Command::Imaginary(args) => imaginary::<S>(args, input),
        Command::Props(_) | Command::TowerShape(_) => unreachable!("handled without a scalar mode"),
    }
}

fn algebra(name: &str) -> Result<AlgebraTag> {
    name.parse()
}

/// Accepts a bare array of factors or `{"factors": [...]}`.
fn factors(doc: &Value) -> Result<&[Value]> {
    match doc {
        Value::Array(items) => Ok(items),
        Value::Object(map) => map
            .get("factors")
            .and_then(Value::as_array)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Malformed("expected a \"factors\" array".into())),
        other => Err(Error::Malformed(format!("expected factors, got {other}"))),
    }
}

/// Explicit `--arity`, else the `arity` field or entry count of a matrix.
fn arity_of(flag: Option<usize>, matrix: Option<&Value>) -> Result<usize> {
    if let Some(n) = flag {
        return Ok(n);
    }
    let from_doc = matrix.and_then(|m| {
        m.get("arity")
            .and_then(Value::as_u64)
            .map(|n| n as usize)
            .or_else(|| m.get("entries").and_then(Value::as_array).map(|e| e.len() + 1))
    });
    from_doc.ok_or_else(|| Error::Malformed("--arity is required for this input".into()))
}

fn matrix<A: Coefficient>(v: &Value, kind: A::Kind, arity: usize) -> Result<ZMatrix<A>> {
    let z = zmatrix_from_json::<A>(v, kind)?;
    if z.arity() != arity {
        return Err(Error::ArityMismatch { expected: arity, found: z.arity() });
    }
    Ok(z)
}

fn mul<S: Real>(args: &MulArgs, doc: &Value, mode: Mode) -> Result<Value> {
    let tag = algebra(&args.algebra)?;
    let f = factors(doc)?;
    let arity = arity_of(args.arity, f.first())?;
    if arity == 2 {
        return binary::<S>(tag, f, args.sum, mode);
    }
    if args.sum {
        return Err(Error::Malformed("--sum needs --arity 2".into()));
    }
    on_algebra!(tag, S, nary(f, arity, args.oracle))
}

fn nary<A: Coefficient>(kind: A::Kind, f: &[Value], arity: usize, oracle: Oracle) -> Result<Value> {
    let zs = f.iter().map(|v| matrix::<A>(v, kind, arity)).collect::<Result<Vec<_>>>()?;
    let product = match oracle {
        Oracle::Cyclic => nary_mul(&zs)?,
        Oracle::Dense => nary_mul_dense(&zs)?,
    };
    Ok(zmatrix_to_json(&product))
}

fn pair(f: &[Value]) -> Result<(&Value, &Value)> {
    match f {
        [x, y] => Ok((x, y)),
        _ => Err(Error::WrongFactorCount { expected: 2, found: f.len() }),
    }
}

fn binary<S: Real>(tag: AlgebraTag, f: &[Value], sum: bool, mode: Mode) -> Result<Value> {
    let (x, y) = pair(f)?;
    match tag {
        AlgebraTag::R => {
            let (x, y) = (Scalar::from_json(x, mode)?, Scalar::from_json(y, mode)?);
            let r = if sum { scalar_add(&x, &y)? } else { scalar_mul(&x, &y)? };
            Ok(r.to_json())
        }
        AlgebraTag::Dual => {
            let x = DualNumber::<S>::from_json((), x)?;
            let y = DualNumber::<S>::from_json((), y)?;
            Ok(if sum { x.plus(&y) } else { dual_mul(&x, &y) }.to_json())
        }
        _ => {
            let level = tag.cd_level().expect("Cayley-Dickson tag");
            let x = CdElement::<S>::from_json(level, x)?;
            let y = CdElement::<S>::from_json(level, y)?;
            Ok(if sum { x.add(&y)? } else { cd_mul(&x, &y)? }.to_json())
        }
    }
}

fn quer<S: Real>(args: &QuerArgs, doc: &Value, mode: Mode) -> Result<Value> {
    let tag = algebra(&args.algebra)?;
    let arity = arity_of(args.arity, Some(doc))?;
    if arity == 2 {
        return match tag {
            AlgebraTag::R if args.conj => Ok(Scalar::from_json(doc, mode)?.to_json()),
            AlgebraTag::R => Ok(scalar_inv(&Scalar::from_json(doc, mode)?)?.to_json()),
            AlgebraTag::Dual if args.conj => Err(Error::Malformed("--conj applies to Cayley-Dickson algebras".into())),
            AlgebraTag::Dual => Ok(DualNumber::<S>::from_json((), doc)?.inverse()?.to_json()),
            _ => {
                let x = CdElement::<S>::from_json(tag.cd_level().expect("Cayley-Dickson tag"), doc)?;
                Ok(if args.conj { cd_conj(&x) } else { cd_inverse(&x)? }.to_json())
            }
        };
    }
    if args.conj {
        return Err(Error::Malformed("--conj needs --arity 2".into()));
    }
    on_algebra!(tag, S, matrix_quer(doc, arity))
}

fn matrix_quer<A: Coefficient>(kind: A::Kind, doc: &Value, arity: usize) -> Result<Value> {
    Ok(zmatrix_to_json(&querelement(&matrix::<A>(doc, kind, arity)?)?))
}

fn norm_doc<S: Field>(value_sq: S) -> Value {
    let sq = value_sq.to_json();
    match (S::MODE, sq.as_f64()) {
        (Mode::Float, Some(x)) => json!({ "norm_sq": sq, "norm": x.sqrt() }),
        _ => json!({ "norm_sq": sq }),
    }
}

fn norm<S: Real>(args: &NormArgs, doc: &Value) -> Result<Value> {
    let tag = algebra(&args.algebra)?;
    let arity = arity_of(args.arity, Some(doc))?;
    if arity == 2 {
        if args.quer {
            return Err(Error::Malformed("--quer needs a Z-matrix".into()));
        }
        return match tag.cd_level() {
            Some(level) => Ok(norm_doc(cd_norm_sq(&CdElement::<S>::from_json(level, doc)?))),
            None => Err(Error::UnnormedAlgebra(tag.name().into())),
        };
    }
    on_algebra!(tag, S, matrix_norm(doc, arity, args.quer))
}

fn matrix_norm<A: Coefficient>(kind: A::Kind, doc: &Value, arity: usize, quer: bool) -> Result<Value> {
    let z = matrix::<A>(doc, kind, arity)?;
    let n = if quer { quer_norm(&z)? } else { polyadic_norm(&z)? };
    let mut out = norm_doc(n.value_sq);
    out["arity"] = json!(n.arity);
    Ok(out)
}

fn power<S: Real>(args: &PowerArgs, doc: &Value) -> Result<Value> {
    let tag = algebra(&args.algebra)?;
    let arity = arity_of(None, Some(doc))?;
    on_algebra!(tag, S, matrix_power(doc, arity, args.ell))
}

fn matrix_power<A: Coefficient>(kind: A::Kind, doc: &Value, arity: usize, ell: usize) -> Result<Value> {
    Ok(zmatrix_to_json(&polyadic_power(&matrix::<A>(doc, kind, arity)?, ell)))
}

fn identity<S: Real>(args: &IdentityArgs, input: &Input) -> Result<Value> {
    let tag = algebra(&args.algebra)?;
    if args.kind == IdentityKind::Unit {
        let arity = args.arity.ok_or_else(|| Error::Malformed("--kind unit needs --arity".into()))?;
        return on_algebra!(tag, S, unit(arity));
    }
    let doc = input.read()?;
    on_algebra!(tag, S, identity_check(&doc, args.kind, args.ell))
}

fn unit<A: Coefficient>(kind: A::Kind, arity: usize) -> Result<Value> {
    Ok(zmatrix_to_json(&polyadic_identity::<A>(arity, kind)?))
}

fn identity_check<A: Coefficient>(kind: A::Kind, doc: &Value, which: IdentityKind, ell: usize) -> Result<Value> {
    match which {
        IdentityKind::Neutral => {
            let probe = doc.get("probe").ok_or_else(|| Error::Malformed("expected a \"probe\" matrix".into()))?;
            let arity = arity_of(None, Some(probe))?;
            let probe = matrix::<A>(probe, kind, arity)?;
            let polyad = doc
                .get("polyad")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed("expected a \"polyad\" array".into()))?
                .iter()
                .map(|v| matrix::<A>(v, kind, arity))
                .collect::<Result<Vec<_>>>()?;
            if polyad.len() != arity - 1 {
                return Err(Error::WrongFactorCount { expected: arity - 1, found: polyad.len() });
            }
            Ok(json!({ "neutral": is_neutral_polyad(&polyad, &probe) }))
        }
        IdentityKind::Idempotent | IdentityKind::Nilpotent => {
            let z = matrix::<A>(doc, kind, arity_of(None, Some(doc))?)?;
            Ok(if which == IdentityKind::Idempotent {
                json!({ "idempotent": is_idempotent(&z, ell), "ell": ell })
            } else {
                json!({ "nilpotent": is_nilpotent(&z, ell), "ell": ell })
            })
        }
        IdentityKind::Unit => unreachable!("handled by the caller"),
    }
}

fn tower(args: &TowerArgs) -> Result<Value> {
    let spec = match &args.kappas {
        Some(k) => TowerSpec::with_kappas(args.arities.clone(), k.clone())?,
        None => TowerSpec::new(args.arities.clone())?,
    };
    if args.strict {
        validate_arity_chain(&spec)?;
    }
    let shape = build_shape(&spec);
    let fa = final_arity(&spec);
    let mut out = json!({
        "arities": spec.stages(),
        "level": spec.level(),
        "size": shape.size(),
        "dimension": tower_dimension(&spec),
        "pattern": shape.pattern().iter().map(|&(r, c)| json!([r, c])).collect::<Vec<_>>(),
        "chain_warnings": chain_warnings(&spec),
        "final_arity": { "outer": fa.outer, "flat": fa.flat },
    });
    if spec.stages() == [5, 3, 4] {
        out["stated_arity_unverified"] = json!(13);
    }
    if args.render {
        out["render"] = json!(render_shape(&shape));
    }
    Ok(out)
}

fn vecmul<S: Real>(args: &VecmulArgs, input: &Input) -> Result<Value> {
    if args.structure_constants {
        let m = args.dim.ok_or_else(|| Error::Malformed("--structure-constants needs --dim".into()))?;
        let f = structure_constants(m)?;
        return Ok(json!({
            "dim": f.dim,
            "constants": f.nonzero.iter().map(|c| json!({
                "inputs": c.inputs,
                "output": c.output,
                "value": c.value,
            })).collect::<Vec<_>>(),
        }));
    }
    let doc = input.read()?;
    let vs = factors(&doc)?.iter().map(vector_from_json::<S>).collect::<Result<Vec<_>>>()?;
    if let Some(m) = args.dim {
        if let Some(v) = vs.iter().find(|v| v.dim() != m) {
            return Err(Error::DimMismatch { expected: m, found: v.dim() });
        }
    }
    let product = if args.via_matrix {
        let m = vs.first().map_or(0, PolyVector::dim);
        if vs.len() != m + 1 {
            return Err(Error::WrongFactorCount { expected: m + 1, found: vs.len() });
        }
        let dense: Vec<_> = vs.iter().map(shift_matrix).collect();
        reduced_vectorization(&polyadica::polyadization::dense_chain(&dense)?)?
    } else {
        poly_product(&vs)?
    };
    Ok(vector_to_json(&product))
}

fn imaginary<S: Real>(args: &ImaginaryArgs, input: &Input) -> Result<Value> {
    let doc = match (args.op, args.kind) {
        (ImaginaryOp::Unit, Some(_)) => Value::Null,
        _ => input.read()?,
    };
    let doc = &doc;
    let kind = match args.kind {
        Some(k) => k,
        None => kind_of(doc)?,
    };
    match kind {
        ImaginaryKind::ImaginaryComplex => ternary_op::<ImaginaryComplex<S>>(args, doc, None),
        ImaginaryKind::HalfQuaternion => {
            if args.op == ImaginaryOp::TwoSquares {
                let [x, y, z] = three::<HalfQuaternion<S>>(doc)?;
                let (lhs, rhs) = two_squares_identity(&x, &y, &z);
                return Ok(json!({ "lhs": Field::to_json(&lhs), "rhs": Field::to_json(&rhs), "holds": lhs == rhs }));
            }
            ternary_op::<HalfQuaternion<S>>(args, doc, Some(ternary_mul_h_components::<S>))
        }
        ImaginaryKind::HalfOctonion => ternary_op::<HalfOctonion<S>>(args, doc, Some(ternary_mul_o_components::<S>)),
    }
}

fn kind_of(doc: &Value) -> Result<ImaginaryKind> {
    let tagged = doc
        .get("kind")
        .or_else(|| doc.get("factors").and_then(|f| f.get(0)).and_then(|f| f.get("kind")))
        .or_else(|| doc.get(0).and_then(|f| f.get("kind")));
    match tagged.and_then(Value::as_str) {
        Some("imaginary_complex") => Ok(ImaginaryKind::ImaginaryComplex),
        Some("half_quaternion") => Ok(ImaginaryKind::HalfQuaternion),
        Some("half_octonion") => Ok(ImaginaryKind::HalfOctonion),
        Some(other) => Err(Error::Malformed(format!("unknown imaginary kind {other:?}"))),
        None => Err(Error::Malformed("--kind is required for untagged input".into())),
    }
}

fn elements<T: TernaryAlgebra>(doc: &Value, count: usize) -> Result<Vec<T>> {
    let f = factors(doc)?;
    if f.len() != count {
        return Err(Error::WrongFactorCount { expected: count, found: f.len() });
    }
    f.iter().map(T::from_json).collect()
}

fn three<T: TernaryAlgebra>(doc: &Value) -> Result<[T; 3]> {
    let v = elements::<T>(doc, 3)?;
    Ok(v.try_into().unwrap_or_else(|_| unreachable!("length checked")))
}

type Components<T> = fn(&T, &T, &T) -> T;

fn ternary_op<T: TernaryAlgebra>(
    args: &ImaginaryArgs,
    doc: &Value,
    components: Option<Components<T>>,
) -> Result<Value> {
    match args.op {
        ImaginaryOp::Mul => {
            let [x, y, z] = three::<T>(doc)?;
            let product = match (args.components, components) {
                (true, Some(f)) => f(&x, &y, &z),
                _ => T::ternary(&x, &y, &z),
            };
            Ok(product.to_json())
        }
        ImaginaryOp::Quer => Ok(T::from_json(doc)?.quer()?.to_json()),
        ImaginaryOp::Norm => Ok(norm_doc(T::from_json(doc)?.norm_sq())),
        ImaginaryOp::Nestings => {
            let v = elements::<T>(doc, 5)?;
            let f: [T; 5] = v.try_into().unwrap_or_else(|_| unreachable!("length checked"));
            let nested = ternary_nestings(&f);
            let agree = nested[0] == nested[1] && nested[1] == nested[2];
            Ok(json!({
                "nestings": nested.iter().map(TernaryAlgebra::to_json).collect::<Vec<_>>(),
                "associative": agree,
            }))
        }
        ImaginaryOp::Unit => {
            let g = grid::<T>(-args.grid, args.grid);
            Ok(json!({ "kind": T::KIND, "grid": args.grid, "unit": find_unit(&g, &g).map(|e| e.to_json()) }))
        }
        ImaginaryOp::TwoSquares => Err(Error::Malformed("two-squares is defined for half_quaternion".into())),
    }
}

fn props(args: &PropsArgs, mode: Mode) -> Result<Outcome> {
    if args.list {
        let suites: Vec<Value> =
            SUITES.iter().map(|s| json!({ "name": s.name, "description": s.description })).collect();
        return Ok(ok(json!({ "suites": suites })));
    }
    let name = args.suite.as_deref().expect("clap requires --suite without --list");
    let report = run_suite(name, mode, args.seed, args.cases)?;
    Ok(Outcome { code: if report.passed() { 0 } else { 1 }, doc: report.to_json() })
}

//! Which subcommand exposes each library operation.

pub struct Operation {
    pub module: &'static str,
    pub name: &'static str,
    pub subcommand: &'static str,
    pub invocation: &'static str,
}

const fn op(module: &'static str, name: &'static str, subcommand: &'static str, invocation: &'static str) -> Operation {
    Operation { module, name, subcommand, invocation }
}

pub const OPERATIONS: &[Operation] = &[
    op("numeric", "scalar_add", "mul", "mul --algebra R --arity 2 --sum"),
    op("numeric", "scalar_mul", "mul", "mul --algebra R --arity 2"),
    op("numeric", "scalar_inv", "quer", "quer --algebra R --arity 2"),
    op("hypercomplex", "cd_mul", "mul", "mul --algebra C|H|O --arity 2"),
    op("hypercomplex", "cd_conj", "quer", "quer --algebra C|H|O --arity 2 --conj"),
    op("hypercomplex", "cd_norm_sq", "norm", "norm --algebra C|H|O --arity 2"),
    op("hypercomplex", "cd_inverse", "quer", "quer --algebra C|H|O --arity 2"),
    op("hypercomplex", "dual_mul", "mul", "mul --algebra dual --arity 2"),
    op("polyadization", "nary_mul", "mul", "mul --algebra A --arity n"),
    op("polyadization", "polyadic_identity", "identity-check", "identity-check --kind unit --arity n"),
    op("polyadization", "querelement", "quer", "quer --algebra A"),
    op("polyadization", "polyadic_power", "power", "power --ell l"),
    op("polyadization", "is_idempotent", "identity-check", "identity-check --kind idempotent"),
    op("polyadization", "is_nilpotent", "identity-check", "identity-check --kind nilpotent"),
    op("polyadization", "is_neutral_polyad", "identity-check", "identity-check --kind neutral"),
    op("polyadization", "to_dense", "mul", "mul --oracle dense"),
    op("polyadization", "dense_mul", "mul", "mul --oracle dense"),
    op("norms", "polyadic_norm", "norm", "norm --algebra A"),
    op("norms", "quer_norm", "norm", "norm --quer"),
    op("tower", "tower_dimension", "tower-shape", "tower-shape --arities .."),
    op("tower", "validate_arity_chain", "tower-shape", "tower-shape --strict"),
    op("tower", "build_shape", "tower-shape", "tower-shape --arities .."),
    op("tower", "final_arity", "tower-shape", "tower-shape --arities .."),
    op("tower", "render_shape", "tower-shape", "tower-shape --render"),
    op("vectoralg", "poly_product", "vecmul", "vecmul"),
    op("vectoralg", "structure_constants", "vecmul", "vecmul --structure-constants --dim m"),
    op("vectoralg", "quervector", "quervec", "quervec"),
    op("vectoralg", "reduced_vectorization", "vecmul", "vecmul --via-matrix"),
    op("vectoralg", "shift_matrix", "vecmul", "vecmul --via-matrix"),
    op("imaginary", "ternary_mul_c", "imaginary", "imaginary mul --kind imaginary_complex"),
    op("imaginary", "ternary_mul_h", "imaginary", "imaginary mul --kind half_quaternion"),
    op("imaginary", "quer_h", "imaginary", "imaginary quer --kind half_quaternion"),
    op("imaginary", "norm_sq_h", "imaginary", "imaginary norm --kind half_quaternion"),
    op("imaginary", "two_squares_identity", "imaginary", "imaginary two-squares"),
    op("imaginary", "ternary_mul_o", "imaginary", "imaginary mul --kind half_octonion"),
    op("imaginary", "quer_o", "imaginary", "imaginary quer --kind half_octonion"),
    op("cli", "props", "props", "props --suite s"),
];

/// Operation index appended to `--help`.
pub fn help_table() -> String {
    let mut out = String::from("Operations:\n");
    for o in OPERATIONS {
        out.push_str(&format!("  {:<14} {:<22} {:<15} {}\n", o.module, o.name, o.subcommand, o.invocation));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cli;
    use clap::CommandFactory;

    const LIBRARY_OPERATIONS: &[&str] = &[
        "scalar_add",
        "scalar_mul",
        "scalar_inv",
        "cd_mul",
        "cd_conj",
        "cd_norm_sq",
        "cd_inverse",
        "dual_mul",
        "nary_mul",
        "polyadic_identity",
        "querelement",
        "polyadic_power",
        "is_idempotent",
        "is_nilpotent",
        "is_neutral_polyad",
        "to_dense",
        "dense_mul",
        "polyadic_norm",
        "quer_norm",
        "tower_dimension",
        "validate_arity_chain",
        "build_shape",
        "final_arity",
        "render_shape",
        "poly_product",
        "structure_constants",
        "quervector",
        "reduced_vectorization",
        "shift_matrix",
        "ternary_mul_c",
        "ternary_mul_h",
        "quer_h",
        "norm_sq_h",
        "two_squares_identity",
        "ternary_mul_o",
        "quer_o",
        "props",
    ];

    #[test]
    fn every_operation_has_exactly_one_subcommand() {
        for name in LIBRARY_OPERATIONS {
            let hits: Vec<_> = OPERATIONS.iter().filter(|o| o.name == *name).collect();
            assert_eq!(hits.len(), 1, "{name}");
        }
        assert_eq!(OPERATIONS.len(), LIBRARY_OPERATIONS.len());
    }

    #[test]
    fn table_names_real_subcommands() {
        let cmd = Cli::command();
        for o in OPERATIONS {
            assert!(cmd.find_subcommand(o.subcommand).is_some(), "{} -> {}", o.name, o.subcommand);
            assert!(o.invocation.starts_with(o.subcommand), "{}", o.name);
            assert!(!o.module.is_empty());
        }
    }

    #[test]
    fn every_subcommand_is_used() {
        let cmd = Cli::command();
        for sub in cmd.get_subcommands() {
            let name = sub.get_name();
            if name != "help" && name != "quervec" {
                assert!(OPERATIONS.iter().any(|o| o.subcommand == name), "{name}");
            }
        }
        assert!(OPERATIONS.iter().any(|o| o.subcommand == "quervec"));
    }
}

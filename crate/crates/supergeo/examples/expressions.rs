//! The expression language: Gaussian rational literals, even and odd
//! variables, negative powers at invertible variables, and canonical
//! printing that round-trips through the parser.

use supergeo::parse::parse_expression;
use supergeo::superpoly::{ParityClass, Substitution, VarTable};

fn main() -> supergeo::Result<()> {
    let table = VarTable::new(&[("z0", true), ("y", false)], &["zeta0", "zeta1"])?;

    for expr in [
        "(1/2 + i)*z0^2*y - 3",
        "zeta1*zeta0",
        "z0^-3*(y + zeta0*zeta1)^2",
        "(z0 + zeta0*zeta1)*(z0 - zeta0*zeta1)",
    ] {
        let parsed = parse_expression(expr, &table)?;
        println!("{expr}");
        println!("  canonical: {parsed}");
        println!(
            "  round-trips: {}",
            parse_expression(&parsed.to_string(), &table)? == parsed
        );
        if let ParityClass::Homogeneous(p) = parsed.parity_class() {
            println!("  parity: {p:?}");
        }
    }

    // Substitution is parity-checked and multiplicative.
    let mut sub = Substitution::new(&table, &table);
    sub.set_even(0, parse_expression("2*z0", &table)?)?;
    sub.set_odd(0, parse_expression("zeta1", &table)?)?;
    let f = parse_expression("z0^2 + zeta0*zeta1", &table)?;
    println!("substituting z0 -> 2 z0, zeta0 -> zeta1 in {f}:");
    println!("  {}", sub.apply(&f)?);

    // Parity violations are errors, not silent coercions.
    let odd_image = parse_expression("zeta0", &table)?;
    let mut bad = Substitution::new(&table, &table);
    match bad.set_even(1, odd_image) {
        Err(e) => println!("even variable with an odd image: {e}"),
        Ok(_) => unreachable!("parity mismatch must be rejected"),
    }
    Ok(())
}

//! Every rank `1|1` right module over the super skew field is free on one
//! even and one odd generator: the odd involution that encodes the module
//! structure conjugates to the standard `[[0,1],[1,0]]` by an explicit
//! triangular base change.

use supergeo::dmodule::{canonicalize, Chirality, PhiModule};
use supergeo::parse::parse_expression;
use supergeo::supermatrix::{Shape, SuperMatrix};
use supergeo::superpoly::{Parity, VarTable};

fn main() -> supergeo::Result<()> {
    let table = VarTable::new(&[("a", true)], &["alpha"])?;
    let rows = [["alpha", "a"], ["a^-1", "-alpha"]];
    let phi = SuperMatrix::from_rows(
        &table,
        Shape::new(1, 1),
        Shape::new(1, 1),
        Parity::Odd,
        rows.iter()
            .map(|r| r.iter().map(|s| parse_expression(s, &table)).collect())
            .collect::<supergeo::Result<_>>()?,
    )?;
    let module = PhiModule::new(phi, Chirality::RightD)?;
    module.check_structure()?;
    println!("phi            = {}", module.phi);
    println!("phi^2          = {}", module.phi.matmul(&module.phi)?);

    let cert = canonicalize(&module)?;
    println!("base change    = {}", cert.base_change);
    println!("its inverse    = {}", cert.base_change_inv);
    println!("B phi B^-1     = {}", cert.conjugated);
    Ok(())
}

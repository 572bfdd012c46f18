//! Composing Pi-invertible sheaves: the supercommutant of a bimodule tensor
//! square is free of rank `1|1`, the two box products come from twisting by
//! the two square roots of `-1`, and they are exactly the `+i` and `-i`
//! eigenspaces of the induced operator on the tensor square.

use supergeo::dmodule::{Chirality, PhiModule};
use supergeo::picompose::{
    boxtimes, compose_operator, eigenspace, supercommutant, BimoduleTensor, BoxVariant,
    CommutantBasis, spans_match, TENSOR_SLOTS,
};
use supergeo::parse::parse_expression;
use supergeo::supermatrix::{Shape, SuperMatrix};
use supergeo::superpoly::{Parity, VarTable};

fn main() -> supergeo::Result<()> {
    let table = VarTable::new(&[], &[])?;
    let m = |rows: [[&str; 2]; 2]| -> supergeo::Result<SuperMatrix> {
        SuperMatrix::from_rows(
            &table,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Odd,
            rows.iter()
                .map(|r| r.iter().map(|s| parse_expression(s, &table)).collect())
                .collect::<supergeo::Result<_>>()?,
        )
    };
    println!("tensor slots (even, even, odd, odd): {TENSOR_SLOTS:?}");

    // Left structure squaring to -1 against a right structure squaring to +1.
    let tensor = BimoduleTensor::new(m([["0", "-1"], ["1", "0"]])?, m([["0", "1"], ["1", "0"]])?)?;
    let basis = supercommutant(&tensor)?;
    println!("commutant basis u = {:?}", render(&basis.u));
    println!("commutant basis v = {:?}", render(&basis.v));
    println!(
        "matches closed form: {}",
        spans_match(&basis, &CommutantBasis::closed_form(&table))?
    );

    // Two right structures compose after an i twist; the chosen square root
    // picks out one of the two products.
    let phi = PhiModule::new(m([["0", "1"], ["1", "0"]])?, Chirality::RightD)?;
    let plain = boxtimes(&phi, &phi, BoxVariant::Plain)?;
    let opposite = boxtimes(&phi, &phi, BoxVariant::Opposite)?;
    println!("plain box:    u = {:?}, v = {:?}", render(&plain.u), render(&plain.v));
    println!("opposite box: u = {:?}, v = {:?}", render(&opposite.u), render(&opposite.v));

    let op = compose_operator(&phi, &phi)?;
    println!("operator on the tensor square = {op}");
    println!(
        "plus eigenspace is the plain box:      {}",
        spans_match(&eigenspace(&op, true)?, &plain)?
    );
    println!(
        "minus eigenspace is the opposite box:  {}",
        spans_match(&eigenspace(&op, false)?, &opposite)?
    );
    Ok(())
}

fn render(v: &[supergeo::superpoly::SuperPolynomial]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

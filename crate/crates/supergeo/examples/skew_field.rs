//! Arithmetic in the super skew field `D = Q(i)[theta]` with `theta` odd and
//! `theta^2 = -1`, over a polynomial coefficient ring, plus the change of
//! basis that exhibits `D (x) D^o` as a full endomorphism algebra.

use supergeo::dskew::{azumaya_certificate, dinvert, dmul, DElement, Side};
use supergeo::parse::parse_expression;
use supergeo::superpoly::VarTable;

fn main() -> supergeo::Result<()> {
    let table = VarTable::new(&[("t", true)], &["tau"])?;
    let d = |r0: &str, r1: &str| -> supergeo::Result<DElement> {
        DElement::new(
            parse_expression(r0, &table)?,
            parse_expression(r1, &table)?,
        )
    };

    let theta = DElement::theta(&table);
    println!("theta * theta          = {}", dmul(&theta, &theta, Side::Plain)?);
    println!("theta *op theta        = {}", dmul(&theta, &theta, Side::Opposite)?);

    let x = d("t", "tau")?;
    let y = d("2*t^2", "t*tau")?;
    println!("(t + theta tau)(2t^2 + theta t tau) = {}", dmul(&x, &y, Side::Plain)?);

    let inv = dinvert(&x)?;
    println!("(t + theta tau)^-1     = {inv}");
    println!("product with inverse   = {}", dmul(&x, &inv, Side::Plain)?);

    // The four basis tensors act on D by matrices that span all of End(D);
    // the certificate records the half-integer change of basis to the
    // elementary matrices.
    let cert = azumaya_certificate(&table)?;
    for (label, image) in cert.basis_labels.iter().zip(&cert.psi_images) {
        println!("psi({label}) = {image}");
    }
    for (label, row) in cert.unit_labels.iter().zip(&cert.coefficients) {
        let rendered: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("{label} coefficients: [{}]", rendered.join(", "));
    }
    Ok(())
}

//! Over each affine cell, the punctured coordinate space is a trivial
//! principal bundle for the rank `1|1` multiplicative supergroup: the two
//! chart maps compose to the identity both ways and intertwine the group
//! actions at a generic symbolic group point.

use supergeo::piproj::BundleContext;
use supergeo::superpoly::SuperPolynomial;

fn main() -> supergeo::Result<()> {
    for n in 1..=2usize {
        for i in 0..=n {
            let bundle = BundleContext::new(n, i)?;
            bundle.check_composites()?;
            bundle.check_equivariance()?;
            println!("n = {n}, chart {i}: composites are the identity, action is equivariant");
        }
    }

    // The two pullbacks on the smallest cell. Each map is printed through
    // its pullback: images of the target-side variables.
    let bundle = BundleContext::new(1, 0)?;
    let phi = bundle.phi_star()?;
    println!("coordinates -> cell x group, via images of the cell x group variables:");
    let total = bundle.total_table();
    for k in 0..total.even_count() {
        let v = SuperPolynomial::even_var(total, k)?;
        println!("  {} -> {}", total.even_name(k), phi.apply(&v)?);
    }
    for k in 0..total.odd_count() {
        let v = SuperPolynomial::odd_var(total, k)?;
        println!("  {} -> {}", total.odd_name(k), phi.apply(&v)?);
    }

    let psi = bundle.psi_star()?;
    println!("cell x group -> coordinates, via images of the coordinates:");
    let coords = bundle.coord_table();
    for k in 0..coords.even_count() {
        let v = SuperPolynomial::even_var(coords, k)?;
        println!("  {} -> {}", coords.even_name(k), psi.apply(&v)?);
    }
    for k in 0..coords.odd_count() {
        let v = SuperPolynomial::odd_var(coords, k)?;
        println!("  {} -> {}", coords.odd_name(k), psi.apply(&v)?);
    }
    Ok(())
}

//! Tensoring a free module with the super skew field and taking the
//! commutant of the two skew actions recovers the module rank unchanged,
//! for each small rank.

use supergeo::picompose::morita_commutant_rank;

fn main() -> supergeo::Result<()> {
    for (even, odd) in [(1usize, 0usize), (0, 1), (1, 1), (2, 1)] {
        let (e, o) = morita_commutant_rank(even, odd)?;
        println!("V of rank {even}|{odd}: commutant rank {e}|{o}");
    }
    Ok(())
}

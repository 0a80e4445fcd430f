//! The symbolic `Δ` of a small triple and the coefficient `Δ_{M(T)}` for each
//! of its tableaux.

use lrbasis::hwv::{delta, delta_mt, CoeffSpec};
use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::{enumerate_lr, monomial_m};

fn main() -> lrbasis::Result<()> {
    let triple = LRTriple::minimal("2,1".parse()?, "2,1".parse()?, "3,2,1".parse()?)?;
    let full = delta(&triple, &CoeffSpec::Symbolic, &CoeffSpec::Symbolic)?;
    println!("{triple}: Δ has {} terms", full.len());
    for t in enumerate_lr(&triple) {
        let m = monomial_m(&t)?;
        let p = delta_mt(&triple, &t)?;
        println!("M(T) = {:?}: {} terms", m.rows(), p.len());
        println!("  {p}");
    }
    Ok(())
}

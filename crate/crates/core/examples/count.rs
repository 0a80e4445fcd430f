//! Counts LR tableaux for a triple and compares with the Schur-function
//! coefficient.
//!
//!     cargo run --example count -- 3,3,2,1,1 3,3,2,1 5,5,4,3,1,1

use lrbasis::oracle::lr_coefficient;
use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::enumerate_lr;

fn main() -> lrbasis::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [d, e, f] = match args.as_slice() {
        [d, e, f] => [d.as_str(), e.as_str(), f.as_str()],
        _ => ["3,3,2,1,1", "3,3,2,1", "5,5,4,3,1,1"],
    };
    let triple = LRTriple::minimal(d.parse()?, e.parse()?, f.parse()?)?;
    let tabs = enumerate_lr(&triple);
    println!("{triple}");
    println!("LR tableaux:     {}", tabs.len());
    println!("c^F^t_(D^t,E^t): {}", lr_coefficient(&triple)?);
    Ok(())
}

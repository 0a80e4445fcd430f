//! Linear independence of the `Δ_{M(T)}` and agreement with the LR coefficient.

use lrbasis::shapes::LRTriple;
use lrbasis::verify::check_basis;

fn main() -> lrbasis::Result<()> {
    for (d, e, f) in [("1", "1", "2"), ("2,1", "2,1", "3,2,1"), ("2,1", "2,1", "3,3"), ("2,2", "2,1", "3,3,1")] {
        let triple = LRTriple::minimal(d.parse()?, e.parse()?, f.parse()?)?;
        let r = check_basis(&triple)?;
        println!(
            "{triple}: {} tableaux, oracle {}, rank {}, distinct leading terms {} -> {}",
            r.lr_count,
            r.oracle_count,
            r.rank,
            r.leading_distinct,
            if r.pass { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}

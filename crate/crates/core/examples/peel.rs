//! Standard peeling of each running-example tableau, then `M(T)` and the
//! recovery of `T` from it.

use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::{enumerate_lr, monomial_m, recover_from_m, standard_peeling};

fn main() -> lrbasis::Result<()> {
    let triple = LRTriple::minimal("3,3,2,1,1".parse()?, "3,3,2,1".parse()?, "5,5,4,3,1,1".parse()?)?;
    for t in enumerate_lr(&triple) {
        let trace = standard_peeling(&t)?;
        let m = monomial_m(&t)?;
        println!("{}", trace.to_json());
        println!("  M(T) = {:?}  monomial {}", m.rows(), m.to_monomial());
        println!("  vertical strips: {}", trace.strips_are_vertical());
        assert_eq!(recover_from_m(&triple, &m)?, t);
    }
    Ok(())
}

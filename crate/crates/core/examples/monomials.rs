//! The monomials `e(T)`, `e_1(T)` and `𝓔(T)` attached to one tableau.

use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::{enumerate_lr, monomial_big_e, monomial_e, monomial_e1, recover_from_e};

fn main() -> lrbasis::Result<()> {
    let triple = LRTriple::minimal("3,3,2,1,1".parse()?, "3,3,2,1".parse()?, "5,5,4,3,1,1".parse()?)?;
    for t in enumerate_lr(&triple) {
        let e = monomial_e(&t)?;
        println!("rows {:?}", t.rows());
        println!("  e(T)   = {e}");
        println!("  e1(T)  = {}", monomial_e1(&t)?);
        println!("  E(T)   = {}", monomial_big_e(&t)?);
        assert_eq!(recover_from_e(&triple, &e)?, t);
    }
    Ok(())
}

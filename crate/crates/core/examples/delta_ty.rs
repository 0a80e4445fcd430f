//! `δ_{T,Y}` and its leading monomial in the `y`-order, which should be `e(T)`.

use lrbasis::hwv::delta_ty;
use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::{enumerate_lr, monomial_e};
use lrbasis::verify::check_leading_term;

fn main() -> lrbasis::Result<()> {
    let triple = LRTriple::minimal("3,3,2,1,1".parse()?, "3,3,2,1".parse()?, "5,5,4,3,1,1".parse()?)?;
    for t in enumerate_lr(&triple) {
        let d = delta_ty(&triple, &t)?;
        println!("rows {:?}: δ_TY has {} terms", t.rows(), d.len());
        println!("  e(T) = {}  leading term ok: {}", monomial_e(&t)?, check_leading_term(&triple, &t)?);
    }
    Ok(())
}

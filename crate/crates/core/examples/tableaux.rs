//! Lists the LR tableaux of the running example with their reading words.

use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::{check_lr1, check_lr2, enumerate_lr};

fn main() -> lrbasis::Result<()> {
    let triple = LRTriple::minimal("3,3,2,1,1".parse()?, "3,3,2,1".parse()?, "5,5,4,3,1,1".parse()?)?;
    for (i, t) in enumerate_lr(&triple).iter().enumerate() {
        println!("T{i}  rows {:?}", t.rows());
        println!("    word {:?}  content {:?}", t.reading_word(), t.content());
        assert!(check_lr1(t) && check_lr2(t));
    }
    Ok(())
}

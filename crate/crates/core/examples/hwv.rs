//! Checks that each `Δ_{M(T)}` is killed by every raising operator and has the
//! expected weight.
//!
//!     cargo run --release --example hwv -- 2,1 2,1 3,2,1

use lrbasis::hwv::delta_mt;
use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::enumerate_lr;
use lrbasis::verify::{hwv_failure, weight_profile, WeightProfile};

fn main() -> lrbasis::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [d, e, f] = match args.as_slice() {
        [d, e, f] => [d.as_str(), e.as_str(), f.as_str()],
        _ => ["2,2,1", "2,1", "3,3,2"],
    };
    let triple = LRTriple::minimal(d.parse()?, e.parse()?, f.parse()?)?;
    let want = WeightProfile::expected(&triple);
    for t in enumerate_lr(&triple) {
        let p = delta_mt(&triple, &t)?;
        let hw = match hwv_failure(&p, &triple) {
            None => "highest weight".to_string(),
            Some(op) => format!("not killed by {op}"),
        };
        let weight = weight_profile(&p)? == want;
        println!("rows {:?}: {} terms, {hw}, weight ok: {weight}", t.rows(), p.len());
    }
    Ok(())
}

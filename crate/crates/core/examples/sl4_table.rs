//! Rebuilds the eighteen `SL_4` generators from their BZ diagrams.

use lrbasis::bz4::reproduce_sl4_table;

fn main() {
    let rows = reproduce_sl4_table();
    for r in &rows {
        println!(
            "{:>2}  grading {:5}  e {:5}  E {:5}  hwv {:5}  weight {:5}  blocks {:5}  {}",
            r.index,
            r.grading,
            r.e_t,
            r.big_e_t,
            r.hwv,
            r.weight,
            r.delta_spec,
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    println!("{}/{} rows reproduced", rows.iter().filter(|r| r.pass).count(), rows.len());
}

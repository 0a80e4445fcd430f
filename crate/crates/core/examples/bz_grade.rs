//! Grades an `SL_4` BZ diagram and lifts the result to `GL_4`.
//!
//!     cargo run --example bz_grade -- x21,z12,y11,y22,x13

use lrbasis::bz4::{bz_grading, lift_to_gl4, BZAssignment};

fn main() -> lrbasis::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "x21,z12,y11,y22,x13".into());
    let dots: Vec<&str> = arg.split(',').collect();
    let a = BZAssignment::from_dots(&dots)?;
    let (dt, et, ft) = bz_grading(&a)?;
    println!("diagram {a}");
    println!("hexagon condition: {}", a.hexagon_condition());
    println!("D^t = {dt}, E^t = {et}, F^t = {ft}");
    println!("F^t in GL_4 = {}", lift_to_gl4(&dt, &et, &ft)?);
    Ok(())
}

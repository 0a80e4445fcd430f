//! Symbolic determinants over `ℤ[x, y]`, with and without a block restriction.

use lrbasis::polyring::{determinant, determinant_restricted, BlockCounts, Matrix, Polynomial};

fn main() -> lrbasis::Result<()> {
    let p = |s: &str| s.parse::<Polynomial>().unwrap();
    let m = Matrix::from_rows(vec![
        vec![p("x[1,1]"), p("y[1,1]"), p("y[1,2]")],
        vec![p("x[2,1]"), p("y[2,1]"), p("y[2,2]")],
        vec![p("x[3,1]"), p("y[3,1]"), p("y[3,2]")],
    ])?;
    let d = determinant(&m)?;
    println!("det = {d}");
    println!("{} terms", d.len());


    // every `X` column must meet the first row block: only the terms using
    // x[1,1] survive when rows split as 1 + 2 and columns as 1 + 2
    let blocked = m.with_blocks(vec![1, 2], vec![1, 2])?;
    let counts = BlockCounts { counts: vec![vec![1, 0], vec![0, 2]] };
    println!("restricted = {}", determinant_restricted(&blocked, Some(&counts))?);
    Ok(())
}

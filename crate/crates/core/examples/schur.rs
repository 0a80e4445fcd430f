//! Schur polynomials, their products, and LR coefficients read off a product.

use lrbasis::oracle::{expand_in_schur, schur_polynomial, schur_product};
use lrbasis::shapes::Partition;

fn main() -> lrbasis::Result<()> {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    println!("s_21(z1,z2,z3) = {}", schur_polynomial(&p("2,1"), 3)?);

    let prod = schur_product(&p("2,1"), &p("2,1"), 4)?;
    print!("s_21 · s_21 =");
    for (shape, c) in &prod.coeffs {
        print!(" + {c}·s_({shape})");
    }
    println!();

    let s1 = schur_polynomial(&p("1"), 3)?;
    let cube = &(&s1 * &s1) * &s1;
    print!("s_1^3 in 3 variables =");
    for (shape, c) in &expand_in_schur(&cube, 3)?.coeffs {
        print!(" + {c}·s_({shape})");
    }
    println!();
    Ok(())
}

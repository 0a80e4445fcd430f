//! The reduction of `Δ(A, B)` to `Δ(J, B)` at a random integer point: with
//! `A = L·V`, the row operations that clear `L` must also be applied to `B`.

use lrbasis::polyring::{Integer, VarId};
use lrbasis::shapes::LRTriple;
use lrbasis::verify::{factorization_sides, factorization_sides_shared_b};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> lrbasis::Result<()> {
    let triple = LRTriple::minimal("2,1".parse()?, "2,1".parse()?, "3,2,1".parse()?)?;
    let (t, r, s) = (triple.t(), triple.r(), triple.s());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut draw = |lo: i64, hi: i64| Integer::from(rng.gen_range(lo..=hi));

    let l: Vec<Vec<Integer>> = (0..t)
        .map(|i| (0..r).map(|j| if j < i { draw(-3, 3) } else if j == i { draw(1, 3) } else { 0.into() }).collect())
        .collect();
    let v: Vec<Vec<Integer>> = (0..r)
        .map(|i| (0..r).map(|j| if j == i { 1.into() } else if j > i { draw(-3, 3) } else { 0.into() }).collect())
        .collect();
    // zero entries of B can kill every β-monomial at once
    let b: Vec<Vec<Integer>> = (0..t).map(|_| (0..s).map(|_| draw(1, 5)).collect()).collect();
    let values: Vec<Integer> = (0..4096).map(|_| draw(-50, 50)).collect();
    let point = move |v: VarId| values[(v.family() as usize * 1031 + v.i() * 37 + v.j()) % values.len()].clone();

    let (lhs, rhs) = factorization_sides(&triple, &l, &v, &b, &point)?;
    println!("transported B: {lhs} = {rhs}");
    let (lhs, rhs) = factorization_sides_shared_b(&triple, &l, &v, &b, &point)?;
    println!("B held fixed:  {lhs} vs {rhs}");
    Ok(())
}

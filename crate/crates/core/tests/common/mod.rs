//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use lrbasis::polyring::{DetRing, Integer, Matrix};
use lrbasis::shapes::{partitions_of, validate_triple, LRTriple, Partition};
use lrbasis::tableaux::{enumerate_lr, LRTableau};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn running() -> LRTriple {
    validate_triple(p("3,3,2,1,1"), p("3,3,2,1"), p("5,5,4,3,1,1"), 6, 5, 4).unwrap()
}

pub fn tab(triple: &LRTriple, rows: &[&[usize]]) -> LRTableau {
    LRTableau::for_triple(triple, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// The four fillings drawn for the running example, as `T, T_1, T_2, T_3`.
pub fn running_tableaux() -> [LRTableau; 4] {
    let t = running();
    [
        tab(&t, &[&[1], &[1], &[1, 2], &[1, 2, 3], &[2, 3]]),
        tab(&t, &[&[1], &[1], &[1, 2], &[1, 2, 2], &[3, 3]]),
        tab(&t, &[&[1], &[1], &[2, 2], &[1, 1, 3], &[2, 3]]),
        tab(&t, &[&[1], &[2], &[1, 3], &[1, 1, 2], &[2, 3]]),
    ]
}

pub fn tiny() -> LRTriple {
    LRTriple::minimal(p("1"), p("1"), p("2")).unwrap()
}

/// Every triple with `|F| ≤ max` (minimal `n, k, ell`), contained or not.
pub fn all_triples(max: usize) -> Vec<LRTriple> {
    let mut out = Vec::new();
    for m in 0..=max {
        for f in partitions_of(m) {
            for a in 0..=m {
                for d in partitions_of(a) {
                    for e in partitions_of(m - a) {
                        out.push(LRTriple::minimal(d.clone(), e, f.clone()).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// A uniformly chosen `F` of size `1..=max`, then `D ⊆ F` and `E` of the
/// complementary size, uniformly among the candidates.
pub fn random_triple(rng: &mut impl Rng, max: usize) -> LRTriple {
    let m = rng.gen_range(1..=max);
    let f = partitions_of(m).choose(rng).unwrap().clone();
    let a = rng.gen_range(0..=m);
    let ds: Vec<Partition> = partitions_of(a).into_iter().filter(|d| f.contains(d)).collect();
    let d = ds.choose(rng).cloned().unwrap_or_else(Partition::empty);
    let e = partitions_of(m - d.size()).choose(rng).unwrap().clone();
    LRTriple::minimal(d, e, f).unwrap()
}

/// Like [`random_triple`] but only triples with at least one LR tableau.
pub fn random_nonempty_triple(rng: &mut impl Rng, max: usize) -> LRTriple {
    loop {
        let t = random_triple(rng, max);
        if !enumerate_lr(&t).is_empty() {
            return t;
        }
    }
}

/// `Σ_σ sgn(σ) ∏ m[i][σ(i)]` over all permutations.
pub fn naive_det<R: DetRing>(m: &Matrix<R>) -> R {
    fn go<R: DetRing>(m: &Matrix<R>, row: usize, used: &mut Vec<bool>, sign: bool, acc: R, out: &mut R) {
        let n = m.rows();
        if row == n {
            *out = if sign { out.sub(&acc) } else { out.add(&acc) };
            return;
        }
        let mut s = sign;
        // each free column left of c becomes an inversion with this row
        for c in 0..n {
            if used[c] {
                continue;
            }
            let e = m.get(row, c);
            if !e.is_zero() {
                used[c] = true;
                go(m, row + 1, used, s, acc.mul(e), out);
                used[c] = false;
            }
            s = !s;
        }
    }
    assert_eq!(m.rows(), m.cols());
    let mut out = R::zero();
    let mut used = vec![false; m.rows()];
    go(m, 0, &mut used, false, R::one(), &mut out);
    out
}

/// LR tableaux by exhaustive fill-and-filter: every arrangement of the
/// content `E^t` in the cells, kept when rows weakly increase, columns
/// strictly increase, and the reverse reading word (right to left, top to
/// bottom) is a lattice word.
pub fn brute_force_lr(triple: &LRTriple) -> Vec<Vec<Vec<usize>>> {
    let Some(shape) = triple.skew_shape() else {
        return Vec::new();
    };
    let cells = shape.cells();
    let mut content: Vec<usize> = triple
        .et()
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat(i + 1).take(c))
        .collect();
    content.sort();
    let mut out = Vec::new();
    loop {
        let entry = |r: usize, c: usize| {
            cells.iter().position(|&x| x == (r, c)).map(|i| content[i])
        };
        let semistandard = cells.iter().zip(&content).all(|(&(r, c), &v)| {
            entry(r, c + 1).is_none_or(|w| v <= w) && entry(r + 1, c).is_none_or(|w| v < w)
        });
        if semistandard {
            let mut word = Vec::new();
            for a in 1..=shape.rows() {
                let mut row: Vec<usize> = cells
                    .iter()
                    .zip(&content)
                    .filter(|((r, _), _)| *r == a)
                    .map(|(_, &v)| v)
                    .collect();
                row.reverse();
                word.extend(row);
            }
            let mut seen = vec![0usize; triple.et().depth() + 2];
            let lattice = word.iter().all(|&v| {
                seen[v] += 1;
                v == 1 || seen[v] <= seen[v - 1]
            });
            if lattice {
                let rows = (1..=shape.rows())
                    .map(|a| {
                        cells
                            .iter()
                            .zip(&content)
                            .filter(|((r, _), _)| *r == a)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                out.push(rows);
            }
        }
        if !next_permutation(&mut content) {
            break;
        }
    }
    out.sort();
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix<Integer> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
}

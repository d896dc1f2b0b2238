#![allow(dead_code)]

use bettikit::arith::{ratio, Rational};
use bettikit::table::{pure_betti, BettiTable, DegreeSequence, SignedTable};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Gorenstein codimension-5 table with e_1 = 90.
pub const EXAMPLE1: &str = "       0  1  2  3  4 5
total: 1 11 28 28 11 1
    0: 1  .  .  .  . .
    1: .  3  .  .  . .
    2: .  8 20  8  . .
    3: .  .  8 20  8 .
    4: .  .  .  .  3 .
    5: .  .  .  .  . 1
";

/// Gorenstein codimension-5 table with (e_0, e_1, e_2) = (26, 65, 68).
pub const EXAMPLE3: &str = "       0  1  2  3  4 5
total: 1 12 29 29 12 1
    0: 1  .  .  .  . .
    1: .  8 14  9  2 .
    2: .  2  4  2  . .
    3: .  .  2  4  2 .
    4: .  2  9 14  8 .
    5: .  .  .  .  . 1
";

pub fn seq(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Strictly increasing sequence of length `s + 1` with `d_0 = start` and
/// `d_s <= top`.
pub fn random_sequence(rng: &mut impl Rng, s: usize, start: i64, top: i64) -> DegreeSequence {
    assert!(top - start >= s as i64);
    let mut pool: Vec<i64> = (start + 1..=top).collect();
    let mut picked = vec![start];
    for _ in 0..s {
        let k = rng.gen_range(0..pool.len());
        picked.push(pool.swap_remove(k));
    }
    picked.sort();
    DegreeSequence::new(picked).unwrap()
}

/// A random chain `d^1 < d^2 < ...` together with positive rational weights.
pub fn random_chain(rng: &mut impl Rng, s_max: usize, top: i64) -> Vec<(Rational, DegreeSequence)> {
    let s = rng.gen_range(1..=s_max);
    let start = rng.gen_range(0..=2);
    let mut d = random_sequence(rng, s, start, (start + s as i64 + 2).min(top));
    let mut chain = vec![d.clone()];
    for _ in 0..rng.gen_range(0..4) {
        let mut next = d.degrees().to_vec();
        let movable: Vec<usize> = (0..=s)
            .filter(|&i| if i == s { next[i] < top } else { next[i] + 1 < next[i + 1] })
            .collect();
        if movable.is_empty() {
            break;
        }
        next[movable[rng.gen_range(0..movable.len())]] += 1;
        d = DegreeSequence::new(next).unwrap();
        chain.push(d.clone());
    }
    chain
        .into_iter()
        .map(|d| (ratio(rng.gen_range(1..=30), rng.gen_range(1..=6)), d))
        .collect()
}

pub fn combine(parts: &[(Rational, DegreeSequence)]) -> BettiTable {
    let mut acc = SignedTable::new();
    for (r, d) in parts {
        acc.axpy(r, &pure_betti(d));
    }
    acc.into_betti().unwrap()
}

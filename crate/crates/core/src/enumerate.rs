//! Enumeration of `n`-symplectic tableaux of a given shape and weight.

use crate::crystal::{Letter, Word};
use crate::error::Result;
use crate::tableau::{admissible_split, reading, Column, Tableau};
use crate::weyl::{Partition, Weight};

struct Candidate {
    column: Column,
    left: Column,
    right: Column,
    weight: Vec<i64>,
}

/// All `n`-admissible columns of height `h`, in lexicographic order.
pub fn admissible_columns(h: usize, n: usize) -> Vec<Column> {
    candidates(h, n).into_iter().map(|c| c.column).collect()
}

fn candidates(h: usize, n: usize) -> Vec<Candidate> {
    let alphabet: Vec<Letter> = (-(n as Letter)..=n as Letter).filter(|&x| x != 0).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(h);
    fn go(
        start: usize,
        h: usize,
        n: usize,
        alphabet: &[Letter],
        cur: &mut Vec<Letter>,
        out: &mut Vec<Candidate>,
    ) {
        if cur.len() == h {
            let column = Column::new(cur.clone()).expect("increasing by construction");
            if let Some((left, right)) = admissible_split(&column, n) {
                let mut weight = vec![0; n];
                for &x in cur.iter() {
                    weight[n - x.unsigned_abs() as usize] += if x < 0 { 1 } else { -1 };
                }
                out.push(Candidate {
                    column,
                    left,
                    right,
                    weight,
                });
            }
            return;
        }
        for i in start..alphabet.len() {
            cur.push(alphabet[i]);
            go(i + 1, h, n, alphabet, cur, out);
            cur.pop();
        }
    }
    go(0, h, n, &alphabet, &mut cur, &mut out);
    out
}

fn search(lambda: &Partition, mu: Option<&Weight>, n: usize) -> Result<Vec<Tableau>> {
    lambda.check_rank(n)?;
    lambda.check_dominant()?;
    if let Some(mu) = mu {
        mu.check_rank(n)?;
    }
    let heights = lambda.conjugate();
    let mut pools = std::collections::HashMap::new();
    for &h in &heights {
        pools.entry(h).or_insert_with(|| candidates(h, n));
    }
    let pools: Vec<&Vec<Candidate>> = heights.iter().map(|h| &pools[h]).collect();
    let target: Option<Vec<i64>> = mu.map(|m| m.coords().to_vec());
    let mut found = Vec::new();
    let mut chosen: Vec<&Candidate> = Vec::with_capacity(heights.len());
    let mut partial = vec![0i64; n];

    fn go<'a>(
        pools: &[&'a Vec<Candidate>],
        target: &Option<Vec<i64>>,
        chosen: &mut Vec<&'a Candidate>,
        partial: &mut Vec<i64>,
        found: &mut Vec<Tableau>,
    ) {
        let j = chosen.len();
        if let Some(t) = target {
            let left = (pools.len() - j) as i64;
            if t.iter()
                .zip(partial.iter())
                .any(|(a, b)| (a - b).abs() > left)
            {
                return;
            }
        }
        if j == pools.len() {
            found.push(Tableau::from_columns(
                chosen.iter().map(|c| c.column.clone()).collect(),
            ));
            return;
        }
        for cand in pools[j].iter() {
            if let Some(prev) = chosen.last() {
                if !prev.right.row_leq(&cand.left) {
                    continue;
                }
            }
            for (p, w) in partial.iter_mut().zip(&cand.weight) {
                *p += w;
            }
            chosen.push(cand);
            go(pools, target, chosen, partial, found);
            chosen.pop();
            for (p, w) in partial.iter_mut().zip(&cand.weight) {
                *p -= w;
            }
        }
    }
    go(&pools, &target, &mut chosen, &mut partial, &mut found);
    let mut keyed: Vec<(Word, Tableau)> = found.into_iter().map(|t| (reading(&t), t)).collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// The `n`-symplectic tableaux of shape `λ` and weight `μ`, ordered
/// lexicographically by reading.
pub fn enumerate_tableaux(lambda: &Partition, mu: &Weight, n: usize) -> Result<Vec<Tableau>> {
    search(lambda, Some(mu), n)
}

/// All `n`-symplectic tableaux of shape `λ`, ordered by reading.
pub fn enumerate_shape(lambda: &Partition, n: usize) -> Result<Vec<Tableau>> {
    search(lambda, None, n)
}

//! Column contraction and bounded search in the contraction-free plactic
//! congruence.

use std::collections::{HashSet, VecDeque};

use crate::crystal::{Letter, Word};
use crate::error::{Error, Result};
use crate::tableau::{is_admissible, Column};

/// Erase the maximal pair `(z, z̄)` with `#{t ∈ C′ : |t| ≥ z} > n − z + 1`.
pub fn contract_column(c: &Column, n: usize) -> Result<Column> {
    if is_admissible(c, n) {
        return Err(Error::Contraction("column is already admissible"));
    }
    let n = n as i64;
    let z = c
        .pairs()
        .into_iter()
        .rev()
        .find(|&z| {
            let big = c.letters().iter().filter(|t| t.abs() >= z).count() as i64;
            big > n - z as i64 + 1
        })
        .ok_or(Error::Contraction("no pair passes the cardinality test"))?;
    let out = Column::new(
        c.letters()
            .iter()
            .copied()
            .filter(|&x| x != z && x != -z)
            .collect(),
    )?;
    if !is_admissible(&out, n as usize) {
        return Err(Error::Contraction("contracted column is not admissible"));
    }
    Ok(out)
}

/// All words obtained from `w` by one relation, applied in either direction
/// on a window of three consecutive letters, staying inside `C_n`.
fn neighbours(w: &[Letter], n: usize) -> Vec<Word> {
    let n = n as Letter;
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(2) {
        let (p, q, r) = (w[i], w[i + 1], w[i + 2]);
        let mut push = |a: Letter, b: Letter, c: Letter| {
            let mut v = w.to_vec();
            v[i] = a;
            v[i + 1] = b;
            v[i + 2] = c;
            out.push(v);
        };
        // a b x ≡ b a x  for a < x ≤ b, b ≠ ā
        if p < r && r <= q && q != -p {
            push(q, p, r);
        }
        if q < r && r <= p && p != -q {
            push(q, p, r);
        }
        // a b x ≡ a x b  for x ≤ a < b, b ≠ x̄
        if r <= p && p < q && q != -r {
            push(p, r, q);
        }
        if q <= p && p < r && r != -q {
            push(p, r, q);
        }
        // b̄ b x ≡ (b+1) (b+1)̄ x  for b̄ ≤ x ≤ b
        if q > 0 && p == -q && -q <= r && r <= q && q < n {
            push(q + 1, -(q + 1), r);
        }
        if p >= 2 && q == -p && -p < r && r < p {
            push(-(p - 1), p - 1, r);
        }
        // a b b̄ ≡ a (b−1)̄ (b−1)  for b̄ < a < b
        if q >= 2 && r == -q && -q < p && p < q {
            push(p, -(q - 1), q - 1);
        }
        if r >= 1 && q == -r && r < n && -(r + 1) < p && p < r + 1 && p != 0 {
            push(p, r + 1, -(r + 1));
        }
    }
    out
}

/// Whether `w1 ≡ w2` under the four length-preserving relations over `C_n`.
///
/// Explores at most `budget` words; running out is an error, not `false`.
pub fn plactic_equivalent(w1: &[Letter], w2: &[Letter], n: usize, budget: usize) -> Result<bool> {
    if w1 == w2 {
        return Ok(true);
    }
    if w1.len() != w2.len() {
        return Ok(false);
    }
    let mut seen: HashSet<Word> = HashSet::from([w1.to_vec()]);
    let mut queue = VecDeque::from([w1.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for v in neighbours(&w, n) {
            if v == w2 {
                return Ok(true);
            }
            if seen.insert(v.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExhausted(budget));
                }
                queue.push_back(v);
            }
        }
    }
    Ok(false)
}

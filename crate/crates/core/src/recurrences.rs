//! Pieri decomposition and the recurrences for `K_{λ,μ}(q)` obtained from
//! the Morris-type generating identity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::kostant::kostka_def;
use crate::weyl::{Partition, Weight};
use crate::Poly;

/// Multiplicities `n_λ` in `B(γ) ⊗ B((r)_n) = ⊕ B(λ)^{n_λ}`.
pub type PieriMultiset = BTreeMap<Partition, usize>;

/// All `(k_1̄..k_n̄, k_1..k_n)` with nonnegative entries summing to `r`,
/// as `(barred, unbarred)` indexed by `i − 1`.
fn compositions(r: i64, parts: usize, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
    if cur.len() + 1 == parts {
        cur.push(r);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for k in 0..=r {
        cur.push(k);
        compositions(r - k, parts, out, cur);
        cur.pop();
    }
}

/// Decompose `B(γ) ⊗ B((r)_n)` by counting the row vertices `L` that make
/// `b_γ ⊗ L` a highest weight vertex.
pub fn pieri(gamma: &Partition, r: usize, n: usize) -> Result<PieriMultiset> {
    gamma.check_rank(n)?;
    gamma.check_dominant()?;
    let mut tuples = Vec::new();
    compositions(r as i64, 2 * n, &mut tuples, &mut Vec::with_capacity(2 * n));
    let mut out = PieriMultiset::new();
    for k in tuples {
        // kb[i-1] = k_ī, ku[i-1] = k_i
        let (kb, ku) = k.split_at(n);
        let lam: Vec<i64> = (1..=n)
            .map(|i| gamma.bar(i) - ku[i - 1] + kb[i - 1])
            .collect();
        // lam[i-1] = λ_ī
        let ok_ii = (1..n).all(|i| lam[i - 1] <= lam[i] - kb[i]);
        let ok_iii = (2..=n).all(|i| lam[i - 1] - kb[i - 1] >= lam[i - 2] + ku[i - 2] - kb[i - 2])
            && lam[0] - kb[0] >= 0;
        if ok_ii && ok_iii {
            let coords = lam.into_iter().rev().collect();
            *out.entry(Weight::new(coords)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// `K_{(a),(b)}(q)` in rank 1.
fn rank_one(lambda: i64, mu: i64) -> Poly {
    if lambda >= mu && (lambda - mu) % 2 == 0 {
        Poly::q_pow(((lambda - mu) / 2) as u32)
    } else {
        Poly::zero()
    }
}

fn morris_applies(nu: &Partition, mu: &Partition) -> bool {
    let n = nu.rank();
    n >= 2 && mu.bar(n) >= nu.bar(n - 1) && nu.bar(n) >= mu.bar(n)
}

/// Recurse where the hypothesis holds, otherwise fall back on the definition.
fn morris_or_def(nu: &Partition, mu: &Partition) -> Result<Poly> {
    if nu.rank() == 1 {
        return Ok(rank_one(nu.bar(1), mu.bar(1)));
    }
    if morris_applies(nu, mu) {
        morris_step(nu, mu)
    } else {
        kostka_def(nu, mu)
    }
}

fn morris_step(nu: &Partition, mu: &Partition) -> Result<Poly> {
    let n = nu.rank();
    let l = nu.bar(n) - mu.bar(n);
    let nu1 = nu.truncate();
    let mu1 = mu.truncate();
    let mut out = Poly::zero();
    for m in 0..=l / 2 {
        let r = l - 2 * m;
        let mut inner = Poly::zero();
        for (lambda, mult) in pieri(&nu1, r as usize, n - 1)? {
            inner += &morris_or_def(&lambda, &mu1)?.scale(&(mult as i64));
        }
        out += &inner.shift((r + m) as u32);
    }
    Ok(out)
}

/// `K_{ν,μ}(q) = Σ_{r+2m=l} q^{r+m} Σ_{λ ∈ B(ν′)⊗B((r)_{n−1})} K_{λ,μ′}(q)`,
/// valid when `μ_n̄ ≥ ν_{n−1 bar}` and `l = ν_n̄ − μ_n̄ ≥ 0`.
pub fn kostka_morris(nu: &Partition, mu: &Partition, n: usize) -> Result<Poly> {
    nu.check_rank(n)?;
    mu.check_rank(n)?;
    nu.check_dominant()?;
    mu.check_dominant()?;
    if n < 2 {
        return Err(Error::Hypothesis("the recurrence needs rank at least 2"));
    }
    if !morris_applies(nu, mu) {
        return Err(Error::Hypothesis("need μ_n̄ ≥ ν_(n−1)̄ and ν_n̄ ≥ μ_n̄"));
    }
    morris_step(nu, mu)
}

/// `K_{(p)_n,μ}(q) = q^{f_n(μ)} Σ_L q^{θ_n(L)}` over the row vertices of weight `μ`.
pub fn kostka_row(p: usize, mu: &Partition, n: usize) -> Result<Poly> {
    mu.check_rank(n)?;
    mu.check_dominant()?;
    let excess = p as i64 - mu.size();
    if excess < 0 || excess % 2 != 0 {
        return Ok(Poly::zero());
    }
    let f: i64 = (1..=n).map(|i| (n - i) as i64 * mu.bar(i)).sum();
    // k_ī = μ_ī + k_i, so only the unbarred counts are free
    let mut tuples = Vec::new();
    if n > 0 {
        compositions(excess / 2, n, &mut tuples, &mut Vec::with_capacity(n));
    }
    let thetas = tuples.iter().map(|ku| {
        let theta: i64 = (1..=n).map(|i| (2 * (n - i) as i64 + 1) * ku[i - 1]).sum();
        (theta + f) as u32
    });
    Ok(Poly::from_exponents(thetas))
}

/// `(1^p)_n`: `p` leading ones in rank `n`.
pub fn column_partition(p: usize, n: usize) -> Partition {
    Weight::new((0..n).map(|j| i64::from(j < p)).collect())
}

/// `K_{(1^p)_n,0} = (q−1)K_{γ^p,0} + qK_{(1^p)_{n−1},0} + qK_{(1^{p−2})_{n−1},0}`,
/// with `γ^p = (2,1^{p−2},0,…)` of rank `n − 1`.
pub fn kostka_column_rec(p: usize, n: usize) -> Result<Poly> {
    if p < 2 || p > n {
        return Err(Error::Hypothesis("need 2 ≤ p ≤ n"));
    }
    let zero = Weight::zero(n - 1);
    let mut gamma = column_partition(p - 1, n - 1);
    *gamma.bar_mut(n - 1) = 2;
    let q = Poly::q_pow(1);
    let q_minus_one = &q - &Poly::one();
    let same = if p < n {
        kostka_column_rec(p, n - 1)?
    } else {
        Poly::zero()
    };
    let lower = if p >= 4 {
        kostka_column_rec(p - 2, n - 1)?
    } else {
        kostka_def(&column_partition(p - 2, n - 1), &zero)?
    };
    Ok(&(&q_minus_one * &kostka_def(&gamma, &zero)?) + &(&q * &(&same + &lower)))
}

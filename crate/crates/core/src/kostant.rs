//! The q-analogue of Kostant's partition function and the definitional
//! Kostka–Foulkes polynomial `K_{λ,μ}(q) = Σ_σ (−1)^{l(σ)} P_q(σ(λ+ρ) − (μ+ρ))`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{Coefficient, QPolynomial};
use crate::weyl::{act, weyl_group, Partition, Weight};
use crate::Poly;

/// The positive roots of `C_n`.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub rank: usize,
    pub positive_roots: Vec<Weight>,
}

impl RootSystemData {
    pub fn new(n: usize) -> Self {
        let mut roots = Vec::with_capacity(n * n);
        for i in (1..=n).rev() {
            roots.push(&Weight::unit(n, i) + &Weight::unit(n, i));
            for j in (1..i).rev() {
                roots.push(&Weight::unit(n, i) - &Weight::unit(n, j));
                roots.push(&Weight::unit(n, i) + &Weight::unit(n, j));
            }
        }
        RootSystemData {
            rank: n,
            positive_roots: roots,
        }
    }

    /// The simple root `α_i`: `2ε_1̄` for `i = 0`, else `ε_{ī+1} − ε_ī`.
    pub fn simple_root(n: usize, i: usize) -> Weight {
        if i == 0 {
            &Weight::unit(n, 1) + &Weight::unit(n, 1)
        } else {
            &Weight::unit(n, i + 1) - &Weight::unit(n, i)
        }
    }
}

// Every positive root has nonnegative prefix sums in stored order, so a
// weight with a negative prefix sum is not a sum of positive roots.
fn prefix_nonnegative(v: &[i64]) -> bool {
    let mut acc = 0;
    v.iter().all(|&c| {
        acc += c;
        acc >= 0
    })
}

/// Memoized `P_q` for a fixed rank.
pub struct QKostant<C> {
    roots: Vec<Vec<i64>>,
    rank: usize,
    cache: Mutex<HashMap<Vec<i64>, QPolynomial<C>>>,
}

impl<C: Coefficient> QKostant<C> {
    pub fn new(n: usize) -> Self {
        QKostant {
            roots: RootSystemData::new(n)
                .positive_roots
                .into_iter()
                .map(|r| r.coords().to_vec())
                .collect(),
            rank: n,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `P_q(β)`: the coefficient of `q^k` counts multisets of `k` positive
    /// roots summing to `β`.
    pub fn eval(&self, beta: &Weight) -> Result<QPolynomial<C>> {
        beta.check_rank(self.rank)?;
        let key = beta.coords().to_vec();
        if !prefix_nonnegative(&key) {
            return Ok(QPolynomial::zero());
        }
        if let Some(p) = self.cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let mut memo = HashMap::new();
        let p = self.count(0, key.clone(), &mut memo);
        self.cache.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    fn count(
        &self,
        k: usize,
        v: Vec<i64>,
        memo: &mut HashMap<(usize, Vec<i64>), QPolynomial<C>>,
    ) -> QPolynomial<C> {
        if v.iter().all(|&c| c == 0) {
            return QPolynomial::one();
        }
        if k == self.roots.len() || !prefix_nonnegative(&v) {
            return QPolynomial::zero();
        }
        if let Some(p) = memo.get(&(k, v.clone())) {
            return p.clone();
        }
        let without = self.count(k + 1, v.clone(), memo);
        let rest: Vec<i64> = v.iter().zip(&self.roots[k]).map(|(a, b)| a - b).collect();
        let with = self.count(k, rest, memo).shift(1);
        let p = without + with;
        memo.insert((k, v), p.clone());
        p
    }

    /// `K_{λ,μ}(q)` from the alternating Weyl group sum.
    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> Result<QPolynomial<C>> {
        let n = self.rank;
        lambda.check_rank(n)?;
        mu.check_rank(n)?;
        lambda.check_dominant()?;
        mu.check_dominant()?;
        let rho = Weight::rho(n);
        let lr = lambda + &rho;
        let mr = mu + &rho;
        let group = weyl_group(n);
        let terms: Result<Vec<QPolynomial<C>>> = group
            .par_iter()
            .map(|e| {
                let beta = &act(&e.perm, &lr)? - &mr;
                let p = self.eval(&beta)?;
                Ok(if e.length % 2 == 0 { p } else { -p })
            })
            .collect();
        let k: QPolynomial<C> = terms?.into_iter().sum();
        if !k.has_nonnegative_coefficients() {
            return Err(Error::Positivity(format!("K_{{{lambda},{mu}}} = {k}")));
        }
        Ok(k)
    }
}

fn shared_table(n: usize) -> Arc<QKostant<i64>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<QKostant<i64>>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    tables
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::new(QKostant::new(n)))
        .clone()
}

/// `P_q(β)` with a process-wide memo per rank.
pub fn q_kostant(beta: &Weight) -> Poly {
    shared_table(beta.rank())
        .eval(beta)
        .expect("rank of the shared table matches")
}

/// The definitional `K_{λ,μ}(q)`.
pub fn kostka_def(lambda: &Partition, mu: &Partition) -> Result<Poly> {
    if lambda.rank() == 0 {
        return Err(Error::ZeroRank);
    }
    shared_table(lambda.rank()).kostka(lambda, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    // Brute-force count of root multisets summing to β, by bounded search
    // over multiplicity vectors.
    fn brute_count(beta: &Weight) -> Vec<u64> {
        let roots = RootSystemData::new(beta.rank()).positive_roots;
        let bound: i64 = beta.coords().iter().map(|c| c.abs()).sum::<i64>() + 2;
        let mut counts = vec![0u64; bound as usize * 2 + 2];
        fn go(
            idx: usize,
            roots: &[Weight],
            acc: Weight,
            used: usize,
            target: &Weight,
            limit: usize,
            counts: &mut Vec<u64>,
        ) {
            if idx == roots.len() {
                if &acc == target {
                    counts[used] += 1;
                }
                return;
            }
            let mut cur = acc;
            let mut k = 0;
            loop {
                go(idx + 1, roots, cur.clone(), used + k, target, limit, counts);
                k += 1;
                if used + k > limit {
                    break;
                }
                cur = &cur + &roots[idx];
            }
        }
        let limit = counts.len() - 1;
        go(
            0,
            &roots,
            Weight::zero(beta.rank()),
            0,
            beta,
            limit,
            &mut counts,
        );
        counts
    }

    #[test]
    fn root_system_shape() {
        for n in 1..=5 {
            let r = RootSystemData::new(n);
            assert_eq!(r.positive_roots.len(), n * n);
            for root in &r.positive_roots {
                let first = root.coords().iter().find(|&&c| c != 0).unwrap();
                assert!(*first > 0);
            }
        }
    }

    #[test]
    fn kostant_examples() {
        assert_eq!(q_kostant(&w(&[0, 0])), Poly::one());
        assert_eq!(q_kostant(&w(&[1, -1])), p("q"));
        // {2ε_2̄}, {ε_2̄−ε_1̄, ε_2̄+ε_1̄}, {2(ε_2̄−ε_1̄), 2ε_1̄}
        assert_eq!(q_kostant(&w(&[2, 0])), p("q + q^2 + q^3"));
        assert_eq!(q_kostant(&w(&[-1, 1])), Poly::zero());
    }

    #[test]
    fn kostant_matches_brute_force() {
        for n in 1..=2 {
            let range = -3..=3i64;
            let mut vecs = vec![vec![]];
            for _ in 0..n {
                vecs = vecs
                    .into_iter()
                    .flat_map(|v: Vec<i64>| {
                        range.clone().map(move |c| {
                            let mut v = v.clone();
                            v.push(c);
                            v
                        })
                    })
                    .collect();
            }
            for v in vecs {
                let beta = Weight::new(v);
                let got = q_kostant(&beta);
                let counts = brute_count(&beta);
                for (k, &c) in counts.iter().enumerate() {
                    assert_eq!(got.coeff(k as u32), c as i64, "β = {beta:?}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_def(&w(&[2, 1]), &w(&[2, 1])).unwrap(), Poly::one());
        assert_eq!(kostka_def(&w(&[4]), &w(&[2])).unwrap(), p("q"));
        assert_eq!(
            kostka_def(&w(&[2, 2, 0]), &w(&[0, 0, 0])).unwrap(),
            p("q^2 + 2*q^4 + 2*q^6 + q^8")
        );
        assert_eq!(
            kostka_def(&w(&[2, 1, 1, 1]), &w(&[1, 1, 1, 0])).unwrap(),
            p("q + q^2 + q^3 + q^4")
        );
        assert!(kostka_def(&w(&[1, 2]), &w(&[0, 0])).is_err());
        assert!(kostka_def(&w(&[1, 1]), &w(&[0, 0, 0])).is_err());
    }

    #[test]
    fn rank_one_closed_form() {
        for l in 0..=8 {
            for m in 0..=8 {
                let k = kostka_def(&w(&[l]), &w(&[m])).unwrap();
                if l >= m && (l - m) % 2 == 0 {
                    assert_eq!(k, Poly::q_pow(((l - m) / 2) as u32));
                } else {
                    assert!(k.is_zero());
                }
            }
        }
    }

    #[test]
    fn stability_under_truncation() {
        for n in 2..=4 {
            for size in 0..=6 {
                for lambda in Weight::partitions(n, size) {
                    for msize in (0..=size).rev().step_by(2) {
                        for mu in Weight::partitions(n, msize) {
                            if lambda.bar(n) != mu.bar(n) {
                                continue;
                            }
                            let full = kostka_def(&lambda, &mu).unwrap();
                            let cut = kostka_def(&lambda.truncate(), &mu.truncate()).unwrap();
                            assert_eq!(full, cut, "λ = {lambda}, μ = {mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn big_coefficient_table_agrees() {
        let table = QKostant::<num_bigint::BigInt>::new(3);
        let k = table.kostka(&w(&[2, 2, 0]), &w(&[0, 0, 0])).unwrap();
        assert_eq!(k.to_string(), "q^2 + 2*q^4 + 2*q^6 + q^8");
    }
}

//! Comparing `K_{λ,μ}(q)` with the generating function of the charge.

use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::crystal::word_weight;
use crate::cyclage::{charge, charge_column};
use crate::enumerate::{admissible_columns, enumerate_tableaux};
use crate::error::{Error, Result};
use crate::kostant::kostka_def;
use crate::recurrences::column_partition;
use crate::tableau::{Column, Tableau};
use crate::weyl::{Partition, Weight};
use crate::Poly;

/// `Σ_{T ∈ ST(λ)_μ} q^{ch_n(T)}`.
pub fn charge_kostka(lambda: &Partition, mu: &Partition, n: usize) -> Result<Poly> {
    let mut out = Poly::zero();
    for t in enumerate_tableaux(lambda, mu, n)? {
        out.add_term(charge(&t, n)? as u32, 1);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
        })
    }
}

/// One tableau and its charge, or the reason none could be computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeEntry {
    pub tableau: Tableau,
    pub charge: std::result::Result<i64, Error>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: usize,
    pub k_definitional: Poly,
    pub k_charge: Poly,
    pub charges: Vec<ChargeEntry>,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn build(
        lambda: Partition,
        mu: Partition,
        n: usize,
        k_definitional: Poly,
        charges: Vec<ChargeEntry>,
    ) -> Self {
        let mut k_charge = Poly::zero();
        let mut failed = false;
        for e in &charges {
            match e.charge {
                Ok(c) => k_charge.add_term(c as u32, 1),
                Err(_) => failed = true,
            }
        }
        let verdict = if !failed && k_charge == k_definitional {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        VerificationReport {
            lambda,
            mu,
            n,
            k_definitional,
            k_charge,
            charges,
            verdict,
        }
    }

    /// Sorted list of the computed charges.
    pub fn charge_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .charges
            .iter()
            .filter_map(|e| e.charge.clone().ok())
            .collect();
        v.sort_unstable();
        v
    }

    /// `key: value` lines, one `charge:` line per tableau.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "lambda: {}", self.lambda);
        let _ = writeln!(s, "mu: {}", self.mu);
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "k_definitional: {}", self.k_definitional);
        let _ = writeln!(s, "k_charge: {}", self.k_charge);
        for e in &self.charges {
            match &e.charge {
                Ok(c) => {
                    let _ = writeln!(s, "charge: {} {}", e.tableau, c);
                }
                Err(err) => {
                    let _ = writeln!(s, "charge: {} error ({err})", e.tableau);
                }
            }
        }
        let _ = writeln!(s, "verdict: {}", self.verdict);
        s
    }
}

/// Compare the definition with the charge generating function on `ST(λ)_μ`.
pub fn verify_conjecture(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<VerificationReport> {
    mu.check_dominant()?;
    let k = kostka_def(lambda, mu)?;
    let charges = enumerate_tableaux(lambda, mu, n)?
        .into_iter()
        .map(|t| ChargeEntry {
            charge: charge(&t, n),
            tableau: t,
        })
        .collect();
    Ok(VerificationReport::build(
        lambda.clone(),
        mu.clone(),
        n,
        k,
        charges,
    ))
}

/// `K_{Λ_p,0}(q)` against `Σ q^{ch_n(C)}` over the weight-0 admissible
/// columns of height `n − p`, with `Λ_p` the partition `(1^{n−p})`.
pub fn verify_fundamental_conjecture(p: usize, n: usize) -> Result<VerificationReport> {
    if p > n {
        return Err(Error::Hypothesis("need p ≤ n"));
    }
    let h = n - p;
    if !h.is_multiple_of(2) {
        return Err(Error::Parity("the column height n − p must be even"));
    }
    let lambda = column_partition(h, n);
    let zero = Weight::zero(n);
    let k = kostka_def(&lambda, &zero)?;
    let charges = admissible_columns(h, n)
        .into_iter()
        .filter(|c| {
            word_weight(c.letters(), n)
                .map(|w| w.is_zero())
                .unwrap_or(false)
        })
        .map(|c: Column| ChargeEntry {
            charge: charge_column(&c, n),
            tableau: Tableau::new(vec![c]).expect("one column"),
        })
        .collect();
    Ok(VerificationReport::build(lambda, zero, n, k, charges))
}

/// Every pair `(λ, μ)` of rank `n` with `|μ| ≤ |λ| ≤ max_weight` and
/// `|λ| − |μ|` even, in a fixed order.
pub fn sweep_pairs(n: usize, max_weight: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for size in 0..=max_weight as i64 {
        for lambda in Weight::partitions(n, size) {
            for msize in (0..=size).rev().step_by(2) {
                for mu in Weight::partitions(n, msize) {
                    out.push((lambda.clone(), mu));
                }
            }
        }
    }
    out
}

/// [`verify_conjecture`] on every pair of [`sweep_pairs`], in parallel.
pub fn sweep(n: usize, max_weight: usize) -> Result<Vec<VerificationReport>> {
    sweep_pairs(n, max_weight)
        .par_iter()
        .map(|(l, m)| verify_conjecture(l, m, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn charge_side_examples() {
        let k = charge_kostka(&w(&[2, 2, 0]), &w(&[0, 0, 0]), 3).unwrap();
        assert_eq!(k.to_string(), "q^2 + 2*q^4 + 2*q^6 + q^8");
        let k = charge_kostka(&w(&[2, 1, 1, 1]), &w(&[1, 1, 1, 0]), 4).unwrap();
        assert_eq!(k.to_string(), "q + q^2 + q^3 + q^4");
        assert_eq!(
            charge_kostka(&w(&[1, 1]), &w(&[1, 1]), 2).unwrap(),
            Poly::one()
        );
    }

    #[test]
    fn paper_instances_match() {
        let r = verify_conjecture(&w(&[2, 2, 0]), &w(&[0, 0, 0]), 3).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.charge_values(), vec![2, 4, 4, 6, 6, 8]);
        let r = verify_conjecture(&w(&[2, 1, 1, 1]), &w(&[1, 1, 1, 0]), 4).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.charge_values(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn highest_weight_has_charge_zero() {
        for lambda in [w(&[2, 1, 0]), w(&[3, 3, 1]), w(&[1, 1]), w(&[4])] {
            let n = lambda.rank();
            let r = verify_conjecture(&lambda, &lambda, n).unwrap();
            assert_eq!(r.verdict, Verdict::Match);
            assert_eq!(r.charge_values(), vec![0]);
        }
    }

    #[test]
    fn fundamental_height_two() {
        let r = verify_fundamental_conjecture(1, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.k_charge.to_string(), "q^2 + q^4");
        let r = verify_fundamental_conjecture(0, 2).unwrap();
        assert_eq!(r.k_charge.to_string(), "q^2");
        assert_eq!(r.verdict, Verdict::Match);
        assert!(matches!(
            verify_fundamental_conjecture(0, 3),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn report_text() {
        let r = verify_conjecture(&w(&[1, 1]), &w(&[1, 1]), 2).unwrap();
        assert_eq!(
            r.to_text(),
            "lambda: (1,1)\nmu: (1,1)\nn: 2\nk_definitional: 1\nk_charge: 1\ncharge: -2,-1 0\nverdict: match\n"
        );
    }
}

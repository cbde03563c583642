//! Weights of `sp_{2n}`, the hyperoctahedral Weyl group `W_n` and its actions.
//!
//! Coordinates are stored as `(β_n̄, …, β_1̄)`; `ρ = (n, …, 1)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// An integral weight of rank `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

/// A dominant weight. Dominance is checked by the operations that need it.
pub type Partition = Weight;

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![0; n] }
    }

    pub fn rho(n: usize) -> Self {
        Weight {
            coords: (1..=n as i64).rev().collect(),
        }
    }

    /// `ε_ī` in rank `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.coords[n - i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// The coordinate `β_ī`, `1 ≤ i ≤ n`.
    pub fn bar(&self, i: usize) -> i64 {
        self.coords[self.rank() - i]
    }

    pub fn bar_mut(&mut self, i: usize) -> &mut i64 {
        let n = self.rank();
        &mut self.coords[n - i]
    }

    /// `|β| = Σ β_ī`.
    pub fn size(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1]) && self.coords.iter().all(|&c| c >= 0)
    }

    pub fn check_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.coords.clone()))
        }
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.rank() == n {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: n,
                found: self.rank(),
            })
        }
    }

    /// Drop the first coordinate `β_n̄`, giving a weight of rank `n − 1`.
    pub fn truncate(&self) -> Weight {
        Weight::new(self.coords[1..].to_vec())
    }

    /// Column heights of the Young diagram of a partition.
    pub fn conjugate(&self) -> Vec<usize> {
        let max = self.coords.first().copied().unwrap_or(0).max(0) as usize;
        (1..=max)
            .map(|j| self.coords.iter().filter(|&&c| c >= j as i64).count())
            .collect()
    }

    /// All partitions of rank `n` with `|λ| = size`, in decreasing lexicographic order.
    pub fn partitions(n: usize, size: i64) -> Vec<Partition> {
        fn go(n: usize, left: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() == n {
                if left == 0 {
                    out.push(Weight::new(cur.clone()));
                }
                return;
            }
            let slots = (n - cur.len()) as i64;
            for v in (0..=cap.min(left)).rev() {
                if v * slots < left {
                    break;
                }
                cur.push(v);
                go(n, left - v, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight ranks differ");
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight ranks differ");
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A signed permutation of `{±1, …, ±n}` commuting with negation.
///
/// `images[i-1]` is `σ(i)`; a negative value is a barred letter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// `s_0 = (1, 1̄)` or `s_i = (i, i+1)(ī, ī+1)`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i < n, "generator index out of range");
        let mut s = Self::identity(n);
        if i == 0 {
            s.images[0] = -1;
        } else {
            s.images.swap(i - 1, i);
        }
        s
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let k = v.unsigned_abs() as usize;
            if k == 0 || k > n || seen[k - 1] {
                return Err(Error::Parse(format!(
                    "{images:?} is not a signed permutation"
                )));
            }
            seen[k - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `σ(x)` for a nonzero letter `x` with `|x| ≤ n`.
    pub fn apply(&self, x: i32) -> i32 {
        let v = self.images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            v
        } else {
            -v
        }
    }
}

/// Product chosen so that the weight action is a left action:
/// `act(σ * τ, β) = act(σ, act(τ, β))`, i.e. `(σ * τ)(x) = τ(σ(x))`.
impl Mul for &SignedPermutation {
    type Output = SignedPermutation;
    fn mul(self, rhs: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), rhs.rank());
        SignedPermutation {
            images: self.images.iter().map(|&v| rhs.apply(v)).collect(),
        }
    }
}

/// An element of `W_n` together with its Coxeter length.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub perm: SignedPermutation,
    pub length: u32,
}

impl WeylElement {
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn build_weyl_group(n: usize) -> Vec<WeylElement> {
    let gens: Vec<_> = (0..n).map(|i| SignedPermutation::generator(n, i)).collect();
    let id = SignedPermutation::identity(n);
    let mut depth = HashMap::new();
    depth.insert(id.clone(), 0u32);
    let mut out = vec![WeylElement {
        perm: id.clone(),
        length: 0,
    }];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        let d = depth[&g];
        for s in &gens {
            let h = &g * s;
            if !depth.contains_key(&h) {
                depth.insert(h.clone(), d + 1);
                out.push(WeylElement {
                    perm: h.clone(),
                    length: d + 1,
                });
                queue.push_back(h);
            }
        }
    }
    out
}

/// All `2^n · n!` elements of `W_n` in breadth-first order, with lengths.
///
/// Groups are built once per rank and shared.
pub fn weyl_group(n: usize) -> Arc<Vec<WeylElement>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<WeylElement>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().unwrap().get(&n) {
        return g.clone();
    }
    let g = Arc::new(build_weyl_group(n));
    cache.lock().unwrap().entry(n).or_insert(g).clone()
}

/// `β^σ` with `β^σ_ī = β_{σ(ī)}`, reading `β_k = −β_k̄` for unbarred `k`.
pub fn act(sigma: &SignedPermutation, beta: &Weight) -> Result<Weight> {
    let n = sigma.rank();
    beta.check_rank(n)?;
    let mut out = Weight::zero(n);
    for i in 1..=n {
        let image = sigma.apply(-(i as i32));
        let k = image.unsigned_abs() as usize;
        *out.bar_mut(i) = if image < 0 { beta.bar(k) } else { -beta.bar(k) };
    }
    Ok(out)
}

/// `σ ∘ β = σ(β + ρ) − ρ`.
pub fn dot_act(sigma: &SignedPermutation, beta: &Weight) -> Result<Weight> {
    let rho = Weight::rho(sigma.rank());
    beta.check_rank(sigma.rank())?;
    Ok(&act(sigma, &(beta + &rho))? - &rho)
}

/// Straighten a Schur index: `s_β = sign · s_λ`, or `None` when `s_β = 0`.
pub fn straighten(beta: &Weight) -> Option<(i8, Partition)> {
    let n = beta.rank();
    let shifted = beta + &Weight::rho(n);
    let mut abs: Vec<i64> = shifted.coords().iter().map(|c| c.abs()).collect();
    if abs.contains(&0) {
        return None;
    }
    let flips = shifted.coords().iter().filter(|&&c| c < 0).count();
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            if abs[i] == abs[j] {
                return None;
            }
            if abs[i] < abs[j] {
                inversions += 1;
            }
        }
    }
    abs.sort_unstable_by(|a, b| b.cmp(a));
    let lambda = &Weight::new(abs) - &Weight::rho(n);
    let sign = if (flips + inversions) % 2 == 0 { 1 } else { -1 };
    Some((sign, lambda))
}

//! Cocyclage, the reduction `T ↦ T_$`, charge chains, the charge statistic
//! and cyclage graphs.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::crystal::{string_lengths, weyl_reflect, word_weight, Letter, Word};
use crate::error::{Error, Result};
use crate::insertion::{insert_into_tableau, insertion_tableau, reverse_insert};
use crate::tableau::{is_symplectic_any, reading, Column, Tableau};
use crate::weyl::Weight;

/// `ξ(xu) = ux`.
pub fn cocyclage_shift(w: &[Letter]) -> Result<Word> {
    let (&x, rest) = w.split_first().ok_or(Error::EmptyWord)?;
    let mut out = rest.to_vec();
    out.push(x);
    Ok(out)
}

/// Cocyclage is authorized unless some letter lies in every column while
/// its conjugate is absent from the tableau.
pub fn is_authorized(t: &Tableau) -> Result<bool> {
    let cols = t.columns();
    if cols.len() < 2 {
        return Err(Error::SingleColumn);
    }
    let blocked = cols[0]
        .letters()
        .iter()
        .any(|&y| cols.iter().all(|c| c.contains(y)) && !t.contains(-y));
    Ok(!blocked)
}

/// `T_*`: the tableau read by `w(T)` minus its first letter, with that letter.
fn split_first_box(t: &Tableau) -> (Letter, Tableau) {
    let mut cols = t.columns().to_vec();
    let last = cols.pop().expect("nonempty tableau");
    let mut letters = last.into_letters();
    let x = letters.remove(0);
    cols.push(Column::new(letters).expect("suffix of a column"));
    (
        x,
        Tableau::new(cols.into_iter().filter(|c| !c.is_empty()).collect()).expect("shape kept"),
    )
}

/// `U(T) = x → T_*` where `w(T) = x·w(T_*)`.
pub fn cocycle(t: &Tableau) -> Result<Tableau> {
    if !is_authorized(t)? {
        return Err(Error::Unauthorized);
    }
    let (x, rest) = split_first_box(t);
    Ok(insert_into_tableau(x, &rest))
}

/// Weight in rank `n`, requiring letters beyond `n` to cancel.
pub fn weight_in_rank(t: &Tableau, n: usize) -> Result<Weight> {
    let m = t.min_rank().max(n);
    let full = word_weight(&reading(t), m)?;
    if full.coords()[..m - n].iter().any(|&c| c != 0) {
        return Err(Error::Reduction("weight has support beyond the rank"));
    }
    Ok(Weight::new(full.coords()[m - n..].to_vec()))
}

/// One `$`-operation: erase every `n̄`, then shift `n̄ < x < n` by `t`.
pub fn dollar(t: &Tableau, n: usize) -> Result<Tableau> {
    let n = n as Letter;
    if t.contains(n) {
        return Err(Error::Reduction("tableau contains the letter n"));
    }
    let cols = t
        .columns()
        .iter()
        .map(|c| {
            let letters = c
                .letters()
                .iter()
                .filter(|&&x| x != -n)
                .map(|&x| if -n < x && x < n { shift(x) } else { x })
                .collect::<Vec<_>>();
            Column::new(letters)
        })
        .collect::<Result<Vec<_>>>()?;
    Tableau::new(cols.into_iter().filter(|c| !c.is_empty()).collect())
}

fn shift(x: Letter) -> Letter {
    if x > 0 {
        x + 1
    } else {
        x - 1
    }
}

fn is_terminal(t: &Tableau, n: usize) -> Result<bool> {
    Ok(t.num_columns() <= 1 && weight_in_rank(t, n)?.is_zero())
}

fn needs_reduction(t: &Tableau, n: usize) -> Result<bool> {
    if is_terminal(t, n)? {
        return Ok(false);
    }
    if t.num_columns() <= 1 {
        return Ok(true);
    }
    Ok(!is_authorized(t)?)
}

fn check_dominant(t: &Tableau, n: usize) -> Result<()> {
    weight_in_rank(t, n)?.check_dominant()
}

/// Result of [`reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub tableau: Tableau,
    /// Smallest rank containing every letter of the reduced tableau.
    pub rank: usize,
    /// Number of `$`-operations applied.
    pub steps: usize,
}

/// `T̂`: apply `$` while cocyclage is unauthorized (or `T` is a column of
/// nonzero weight).
pub fn reduce(t: &Tableau, n: usize) -> Result<Reduced> {
    check_dominant(t, n)?;
    let mut cur = t.clone();
    let mut steps = 0;
    while needs_reduction(&cur, n)? {
        cur = dollar(&cur, n)?;
        check_dominant(&cur, n)?;
        steps += 1;
    }
    Ok(Reduced {
        rank: cur.min_rank(),
        tableau: cur,
        steps,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Start,
    Reduction,
    Cocyclage,
}

/// The tableaux visited from `T` down to its terminal column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeChain {
    pub steps: Vec<(Tableau, StepKind)>,
    pub terminal: Column,
    pub p: usize,
}

/// Alternate reduction and cocyclage until a column of weight 0 remains.
pub fn charge_chain(t: &Tableau, n: usize) -> Result<ChargeChain> {
    check_dominant(t, n)?;
    let mut steps = vec![(t.clone(), StepKind::Start)];
    let mut seen = HashSet::from([t.clone()]);
    let mut cur = t.clone();
    let mut p = 0;
    loop {
        while needs_reduction(&cur, n)? {
            cur = dollar(&cur, n)?;
            check_dominant(&cur, n)?;
            steps.push((cur.clone(), StepKind::Reduction));
        }
        if is_terminal(&cur, n)? {
            break;
        }
        cur = cocycle(&cur)?;
        p += 1;
        if !seen.insert(cur.clone()) {
            return Err(Error::ChainRepetition);
        }
        steps.push((cur.clone(), StepKind::Cocyclage));
    }
    let terminal = cur.columns().first().cloned().unwrap_or_default();
    Ok(ChargeChain { steps, terminal, p })
}

/// `ch_n(C) = 2 Σ_{i ∈ E_C} (n − i)` with `E_C = {i ≥ 1 : i ∈ C, i+1 ∉ C}`.
pub fn charge_column(c: &Column, n: usize) -> Result<i64> {
    if !word_weight(c.letters(), crate::crystal::min_rank(c.letters()))?.is_zero() {
        return Err(Error::NonzeroWeight);
    }
    Ok(2 * c
        .letters()
        .iter()
        .filter(|&&i| i > 0 && !c.contains(i + 1))
        .map(|&i| n as i64 - i as i64)
        .sum::<i64>())
}

/// `2 Σ_{i=1}^{n−1} (n − i) ε_i(w(C))`.
pub fn charge_column_by_strings(c: &Column, n: usize) -> Result<i64> {
    if !word_weight(c.letters(), crate::crystal::min_rank(c.letters()))?.is_zero() {
        return Err(Error::NonzeroWeight);
    }
    Ok(2 * (1..n)
        .map(|i| (n - i) as i64 * string_lengths(c.letters(), i).0 as i64)
        .sum::<i64>())
}

/// `ch_n(T) = ch_n(C_T) + p`.
pub fn charge(t: &Tableau, n: usize) -> Result<i64> {
    let chain = charge_chain(t, n)?;
    let ch = charge_column(&chain.terminal, n)? + chain.p as i64;
    if ch < 0 {
        return Err(Error::NegativeCharge(ch));
    }
    Ok(ch)
}

/// `t(k) = k + 1`, `t(k̄) = (k+1)̄`.
pub fn translate(t: &Tableau) -> Tableau {
    t.map_letters(shift)
}

/// `s_i(T) = P(s_i(w(T)))`.
pub fn reflect_tableau(t: &Tableau, i: usize) -> Tableau {
    insertion_tableau(&weyl_reflect(&reading(t), i))
}

/// The tableaux `S` with an authorized cocyclage `U(S) = T′`, by reading.
pub fn predecessors(t: &Tableau) -> Vec<Tableau> {
    let mut out = BTreeMap::new();
    for corner in t.outside_corners() {
        let Ok((x, rest)) = reverse_insert(t, corner) else {
            continue;
        };
        if rest.is_empty() {
            continue;
        }
        let mut options = Vec::with_capacity(2);
        let mut cols = rest.columns().to_vec();
        let last = cols.last().expect("nonempty");
        if x < last.letters()[0] {
            let mut letters = vec![x];
            letters.extend_from_slice(last.letters());
            let n = cols.len();
            cols[n - 1] = Column::new(letters).expect("x is below the top");
            options.push(cols);
        }
        let mut cols = rest.columns().to_vec();
        cols.push(Column::new(vec![x]).expect("single letter"));
        options.push(cols);
        for cols in options {
            let Ok(s) = Tableau::new(cols) else { continue };
            if s.num_columns() >= 2
                && is_symplectic_any(&s)
                && is_authorized(&s) == Ok(true)
                && cocycle(&s).as_ref() == Ok(t)
            {
                out.insert(reading(&s), s);
            }
        }
    }
    out.into_values().collect()
}

/// A connected component of the cyclage graph.
///
/// Vertices are sorted lexicographically by reading; edges `(i, j)` mean
/// `U(vertices[i]) = vertices[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclageGraph {
    pub vertices: Vec<Tableau>,
    pub edges: Vec<(usize, usize)>,
}

impl CyclageGraph {
    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.vertices.iter().position(|v| v == t)
    }

    pub fn successor(&self, i: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.0 == i).map(|e| e.1)
    }

    /// Vertices without an outgoing edge.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.successor(i).is_none())
            .collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(Tableau, Tableau)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.vertices[a].clone(), self.vertices[b].clone()))
            .collect()
    }
}

/// `Γ(T)`: close `{T}` under authorized cocyclage and its predecessors.
pub fn component(t: &Tableau) -> CyclageGraph {
    let mut found: BTreeMap<Word, Tableau> = BTreeMap::new();
    let mut edges: BTreeSet<(Word, Word)> = BTreeSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    found.insert(reading(t), t.clone());
    while let Some(v) = queue.pop_front() {
        let rv = reading(&v);
        let mut next = predecessors(&v);
        for p in &next {
            edges.insert((reading(p), rv.clone()));
        }
        if v.num_columns() >= 2 && is_authorized(&v) == Ok(true) {
            if let Ok(u) = cocycle(&v) {
                edges.insert((rv.clone(), reading(&u)));
                next.push(u);
            }
        }
        for u in next {
            let ru = reading(&u);
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(ru) {
                e.insert(u.clone());
                queue.push_back(u);
            }
        }
    }
    let keys: Vec<&Word> = found.keys().collect();
    let index = |w: &Word| keys.binary_search(&w).expect("vertex present");
    let edges = edges.iter().map(|(a, b)| (index(a), index(b))).collect();
    CyclageGraph {
        vertices: found.values().cloned().collect(),
        edges,
    }
}

/// An injective, shape-preserving map `small → big` carrying every edge of
/// `small` to an edge of `big`, if one exists.
pub fn find_embedding(small: &CyclageGraph, big: &CyclageGraph) -> Option<Vec<usize>> {
    fn go(
        i: usize,
        small: &CyclageGraph,
        big: &CyclageGraph,
        big_edges: &HashSet<(usize, usize)>,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == small.vertices.len() {
            return true;
        }
        let shape = small.vertices[i].shape();
        for j in 0..big.vertices.len() {
            if used[j] || big.vertices[j].shape() != shape {
                continue;
            }
            let consistent = small.edges.iter().all(|&(a, b)| {
                if a > i || b > i || (a != i && b != i) {
                    return true;
                }
                let fa = if a == i { j } else { map[a] };
                let fb = if b == i { j } else { map[b] };
                big_edges.contains(&(fa, fb))
            });
            if !consistent {
                continue;
            }
            map.push(j);
            used[j] = true;
            if go(i + 1, small, big, big_edges, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    let big_edges: HashSet<(usize, usize)> = big.edges.iter().copied().collect();
    let mut map = Vec::new();
    let mut used = vec![false; big.vertices.len()];
    go(0, small, big, &big_edges, &mut map, &mut used).then_some(map)
}

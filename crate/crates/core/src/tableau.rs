//! Columns, admissibility and symplectic tableaux.

use std::fmt;
use std::str::FromStr;

use crate::crystal::{min_rank, word_weight, Letter, Word};
use crate::error::{Error, Result};
use crate::weyl::Weight;

/// A strictly increasing column, read top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Column(Vec<Letter>);

impl Column {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        if letters.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotAColumn(letters));
        }
        Ok(Column(letters))
    }

    pub(crate) fn from_sorted(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] < w[1]) && !letters.contains(&0));
        Column(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Unbarred `z` with both `z` and `z̄` in the column, ascending.
    pub fn pairs(&self) -> Vec<Letter> {
        self.0
            .iter()
            .copied()
            .filter(|&z| z > 0 && self.contains(-z))
            .collect()
    }

    /// Row-wise comparison `self ≤ other`: `h(self) ≥ h(other)` and each
    /// row of the two-column tableau `self other` weakly increases.
    pub fn row_leq(&self, other: &Column) -> bool {
        self.height() >= other.height() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `(lC, rC)` if `C` is `n`-admissible.
pub fn admissible_split(c: &Column, n: usize) -> Option<(Column, Column)> {
    if min_rank(c.letters()) > n {
        return None;
    }
    let zs = c.pairs();
    let mut ts = Vec::with_capacity(zs.len());
    let mut floor = 0;
    for &z in &zs {
        let lo = floor.max(z) + 1;
        let t = (lo..=n as Letter).find(|&t| !c.contains(t) && !c.contains(-t))?;
        ts.push(t);
        floor = t;
    }
    let swap = |from: &dyn Fn(Letter) -> Letter, to: &dyn Fn(Letter) -> Letter| {
        let mut letters: Vec<Letter> = c
            .letters()
            .iter()
            .map(|&x| {
                zs.iter()
                    .position(|&z| from(z) == x)
                    .map_or(x, |k| to(ts[k]))
            })
            .collect();
        letters.sort_unstable();
        Column::from_sorted(letters)
    };
    let left = swap(&|z| -z, &|t| -t);
    let right = swap(&|z| z, &|t| t);
    Some((left, right))
}

pub fn is_admissible(c: &Column, n: usize) -> bool {
    admissible_split(c, n).is_some()
}

/// A box position `(row, col)`, both 0-based.
pub type Position = (usize, usize);

/// A tableau stored as columns, left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    columns: Vec<Column>,
}

impl Tableau {
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        if columns.iter().any(Column::is_empty)
            || columns.windows(2).any(|w| w[0].height() < w[1].height())
        {
            return Err(Error::BadShape);
        }
        Ok(Tableau { columns })
    }

    /// Drops empty columns; panics on a non-Young shape.
    pub(crate) fn from_columns(columns: Vec<Column>) -> Self {
        let columns: Vec<Column> = columns.into_iter().filter(|c| !c.is_empty()).collect();
        debug_assert!(columns.windows(2).all(|w| w[0].height() >= w[1].height()));
        Tableau { columns }
    }

    pub fn from_letter_columns(columns: &[&[Letter]]) -> Result<Self> {
        let cols = columns
            .iter()
            .map(|c| Column::new(c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(cols)
    }

    /// Build from rows, top to bottom, each row left to right.
    pub fn from_rows(rows: &[&[Letter]]) -> Result<Self> {
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::BadShape);
        }
        let width = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![Vec::new(); width];
        for row in rows {
            for (j, &x) in row.iter().enumerate() {
                cols[j].push(x);
            }
        }
        let cols = cols
            .into_iter()
            .map(Column::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(cols)
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn num_boxes(&self) -> usize {
        self.columns.iter().map(Column::height).sum()
    }

    /// Column heights, left to right.
    pub fn column_heights(&self) -> Vec<usize> {
        self.columns.iter().map(Column::height).collect()
    }

    /// Row lengths, top to bottom.
    pub fn shape(&self) -> Vec<usize> {
        let h = self.columns.first().map_or(0, Column::height);
        (0..h)
            .map(|r| self.columns.iter().filter(|c| c.height() > r).count())
            .collect()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.columns
            .iter()
            .flat_map(|c| c.letters().iter().copied())
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.columns.iter().any(|c| c.contains(x))
    }

    /// Smallest `m` with every letter in `C_m`.
    pub fn min_rank(&self) -> usize {
        self.letters()
            .map(|x| x.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn weight(&self, n: usize) -> Result<Weight> {
        word_weight(&reading(self), n)
    }

    /// Outside corners, bottom row first, left to right within a row.
    pub fn outside_corners(&self) -> Vec<Position> {
        let mut out: Vec<Position> = (0..self.columns.len())
            .filter(|&j| {
                self.columns
                    .get(j + 1)
                    .is_none_or(|next| next.height() < self.columns[j].height())
            })
            .map(|j| (self.columns[j].height() - 1, j))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        out
    }

    /// Apply a letter map to every box.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Tableau {
        Tableau::from_columns(
            self.columns
                .iter()
                .map(|c| Column::from_sorted(c.letters().iter().map(|&x| f(x)).collect()))
                .collect(),
        )
    }
}

/// `w(T) = w(C_r) … w(C_1)`, each column read top to bottom.
pub fn reading(t: &Tableau) -> Word {
    t.columns
        .iter()
        .rev()
        .flat_map(|c| c.letters().iter().copied())
        .collect()
}

/// Every column is `n`-admissible and `rC_i ≤ lC_{i+1}`.
pub fn is_symplectic(t: &Tableau, n: usize) -> bool {
    let mut prev_right: Option<Column> = None;
    for (j, c) in t.columns.iter().enumerate() {
        if j > 0 && t.columns[j - 1].height() < c.height() {
            return false;
        }
        let Some((left, right)) = admissible_split(c, n) else {
            return false;
        };
        if let Some(pr) = &prev_right {
            if !pr.row_leq(&left) {
                return false;
            }
        }
        prev_right = Some(right);
    }
    true
}

/// Symplectic for some rank; admissibility only weakens as the rank grows.
pub fn is_symplectic_any(t: &Tableau) -> bool {
    let h = t.columns.first().map_or(0, Column::height);
    is_symplectic(t, t.min_rank() + h)
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| {
                c.letters()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&cols.join(";"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau(\"{self}\")")
    }
}

/// Columns separated by `;`, letters by `,`, barred letters with a leading `-`.
impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::default());
        }
        let cols = s
            .split(';')
            .map(|col| {
                let letters = col
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<Letter>()
                            .map_err(|_| Error::Parse(format!("bad letter {:?}", x.trim())))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Column::new(letters)
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(cols)
    }
}

//! Words over `C_∞` as vertices of the type C crystal: weights, Kashiwara
//! operators by the signature rule, and the Weyl group action on words.
//!
//! A letter is a nonzero `i32`; `-k` stands for `k̄`, and the integer order
//! realizes `n̄ < … < 1̄ < 1 < … < n`.

use crate::error::{Error, Result};
use crate::weyl::Weight;

pub type Letter = i32;
pub type Word = Vec<Letter>;

/// Direction of a crystal operator: `Raise` is `ẽ_i`, `Lower` is `f̃_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// `(d_n̄, …, d_1̄)` where `d_ī = #ī − #i`.
pub fn word_weight(w: &[Letter], n: usize) -> Result<Weight> {
    let mut out = Weight::zero(n);
    for &x in w {
        let k = x.unsigned_abs() as usize;
        if k == 0 || k > n {
            return Err(Error::LetterOutOfRange { letter: x, rank: n });
        }
        *out.bar_mut(k) += if x < 0 { 1 } else { -1 };
    }
    Ok(out)
}

/// Smallest rank whose alphabet contains every letter of `w`.
pub fn min_rank(w: &[Letter]) -> usize {
    w.iter()
        .map(|x| x.unsigned_abs() as usize)
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sym {
    Plus,
    Minus,
}

fn symbol(x: Letter, i: usize) -> Option<Sym> {
    let i = i as i32;
    if i == 0 {
        return match x {
            -1 => Some(Sym::Plus),
            1 => Some(Sym::Minus),
            _ => None,
        };
    }
    if x == -(i + 1) || x == i {
        Some(Sym::Plus)
    } else if x == -i || x == i + 1 {
        Some(Sym::Minus)
    } else {
        None
    }
}

/// Positions of the unmatched `−` and `+` symbols after cancelling `+−` pairs.
fn reduced_signature(w: &[Letter], i: usize) -> (Vec<usize>, Vec<usize>) {
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for (pos, &x) in w.iter().enumerate() {
        match symbol(x, i) {
            Some(Sym::Plus) => plus.push(pos),
            Some(Sym::Minus) if plus.pop().is_none() => minus.push(pos),
            Some(Sym::Minus) => {}
            None => {}
        }
    }
    (minus, plus)
}

fn raise_letter(x: Letter, i: usize) -> Letter {
    if i == 0 {
        -1
    } else {
        x - 1
    }
}

fn lower_letter(x: Letter, i: usize) -> Letter {
    if i == 0 {
        1
    } else {
        x + 1
    }
}

/// `ẽ_i(w)` or `f̃_i(w)`; `None` when the operator annihilates `w`.
pub fn crystal_step(w: &[Letter], i: usize, dir: Direction) -> Option<Word> {
    let (minus, plus) = reduced_signature(w, i);
    let mut out = w.to_vec();
    match dir {
        Direction::Raise => {
            let &pos = minus.last()?;
            out[pos] = raise_letter(out[pos], i);
        }
        Direction::Lower => {
            let &pos = plus.first()?;
            out[pos] = lower_letter(out[pos], i);
        }
    }
    Some(out)
}

/// `(ε_i(w), φ_i(w))`.
pub fn string_lengths(w: &[Letter], i: usize) -> (usize, usize) {
    let (minus, plus) = reduced_signature(w, i);
    (minus.len(), plus.len())
}

/// `s_i(w)`: reflect `w` through the middle of its `i`-string.
pub fn weyl_reflect(w: &[Letter], i: usize) -> Word {
    let (eps, phi) = string_lengths(w, i);
    let (dir, times) = if phi >= eps {
        (Direction::Lower, phi - eps)
    } else {
        (Direction::Raise, eps - phi)
    };
    let mut out = w.to_vec();
    for _ in 0..times {
        out = crystal_step(&out, i, dir).expect("string is long enough");
    }
    out
}

/// Apply `s_{i_1}`, then `s_{i_2}`, … to `w`.
pub fn weyl_reflect_seq(w: &[Letter], colors: &[usize]) -> Word {
    colors
        .iter()
        .fold(w.to_vec(), |acc, &i| weyl_reflect(&acc, i))
}

/// `ẽ_i(w) = 0` for every color `0 ≤ i < n`.
pub fn is_highest(w: &[Letter], n: usize) -> bool {
    (0..n).all(|i| string_lengths(w, i).0 == 0)
}

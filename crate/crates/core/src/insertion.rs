//! Contraction-free column insertion, tableau insertion `x → T`, the
//! insertion tableau `P(w)` and reverse insertion from an outside corner.

use crate::crystal::Letter;
use crate::error::{Error, Result};
use crate::tableau::{Column, Position, Tableau};

/// Outcome of `x → C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnInsertion {
    /// `x > max(C)`: the box is added at the bottom.
    Appended(Column),
    /// The column keeps its height and the letter is bumped out.
    Bumped(Column, Letter),
}

/// `x → [a, b]` for `a < b` and `x ≤ b`: returns the new column and the bumped letter.
fn two_letter(x: Letter, a: Letter, b: Letter) -> ((Letter, Letter), Letter) {
    if a < x && x <= b && b != -a {
        ((a, x), b)
    } else if x <= a && a < b && b != -x {
        ((x, b), a)
    } else if a == -b && -b <= x && x <= b {
        ((-(b + 1), x), b + 1)
    } else if x == -b && -b < a && a < b {
        ((-(b - 1), b - 1), a)
    } else {
        unreachable!("two-letter insertion of {x} into [{a}, {b}]")
    }
}

/// Inverse of [`two_letter`]: the `(x, a, b)` with `x → [a, b] = ([p, q], y)`.
fn reverse_two(p: Letter, q: Letter, y: Letter) -> Option<(Letter, Letter, Letter)> {
    let mut candidates = Vec::with_capacity(4);
    candidates.push((q, p, y));
    candidates.push((p, y, q));
    if y >= 2 {
        candidates.push((q, -(y - 1), y - 1));
    }
    if q >= 1 {
        candidates.push((-(q + 1), y, q + 1));
    }
    candidates.into_iter().find(|&(x, a, b)| {
        a < b && x <= b && x != 0 && a != 0 && two_letter(x, a, b) == ((p, q), y)
    })
}

/// `x → C` without contraction.
pub fn insert_into_column(x: Letter, c: &Column) -> ColumnInsertion {
    let letters = c.letters();
    let k = letters.len();
    if k == 0 || x > letters[k - 1] {
        let mut out = letters.to_vec();
        out.push(x);
        return ColumnInsertion::Appended(Column::from_sorted(out));
    }
    if k == 1 {
        return ColumnInsertion::Bumped(Column::from_sorted(vec![x]), letters[0]);
    }
    let ((delta, d), y) = two_letter(x, letters[k - 2], letters[k - 1]);
    if k == 2 {
        return ColumnInsertion::Bumped(Column::from_sorted(vec![delta, d]), y);
    }
    let mut rest = letters[..k - 2].to_vec();
    rest.push(y);
    match insert_into_column(delta, &Column::from_sorted(rest)) {
        ColumnInsertion::Bumped(top, z) => {
            let mut out = top.into_letters();
            out.push(d);
            ColumnInsertion::Bumped(Column::from_sorted(out), z)
        }
        ColumnInsertion::Appended(_) => unreachable!("δ never exceeds the bumped letter"),
    }
}

/// The unique `(x, C)` with `x → C = (C′, z)`, if any.
fn reverse_column(c: &Column, z: Letter) -> Option<(Letter, Column)> {
    let letters = c.letters();
    let k = letters.len();
    let found = match k {
        0 => None,
        1 => (letters[0] <= z).then(|| (letters[0], vec![z])),
        2 => reverse_two(letters[0], letters[1], z).map(|(x, a, b)| (x, vec![a, b])),
        _ => {
            let d = letters[k - 1];
            let (delta, inner) =
                reverse_column(&Column::from_sorted(letters[..k - 1].to_vec()), z)?;
            let inner = inner.into_letters();
            let y = inner[k - 2];
            let (x, a, b) = reverse_two(delta, d, y)?;
            let mut out = inner[..k - 2].to_vec();
            out.push(a);
            out.push(b);
            Some((x, out))
        }
    }?;
    let (x, out) = found;
    let col = Column::new(out).ok()?;
    (insert_into_column(x, &col) == ColumnInsertion::Bumped(c.clone(), z)).then_some((x, col))
}

/// `x → T`: insert into `C_1`, bumping into the following columns.
pub fn insert_into_tableau(x: Letter, t: &Tableau) -> Tableau {
    let mut cols = t.columns().to_vec();
    let mut carry = x;
    let mut j = 0;
    loop {
        if j == cols.len() {
            cols.push(Column::from_sorted(vec![carry]));
            break;
        }
        match insert_into_column(carry, &cols[j]) {
            ColumnInsertion::Appended(c) => {
                cols[j] = c;
                break;
            }
            ColumnInsertion::Bumped(c, y) => {
                cols[j] = c;
                carry = y;
            }
        }
        j += 1;
    }
    Tableau::from_columns(cols)
}

/// `P(w)`: insert the letters of `w` from left to right.
pub fn insertion_tableau(w: &[Letter]) -> Tableau {
    w.iter()
        .fold(Tableau::default(), |t, &x| insert_into_tableau(x, &t))
}

/// The unique `(x, T)` with `x → T = T′` and `T` missing the given corner.
pub fn reverse_insert(t: &Tableau, corner: Position) -> Result<(Letter, Tableau)> {
    if !t.outside_corners().contains(&corner) {
        return Err(Error::InvalidCorner {
            row: corner.0,
            col: corner.1,
        });
    }
    let mut cols = t.columns().to_vec();
    let mut bottom = cols[corner.1].letters().to_vec();
    let mut carry = bottom.pop().expect("corner box exists");
    cols[corner.1] = Column::from_sorted(bottom);
    for j in (0..corner.1).rev() {
        let (x, c) = reverse_column(&cols[j], carry).ok_or(Error::NoPreimage)?;
        cols[j] = c;
        carry = x;
    }
    let cols: Vec<Column> = cols.into_iter().filter(|c| !c.is_empty()).collect();
    let before = Tableau::new(cols).map_err(|_| Error::NoPreimage)?;
    if insert_into_tableau(carry, &before) != *t {
        return Err(Error::NoPreimage);
    }
    Ok((carry, before))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::reading;

    fn col(c: &[Letter]) -> Column {
        Column::new(c.to_vec()).unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn column_examples() {
        let c = col(&[-4, -2, 2, 3, 4]);
        assert_eq!(
            insert_into_column(5, &c),
            ColumnInsertion::Appended(col(&[-4, -2, 2, 3, 4, 5]))
        );
        assert_eq!(
            insert_into_column(-4, &c),
            ColumnInsertion::Bumped(col(&[-4, -3, -2, 2, 3]), 3)
        );
        assert_eq!(
            insert_into_column(-2, &col(&[1])),
            ColumnInsertion::Bumped(col(&[-2]), 1)
        );
    }

    #[test]
    fn two_letter_cases() {
        assert_eq!(two_letter(1, -1, 2), ((-1, 1), 2));
        assert_eq!(two_letter(-3, -1, 2), ((-3, 2), -1));
        assert_eq!(two_letter(1, -1, 1), ((-2, 1), 2));
        assert_eq!(two_letter(-2, -1, 2), ((-1, 1), -1));
        for a in -3..=3 {
            for b in a + 1..=3 {
                for x in -3..=b {
                    if a == 0 || b == 0 || x == 0 {
                        continue;
                    }
                    let ((p, q), y) = two_letter(x, a, b);
                    assert_eq!(reverse_two(p, q, y), Some((x, a, b)));
                }
            }
        }
    }

    #[test]
    fn tableau_example() {
        let base = t("-1,1,3;1,2;2");
        let once = insert_into_tableau(1, &base);
        assert_eq!(once, t("-2,1,3;1,2;2;2"));
        assert_eq!(insert_into_tableau(2, &once), t("-2,1,2;1,2,3;2;2"));
        assert_eq!(insert_into_tableau(2, &t("-1;-1")), t("-1,2;-1"));
        assert_eq!(insert_into_tableau(-3, &Tableau::default()), t("-3"));
    }

    #[test]
    fn insertion_tableau_examples() {
        assert_eq!(insertion_tableau(&[2, -2, -1, 1]), t("-2,-1,1;2"));
        assert_eq!(insertion_tableau(&[1, 2, -2, -1, -1]), t("-2,-1;-1,2;1"));
        assert_eq!(insertion_tableau(&[4]), t("4"));
        for s in [
            "-4,-2,2;-3,-2;-2,-1",
            "-2,1,3;1,2;2",
            "-3,-2,1;-3,-1",
            "-1;-1;1;1",
        ] {
            assert_eq!(insertion_tableau(&reading(&t(s))), t(s));
        }
    }

    #[test]
    fn reverse_examples() {
        let tp = t("-2,1,3;1,2;2");
        let got: Vec<_> = tp
            .outside_corners()
            .into_iter()
            .map(|c| reverse_insert(&tp, c).unwrap())
            .collect();
        assert_eq!(
            got,
            vec![
                (3, t("-2,1;1,2;2")),
                (1, t("-1,1,3;1;2")),
                (1, t("-1,1,3;1,2")),
            ]
        );
        assert_eq!(
            reverse_insert(&t("-2,1,3"), (2, 0)).unwrap(),
            (3, t("-2,1"))
        );
        assert!(matches!(
            reverse_insert(&tp, (0, 0)),
            Err(Error::InvalidCorner { .. })
        ));
    }
}

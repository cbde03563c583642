//! Sparse univariate polynomials in `q` with exact coefficients.
//!
//! The coefficient ring is a type parameter; [`crate::Poly`] fixes it to
//! `i64`, [`crate::BigPoly`] to arbitrary precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

use crate::error::{Error, Result};

/// Exact signed coefficient ring usable in a [`QPolynomial`].
pub trait Coefficient:
    Clone + Ord + Signed + FromPrimitive + FromStr + fmt::Display + fmt::Debug + Send + Sync + 'static
{
}

impl<C> Coefficient for C where
    C: Clone
        + Ord
        + Signed
        + FromPrimitive
        + FromStr
        + fmt::Display
        + fmt::Debug
        + Send
        + Sync
        + 'static
{
}

/// A polynomial `Σ c_k q^k`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPolynomial<C> {
    terms: BTreeMap<u32, C>,
}

impl<C: Coefficient> Default for QPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> QPolynomial<C> {
    pub fn zero() -> Self {
        QPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `c * q^exp`.
    pub fn monomial(exp: u32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: u32) -> Self {
        Self::monomial(exp, C::one())
    }

    /// Sum of `q^e` over the given exponents, with repetition.
    pub fn from_exponents<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.add_term(e, C::one());
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        QPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a.clone() * c.clone());
        }
        out
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Convert to another coefficient ring; `None` if a coefficient does not fit.
    pub fn convert<D: Coefficient>(&self) -> Option<QPolynomial<D>>
    where
        C: num_traits::ToPrimitive,
    {
        let mut out = QPolynomial::<D>::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, D::from_i128(c.to_i128()?)?);
        }
        Some(out)
    }
}

impl<C: Coefficient> AddAssign<&QPolynomial<C>> for QPolynomial<C> {
    fn add_assign(&mut self, rhs: &QPolynomial<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coefficient> Add for &QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn add(self, rhs: &QPolynomial<C>) -> QPolynomial<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn add(mut self, rhs: QPolynomial<C>) -> QPolynomial<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> Neg for &QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn neg(self) -> QPolynomial<C> {
        QPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Neg for QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn neg(self) -> QPolynomial<C> {
        -&self
    }
}

impl<C: Coefficient> Sub for &QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn sub(self, rhs: &QPolynomial<C>) -> QPolynomial<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Sub for QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn sub(self, rhs: QPolynomial<C>) -> QPolynomial<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn mul(self, rhs: &QPolynomial<C>) -> QPolynomial<C> {
        let mut out = QPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for QPolynomial<C> {
    type Output = QPolynomial<C>;
    fn mul(self, rhs: QPolynomial<C>) -> QPolynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> std::iter::Sum for QPolynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

/// Ascending exponents, unit coefficients suppressed: `q^2 + 2*q^4 - q^5`.
impl<C: Coefficient> fmt::Display for QPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let m = c.abs();
            let unit = m.is_one();
            match *e {
                0 => write!(f, "{m}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{m}*q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{m}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for QPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

impl<C: Coefficient> FromStr for QPolynomial<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = Self::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            let bad = || Error::Parse(format!("bad term {piece:?}"));
            let (coef, rest) = match body.find('q') {
                None => (body, None),
                Some(pos) => {
                    let head = &body[..pos];
                    let coef = match head {
                        "" => "1",
                        h => h.strip_suffix('*').ok_or_else(bad)?,
                    };
                    (coef, Some(&body[pos + 1..]))
                }
            };
            let c: C = coef.parse().map_err(|_| bad())?;
            let exp = match rest {
                None => 0,
                Some("") => 1,
                Some(r) => r
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(bad)?,
            };
            out.add_term(exp, if neg { -c } else { c });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::Poly;

    #[test]
    fn display_format() {
        let p = Poly::from_exponents([2, 4, 4, 6, 6, 8]);
        assert_eq!(p.to_string(), "q^2 + 2*q^4 + 2*q^6 + q^8");
        assert_eq!(Poly::one().to_string(), "1");
        assert_eq!(Poly::zero().to_string(), "0");
        let r = &Poly::q_pow(1) - &Poly::one();
        assert_eq!(r.to_string(), "-1 + q");
        assert_eq!((-Poly::monomial(3, 2)).to_string(), "-2*q^3");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "0",
            "1",
            "q",
            "q^2 + 2*q^4 + 2*q^6 + q^8",
            "-1 + q",
            "3 - 2*q^3 + q^7",
        ] {
            let p: Poly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("q^".parse::<Poly>().is_err());
        assert!("2q".parse::<Poly>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a: Poly = "1 + q".parse().unwrap();
        let b: Poly = "1 - q".parse().unwrap();
        assert_eq!((&a * &b).to_string(), "1 - q^2");
        assert!((&a - &a).is_zero());
        assert_eq!(a.shift(2).to_string(), "q^2 + q^3");
        assert_eq!(a.eval_one(), 2);
    }

    #[test]
    fn big_coefficients() {
        let p: crate::BigPoly = "q + q^2".parse().unwrap();
        let sq = &p * &p;
        assert_eq!(sq.to_string(), "q^2 + 2*q^3 + q^4");
        assert_eq!(
            Poly::from_exponents([1, 2]).convert::<num_bigint::BigInt>(),
            Some(p)
        );
    }
}

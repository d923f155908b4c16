//! Coefficient fields and dense linear algebra for the oracle.
//!
//! The field is a runtime value so that a prime can be chosen from the
//! environment: `GENTLE_FIELD=rationals` (the default) or `GENTLE_FIELD=gf:<p>`.

use std::fmt::Debug;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Field: Sync + Send {
    type E: Clone + PartialEq + Debug + Send + Sync;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    /// Image of a rational number; `None` when the denominator vanishes.
    fn from_rational(&self, q: &BigRational) -> Option<Self::E>;
    fn from_i64(&self, n: i64) -> Self::E;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// The prime field `GF(p)`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        let is_prime = p >= 2
            && (2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if !is_prime || p >= 1 << 31 {
            return Err(Error::Precondition(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, n: &BigInt) -> u64 {
        let r = n % BigInt::from(self.p);
        let r = if r.is_negative() {
            r + BigInt::from(self.p)
        } else {
            r
        };
        r.to_u64().expect("residue fits")
    }
}

impl Field for PrimeField {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let d = self.reduce(q.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(&self.reduce(q.numer()), &self.inv(&d)))
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(&BigInt::from(n))
    }
}

/// The field selected for the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u64),
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rationals" || s == "Q" {
            return Ok(FieldChoice::Rationals);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Precondition(format!("bad prime in `{s}`")))?;
            PrimeField::new(p)?;
            return Ok(FieldChoice::Prime(p));
        }
        Err(Error::Precondition(format!(
            "unknown field `{s}`; use `rationals` or `gf:<p>`"
        )))
    }

    /// Reads `GENTLE_FIELD` once; unset means the rationals.
    pub fn from_env() -> Result<Self> {
        static CHOICE: OnceLock<std::result::Result<FieldChoice, String>> = OnceLock::new();
        CHOICE
            .get_or_init(|| match std::env::var("GENTLE_FIELD") {
                Ok(v) => FieldChoice::parse(&v).map_err(|e| match e {
                    Error::Precondition(m) => m,
                    other => other.to_string(),
                }),
                Err(_) => Ok(FieldChoice::Rationals),
            })
            .clone()
            .map_err(Error::Precondition)
    }
}

/// Row-reduces `m` in place (reduced echelon form) and returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut [Vec<F::E>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !f.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(row, p);
        let inv = f.inv(&m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r == row || f.is_zero(&line[col]) {
                continue;
            }
            let c = line[col].clone();
            for (x, y) in line.iter_mut().zip(&pivot_row).skip(col) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &[Vec<F::E>], ncols: usize) -> usize {
    let mut work = m.to_vec();
    rref(f, &mut work, ncols).len()
}

/// Basis of `{x : m·x = 0}` where `m` has `ncols` columns.
pub fn kernel<F: Field>(f: &F, m: &[Vec<F::E>], ncols: usize) -> Vec<Vec<F::E>> {
    let mut work = m.to_vec();
    let pivots = rref(f, &mut work, ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(&work[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Is the square matrix invertible?
pub fn is_invertible<F: Field>(f: &F, m: &[Vec<F::E>]) -> bool {
    m.iter().all(|r| r.len() == m.len()) && rank(f, m, m.len()) == m.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &f.inv(&3)), 1);
        assert_eq!(
            f.from_rational(&BigRational::new(1.into(), 2.into())),
            Some(4)
        );
        assert_eq!(f.from_rational(&BigRational::new(1.into(), 7.into())), None);
        assert!(PrimeField::new(8).is_err());
    }

    #[test]
    fn kernel_and_rank() {
        let q = Rationals;
        let m = vec![
            vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)],
            vec![q.from_i64(2), q.from_i64(4), q.from_i64(6)],
        ];
        assert_eq!(rank(&q, &m, 3), 1);
        let k = kernel(&q, &m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = (0..3).fold(q.zero(), |acc, i| q.add(&acc, &q.mul(&m[0][i], &v[i])));
            assert!(q.is_zero(&dot));
        }
    }

    #[test]
    fn parses_field_choice() {
        assert_eq!(
            FieldChoice::parse("rationals").unwrap(),
            FieldChoice::Rationals
        );
        assert_eq!(
            FieldChoice::parse("gf:101").unwrap(),
            FieldChoice::Prime(101)
        );
        assert!(FieldChoice::parse("gf:100").is_err());
        assert!(FieldChoice::parse("reals").is_err());
    }
}

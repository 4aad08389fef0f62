use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::format;

use crate::error::{Error, Position, Result};

/// An exact proportion `num/den` in `[0, 1]`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Proportion {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Proportion {
    pub const ZERO: Proportion = Proportion { num: 0, den: 1 };
    pub const ONE: Proportion = Proportion { num: 1, den: 1 };
    pub const HALF: Proportion = Proportion { num: 1, den: 2 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidProportion { num, den });
        }
        let g = gcd(num, den);
        Ok(Proportion {
            num: num / g,
            den: den / g,
        })
    }

    /// `k/n`, the proportions that matter on a graph of order `n`.
    pub fn of_order(k: usize, n: usize) -> Result<Self> {
        Self::new(k as u64, n as u64)
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Least `c` with `c / n >= self`.
    pub fn ceil_of(self, n: usize) -> usize {
        let prod = self.num as u128 * n as u128;
        prod.div_ceil(self.den as u128) as usize
    }

    /// `Some(k)` when `self == k/n` exactly.
    pub fn as_fraction_of(self, n: usize) -> Option<usize> {
        let prod = self.num as u128 * n as u128;
        prod.is_multiple_of(self.den as u128)
            .then(|| (prod / self.den as u128) as usize)
    }
}

impl Ord for Proportion {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Proportion {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Proportion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Proportion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"num/den"`. Decimal notation is rejected.
impl FromStr for Proportion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some((n, d)) = s.split_once('/') else {
            return Err(Error::parse(
                Position::Byte(0),
                format!("expected num/den, got {s:?}"),
            ));
        };
        let parse = |t: &str, at: usize| {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(
                    Position::Byte(at),
                    format!("not a nonnegative integer: {t:?}"),
                ));
            }
            t.parse::<u64>()
                .map_err(|e| Error::parse(Position::Byte(at), format!("{e}")))
        };
        let num = parse(n, 0)?;
        let den = parse(d, n.len() + 1)?;
        Proportion::new(num, den)
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive surgery coefficient `p/q` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSlope")]
pub struct Slope {
    p: u64,
    q: u64,
}

#[derive(Deserialize)]
struct RawSlope {
    p: u64,
    q: u64,
}

impl TryFrom<RawSlope> for Slope {
    type Error = Error;

    fn try_from(raw: RawSlope) -> Result<Self> {
        Slope::new(raw.p, raw.q)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Slope {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 || gcd(p, q) != 1 {
            return Err(Error::InvalidSlope(format!("{p}/{q}")));
        }
        Ok(Slope { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub(crate) fn pi(&self) -> i64 {
        self.p as i64
    }

    pub(crate) fn qi(&self) -> i64 {
        self.q as i64
    }

    /// `ceil(p/q)`.
    pub fn ceil(&self) -> u64 {
        self.p.div_ceil(self.q)
    }

    /// Every coprime slope with `p <= pmax`, `q <= qmax`, ordered by `(p, q)`.
    pub fn grid(pmax: u64, qmax: u64) -> Vec<Slope> {
        (1..=pmax)
            .flat_map(|p| (1..=qmax).filter_map(move |q| Slope::new(p, q).ok()))
            .collect()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidSlope(text.to_string());
        let (p, q) = match text.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (text.trim(), "1"),
        };
        let p = p.parse().map_err(|_| bad())?;
        let q = q.parse().map_err(|_| bad())?;
        Slope::new(p, q).map_err(|_| bad())
    }
}

use serde::Serialize;

use super::{line_degrees, PillowConfig};
use crate::error::{Error, Result};

/// Unordered pairs of lines sharing no vertex, by direct enumeration. Two
/// lines spanned by coordinate points meet exactly when they share one.
pub fn count_disjoint_line_pairs(c: &PillowConfig) -> u64 {
    let mut count = 0;
    for (i, x) in c.lines.iter().enumerate() {
        count += c.lines[i + 1..].iter().filter(|y| !x.meets(y)).count() as u64;
    }
    count
}

/// `C(E, 2)` minus the pairs meeting at each vertex, `sum_v C(deg v, 2)`.
/// Valid because two distinct lines share at most one vertex.
pub fn disjoint_pairs_from_degrees(c: &PillowConfig) -> u64 {
    let choose2 = |n: u64| n * n.saturating_sub(1) / 2;
    let meeting: u64 = line_degrees(c).values().map(|&d| choose2(d as u64)).sum();
    choose2(c.lines.len() as u64) - meeting
}

/// `(9g^2 - 51g + 78) / 2` for `g = 2ab + 1` with `a, b >= 2`.
pub fn formula_disjoint_pairs(g: u64) -> Result<u64> {
    let bad = || Error::InvalidParameter(format!("g = {g} is not 2ab + 1 with a, b >= 2"));
    if g < 9 || g % 2 == 0 {
        return Err(bad());
    }
    let ab = (g - 1) / 2;
    if !(2..).take_while(|a| a * a <= ab).any(|a| ab % a == 0) {
        return Err(bad());
    }
    let g = u128::from(g);
    let numerator = (9 * g * g + 78)
        .checked_sub(51 * g)
        .ok_or(Error::Overflow("disjoint pair formula"))?;
    if numerator % 2 != 0 {
        return Err(Error::NonIntegral(numerator as i128));
    }
    u64::try_from(numerator / 2).map_err(|_| Error::Overflow("disjoint pair formula"))
}

/// The three independent disjoint-pair counts for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCensus {
    pub brute_force: u64,
    pub from_degrees: u64,
    pub formula: u64,
}

impl PairCensus {
    pub fn of(c: &PillowConfig) -> Result<Self> {
        Ok(PairCensus {
            brute_force: count_disjoint_line_pairs(c),
            from_degrees: disjoint_pairs_from_degrees(c),
            formula: formula_disjoint_pairs(u64::from(c.g))?,
        })
    }

    pub fn agrees(&self) -> bool {
        self.brute_force == self.from_degrees && self.from_degrees == self.formula
    }
}

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ideals::growth::GrowthRecord;
use crate::ideals::sequence::g;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// Eventually constant or at least n-k+2.
    Constant,
    /// Polynomially bounded or at least G_n.
    QuasiFibonacci,
}

/// Window-relative reading of the constant/linear dichotomy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantVerdict {
    /// Last exact n.
    pub window: usize,
    /// The last three exact counts agree.
    pub constant_tail: bool,
    /// |X_n| >= n-k+2 at every exact n >= k.
    pub linear_floor: bool,
    /// The floor holds with equality at every exact n >= k.
    pub floor_tight: bool,
    /// Neither shape fits the window.
    pub violation: bool,
}

/// Pointwise comparison against G_n and against powers of n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiFibonacciVerdict {
    pub window: usize,
    /// The exact n with |X_n| < G_n.
    pub below_g: Vec<usize>,
    /// |X_n| = G_n at every exact n.
    pub equals_g: bool,
    /// Least c with |X_n| <= n^c for every exact n >= 2.
    pub poly_exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DichotomyVerdict {
    Constant(ConstantVerdict),
    QuasiFibonacci(QuasiFibonacciVerdict),
}

impl DichotomyVerdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, DichotomyVerdict::Constant(v) if v.violation)
    }
}

pub fn dichotomy_verdict(record: &GrowthRecord, theorem: Theorem) -> Result<DichotomyVerdict> {
    let counts = record.exact_counts();
    if counts.is_empty() {
        return Err(Error::InvalidArgument("record has no exact levels".into()));
    }
    let window = counts.last().unwrap().0;
    Ok(match theorem {
        Theorem::Constant => {
            let k = record.k;
            let tail = &counts[counts.len().saturating_sub(3)..];
            let constant_tail = tail.len() == 3 && tail.iter().all(|(_, c)| *c == tail[0].1);
            let floor = |n: usize| BigUint::from(n + 2 - k);
            let checked: Vec<_> = counts.iter().filter(|(n, _)| *n >= k).collect();
            let linear_floor = checked.iter().all(|(n, c)| *c >= floor(*n));
            let floor_tight = linear_floor && checked.iter().all(|(n, c)| *c == floor(*n));
            DichotomyVerdict::Constant(ConstantVerdict {
                window,
                constant_tail,
                linear_floor,
                floor_tight,
                violation: !constant_tail && !linear_floor,
            })
        }
        Theorem::QuasiFibonacci => {
            let below_g = counts.iter().filter(|(n, c)| *c < g(*n)).map(|(n, _)| *n).collect::<Vec<_>>();
            let equals_g = counts.iter().all(|(n, c)| *c == g(*n));
            let mut poly_exponent = 0u32;
            for (n, c) in counts.iter().filter(|(n, _)| *n >= 2) {
                while BigUint::from(*n).pow(poly_exponent) < *c {
                    poly_exponent += 1;
                }
            }
            DichotomyVerdict::QuasiFibonacci(QuasiFibonacciVerdict {
                window,
                below_g,
                equals_g,
                poly_exponent,
            })
        }
    })
}

impl fmt::Display for DichotomyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DichotomyVerdict::Constant(v) => write!(
                f,
                "theorem=constant window=1..{} constant_tail={} linear_floor={} floor_tight={} violation={}",
                v.window, v.constant_tail, v.linear_floor, v.floor_tight, v.violation
            ),
            DichotomyVerdict::QuasiFibonacci(v) => {
                let below: Vec<String> = v.below_g.iter().map(|n| n.to_string()).collect();
                write!(
                    f,
                    "theorem=quasi_fibonacci window=1..{} equals_g={} below_g={} poly_exponent={}",
                    v.window,
                    v.equals_g,
                    if below.is_empty() { "-".to_string() } else { below.join(",") },
                    v.poly_exponent
                )
            }
        }
    }
}

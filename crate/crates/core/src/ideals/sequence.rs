use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Fibonacci numbers, F_1 = F_2 = 1.
pub fn fibonacci(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("F_n is defined for n >= 1".into()));
    }
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 2..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    Ok(b)
}

/// G^k_n: G^k_0 = ... = G^k_{k-1} = 1 and G^k_n = G^k_{n-1} + G^k_{n-k}.
/// This is the number of compositions of n into parts 1 and k.
pub fn g_k(k: usize, n: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::InvalidArgument("G^k needs k >= 2".into()));
    }
    let mut v: Vec<BigUint> = vec![BigUint::one(); k.min(n + 1)];
    for i in k..=n {
        let next = &v[i - 1] + &v[i - k];
        v.push(next);
    }
    Ok(v.swap_remove(n))
}

/// G_n = G_{n-1} + G_{n-3}, G_0 = G_1 = G_2 = 1.
pub fn g(n: usize) -> BigUint {
    g_k(3, n).expect("k = 3 is valid")
}

/// A named sequence as accepted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceName {
    F,
    G,
    Gk(usize),
}

impl SequenceName {
    pub fn parse(name: &str, k: Option<usize>) -> Result<SequenceName> {
        match (name, k) {
            ("F", _) => Ok(SequenceName::F),
            ("G", None) => Ok(SequenceName::G),
            ("G", Some(k)) | ("Gk", Some(k)) => Ok(SequenceName::Gk(k)),
            ("Gk", None) => Err(Error::InvalidArgument("Gk needs k".into())),
            _ => Err(Error::InvalidArgument(format!("unknown sequence `{name}`"))),
        }
    }

    pub fn value(self, n: usize) -> Result<BigUint> {
        match self {
            SequenceName::F => fibonacci(n),
            SequenceName::G => Ok(g(n)),
            SequenceName::Gk(k) => g_k(k, n),
        }
    }

    pub fn label(self) -> String {
        match self {
            SequenceName::F => "F".into(),
            SequenceName::G => "G".into(),
            SequenceName::Gk(k) => format!("G{k}"),
        }
    }
}

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::zaks;

/// The monomial `U^a V^b W^c Π X_n^{d_n}` of the Zaks domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZaksWord {
    pub exponents: Vec<i64>,
}

fn letter(i: usize) -> String {
    match i {
        0 => "U".into(),
        1 => "V".into(),
        2 => "W".into(),
        n => format!("X_{}", n - 2),
    }
}

impl fmt::Display for ZaksWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { letter(i) } else { format!("{}^{e}", letter(i)) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Sends an exponent vector of the Zaks monoid to its monomial.
pub fn zaks_algebra_map(v: &[i64]) -> Result<ZaksWord> {
    if v.len() < 3 {
        return Err(Error::LengthMismatch { expected: 3, got: v.len() });
    }
    if !zaks::is_member(v) {
        return Err(Error::NotAMember(format!("{v:?}")));
    }
    Ok(ZaksWord { exponents: v.to_vec() })
}

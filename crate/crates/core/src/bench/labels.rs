use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::QuantumState;

const LETTERS: [char; 5] = ['s', 'p', 'd', 'f', 'g'];

/// Spectroscopic label such as `3d`: principal number `N`, orbital letter,
/// radial number `n = N - l - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StateLabel {
    pub text: String,
    pub n: u32,
    pub l: u32,
}

impl StateLabel {
    pub fn state(&self) -> QuantumState {
        QuantumState::new(self.n, self.l)
    }

    pub fn from_state(s: QuantumState) -> Result<Self> {
        let letter = LETTERS.get(s.l as usize).ok_or_else(|| Error::Label {
            label: format!("n={}, l={}", s.n, s.l),
            reason: "only l = 0..4 have letters".into(),
        })?;
        Ok(Self {
            text: format!("{}{}", s.n + s.l + 1, letter),
            n: s.n,
            l: s.l,
        })
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for StateLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_state_label(s)
    }
}

pub fn parse_state_label(text: &str) -> Result<StateLabel> {
    let fail = |reason: &str| Error::Label {
        label: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    let split = trimmed
        .find(|c: char| !c.is_ascii_digit())
        .ok_or_else(|| fail("missing orbital letter"))?;
    let (digits, rest) = trimmed.split_at(split);
    if digits.is_empty() {
        return Err(fail("missing principal number"));
    }
    let principal: u32 = digits.parse().map_err(|_| fail("principal number out of range"))?;
    let mut chars = rest.chars();
    let letter = chars.next().map(|c| c.to_ascii_lowercase());
    if chars.next().is_some() {
        return Err(fail("trailing characters after the orbital letter"));
    }
    let l = letter
        .and_then(|c| LETTERS.iter().position(|&x| x == c))
        .ok_or_else(|| fail("orbital letter must be one of s, p, d, f, g"))? as u32;
    if principal <= l {
        return Err(fail("principal number must exceed l"));
    }
    Ok(StateLabel {
        text: trimmed.to_string(),
        n: principal - l - 1,
        l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_labels() {
        let p = parse_state_label("2p").unwrap();
        assert_eq!((p.n, p.l), (0, 1));
        let g = parse_state_label("6g").unwrap();
        assert_eq!((g.n, g.l), (1, 4));
        let d = parse_state_label("3d").unwrap();
        assert_eq!((d.n, d.l), (0, 2));
        let s = parse_state_label("3s").unwrap();
        assert_eq!((s.n, s.l), (2, 0));
        assert_eq!(parse_state_label("12f").unwrap().n, 8);
    }

    #[test]
    fn rejects_bad_labels() {
        for bad in ["1p", "2d", "p", "3", "", "3x", "3pd", "0s"] {
            assert!(parse_state_label(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn round_trip_through_state() {
        for l in 0..5 {
            for n in 0..4 {
                let lab = StateLabel::from_state(QuantumState::new(n, l)).unwrap();
                assert_eq!(parse_state_label(&lab.text).unwrap(), lab);
            }
        }
    }
}

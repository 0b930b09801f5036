//! Residues mod 16, the value group of the Rochlin invariant.

use std::fmt;
use std::ops::{Add, Neg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mu(u8);

impl Mu {
    pub fn new<T: Into<i128>>(v: T) -> Self {
        let v: i128 = v.into();
        Mu(v.rem_euclid(16) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl Add for Mu {
    type Output = Mu;
    fn add(self, rhs: Mu) -> Mu {
        Mu::new(self.0 as i128 + rhs.0 as i128)
    }
}

impl Neg for Mu {
    type Output = Mu;
    fn neg(self) -> Mu {
        Mu::new(-(self.0 as i128))
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_wraps_mod_16() {
        assert_eq!(Mu::new(-2), Mu::new(14));
        assert_eq!(Mu::new(8) + Mu::new(8), Mu::new(0));
        assert_eq!(-Mu::new(1), Mu::new(15));
        assert_eq!(Mu::new(33).value(), 1);
    }
}

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

/// Exact nonnegative rational kept as its integer numerator and denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

/// Digits shown after the decimal point in reports.
pub const DISPLAY_DIGITS: u32 = 6;

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        Ratio { num, den }
    }

    pub fn is_defined(&self) -> bool {
        self.den != 0
    }

    /// Decimal expansion truncated (not rounded) to `digits` places.
    pub fn truncated(&self, digits: u32) -> Option<String> {
        if self.den == 0 {
            return None;
        }
        let (num, den) = (self.num as u128, self.den as u128);
        let int = num / den;
        let mut rest = num % den;
        let mut s = format!("{int}");
        if digits > 0 {
            s.push('.');
            for _ in 0..digits {
                rest *= 10;
                s.push(char::from(b'0' + (rest / den) as u8));
                rest %= den;
            }
        }
        Some(s)
    }

    pub fn display(&self) -> Option<String> {
        self.truncated(DISPLAY_DIGITS)
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.is_defined().then(|| self.num as f64 / self.den as f64)
    }

    /// Exact comparison; `None` if either side is undefined.
    pub fn cmp_exact(&self, other: &Ratio) -> Option<Ordering> {
        if !self.is_defined() || !other.is_defined() {
            return None;
        }
        let a = self.num as u128 * other.den as u128;
        let b = other.num as u128 * self.den as u128;
        Some(a.cmp(&b))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.display() {
            Some(s) => f.write_str(&s),
            None => f.write_str("-"),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Ratio", 3)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.serialize_field("decimal", &self.display())?;
        st.end()
    }
}

/// True when every consecutive pair is strictly decreasing.
pub fn strictly_decreasing(ratios: &[Ratio]) -> bool {
    ratios
        .windows(2)
        .all(|w| w[0].cmp_exact(&w[1]) == Some(Ordering::Greater))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_not_rounding() {
        assert_eq!(Ratio::new(87, 168).display().unwrap(), "0.517857");
        assert_eq!(Ratio::new(2, 3).display().unwrap(), "0.666666");
        assert_eq!(Ratio::new(1, 1).display().unwrap(), "1.000000");
        assert_eq!(Ratio::new(5, 87).truncated(4).unwrap(), "0.0574");
        assert_eq!(Ratio::new(7, 2).truncated(0).unwrap(), "3");
        assert!(Ratio::new(1, 0).display().is_none());
    }

    #[test]
    fn exact_ordering() {
        let r = [
            Ratio::new(5, 87),
            Ratio::new(8, 625),
            Ratio::new(14, 4831),
            Ratio::new(20, 39400),
        ];
        assert!(strictly_decreasing(&r));
        assert!(!strictly_decreasing(&[Ratio::new(1, 2), Ratio::new(2, 4)]));
        assert!(!strictly_decreasing(&[Ratio::new(1, 2), Ratio::new(1, 0)]));
    }
}

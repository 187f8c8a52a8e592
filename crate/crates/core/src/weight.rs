//! Exact extended non-negative weights.
//!
//! All cost comparisons in this crate are exact: a weight is either a
//! non-negative rational or `+inf` ("cannot intervene"). No floating point
//! enters any comparison; `f64` views exist only for reporting.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A vertex weight or a cost total: non-negative rational or `+inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Weight {
    Finite(BigRational),
    Infinite,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::Finite(BigRational::zero())
    }

    pub fn from_u64(v: u64) -> Self {
        Weight::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Weight::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Weight::Infinite)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Weight::Finite(r) if r.is_zero())
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            Weight::Finite(r) => Some(r),
            Weight::Infinite => None,
        }
    }

    /// Weight contribution of `copies` appearances of this weight.
    pub fn times(&self, copies: u64) -> Weight {
        match self {
            Weight::Finite(r) => Weight::Finite(r * BigRational::from_integer(BigInt::from(copies))),
            Weight::Infinite => {
                if copies == 0 {
                    Weight::zero()
                } else {
                    Weight::Infinite
                }
            }
        }
    }

    /// Lossy view for reports and CSV output.
    pub fn to_f64(&self) -> f64 {
        match self {
            Weight::Finite(r) => r.to_f64().unwrap_or(f64::MAX),
            Weight::Infinite => f64::INFINITY,
        }
    }

    /// Parses `"inf"` or a decimal literal (optionally with an exponent).
    /// Rejects negative values.
    pub fn parse(s: &str) -> Option<Weight> {
        if s == "inf" {
            return Some(Weight::Infinite);
        }
        let r = parse_decimal(s)?;
        if r.is_negative() {
            return None;
        }
        Some(Weight::Finite(r))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Weight::Infinite, Weight::Infinite) => Ordering::Equal,
            (Weight::Infinite, Weight::Finite(_)) => Ordering::Greater,
            (Weight::Finite(_), Weight::Infinite) => Ordering::Less,
            (Weight::Finite(a), Weight::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add<&Weight> for Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        match (self, rhs) {
            (Weight::Finite(a), Weight::Finite(b)) => Weight::Finite(a + b),
            _ => Weight::Infinite,
        }
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        let lhs = std::mem::replace(self, Weight::Infinite);
        *self = lhs + rhs;
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        let mut total = Weight::zero();
        for w in iter {
            total += w;
        }
        total
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Infinite => write!(f, "inf"),
            Weight::Finite(r) => match rational_to_decimal(r) {
                Some(s) => write!(f, "{s}"),
                None => write!(f, "{}/{}", r.numer(), r.denom()),
            },
        }
    }
}

/// Parses a decimal literal like `2`, `2.35`, `1e-3`, `0.5E+2` into an exact
/// rational. Returns `None` on malformed input.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().ok()?;
            (&s[..i], e)
        }
        None => (s, 0i64),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(i) => (&digits[..i], &digits[i + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().ok()?
    };
    let ten = BigInt::from(10);
    for b in frac_part.bytes() {
        numer = &numer * &ten + BigInt::from(b - b'0');
    }
    let mut denom = BigInt::one();
    let scale = exp - frac_part.len() as i64;
    if scale >= 0 {
        numer *= ten.pow(scale as u32);
    } else {
        denom = ten.pow((-scale) as u32);
    }
    Some(BigRational::new(numer * BigInt::from(sign), denom))
}

/// Shortest exact decimal form, when the reduced denominator is of the form
/// `2^a * 5^b`. Used for canonical JSON emission.
pub fn rational_to_decimal(r: &BigRational) -> Option<String> {
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut q = r.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    while (&q % &two).is_zero() {
        q /= &two;
        twos += 1;
    }
    while (&q % &five).is_zero() {
        q /= &five;
        fives += 1;
    }
    if !q.is_one() {
        return None;
    }
    let k = twos.max(fives);
    let scaled = r.numer() * BigInt::from(10).pow(k) / r.denom();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = if digits.len() <= k as usize {
        format!("{}{}", "0".repeat(k as usize + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = digits.split_at(digits.len() - k as usize);
    let frac_part = frac_part.trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_and_decimal() {
        assert_eq!(Weight::parse("3").unwrap(), Weight::from_u64(3));
        assert_eq!(Weight::parse("2.35").unwrap(), Weight::from_ratio(47, 20));
        assert_eq!(Weight::parse("1e-3").unwrap(), Weight::from_ratio(1, 1000));
        assert_eq!(Weight::parse("0.5E+2").unwrap(), Weight::from_u64(50));
        assert_eq!(Weight::parse("inf").unwrap(), Weight::Infinite);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Weight::parse("-1").is_none());
        assert!(Weight::parse("").is_none());
        assert!(Weight::parse("1.2.3").is_none());
        assert!(Weight::parse("abc").is_none());
        assert!(Weight::parse(".").is_none());
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut ws = vec![Weight::Infinite, Weight::from_u64(7), Weight::zero()];
        ws.sort();
        assert_eq!(ws, vec![Weight::zero(), Weight::from_u64(7), Weight::Infinite]);
    }

    #[test]
    fn sums_saturate_at_infinity() {
        let total: Weight = [Weight::from_u64(1), Weight::Infinite].iter().sum();
        assert!(total.is_infinite());
        assert!(Weight::Infinite.times(0).is_zero());
    }

    #[test]
    fn decimal_display_round_trips() {
        for s in ["0", "2", "2.35", "0.000001", "123456.654321"] {
            let w = Weight::parse(s).unwrap();
            assert_eq!(w.to_string(), s);
        }
        // Denominator 3 has no finite decimal form.
        assert_eq!(Weight::from_ratio(1, 3).to_string(), "1/3");
    }
}

//! Binomial coefficients, exact rationals, and subset enumeration.

use crate::bitset::VertexSet;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rational_int(p: i64) -> Rational {
    Rational::from(BigInt::from(p))
}

/// C(n, k) as a big integer; 0 when k > n.
pub fn binom_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// C(n, k) as u64. Panics on overflow; fine for desk-scale counts.
pub fn binom_u64(n: u64, k: u64) -> u64 {
    use num::ToPrimitive;
    binom_big(n, k)
        .to_u64()
        .unwrap_or_else(|| panic!("binomial C({n},{k}) exceeds u64"))
}

/// Generalized binomial C(x, k) = x(x-1)...(x-k+1) / k! for rational x.
/// Strictly increasing in x on [k-1, oo), which bisection relies on.
pub fn gen_binom(x: &Rational, k: u64) -> Rational {
    let mut num = Rational::one();
    for i in 0..k {
        num *= x - rational_int(i as i64);
    }
    let mut fact = BigInt::one();
    for i in 1..=k {
        fact *= BigInt::from(i);
    }
    num / Rational::from(fact)
}

/// All k-subsets of {0..n-1} in colexicographic order.
pub fn colex_subsets(n: u32, k: usize) -> ColexSubsets {
    ColexSubsets {
        n,
        cur: if k as u32 <= n { (0..k as u32).collect() } else { Vec::new() },
        done: k as u32 > n,
        first: true,
    }
}

pub struct ColexSubsets {
    n: u32,
    cur: Vec<u32>,
    done: bool,
    first: bool,
}

impl Iterator for ColexSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(VertexSet::from_members(self.cur.iter().copied()));
        }
        let k = self.cur.len();
        if k == 0 {
            self.done = true;
            return None;
        }
        // Smallest index whose entry can step up without colliding.
        let mut i = 0;
        while i + 1 < k && self.cur[i] + 1 == self.cur[i + 1] {
            i += 1;
        }
        self.cur[i] += 1;
        if i == k - 1 && self.cur[i] >= self.n {
            self.done = true;
            return None;
        }
        for j in 0..i {
            self.cur[j] = j as u32;
        }
        Some(VertexSet::from_members(self.cur.iter().copied()))
    }
}

/// Rational formatted as a decimal string with exactly `digits` digits
/// after the point, truncated toward zero. Deterministic; used for CSV.
pub fn decimal_string(r: &Rational, digits: u32) -> String {
    let neg = r.is_negative();
    let abs = r.abs();
    let ipart = abs.numer() / abs.denom();
    let mut rem = abs.numer() - &ipart * abs.denom();
    let mut frac = String::new();
    for _ in 0..digits {
        rem *= BigInt::from(10);
        let d = &rem / abs.denom();
        frac.push_str(&d.to_string());
        rem -= &d * abs.denom();
    }
    let sign = if neg && (!ipart.is_zero() || frac.bytes().any(|b| b != b'0')) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{ipart}")
    } else {
        format!("{sign}{ipart}.{frac}")
    }
}

/// Parse "p/q" or "p" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| format!("bad rational numerator in {s:?}"))?;
    let q: BigInt = den.parse().map_err(|_| format!("bad rational denominator in {s:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(p, q))
}

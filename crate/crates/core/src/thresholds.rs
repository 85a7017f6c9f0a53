//! Closed-form degree thresholds for Hamilton l-cycles and exact
//! consistency checks among them.
//!
//! Everything is exact rational arithmetic. The one irrational quantity,
//! (1/2)^{p/q}, is kept symbolic and compared against rationals by
//! integer cross-powers, so no floating point enters any verdict.

use crate::combin::{binom_big, rational, Rational};
use crate::constructions::{space_barrier_min_degree, ConstructionError};
use num::{BigInt, One, Signed};
use std::cmp::Ordering;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ThresholdError {
    #[error("need 1 <= ell < k, got k={k} ell={ell}")]
    EllRange { k: usize, ell: usize },
    #[error("need 1 <= d <= k-1, got k={k} d={d}")]
    DegreeRange { k: usize, d: usize },
    #[error("no closed-form upper bound for k={k} d={d} ell={ell}: {need}")]
    Regime {
        k: usize,
        d: usize,
        ell: usize,
        need: &'static str,
    },
    #[error("n={n} not divisible by k-ell={stride}")]
    Divisibility { n: usize, stride: usize },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn check_ell(k: usize, ell: usize) -> Result<(), ThresholdError> {
    if ell < 1 || ell >= k {
        return Err(ThresholdError::EllRange { k, ell });
    }
    Ok(())
}

fn check_degree(k: usize, d: usize) -> Result<(), ThresholdError> {
    if d < 1 || d >= k {
        return Err(ThresholdError::DegreeRange { k, d });
    }
    Ok(())
}

/// Normalized d-degree of the space barrier in the limit:
/// 1 - (1 - 1/(2(k-ell)))^(k-d).
pub fn space_barrier_limit(k: usize, d: usize, ell: usize) -> Result<Rational, ThresholdError> {
    check_ell(k, ell)?;
    check_degree(k, d)?;
    let s = (k - ell) as i64;
    let base = rational(2 * s - 1, 2 * s);
    Ok(Rational::one() - num::pow(base, k - d))
}

/// Exact (k-1)-degree threshold for Hamilton l-cycles: 1/2 when
/// (k-ell) divides k, else 1/(ceil(k/(k-ell)) * (k-ell)).
pub fn divisibility_threshold(k: usize, ell: usize) -> Result<Rational, ThresholdError> {
    check_ell(k, ell)?;
    let s = k - ell;
    if k % s == 0 {
        Ok(rational(1, 2))
    } else {
        Ok(rational(1, (k.div_ceil(s) * s) as i64))
    }
}

/// A threshold value that may be irrational: an exact rational, or
/// (1/2)^{p/q} with p, q coprime positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundTerm {
    Exact(Rational),
    HalfPower { p: u32, q: u32 },
}

impl BoundTerm {
    /// Compares against a rational. Half powers compare by integer
    /// cross-powers: (1/2)^{p/q} vs a/b resolves as b^q vs a^q * 2^p.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            BoundTerm::Exact(v) => v.cmp(r),
            BoundTerm::HalfPower { p, q } => {
                if !r.is_positive() {
                    return Ordering::Greater;
                }
                let lhs = num::pow(r.denom().clone(), *q as usize);
                let rhs = num::pow(r.numer().clone(), *q as usize)
                    * num::pow(BigInt::from(2), *p as usize);
                lhs.cmp(&rhs)
            }
        }
    }
}

/// Upper bound for the Hamilton l-cycle degree threshold, possibly still
/// symbolic in the perfect-tiling threshold t = t(k, d, ell).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiracBound {
    /// max fully determined
    Resolved(BoundTerm),
    /// t unknown: the bound is max{t, floor} with t >= t_lower
    Unresolved { floor: BoundTerm, t_lower: Rational },
}

/// Best known upper bound on the normalized d-degree forcing a Hamilton
/// l-cycle, as max{t, floor}. The floor is 1/3 for ell < d <= k-1 and
/// (1/2)^{(k-ell)/ell} for d = ell >= 2; both forms need 2*ell < k.
/// Callers must supply t explicitly (see [`known_tiling_threshold`]);
/// without it the result stays symbolic, carrying the space-barrier
/// limit as the proven lower bound on t.
pub fn dirac_upper_bound(
    k: usize,
    d: usize,
    ell: usize,
    t: Option<Rational>,
) -> Result<DiracBound, ThresholdError> {
    check_ell(k, ell)?;
    check_degree(k, d)?;
    if 2 * ell >= k {
        return Err(ThresholdError::Regime {
            k,
            d,
            ell,
            need: "2*ell < k",
        });
    }
    let floor = if d > ell {
        BoundTerm::Exact(rational(1, 3))
    } else if d == ell && ell >= 2 {
        let g = num::integer::gcd(k - ell, ell);
        BoundTerm::HalfPower {
            p: ((k - ell) / g) as u32,
            q: (ell / g) as u32,
        }
    } else {
        return Err(ThresholdError::Regime {
            k,
            d,
            ell,
            need: "ell < d <= k-1, or d = ell >= 2",
        });
    };
    match t {
        Some(t) => {
            let resolved = if floor.cmp_rational(&t) == Ordering::Less {
                BoundTerm::Exact(t)
            } else {
                floor
            };
            Ok(DiracBound::Resolved(resolved))
        }
        None => Ok(DiracBound::Unresolved {
            floor,
            t_lower: space_barrier_limit(k, d, ell)?,
        }),
    }
}

/// Tiling thresholds with an exactly determined value. Only (5, 2, 2) is
/// settled; every other triple is open and gets `None`.
pub fn known_tiling_threshold(k: usize, d: usize, ell: usize) -> Option<Rational> {
    (k == 5 && d == 2 && ell == 2).then(|| rational(91, 216))
}

/// Exact evidence that the space-barrier limit exceeds 1/3:
/// 3 * numer > denom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThirdCertificate {
    pub barrier: Rational,
    pub triple_numer: BigInt,
    pub denom: BigInt,
}

/// Outcome of the 41/50 window test. The window inequality is kept as
/// integers: in_window iff window_lhs <= window_rhs and d > ell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCheck {
    pub in_window: bool,
    pub window_lhs: u64,
    pub window_rhs: u64,
    pub certificate: Option<ThirdCertificate>,
}

/// Tests 41(k-ell) <= 50(k-d) < 50(k-ell) and, inside the window,
/// certifies space_barrier_limit(k, d, ell) > 1/3 by exact comparison
/// of the actual rational (no transcendental estimate involved).
pub fn barrier_window_check(k: usize, d: usize, ell: usize) -> Result<WindowCheck, ThresholdError> {
    check_ell(k, ell)?;
    check_degree(k, d)?;
    let window_lhs = 41 * (k - ell) as u64;
    let window_rhs = 50 * (k - d) as u64;
    let in_window = window_lhs <= window_rhs && d > ell;
    let certificate = if in_window {
        let barrier = space_barrier_limit(k, d, ell)?;
        let triple_numer = BigInt::from(3) * barrier.numer();
        let denom = barrier.denom().clone();
        // guaranteed inside the window; checked, not assumed
        assert!(triple_numer > denom, "in-window barrier at most 1/3");
        Some(ThirdCertificate {
            barrier,
            triple_numer,
            denom,
        })
    } else {
        None
    };
    Ok(WindowCheck {
        in_window,
        window_lhs,
        window_rhs,
        certificate,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: usize,
    /// min d-degree of the n-vertex barrier over C(n-d, k-d)
    pub ratio: Rational,
    pub limit: Rational,
    /// limit - ratio
    pub gap: Rational,
}

/// Exact normalized barrier degrees against the limit, one row per n.
/// Each n must be divisible by k-ell.
pub fn convergence_table(
    k: usize,
    d: usize,
    ell: usize,
    ns: &[usize],
) -> Result<Vec<ConvergenceRow>, ThresholdError> {
    check_ell(k, ell)?;
    check_degree(k, d)?;
    let stride = k - ell;
    let limit = space_barrier_limit(k, d, ell)?;
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        if n % stride != 0 {
            return Err(ThresholdError::Divisibility { n, stride });
        }
        let deg = space_barrier_min_degree(k, ell, n, d)?;
        let total = binom_big((n - d) as u64, (k - d) as u64);
        let ratio = Rational::new(deg, total);
        rows.push(ConvergenceRow {
            n,
            ratio: ratio.clone(),
            limit: limit.clone(),
            gap: &limit - &ratio,
        });
    }
    Ok(rows)
}

//! Exact Fibonacci, Lucas and generalized Fibonacci evaluation.
//!
//! Everything here is built on one fast-doubling routine returning
//! `(F_n, F_{n+1})`. Negative indices follow `F_{-n} = (-1)^{n+1} F_n`, which
//! is the only extension compatible with the recurrence; the grid closed
//! forms rely on `F_{-1} = 1` and `F_{-2} = -1`.
//!
//! Generalized Fibonacci sequences (GFS) are seeded at positions 0 and 1:
//! `G(0) = g0`, `G(1) = g1`, so `G(n) = g1 F_n + g0 F_{n-1}` for every
//! `n >= 0`. A sequence seeded at positions 1 and 2 is the same sequence read
//! one place later.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default bound on `|n|`; `F_{10^7}` already has about two million digits.
pub const DEFAULT_MAX_INDEX: u64 = 10_000_000;

/// Fibonacci kernel with a configurable index cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FibKernel {
    max_index: u64,
}

impl Default for FibKernel {
    fn default() -> Self {
        FibKernel {
            max_index: DEFAULT_MAX_INDEX,
        }
    }
}

impl FibKernel {
    pub fn new(max_index: u64) -> Self {
        FibKernel { max_index }
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    fn check(&self, n: i64) -> Result<()> {
        if n.unsigned_abs() > self.max_index {
            return Err(Error::IndexOutOfBounds {
                index: n,
                max: self.max_index,
            });
        }
        Ok(())
    }

    fn check_non_negative(&self, n: i64) -> Result<()> {
        if n < 0 {
            return Err(Error::NegativeIndex(n));
        }
        self.check(n)
    }

    /// `F_n` for any signed `n` within the cap.
    pub fn fib(&self, n: i64) -> Result<BigInt> {
        self.check(n)?;
        let (f, _) = fast_doubling(n.unsigned_abs());
        if n < 0 && n % 2 == 0 {
            Ok(-f)
        } else {
            Ok(f)
        }
    }

    /// `(F_n, F_{n+1})` for `n >= 0`.
    pub fn fib_pair(&self, n: i64) -> Result<(BigInt, BigInt)> {
        self.check_non_negative(n)?;
        self.check(n + 1)?;
        Ok(fast_doubling(n as u64))
    }

    /// `L_n = F_{n-1} + F_{n+1}`, so `L_0 = 2`, `L_1 = 1`.
    pub fn lucas(&self, n: i64) -> Result<BigInt> {
        self.check_non_negative(n)?;
        self.check(n + 1)?;
        let (f_prev, f) = if n == 0 {
            (BigInt::one(), BigInt::zero())
        } else {
            fast_doubling((n - 1) as u64)
        };
        // F_{n+1} = F_n + F_{n-1}
        Ok(&f_prev + &f + f_prev)
    }

    /// Term `n` of the GFS with `G(0) = g0`, `G(1) = g1`.
    pub fn gfs_term(&self, g0: &BigInt, g1: &BigInt, n: i64) -> Result<BigInt> {
        self.check_non_negative(n)?;
        Ok(g1 * self.fib(n)? + g0 * self.fib(n - 1)?)
    }

    /// `sum_{j=0..i} F_j F_{i-j}`, evaluated as `(i L_i - F_i) / 5`.
    pub fn fib_convolution(&self, i: i64) -> Result<BigInt> {
        self.check_non_negative(i)?;
        let numerator = BigInt::from(i) * self.lucas(i)? - self.fib(i)?;
        exact_div(numerator, 5, "i*L_i - F_i")
    }

    /// `sum_{i=1..n} i F_i = n F_{n+2} - F_{n+3} + 2`.
    pub fn weighted_fib_sum(&self, n: i64) -> Result<BigInt> {
        self.check_non_negative(n)?;
        Ok(BigInt::from(n) * self.fib(n + 2)? - self.fib(n + 3)? + 2)
    }
}

/// `(F_n, F_{n+1})` by fast doubling, walking the bits of `n` from the top.
///
/// `F_{2k} = F_k (2 F_{k+1} - F_k)` and `F_{2k+1} = F_k^2 + F_{k+1}^2`.
pub fn fast_doubling(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if n == 0 {
        return (a, b);
    }
    let top = 63 - n.leading_zeros();
    for bit in (0..=top).rev() {
        let two_b_minus_a = (&b << 1u32) - &a;
        let even = &a * two_b_minus_a;
        let odd = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &even + &odd;
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    (a, b)
}

/// Checked exact division; a remainder means an identity was violated.
pub(crate) fn exact_div(value: BigInt, divisor: u32, what: &'static str) -> Result<BigInt> {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    if !r.is_zero() {
        return Err(Error::NotDivisible { what, divisor });
    }
    Ok(q)
}

/// Number of decimal digits of `|x|` (1 for zero), without a full
/// radix conversion.
pub fn decimal_digits(x: &BigInt) -> u64 {
    let bits = x.bits();
    if bits == 0 {
        return 1;
    }
    let mag = x.magnitude();
    // 10^k <= |x| < 2^bits, so k <= bits * log10(2); start just below that.
    let mut k = (((bits - 1) as f64) * std::f64::consts::LOG10_2).floor() as u64;
    k = k.saturating_sub(1);
    let mut pow = num_bigint::BigUint::from(10u32).pow(k as u32);
    while &pow <= mag {
        pow *= 10u32;
        k += 1;
    }
    k
}

pub fn fib(n: i64) -> Result<BigInt> {
    FibKernel::default().fib(n)
}

pub fn fib_pair(n: i64) -> Result<(BigInt, BigInt)> {
    FibKernel::default().fib_pair(n)
}

pub fn lucas(n: i64) -> Result<BigInt> {
    FibKernel::default().lucas(n)
}

pub fn gfs_term(g0: &BigInt, g1: &BigInt, n: i64) -> Result<BigInt> {
    FibKernel::default().gfs_term(g0, g1, n)
}

pub fn fib_convolution(i: i64) -> Result<BigInt> {
    FibKernel::default().fib_convolution(i)
}

pub fn weighted_fib_sum(n: i64) -> Result<BigInt> {
    FibKernel::default().weighted_fib_sum(n)
}

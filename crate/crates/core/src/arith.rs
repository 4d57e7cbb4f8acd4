// SPDX-License-Identifier: Apache-2.0

//! Trial-division number theory for the small integers this crate handles.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^m` with `p` odd. Anything else is rejected.
pub fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    let divisors = prime_divisors(q);
    match divisors.as_slice() {
        [p] if *p != 2 => {
            let mut m = 0;
            let mut rest = q;
            while rest > 1 {
                rest /= p;
                m += 1;
            }
            Ok((*p, m))
        }
        _ => Err(Error::NotOddPrimePower(q)),
    }
}

pub fn is_odd_prime_power(q: u64) -> bool {
    odd_prime_power(q).is_ok()
}

/// All odd prime powers in `3..=max`.
pub fn odd_prime_powers_up_to(max: u64) -> Vec<u64> {
    (3..=max).filter(|&q| is_odd_prime_power(q)).collect()
}

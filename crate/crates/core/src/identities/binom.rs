use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(k, i)` with the convention `C(k, i) = 0` when `i < 0` or `k < i`,
/// negative `k` included. This is not the usual extension to negative upper
/// index: `binom(-1, 0)` is `0`, not `1`.
pub fn binom(k: i64, i: i64) -> BigInt {
    if i < 0 || k < i {
        return BigInt::zero();
    }
    let i = i.min(k - i);
    let mut acc = BigInt::one();
    for j in 0..i {
        acc = acc * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    acc
}

pub(crate) fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

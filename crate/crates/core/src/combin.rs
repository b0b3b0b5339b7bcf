//! Exact binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// `C(n, k)`, with `C(n, k) = 0` whenever `k < 0` or `n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binomial` narrowed to `i64`; panics on overflow.
pub fn binomial_i64(n: i64, k: i64) -> i64 {
    binomial(n, k).to_i64().expect("binomial fits in i64")
}

/// Serde helper writing big integers as decimal strings.
pub mod bigint_str {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

//! Miller-Rabin primality testing and rejection-sampled prime draws.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};

/// Witnesses that make Miller-Rabin deterministic for all n < 2^64
/// (in fact for all n < 3.3 * 10^24).
const SMALL_WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Rounds of random-base testing for moduli at or above 2^64.
const RANDOM_ROUNDS: usize = 40;

/// How many draws `random_prime` makes before giving up. The prime density
/// in the intervals we use is at least ~1/ln(upper), so this failing is a
/// sign of a broken interval, not bad luck.
const PRIME_DRAW_ATTEMPTS: usize = 4096;

/// One Miller-Rabin round: returns false iff `base` witnesses that `n` is
/// composite. `n` must be odd and >= 3.
fn miller_rabin_round(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    // n - 1 = 2^s * d with d odd
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let mut x = base.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Primality test. Deterministic below 2^64, otherwise 40 pseudo-random
/// rounds (seeded from the candidate itself so results are reproducible).
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for p in SMALL_WITNESSES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    if n.bits() <= 64 {
        return SMALL_WITNESSES
            .iter()
            .all(|w| miller_rabin_round(n, &BigUint::from(*w)));
    }
    // Derive the base stream from the candidate so the answer is a pure
    // function of n.
    let mut seed = [0u8; 32];
    for (i, b) in n.to_bytes_le().into_iter().take(32).enumerate() {
        seed[i] = b;
    }
    let mut rng = ChaCha20Rng::from_seed(seed);
    let lo = BigUint::from(2u32);
    let hi = n - BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| {
        let base = rng.gen_biguint_range(&lo, &hi);
        miller_rabin_round(n, &base)
    })
}

/// Draws an odd prime uniformly from `[lower, upper]` by rejection sampling.
/// 2 is never returned even if it lies in the interval.
pub fn random_prime(lower: &BigUint, upper: &BigUint, rng: &mut dyn RngCore) -> Result<BigUint> {
    if lower > upper {
        return Err(Error::Input(format!(
            "empty prime interval [{lower},{upper}]"
        )));
    }
    let hi_exclusive = upper + BigUint::one();
    for _ in 0..PRIME_DRAW_ATTEMPTS {
        let candidate = rng.gen_biguint_range(lower, &hi_exclusive);
        if candidate < BigUint::from(3u32) || candidate.is_even() {
            continue;
        }
        if is_prime(&candidate) {
            return Ok(candidate);
        }
    }
    Err(Error::NoPrimeFound {
        lower: lower.clone(),
        upper: upper.clone(),
        attempts: PRIME_DRAW_ATTEMPTS,
    })
}

//! Scalar domains: arbitrary-precision rationals and odd prime fields GF(q).
//!
//! A [`Domain`] is carried by every matrix; entries are [`Scalar`]s that only
//! make sense relative to their domain. Rationals are always kept in lowest
//! terms with a positive denominator (num-rational normalizes on
//! construction), residues are kept in `[0, q)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::primes;

/// The field a matrix lives in. Prime fields are restricted to odd q >= 3:
/// characteristic two would break the symmetric-square construction used by
/// the edge reduction, so it is ruled out at construction time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Rational,
    PrimeField(BigUint),
}

/// A single matrix entry. Which variant is legal depends on the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Residue(BigUint),
}

impl Domain {
    /// Builds a prime-field domain, validating that `q` is an odd prime >= 3.
    pub fn prime_field(q: BigUint) -> Result<Domain> {
        if q < BigUint::from(3u32) || q.is_even() || !primes::is_prime(&q) {
            return Err(Error::Input(format!("{q} is not an odd prime >= 3")));
        }
        Ok(Domain::PrimeField(q))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Domain::Rational)
    }

    pub fn modulus(&self) -> Option<&BigUint> {
        match self {
            Domain::Rational => None,
            Domain::PrimeField(q) => Some(q),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rational(BigRational::zero()),
            Domain::PrimeField(_) => Scalar::Residue(BigUint::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rational(BigRational::one()),
            Domain::PrimeField(_) => Scalar::Residue(BigUint::one()),
        }
    }

    /// Whether `s` is a well-formed element of this domain.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Domain::Rational, Scalar::Rational(_)) => true,
            (Domain::PrimeField(q), Scalar::Residue(r)) => r < q,
            _ => false,
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Domain::PrimeField(q) => {
                let m = BigInt::from(v).mod_floor(&BigInt::from(q.clone()));
                Scalar::Residue(m.to_biguint().expect("mod_floor is non-negative"))
            }
        }
    }

    /// Embeds an arbitrary-precision integer.
    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Domain::PrimeField(q) => {
                let m = v.mod_floor(&BigInt::from(q.clone()));
                Scalar::Residue(m.to_biguint().expect("mod_floor is non-negative"))
            }
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Domain::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (Domain::PrimeField(q), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x + y) % q)
            }
            _ => panic!("scalar/domain mismatch in add"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Domain::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x - y)
            }
            (Domain::PrimeField(q), Scalar::Residue(x), Scalar::Residue(y)) => {
                // lift into [q, 2q) before subtracting to stay unsigned
                Scalar::Residue(((x + q) - y) % q)
            }
            _ => panic!("scalar/domain mismatch in sub"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Domain::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (Domain::PrimeField(q), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x * y) % q)
            }
            _ => panic!("scalar/domain mismatch in mul"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Domain::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Domain::PrimeField(q), Scalar::Residue(x)) => {
                if x.is_zero() {
                    Scalar::Residue(BigUint::zero())
                } else {
                    Scalar::Residue(q - x)
                }
            }
            _ => panic!("scalar/domain mismatch in neg"),
        }
    }

    /// Multiplicative inverse; `Err` on zero.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::Input("division by zero".into()));
        }
        Ok(match (self, a) {
            (Domain::Rational, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Domain::PrimeField(q), Scalar::Residue(x)) => {
                // Fermat: x^(q-2) mod q
                Scalar::Residue(x.modpow(&(q - BigUint::from(2u32)), q))
            }
            _ => panic!("scalar/domain mismatch in inv"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Canonical text form: `num/den` in lowest terms for rationals (the
    /// denominator is always printed, `0` is `0/1`), plain decimal residues
    /// for prime fields. This is the on-disk format, so it must stay stable.
    pub fn format(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Residue(r) => format!("{r}"),
        }
    }

    /// Parses the canonical text form. Rationals also accept plain integers
    /// and are normalized; residues must already lie in `[0, q)`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        match self {
            Domain::Rational => {
                let (n, d) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let numer: BigInt = n
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational numerator {n:?}")))?;
                let denom: BigInt = d
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational denominator {d:?}")))?;
                if denom.is_zero() {
                    return Err(Error::Input(format!("zero denominator in {text:?}")));
                }
                Ok(Scalar::Rational(BigRational::new(numer, denom)))
            }
            Domain::PrimeField(q) => {
                let r: BigUint = text
                    .parse()
                    .map_err(|_| Error::Input(format!("bad residue {text:?}")))?;
                if &r >= q {
                    return Err(Error::Input(format!("residue {r} not below modulus {q}")));
                }
                Ok(Scalar::Residue(r))
            }
        }
    }

    /// Bit length of an entry: max of numerator/denominator magnitude bits
    /// for rationals, residue bits for prime fields.
    pub fn bit_length(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Rational(r) => r.numer().abs().to_biguint().map_or(0, |n| n.bits()).max(
                r.denom()
                    .abs()
                    .to_biguint()
                    .map_or(0, |d| d.bits()),
            ),
            Scalar::Residue(r) => r.bits(),
        }
    }

    /// Magnitude of an entry as a non-negative rational (residues are read
    /// as their canonical integer representative).
    pub fn magnitude(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rational(r) => r.abs(),
            Scalar::Residue(r) => BigRational::from_integer(BigInt::from(r.clone())),
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Domain::Rational => write!(f, "rational"),
            Domain::PrimeField(q) => write!(f, "gfp {q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Domain {
        Domain::prime_field(BigUint::from(q)).unwrap()
    }

    #[test]
    fn prime_field_rejects_two_and_composites() {
        assert!(Domain::prime_field(BigUint::from(2u32)).is_err());
        assert!(Domain::prime_field(BigUint::from(9u32)).is_err());
        assert!(Domain::prime_field(BigUint::from(1u32)).is_err());
        assert!(Domain::prime_field(BigUint::from(7u32)).is_ok());
    }

    #[test]
    fn rational_normalization() {
        let d = Domain::Rational;
        let s = d.parse("4/-6").unwrap();
        // lowest terms, positive denominator
        assert_eq!(d.format(&s), "-2/3");
        let t = d.parse("7").unwrap();
        assert_eq!(d.format(&t), "7/1");
    }

    #[test]
    fn field_arithmetic_small() {
        let d = gf(7);
        let a = d.from_i64(3);
        let b = d.from_i64(5);
        assert_eq!(d.format(&d.add(&a, &b)), "1");
        assert_eq!(d.format(&d.mul(&a, &b)), "1");
        assert_eq!(d.format(&d.sub(&a, &b)), "5");
        assert_eq!(d.format(&d.neg(&a)), "4");
        // 3 * 3^-1 = 1
        let inv = d.inv(&a).unwrap();
        assert_eq!(d.format(&d.mul(&a, &inv)), "1");
    }

    #[test]
    fn from_i64_wraps_negatives() {
        let d = gf(5);
        assert_eq!(d.format(&d.from_i64(-3)), "2");
        assert_eq!(d.format(&d.from_i64(-10)), "0");
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let d = Domain::Rational;
        let s = d.parse("-22/7").unwrap();
        let inv = d.inv(&s).unwrap();
        assert_eq!(d.format(&d.mul(&s, &inv)), "1/1");
    }

    #[test]
    fn residue_parse_rejects_out_of_range() {
        let d = gf(7);
        assert!(d.parse("7").is_err());
        assert!(d.parse("6").is_ok());
    }
}

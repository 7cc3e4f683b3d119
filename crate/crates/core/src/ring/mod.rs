//! Exact arithmetic over the five supported rings.
//!
//! Every element is an immutable value in canonical stored form. All
//! integer components are 64-bit signed; operations that would wrap
//! return [`Error::ArithmeticOverflow`] instead.

mod arith;
mod enumerate;
mod euclid;
mod factor;
mod parse;

pub use enumerate::{
    canonical_elements_with_norm, elements_with_norm, unit_group, CanonicalPrimes,
};
pub use euclid::{ext_gcd, is_coprime, BezoutCertificate};
pub use factor::{factor, factor_with_budget, is_prime, radical_support, Factorization};

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default norm budget for [`factor`]: trial division stays desk-scale.
pub const DEFAULT_FACTOR_BUDGET: u64 = 1_000_000_000;

/// A prime p < 2^16, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpPrime(u16);

impl FpPrime {
    pub fn new(p: u16) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let mut d = 2u32;
        while d * d <= u32::from(p) {
            if u32::from(p) % d == 0 {
                return Err(Error::InvalidInput(format!("{p} is not prime")));
            }
            d += 1;
        }
        Ok(FpPrime(p))
    }

    pub fn get(self) -> u16 {
        self.0
    }
}

/// A modulus n >= 2 for the ring Z/nZ, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "modulus must be at least 2, got {n}"
            )));
        }
        if n > i64::MAX as u64 {
            return Err(Error::InvalidInput(format!(
                "modulus {n} does not fit the signed 64-bit range"
            )));
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Identifies one of the five concrete rings.
///
/// `ModularRing` is the only kind allowed to have zero divisors; every
/// domain-only operation rejects it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DomainDescriptor {
    Integers,
    GaussianIntegers,
    EisensteinIntegers,
    PolyOverFp(FpPrime),
    ModularRing(Modulus),
}

impl DomainDescriptor {
    /// True for the four kinds with a Euclidean division.
    pub fn is_euclidean(self) -> bool {
        !matches!(self, DomainDescriptor::ModularRing(_))
    }

    pub fn zero(self) -> RingElement {
        let payload = match self {
            DomainDescriptor::Integers => Payload::Int(0),
            DomainDescriptor::GaussianIntegers => Payload::Gaussian { re: 0, im: 0 },
            DomainDescriptor::EisensteinIntegers => Payload::Eisenstein { a: 0, b: 0 },
            DomainDescriptor::PolyOverFp(_) => Payload::Poly(Vec::new()),
            DomainDescriptor::ModularRing(_) => Payload::Residue(0),
        };
        RingElement {
            domain: self,
            payload,
        }
    }

    pub fn one(self) -> RingElement {
        let payload = match self {
            DomainDescriptor::Integers => Payload::Int(1),
            DomainDescriptor::GaussianIntegers => Payload::Gaussian { re: 1, im: 0 },
            DomainDescriptor::EisensteinIntegers => Payload::Eisenstein { a: 1, b: 0 },
            DomainDescriptor::PolyOverFp(_) => Payload::Poly(vec![1]),
            DomainDescriptor::ModularRing(_) => Payload::Residue(1),
        };
        RingElement {
            domain: self,
            payload,
        }
    }

    pub(crate) fn reject_modular(self, operation: &'static str) -> Result<()> {
        if self.is_euclidean() {
            Ok(())
        } else {
            Err(Error::UnsupportedDomain {
                domain: self.to_string(),
                operation,
            })
        }
    }
}

/// Ring strings use the CLI syntax: `z`, `zi`, `zomega`, `fpx:<p>`, `zmod:<n>`.
impl fmt::Display for DomainDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainDescriptor::Integers => write!(f, "z"),
            DomainDescriptor::GaussianIntegers => write!(f, "zi"),
            DomainDescriptor::EisensteinIntegers => write!(f, "zomega"),
            DomainDescriptor::PolyOverFp(p) => write!(f, "fpx:{}", p.get()),
            DomainDescriptor::ModularRing(n) => write!(f, "zmod:{}", n.get()),
        }
    }
}

impl std::str::FromStr for DomainDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" => return Ok(DomainDescriptor::Integers),
            "zi" => return Ok(DomainDescriptor::GaussianIntegers),
            "zomega" => return Ok(DomainDescriptor::EisensteinIntegers),
            _ => {}
        }
        if let Some(p) = s.strip_prefix("fpx:") {
            let p: u16 = p
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad prime in ring string {s:?}")))?;
            return Ok(DomainDescriptor::PolyOverFp(FpPrime::new(p)?));
        }
        if let Some(n) = s.strip_prefix("zmod:") {
            let n: u64 = n
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad modulus in ring string {s:?}")))?;
            return Ok(DomainDescriptor::ModularRing(Modulus::new(n)?));
        }
        Err(Error::InvalidInput(format!(
            "unknown ring {s:?}; expected z, zi, zomega, fpx:<p> or zmod:<n>"
        )))
    }
}

impl serde::Serialize for DomainDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for DomainDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Kind-specific exact value, always in canonical stored form:
/// polynomials trimmed of trailing zeros, residues reduced into `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Payload {
    Int(i64),
    /// a + b*i
    Gaussian { re: i64, im: i64 },
    /// a + b*omega, omega a primitive cube root of unity
    Eisenstein { a: i64, b: i64 },
    /// Coefficients over F_p, lowest degree first, no trailing zero.
    Poly(Vec<u16>),
    /// Residue in [0, n).
    Residue(u64),
}

/// A canonical value in one concrete ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    domain: DomainDescriptor,
    pub(crate) payload: Payload,
}

impl RingElement {
    pub fn integer(value: i64) -> Self {
        RingElement {
            domain: DomainDescriptor::Integers,
            payload: Payload::Int(value),
        }
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        RingElement {
            domain: DomainDescriptor::GaussianIntegers,
            payload: Payload::Gaussian { re, im },
        }
    }

    pub fn eisenstein(a: i64, b: i64) -> Self {
        RingElement {
            domain: DomainDescriptor::EisensteinIntegers,
            payload: Payload::Eisenstein { a, b },
        }
    }

    /// Builds a polynomial from coefficients (lowest degree first),
    /// reducing each into F_p and trimming trailing zeros.
    pub fn poly(p: FpPrime, coeffs: &[i64]) -> Self {
        let m = i64::from(p.get());
        let mut c: Vec<u16> = coeffs.iter().map(|&x| x.rem_euclid(m) as u16).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        RingElement {
            domain: DomainDescriptor::PolyOverFp(p),
            payload: Payload::Poly(c),
        }
    }

    /// Builds a residue, reduced into `[0, n)`.
    pub fn modular(n: Modulus, value: i64) -> Self {
        let m = n.get() as i64;
        RingElement {
            domain: DomainDescriptor::ModularRing(n),
            payload: Payload::Residue(value.rem_euclid(m) as u64),
        }
    }

    pub fn domain(&self) -> DomainDescriptor {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Int(v) => *v == 0,
            Payload::Gaussian { re, im } => *re == 0 && *im == 0,
            Payload::Eisenstein { a, b } => *a == 0 && *b == 0,
            Payload::Poly(c) => c.is_empty(),
            Payload::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.domain.one()
    }

    /// The integer pair behind a Gaussian or Eisenstein element.
    pub fn pair(&self) -> Option<(i64, i64)> {
        match self.payload {
            Payload::Gaussian { re, im } => Some((re, im)),
            Payload::Eisenstein { a, b } => Some((a, b)),
            _ => None,
        }
    }

    /// The integer value of an Integers element.
    pub fn int_value(&self) -> Option<i64> {
        match self.payload {
            Payload::Int(v) => Some(v),
            _ => None,
        }
    }

    /// The residue value of a ModularRing element.
    pub fn residue_value(&self) -> Option<u64> {
        match self.payload {
            Payload::Residue(r) => Some(r),
            _ => None,
        }
    }

    /// Coefficients (lowest degree first) of a PolyOverFp element.
    pub fn poly_coeffs(&self) -> Option<&[u16]> {
        match &self.payload {
            Payload::Poly(c) => Some(c),
            _ => None,
        }
    }

    pub(crate) fn same_domain(&self, other: &RingElement) -> Result<DomainDescriptor> {
        if self.domain == other.domain {
            Ok(self.domain)
        } else {
            Err(Error::DomainMismatch {
                left: self.domain.to_string(),
                right: other.domain.to_string(),
            })
        }
    }

    /// Sort key: norm first, then the payload lexicographically. Modular
    /// residues order by value. Total within a single domain.
    fn sort_key(&self) -> (u128, SortTail<'_>) {
        match &self.payload {
            Payload::Int(v) => (v.unsigned_abs() as u128, SortTail::Two(*v, 0)),
            Payload::Gaussian { re, im } => {
                let n = (i128::from(*re) * i128::from(*re) + i128::from(*im) * i128::from(*im))
                    as u128;
                (n, SortTail::Two(*re, *im))
            }
            Payload::Eisenstein { a, b } => {
                let (a1, b1) = (i128::from(*a), i128::from(*b));
                let n = (a1 * a1 - a1 * b1 + b1 * b1) as u128;
                (n, SortTail::Two(*a, *b))
            }
            // Degree is order-isomorphic to the norm p^deg.
            Payload::Poly(c) => (c.len() as u128, SortTail::Coeffs(c)),
            Payload::Residue(r) => (u128::from(*r), SortTail::Two(0, 0)),
        }
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum SortTail<'a> {
    Two(i64, i64),
    Coeffs(&'a [u16]),
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.domain
            .cmp(&other.domain)
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

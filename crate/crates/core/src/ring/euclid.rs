//! Extended GCD with Bezout certificates, units and canonical associates.

use crate::error::{Error, Result};

use super::arith::{fp_inv, poly_char};
use super::{DomainDescriptor, Payload, RingElement};

/// Witness for sigma-membership: u*a + v*b = g, re-checkable by exact
/// multiplication, with g a GCD of (a, b) in canonical associate form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub g: RingElement,
    pub u: RingElement,
    pub v: RingElement,
    pub a: RingElement,
    pub b: RingElement,
}

impl BezoutCertificate {
    /// Re-checks u*a + v*b = g by exact arithmetic.
    pub fn verify(&self) -> Result<bool> {
        let lhs = self.u.mul(&self.a)?.add(&self.v.mul(&self.b)?)?;
        Ok(lhs == self.g)
    }

    /// Re-checks that g divides both inputs with zero remainder.
    pub fn gcd_divides(&self) -> Result<bool> {
        Ok(self.a.divisible_by(&self.g)? && self.b.divisible_by(&self.g)?)
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RingElement {
    /// True iff the element has a multiplicative inverse.
    pub fn is_unit(&self) -> bool {
        match &self.payload {
            Payload::Int(v) => *v == 1 || *v == -1,
            Payload::Gaussian { .. } | Payload::Eisenstein { .. } => self.norm() == Ok(1),
            Payload::Poly(c) => c.len() == 1,
            Payload::Residue(r) => {
                let n = match self.domain {
                    DomainDescriptor::ModularRing(n) => n.get(),
                    _ => unreachable!(),
                };
                gcd_u64(*r, n) == 1
            }
        }
    }

    /// Inverse of a unit; errors on non-units.
    pub fn unit_inverse(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::InvalidInput(format!("{self} is not a unit")));
        }
        match &self.payload {
            // The integer units are self-inverse.
            Payload::Int(_) => Ok(self.clone()),
            Payload::Gaussian { re, im } => Ok(RingElement::gaussian(*re, -im)),
            Payload::Eisenstein { .. } => {
                // Six units; scan for the partner.
                for u in super::enumerate::unit_group(self.domain) {
                    if self.mul(&u)?.is_one() {
                        return Ok(u);
                    }
                }
                unreachable!("unit group is closed under inverse")
            }
            Payload::Poly(c) => {
                let p = poly_char(self.domain);
                Ok(RingElement {
                    domain: self.domain,
                    payload: Payload::Poly(vec![fp_inv(p, c[0])]),
                })
            }
            Payload::Residue(r) => {
                let n = match self.domain {
                    DomainDescriptor::ModularRing(n) => n.get(),
                    _ => unreachable!(),
                };
                // Extended Euclid over the integers.
                let (mut old_r, mut r_) = (i128::from(n), i128::from(*r));
                let (mut old_s, mut s) = (0i128, 1i128);
                while r_ != 0 {
                    let q = old_r / r_;
                    (old_r, r_) = (r_, old_r - q * r_);
                    (old_s, s) = (s, old_s - q * s);
                }
                debug_assert_eq!(old_r, 1);
                let inv = old_s.rem_euclid(i128::from(n)) as i64;
                Ok(RingElement::modular(
                    match self.domain {
                        DomainDescriptor::ModularRing(m) => m,
                        _ => unreachable!(),
                    },
                    inv,
                ))
            }
        }
    }

    /// Returns (u, c) with c = u*x the canonical associate of x: positive
    /// over Z, in the half-open first quadrant (or first sextant) over
    /// Z[i] and Z[omega], monic for polynomials.
    pub fn canonical_associate(&self) -> Result<(RingElement, RingElement)> {
        self.domain.reject_modular("canonical_associate")?;
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        match &self.payload {
            Payload::Int(v) => {
                if *v > 0 {
                    Ok((RingElement::integer(1), self.clone()))
                } else {
                    Ok((RingElement::integer(-1), self.neg()?))
                }
            }
            Payload::Gaussian { .. } | Payload::Eisenstein { .. } => {
                let mut found = None;
                for u in super::enumerate::unit_group(self.domain) {
                    let c = u.mul(self)?;
                    if is_canonical_quadrant(&c) {
                        debug_assert!(found.is_none(), "canonical sector must be unique");
                        found = Some((u, c));
                        #[cfg(not(debug_assertions))]
                        break;
                    }
                }
                Ok(found.expect("every nonzero element has a canonical associate"))
            }
            Payload::Poly(c) => {
                let p = poly_char(self.domain);
                let lead = *c.last().unwrap();
                let inv = fp_inv(p, lead);
                let u = RingElement {
                    domain: self.domain,
                    payload: Payload::Poly(vec![inv]),
                };
                let canon = u.mul(self)?;
                Ok((u, canon))
            }
            Payload::Residue(_) => unreachable!(),
        }
    }

    /// True when the element already is its own canonical associate.
    pub fn is_canonical(&self) -> bool {
        match &self.payload {
            Payload::Int(v) => *v > 0,
            Payload::Gaussian { .. } | Payload::Eisenstein { .. } => is_canonical_quadrant(self),
            Payload::Poly(c) => c.last() == Some(&1),
            Payload::Residue(_) => false,
        }
    }
}

/// Canonical sector test. Gaussian: a > 0, b >= 0 (quarter turn).
/// Eisenstein: b >= 0 and a > b, the sixth of the plane with argument
/// in [0, 60) degrees, which picks exactly one of the six associates.
fn is_canonical_quadrant(x: &RingElement) -> bool {
    match x.payload {
        Payload::Gaussian { re, im } => re > 0 && im >= 0,
        Payload::Eisenstein { a, b } => b >= 0 && a > b,
        _ => false,
    }
}

/// Extended Euclidean algorithm. Returns a certificate with
/// u*a + v*b = g and g in canonical associate form. g is a unit iff
/// the ideal sum <a> + <b> is the whole ring.
pub fn ext_gcd(a: &RingElement, b: &RingElement) -> Result<BezoutCertificate> {
    let domain = a.same_domain(b)?;
    domain.reject_modular("ext_gcd")?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let one = domain.one();
    let zero = domain.zero();
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (one.clone(), zero.clone());
    let (mut old_t, mut t) = (zero, one);
    while !r.is_zero() {
        let (q, rem) = old_r.div_rem(&r)?;
        (old_r, r) = (r, rem);
        (old_s, s) = (s.clone(), old_s.sub(&q.mul(&s)?)?);
        (old_t, t) = (t.clone(), old_t.sub(&q.mul(&t)?)?);
    }
    let (w, g) = old_r.canonical_associate()?;
    Ok(BezoutCertificate {
        g,
        u: w.mul(&old_s)?,
        v: w.mul(&old_t)?,
        a: a.clone(),
        b: b.clone(),
    })
}

/// True iff the ideal sum <a> + <b> equals the whole ring.
///
/// Euclidean kinds reduce to the gcd being a unit. Over Z/nZ the ideal
/// sum is generated by gcd(a, b, n) over the integers.
pub fn is_coprime(a: &RingElement, b: &RingElement) -> Result<bool> {
    let domain = a.same_domain(b)?;
    if let DomainDescriptor::ModularRing(n) = domain {
        let (x, y) = match (&a.payload, &b.payload) {
            (Payload::Residue(x), Payload::Residue(y)) => (*x, *y),
            _ => unreachable!(),
        };
        let n = n.get();
        return Ok(gcd_u64(gcd_u64(x, n), gcd_u64(y, n)) == 1);
    }
    if a.is_zero() && b.is_zero() {
        return Ok(false);
    }
    Ok(ext_gcd(a, b)?.g.is_unit())
}

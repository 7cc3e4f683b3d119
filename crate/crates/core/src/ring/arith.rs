//! Ring arithmetic: checked add/sub/neg/mul, norms, Euclidean division.

use crate::error::{Error, Result};

use super::{DomainDescriptor, Payload, RingElement};

fn add64(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::ArithmeticOverflow("add"))
}

fn sub64(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::ArithmeticOverflow("sub"))
}

fn mul64(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::ArithmeticOverflow("mul"))
}

fn neg64(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::ArithmeticOverflow("neg"))
}

fn to_i64(v: i128, op: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::ArithmeticOverflow(op))
}

/// Nearest integer to num/den with ties broken toward negative infinity.
/// Requires den > 0.
fn round_half_down(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    // ceil((2*num - den) / (2*den))
    let (n, d) = (2 * num - den, 2 * den);
    n.div_euclid(d) + i128::from(n.rem_euclid(d) != 0)
}

pub(super) fn fp_add(p: u16, a: u16, b: u16) -> u16 {
    ((u32::from(a) + u32::from(b)) % u32::from(p)) as u16
}

pub(super) fn fp_sub(p: u16, a: u16, b: u16) -> u16 {
    ((u32::from(p) + u32::from(a) - u32::from(b)) % u32::from(p)) as u16
}

pub(super) fn fp_mul(p: u16, a: u16, b: u16) -> u16 {
    ((u32::from(a) * u32::from(b)) % u32::from(p)) as u16
}

/// Inverse in F_p by Fermat's little theorem; requires a != 0 mod p.
pub(super) fn fp_inv(p: u16, a: u16) -> u16 {
    let mut result = 1u64;
    let mut base = u64::from(a) % u64::from(p);
    let mut exp = u32::from(p) - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        exp >>= 1;
    }
    result as u16
}

fn poly_trim(mut c: Vec<u16>) -> Vec<u16> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn poly_add(p: u16, a: &[u16], b: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = fp_add(p, x, y);
    }
    poly_trim(out)
}

fn poly_mul(p: u16, a: &[u16], b: &[u16]) -> Vec<u16> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + u64::from(x) * u64::from(y)) % u64::from(p);
        }
    }
    poly_trim(out.into_iter().map(|v| v as u16).collect())
}

/// Long division in F_p[x]: returns (quotient, remainder).
fn poly_div_rem(p: u16, a: &[u16], b: &[u16]) -> (Vec<u16>, Vec<u16>) {
    debug_assert!(!b.is_empty());
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![0u16; a.len() - b.len() + 1];
    let lead_inv = fp_inv(p, *b.last().unwrap());
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coef = fp_mul(p, *rem.last().unwrap(), lead_inv);
        quot[shift] = coef;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = fp_sub(p, rem[shift + i], fp_mul(p, coef, bc));
        }
        rem = poly_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (poly_trim(quot), rem)
}

impl RingElement {
    /// The Euclidean size: |x| over Z, a^2+b^2 over Z[i], a^2-ab+b^2 over
    /// Z[omega], p^deg over F_p[x] with norm(0) = 0.
    pub fn norm(&self) -> Result<u64> {
        match &self.payload {
            Payload::Int(v) => Ok(v.unsigned_abs()),
            Payload::Gaussian { re, im } => {
                let n = i128::from(*re) * i128::from(*re) + i128::from(*im) * i128::from(*im);
                u64::try_from(n).map_err(|_| Error::ArithmeticOverflow("norm"))
            }
            Payload::Eisenstein { a, b } => {
                let (a1, b1) = (i128::from(*a), i128::from(*b));
                let n = a1 * a1 - a1 * b1 + b1 * b1;
                u64::try_from(n).map_err(|_| Error::ArithmeticOverflow("norm"))
            }
            Payload::Poly(c) => {
                if c.is_empty() {
                    return Ok(0);
                }
                let p = match self.domain {
                    DomainDescriptor::PolyOverFp(p) => u64::from(p.get()),
                    _ => unreachable!(),
                };
                p.checked_pow((c.len() - 1) as u32)
                    .ok_or(Error::ArithmeticOverflow("norm"))
            }
            Payload::Residue(_) => Err(Error::UnsupportedDomain {
                domain: self.domain.to_string(),
                operation: "norm",
            }),
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        let domain = self.same_domain(other)?;
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(x), Payload::Int(y)) => Payload::Int(add64(*x, *y)?),
            (Payload::Gaussian { re: a, im: b }, Payload::Gaussian { re: c, im: d }) => {
                Payload::Gaussian {
                    re: add64(*a, *c)?,
                    im: add64(*b, *d)?,
                }
            }
            (Payload::Eisenstein { a, b }, Payload::Eisenstein { a: c, b: d }) => {
                Payload::Eisenstein {
                    a: add64(*a, *c)?,
                    b: add64(*b, *d)?,
                }
            }
            (Payload::Poly(x), Payload::Poly(y)) => {
                let p = poly_char(domain);
                Payload::Poly(poly_add(p, x, y))
            }
            (Payload::Residue(x), Payload::Residue(y)) => {
                let n = modulus_of(domain);
                Payload::Residue(((u128::from(*x) + u128::from(*y)) % u128::from(n)) as u64)
            }
            _ => unreachable!("payload kind matches domain"),
        };
        Ok(RingElement { domain, payload })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<RingElement> {
        let domain = self.domain;
        let payload = match &self.payload {
            Payload::Int(x) => Payload::Int(neg64(*x)?),
            Payload::Gaussian { re, im } => Payload::Gaussian {
                re: neg64(*re)?,
                im: neg64(*im)?,
            },
            Payload::Eisenstein { a, b } => Payload::Eisenstein {
                a: neg64(*a)?,
                b: neg64(*b)?,
            },
            Payload::Poly(c) => {
                let p = poly_char(domain);
                Payload::Poly(c.iter().map(|&x| fp_sub(p, 0, x)).collect())
            }
            Payload::Residue(r) => {
                let n = modulus_of(domain);
                Payload::Residue(if *r == 0 { 0 } else { n - r })
            }
        };
        Ok(RingElement { domain, payload })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        let domain = self.same_domain(other)?;
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(x), Payload::Int(y)) => Payload::Int(mul64(*x, *y)?),
            (Payload::Gaussian { re: a, im: b }, Payload::Gaussian { re: c, im: d }) => {
                // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
                Payload::Gaussian {
                    re: sub64(mul64(*a, *c)?, mul64(*b, *d)?)?,
                    im: add64(mul64(*a, *d)?, mul64(*b, *c)?)?,
                }
            }
            (Payload::Eisenstein { a, b }, Payload::Eisenstein { a: c, b: d }) => {
                // omega^2 = -1 - omega, so
                // (a+b w)(c+d w) = (ac-bd) + (ad+bc-bd) w
                let bd = mul64(*b, *d)?;
                Payload::Eisenstein {
                    a: sub64(mul64(*a, *c)?, bd)?,
                    b: sub64(add64(mul64(*a, *d)?, mul64(*b, *c)?)?, bd)?,
                }
            }
            (Payload::Poly(x), Payload::Poly(y)) => {
                let p = poly_char(domain);
                Payload::Poly(poly_mul(p, x, y))
            }
            (Payload::Residue(x), Payload::Residue(y)) => {
                let n = modulus_of(domain);
                Payload::Residue(((u128::from(*x) * u128::from(*y)) % u128::from(n)) as u64)
            }
            _ => unreachable!("payload kind matches domain"),
        };
        Ok(RingElement { domain, payload })
    }

    /// Euclidean division: a = q*b + r with norm(r) < norm(b).
    ///
    /// Over Z the remainder is the least nonnegative residue; over Z[i]
    /// and Z[omega] the quotient rounds the exact field quotient to the
    /// nearest lattice point, ties toward negative infinity in each
    /// coordinate; polynomials use long division.
    pub fn div_rem(&self, other: &RingElement) -> Result<(RingElement, RingElement)> {
        let domain = self.same_domain(other)?;
        domain.reject_modular("div_rem")?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => {
                let q = a
                    .checked_div_euclid(*b)
                    .ok_or(Error::ArithmeticOverflow("div_rem"))?;
                let r = a
                    .checked_rem_euclid(*b)
                    .ok_or(Error::ArithmeticOverflow("div_rem"))?;
                Ok((RingElement::integer(q), RingElement::integer(r)))
            }
            (Payload::Gaussian { re: a, im: b }, Payload::Gaussian { re: c, im: d }) => {
                let (a, b, c, d) = (
                    i128::from(*a),
                    i128::from(*b),
                    i128::from(*c),
                    i128::from(*d),
                );
                // (a+bi)/(c+di) = ((ac+bd) + (bc-ad)i) / (c^2+d^2)
                let den = c * c + d * d;
                let q_re = round_half_down(a * c + b * d, den);
                let q_im = round_half_down(b * c - a * d, den);
                let q = RingElement::gaussian(to_i64(q_re, "div_rem")?, to_i64(q_im, "div_rem")?);
                let r = self.sub(&q.mul(other)?)?;
                debug_assert!(r.norm()? < other.norm()?);
                Ok((q, r))
            }
            (Payload::Eisenstein { a, b }, Payload::Eisenstein { a: c, b: d }) => {
                let (a, b, c, d) = (
                    i128::from(*a),
                    i128::from(*b),
                    i128::from(*c),
                    i128::from(*d),
                );
                // conj(c+d w) = (c-d) - d w, so the exact quotient is
                // ((ac-ad+bd) + (bc-ad) w) / (c^2-cd+d^2)
                let den = c * c - c * d + d * d;
                let q_a = round_half_down(a * c - a * d + b * d, den);
                let q_b = round_half_down(b * c - a * d, den);
                let q = RingElement::eisenstein(to_i64(q_a, "div_rem")?, to_i64(q_b, "div_rem")?);
                let r = self.sub(&q.mul(other)?)?;
                debug_assert!(r.norm()? < other.norm()?);
                Ok((q, r))
            }
            (Payload::Poly(x), Payload::Poly(y)) => {
                let p = poly_char(domain);
                let (q, r) = poly_div_rem(p, x, y);
                Ok((
                    RingElement {
                        domain,
                        payload: Payload::Poly(q),
                    },
                    RingElement {
                        domain,
                        payload: Payload::Poly(r),
                    },
                ))
            }
            _ => unreachable!("payload kind matches domain"),
        }
    }

    /// True when other divides self exactly.
    pub fn divisible_by(&self, other: &RingElement) -> Result<bool> {
        Ok(self.div_rem(other)?.1.is_zero())
    }

    pub fn pow(&self, mut exp: u32) -> Result<RingElement> {
        let mut result = self.domain.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }
}

pub(super) fn poly_char(domain: DomainDescriptor) -> u16 {
    match domain {
        DomainDescriptor::PolyOverFp(p) => p.get(),
        _ => unreachable!("poly payload implies poly domain"),
    }
}

pub(super) fn modulus_of(domain: DomainDescriptor) -> u64 {
    match domain {
        DomainDescriptor::ModularRing(n) => n.get(),
        _ => unreachable!("residue payload implies modular domain"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::FpPrime;
    use super::*;

    #[test]
    fn norm_examples() {
        assert_eq!(RingElement::gaussian(1, 1).norm().unwrap(), 2);
        assert_eq!(RingElement::eisenstein(1, -1).norm().unwrap(), 3);
        let p3 = FpPrime::new(3).unwrap();
        assert_eq!(RingElement::poly(p3, &[1, 0, 1]).norm().unwrap(), 9);
        assert_eq!(RingElement::poly(p3, &[]).norm().unwrap(), 0);
    }

    #[test]
    fn eisenstein_norm_is_multiplicative_on_example() {
        // (1 - w)^2 = -3w, norm 9 = 3 * 3
        let x = RingElement::eisenstein(1, -1);
        let sq = x.mul(&x).unwrap();
        assert_eq!(sq, RingElement::eisenstein(0, -3));
        assert_eq!(sq.norm().unwrap(), 9);
        assert_eq!(x.norm().unwrap() * x.norm().unwrap(), 9);
    }

    #[test]
    fn integer_div_rem_least_nonnegative() {
        let (q, r) = RingElement::integer(7)
            .div_rem(&RingElement::integer(3))
            .unwrap();
        assert_eq!(q, RingElement::integer(2));
        assert_eq!(r, RingElement::integer(1));
        let (q, r) = RingElement::integer(-7)
            .div_rem(&RingElement::integer(3))
            .unwrap();
        assert_eq!(q, RingElement::integer(-3));
        assert_eq!(r, RingElement::integer(2));
    }

    #[test]
    fn gaussian_div_rem_defining_identities() {
        let a = RingElement::gaussian(5, 0);
        let b = RingElement::gaussian(1, 2);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        assert!(r.norm().unwrap() < b.norm().unwrap());
        // 5/(1+2i) = 1-2i exactly
        assert_eq!(q, RingElement::gaussian(1, -2));
        assert!(r.is_zero());
    }

    #[test]
    fn eisenstein_div_rem_defining_identities() {
        let a = RingElement::eisenstein(5, 0);
        let b = RingElement::eisenstein(1, -1);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        assert!(r.norm().unwrap() < b.norm().unwrap());
    }

    #[test]
    fn poly_div_rem_long_division() {
        let p2 = FpPrime::new(2).unwrap();
        let a = RingElement::poly(p2, &[0, 1, 1]); // x^2 + x
        let b = RingElement::poly(p2, &[0, 1]); // x
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, RingElement::poly(p2, &[1, 1])); // x + 1
        assert!(r.is_zero());
    }

    #[test]
    fn div_rem_rejects_zero_and_modular() {
        let a = RingElement::integer(5);
        assert_eq!(
            a.div_rem(&RingElement::integer(0)),
            Err(Error::DivisionByZero)
        );
        let n = crate::ring::Modulus::new(6).unwrap();
        let x = RingElement::modular(n, 3);
        let y = RingElement::modular(n, 2);
        assert!(matches!(
            x.div_rem(&y),
            Err(Error::UnsupportedDomain { .. })
        ));
    }

    #[test]
    fn overflow_is_loud() {
        let big = RingElement::integer(i64::MAX);
        assert_eq!(big.mul(&big), Err(Error::ArithmeticOverflow("mul")));
        assert_eq!(
            big.add(&RingElement::integer(1)),
            Err(Error::ArithmeticOverflow("add"))
        );
    }

    #[test]
    fn round_half_down_ties() {
        assert_eq!(round_half_down(5, 2), 2); // 2.5 -> 2
        assert_eq!(round_half_down(-5, 2), -3); // -2.5 -> -3
        assert_eq!(round_half_down(13, 5), 3); // 2.6 -> 3
        assert_eq!(round_half_down(12, 5), 2); // 2.4 -> 2
        assert_eq!(round_half_down(-13, 5), -3);
    }
}

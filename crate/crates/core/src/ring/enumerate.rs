//! Enumeration of elements by norm, unit groups, and canonical primes.

use crate::error::{Error, Result};

use super::factor::is_prime;
use super::{DomainDescriptor, Payload, RingElement};

fn isqrt_u64(n: u64) -> u64 {
    n.isqrt()
}

/// The complete finite unit group, sorted.
pub fn unit_group(domain: DomainDescriptor) -> Vec<RingElement> {
    let mut units = match domain {
        DomainDescriptor::Integers => vec![RingElement::integer(-1), RingElement::integer(1)],
        DomainDescriptor::GaussianIntegers => vec![
            RingElement::gaussian(1, 0),
            RingElement::gaussian(-1, 0),
            RingElement::gaussian(0, 1),
            RingElement::gaussian(0, -1),
        ],
        DomainDescriptor::EisensteinIntegers => vec![
            RingElement::eisenstein(1, 0),
            RingElement::eisenstein(-1, 0),
            RingElement::eisenstein(0, 1),
            RingElement::eisenstein(0, -1),
            RingElement::eisenstein(1, 1),
            RingElement::eisenstein(-1, -1),
        ],
        DomainDescriptor::PolyOverFp(p) => (1..i64::from(p.get()))
            .map(|c| RingElement::poly(p, &[c]))
            .collect(),
        DomainDescriptor::ModularRing(n) => (1..n.get())
            .map(|r| RingElement::modular(n, r as i64))
            .filter(|x| x.is_unit())
            .collect(),
    };
    units.sort();
    units
}

/// All elements with the given norm, sorted. Does not include zero
/// (norm 0 requests return the zero element alone).
pub fn elements_with_norm(domain: DomainDescriptor, n: u64) -> Result<Vec<RingElement>> {
    domain.reject_modular("elements_with_norm")?;
    if n == 0 {
        return Ok(vec![domain.zero()]);
    }
    let mut out = Vec::new();
    match domain {
        DomainDescriptor::Integers => {
            let v = i64::try_from(n).map_err(|_| Error::ArithmeticOverflow("norm bound"))?;
            out.push(RingElement::integer(-v));
            out.push(RingElement::integer(v));
        }
        DomainDescriptor::GaussianIntegers => {
            // a^2 + b^2 = n
            let lim = isqrt_u64(n) as i64;
            for a in -lim..=lim {
                let rest = n - (a * a) as u64;
                let b = isqrt_u64(rest) as i64;
                if (b * b) as u64 == rest {
                    out.push(RingElement::gaussian(a, b));
                    if b != 0 {
                        out.push(RingElement::gaussian(a, -b));
                    }
                }
            }
        }
        DomainDescriptor::EisensteinIntegers => {
            // a^2 - ab + b^2 = n; solve for a given b via the discriminant.
            let blim = (4u128 * u128::from(n) / 3).isqrt() as i128;
            for b in -blim..=blim {
                let disc = 4 * i128::from(n) - 3 * b * b;
                if disc < 0 {
                    continue;
                }
                let s = (disc as u128).isqrt() as i128;
                if s * s != disc {
                    continue;
                }
                for a2 in [b + s, b - s] {
                    if a2 % 2 == 0 {
                        let (a, b) = (
                            i64::try_from(a2 / 2)
                                .map_err(|_| Error::ArithmeticOverflow("norm bound"))?,
                            i64::try_from(b)
                                .map_err(|_| Error::ArithmeticOverflow("norm bound"))?,
                        );
                        let x = RingElement::eisenstein(a, b);
                        if x.norm()? == n {
                            out.push(x);
                        }
                    }
                }
            }
        }
        DomainDescriptor::PolyOverFp(p) => {
            // Norms are powers of p; degree d contributes (p-1) * p^d polys.
            let pv = u64::from(p.get());
            let mut deg = 0u32;
            let mut power = 1u64;
            while power < n {
                power = power
                    .checked_mul(pv)
                    .ok_or(Error::ArithmeticOverflow("norm bound"))?;
                deg += 1;
            }
            if power != n {
                return Ok(Vec::new());
            }
            for lead in 1..p.get() {
                let mut coeffs = vec![0u16; deg as usize + 1];
                coeffs[deg as usize] = lead;
                loop {
                    out.push(RingElement {
                        domain,
                        payload: Payload::Poly(coeffs.clone()),
                    });
                    // Odometer over the low coefficients.
                    let mut i = 0;
                    loop {
                        if i == deg as usize {
                            break;
                        }
                        coeffs[i] += 1;
                        if coeffs[i] < p.get() {
                            break;
                        }
                        coeffs[i] = 0;
                        i += 1;
                    }
                    if i == deg as usize {
                        break;
                    }
                }
            }
        }
        DomainDescriptor::ModularRing(_) => unreachable!(),
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Canonical-associate representatives with the given norm, sorted.
pub fn canonical_elements_with_norm(domain: DomainDescriptor, n: u64) -> Result<Vec<RingElement>> {
    let all = elements_with_norm(domain, n)?;
    Ok(all.into_iter().filter(|x| x.is_canonical()).collect())
}

/// Streams canonical primes in increasing (norm, payload) order.
///
/// Primality is established by trial division, so the stream is suited
/// to desk-scale norms only.
pub struct CanonicalPrimes {
    domain: DomainDescriptor,
    next_norm: u64,
    queue: std::collections::VecDeque<RingElement>,
    /// Inclusive norm cap; `next` returns None past it.
    pub norm_cap: u64,
}

impl CanonicalPrimes {
    pub fn new(domain: DomainDescriptor, norm_cap: u64) -> Result<Self> {
        domain.reject_modular("prime enumeration")?;
        Ok(CanonicalPrimes {
            domain,
            next_norm: 2,
            queue: std::collections::VecDeque::new(),
            norm_cap,
        })
    }
}

impl Iterator for CanonicalPrimes {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        loop {
            if let Some(p) = self.queue.pop_front() {
                return Some(p);
            }
            if self.next_norm > self.norm_cap {
                return None;
            }
            let norm = self.next_norm;
            self.next_norm += 1;
            let candidates = canonical_elements_with_norm(self.domain, norm).ok()?;
            self.queue.extend(
                candidates
                    .into_iter()
                    .filter(|c| is_prime(c).unwrap_or(false)),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::FpPrime;
    use super::*;

    #[test]
    fn gaussian_units() {
        let u = unit_group(DomainDescriptor::GaussianIntegers);
        assert_eq!(u.len(), 4);
        assert!(u.contains(&RingElement::gaussian(1, 0)));
        assert!(u.contains(&RingElement::gaussian(-1, 0)));
        assert!(u.contains(&RingElement::gaussian(0, 1)));
        assert!(u.contains(&RingElement::gaussian(0, -1)));
    }

    #[test]
    fn eisenstein_units_by_brute_force() {
        // Solve a^2 - ab + b^2 = 1 over |a|, |b| <= 1.
        let mut expected = Vec::new();
        for a in -1i64..=1 {
            for b in -1i64..=1 {
                if a * a - a * b + b * b == 1 {
                    expected.push(RingElement::eisenstein(a, b));
                }
            }
        }
        expected.sort();
        assert_eq!(unit_group(DomainDescriptor::EisensteinIntegers), expected);
        assert_eq!(expected.len(), 6);
    }

    #[test]
    fn modular_units_of_six() {
        let n6 = super::super::Modulus::new(6).unwrap();
        let u = unit_group(DomainDescriptor::ModularRing(n6));
        assert_eq!(
            u,
            vec![RingElement::modular(n6, 1), RingElement::modular(n6, 5)]
        );
    }

    #[test]
    fn unit_group_closed_under_product_and_inverse() {
        let p5 = FpPrime::new(5).unwrap();
        for domain in [
            DomainDescriptor::Integers,
            DomainDescriptor::GaussianIntegers,
            DomainDescriptor::EisensteinIntegers,
            DomainDescriptor::PolyOverFp(p5),
            DomainDescriptor::ModularRing(super::super::Modulus::new(12).unwrap()),
        ] {
            let units = unit_group(domain);
            for a in &units {
                assert!(units.contains(&a.unit_inverse().unwrap()));
                for b in &units {
                    assert!(units.contains(&a.mul(b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn gaussian_norm_two_elements() {
        let v = elements_with_norm(DomainDescriptor::GaussianIntegers, 2).unwrap();
        assert_eq!(v.len(), 4); // (+-1, +-1)
        for x in &v {
            assert_eq!(x.norm().unwrap(), 2);
        }
    }

    #[test]
    fn eisenstein_enumeration_matches_box_scan() {
        for n in 1..=30u64 {
            let fast = elements_with_norm(DomainDescriptor::EisensteinIntegers, n).unwrap();
            let mut slow = Vec::new();
            for a in -12i64..=12 {
                for b in -12i64..=12 {
                    if a * a - a * b + b * b == n as i64 {
                        slow.push(RingElement::eisenstein(a, b));
                    }
                }
            }
            slow.sort();
            assert_eq!(fast, slow, "norm {n}");
        }
    }

    #[test]
    fn poly_enumeration_counts() {
        let p3 = FpPrime::new(3).unwrap();
        let d = DomainDescriptor::PolyOverFp(p3);
        assert_eq!(elements_with_norm(d, 1).unwrap().len(), 2); // constants 1, 2
        assert_eq!(elements_with_norm(d, 3).unwrap().len(), 6); // degree 1
        assert_eq!(elements_with_norm(d, 9).unwrap().len(), 18); // degree 2
        assert!(elements_with_norm(d, 5).unwrap().is_empty()); // not a power of 3
    }

    #[test]
    fn integer_primes_stream_in_order() {
        let primes: Vec<i64> = CanonicalPrimes::new(DomainDescriptor::Integers, 20)
            .unwrap()
            .map(|p| p.int_value().unwrap())
            .collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn gaussian_primes_start_with_one_plus_i() {
        let primes: Vec<RingElement> = CanonicalPrimes::new(DomainDescriptor::GaussianIntegers, 9)
            .unwrap()
            .collect();
        // Norm 2: 1+i. Norm 5: 1+2i and 2+i. Norm 9: 3.
        assert_eq!(
            primes,
            vec![
                RingElement::gaussian(1, 1),
                RingElement::gaussian(1, 2),
                RingElement::gaussian(2, 1),
                RingElement::gaussian(3, 0),
            ]
        );
    }
}

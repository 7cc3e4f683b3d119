//! Factorization into canonical primes by bounded trial division.

use crate::error::{Error, Result};

use super::enumerate::canonical_elements_with_norm;
use super::{RingElement, DEFAULT_FACTOR_BUDGET};

/// unit * prod(prime_i ^ multiplicity_i), primes canonical, pairwise
/// non-associate, sorted by (norm, payload).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: RingElement,
    pub factors: Vec<(RingElement, u32)>,
}

impl Factorization {
    /// Rebuilds the factored element by exact multiplication.
    pub fn reconstruct(&self) -> Result<RingElement> {
        let mut acc = self.unit.clone();
        for (p, m) in &self.factors {
            acc = acc.mul(&p.pow(*m)?)?;
        }
        Ok(acc)
    }
}

/// Candidate divisors in increasing (norm, payload) order up to and
/// including `max_norm`.
struct Candidates {
    domain: super::DomainDescriptor,
    next_norm: u64,
    queue: std::collections::VecDeque<RingElement>,
}

impl Candidates {
    fn new(domain: super::DomainDescriptor) -> Self {
        Candidates {
            domain,
            next_norm: 2,
            queue: std::collections::VecDeque::new(),
        }
    }

    fn next_up_to(&mut self, max_norm: u64) -> Option<RingElement> {
        loop {
            if let Some(c) = self.queue.pop_front() {
                return Some(c);
            }
            if self.next_norm > max_norm {
                return None;
            }
            let norm = self.next_norm;
            self.next_norm += 1;
            self.queue
                .extend(canonical_elements_with_norm(self.domain, norm).ok()?);
        }
    }
}

/// Factors x into canonical primes, with the default norm budget.
pub fn factor(x: &RingElement) -> Result<Factorization> {
    factor_with_budget(x, DEFAULT_FACTOR_BUDGET)
}

/// Trial division by canonical candidates of increasing norm. Any
/// candidate that divides the running remainder is automatically prime,
/// because all smaller-norm primes have already been divided out.
pub fn factor_with_budget(x: &RingElement, budget: u64) -> Result<Factorization> {
    x.domain().reject_modular("factor")?;
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let norm = x.norm()?;
    if norm > budget {
        return Err(Error::FactorBudgetExceeded { norm, budget });
    }
    if x.is_unit() {
        return Ok(Factorization {
            unit: x.clone(),
            factors: Vec::new(),
        });
    }

    let mut factors: Vec<(RingElement, u32)> = Vec::new();
    let mut rem = x.clone();
    let mut rem_norm = rem.norm()?;
    let mut candidates = Candidates::new(x.domain());
    loop {
        let cap = rem_norm.isqrt();
        let cand = match candidates.next_up_to(cap) {
            Some(c) => c,
            None => break,
        };
        if cand.norm()? * cand.norm()? > rem_norm {
            // Candidates stream in increasing norm, so the rest are too big.
            break;
        }
        let mut multiplicity = 0u32;
        loop {
            let (q, r) = rem.div_rem(&cand)?;
            if !r.is_zero() {
                break;
            }
            rem = q;
            multiplicity += 1;
        }
        if multiplicity > 0 {
            rem_norm = rem.norm()?;
            factors.push((cand, multiplicity));
        }
    }

    // What is left is a unit or a single prime of large norm.
    let unit = if rem.is_unit() {
        rem
    } else {
        let (w, prime) = rem.canonical_associate()?;
        factors.push((prime, 1));
        w.unit_inverse()?
    };
    Ok(Factorization { unit, factors })
}

/// True iff x is irreducible, by trial division up to sqrt of the norm.
///
/// Any divisor c with norm(c)^2 <= norm(x) is proper and not a unit, so
/// finding one settles compositeness; norms multiply, so a composite
/// always has such a divisor.
pub fn is_prime(x: &RingElement) -> Result<bool> {
    x.domain().reject_modular("is_prime")?;
    if x.is_zero() || x.is_unit() {
        return Ok(false);
    }
    let norm = x.norm()?;
    let mut candidates = Candidates::new(x.domain());
    while let Some(cand) = candidates.next_up_to(norm.isqrt()) {
        if x.divisible_by(&cand)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The distinct canonical primes dividing x, sorted: the prime support
/// that drives closures and indistinguishability.
pub fn radical_support(x: &RingElement) -> Result<Vec<RingElement>> {
    if x.is_zero() || x.is_unit() {
        return Err(Error::UndefinedSupport);
    }
    let f = factor(x)?;
    Ok(f.factors.into_iter().map(|(p, _)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::super::FpPrime;
    use super::*;

    fn z(v: i64) -> RingElement {
        RingElement::integer(v)
    }

    #[test]
    fn factor_twelve() {
        let f = factor(&z(12)).unwrap();
        assert_eq!(f.unit, z(1));
        assert_eq!(f.factors, vec![(z(2), 2), (z(3), 1)]);
        assert_eq!(f.reconstruct().unwrap(), z(12));
    }

    #[test]
    fn factor_prime_and_negative() {
        let f = factor(&z(7)).unwrap();
        assert_eq!(f.unit, z(1));
        assert_eq!(f.factors, vec![(z(7), 1)]);

        let f = factor(&z(-12)).unwrap();
        assert_eq!(f.unit, z(-1));
        assert_eq!(f.factors, vec![(z(2), 2), (z(3), 1)]);
        assert_eq!(f.reconstruct().unwrap(), z(-12));
    }

    #[test]
    fn factor_two_i() {
        // 2i = (1+i)^2 exactly.
        let f = factor(&RingElement::gaussian(0, 2)).unwrap();
        assert_eq!(f.factors, vec![(RingElement::gaussian(1, 1), 2)]);
        assert!(f.unit.is_one());
        assert_eq!(f.reconstruct().unwrap(), RingElement::gaussian(0, 2));
    }

    #[test]
    fn factor_two_in_gaussians() {
        // 2 = -i (1+i)^2.
        let f = factor(&RingElement::gaussian(2, 0)).unwrap();
        assert_eq!(f.factors, vec![(RingElement::gaussian(1, 1), 2)]);
        assert_eq!(f.unit, RingElement::gaussian(0, -1));
        assert_eq!(f.reconstruct().unwrap(), RingElement::gaussian(2, 0));
    }

    #[test]
    fn factor_units_and_errors() {
        let f = factor(&z(-1)).unwrap();
        assert_eq!(f.unit, z(-1));
        assert!(f.factors.is_empty());
        assert_eq!(factor(&z(0)), Err(Error::ZeroInput));
        assert!(matches!(
            factor_with_budget(&z(1 << 40), 1000),
            Err(Error::FactorBudgetExceeded { .. })
        ));
    }

    #[test]
    fn factor_poly_over_f2() {
        let p2 = FpPrime::new(2).unwrap();
        // x^2 + x = x (x + 1)
        let x2x = RingElement::poly(p2, &[0, 1, 1]);
        let f = factor(&x2x).unwrap();
        assert_eq!(
            f.factors,
            vec![
                (RingElement::poly(p2, &[0, 1]), 1),
                (RingElement::poly(p2, &[1, 1]), 1)
            ]
        );
        assert_eq!(f.reconstruct().unwrap(), x2x);
    }

    #[test]
    fn radical_support_examples() {
        assert_eq!(radical_support(&z(12)).unwrap(), vec![z(2), z(3)]);
        assert_eq!(radical_support(&z(18)).unwrap(), vec![z(2), z(3)]);
        assert_eq!(
            radical_support(&RingElement::gaussian(2, 0)).unwrap(),
            vec![RingElement::gaussian(1, 1)]
        );
        assert_eq!(radical_support(&z(1)), Err(Error::UndefinedSupport));
        assert_eq!(radical_support(&z(0)), Err(Error::UndefinedSupport));
    }

    #[test]
    fn primality_matches_naive_over_z() {
        fn naive(n: u64) -> bool {
            if n < 2 {
                return false;
            }
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    return false;
                }
                d += 1;
            }
            true
        }
        for v in 2i64..200 {
            assert_eq!(is_prime(&z(v)).unwrap(), naive(v as u64), "{v}");
            assert_eq!(is_prime(&z(-v)).unwrap(), naive(v as u64), "{v}");
        }
    }

    #[test]
    fn gaussian_primality_examples() {
        assert!(is_prime(&RingElement::gaussian(1, 1)).unwrap()); // norm 2
        assert!(is_prime(&RingElement::gaussian(2, 1)).unwrap()); // norm 5
        assert!(is_prime(&RingElement::gaussian(3, 0)).unwrap()); // inert 3
        assert!(!is_prime(&RingElement::gaussian(2, 0)).unwrap()); // ramified 2
        assert!(!is_prime(&RingElement::gaussian(0, 1)).unwrap()); // unit
        assert!(!is_prime(&RingElement::gaussian(5, 0)).unwrap()); // 5 = (2+i)(2-i)
    }

    #[test]
    fn irreducibility_over_f2() {
        let p2 = FpPrime::new(2).unwrap();
        // x^2 + x + 1 is the unique irreducible quadratic over F_2.
        assert!(is_prime(&RingElement::poly(p2, &[1, 1, 1])).unwrap());
        assert!(!is_prime(&RingElement::poly(p2, &[1, 0, 1])).unwrap()); // (x+1)^2
        assert!(!is_prime(&RingElement::poly(p2, &[1])).unwrap()); // unit
    }
}

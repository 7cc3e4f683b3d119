//! Finite windows and residue systems: the universes every topological
//! computation runs on.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{elements_with_norm, unit_group, DomainDescriptor, RingElement};

/// Default cap on window size; keeps quadratic sweeps desk-scale.
pub const DEFAULT_WINDOW_CAP: usize = 1_000_000;

#[derive(Debug)]
struct WindowInner {
    domain: DomainDescriptor,
    bound: u64,
    include_zero: bool,
    elements: Vec<RingElement>,
}

/// All elements with 0 < norm <= bound (plus 0 when requested), sorted
/// by (norm, payload). For Z/nZ the window is the whole ring.
///
/// Cheap to clone; the element list is shared.
#[derive(Debug, Clone)]
pub struct Window(Arc<WindowInner>);

impl PartialEq for Window {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.domain == other.0.domain
                && self.0.bound == other.0.bound
                && self.0.include_zero == other.0.include_zero)
    }
}

impl Eq for Window {}

impl Window {
    pub fn domain(&self) -> DomainDescriptor {
        self.0.domain
    }

    pub fn bound(&self) -> u64 {
        self.0.bound
    }

    pub fn include_zero(&self) -> bool {
        self.0.include_zero
    }

    pub fn elements(&self) -> &[RingElement] {
        &self.0.elements
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.0.elements.binary_search(x).is_ok()
    }
}

/// Builds the window with the default element cap.
pub fn make_window(domain: DomainDescriptor, bound: u64, include_zero: bool) -> Result<Window> {
    make_window_capped(domain, bound, include_zero, DEFAULT_WINDOW_CAP)
}

/// Builds the window, failing with [`Error::WindowTooLarge`] once more
/// than `cap` elements would be enumerated.
pub fn make_window_capped(
    domain: DomainDescriptor,
    bound: u64,
    include_zero: bool,
    cap: usize,
) -> Result<Window> {
    let mut elements = Vec::new();
    if let DomainDescriptor::ModularRing(n) = domain {
        // The full ring, whatever the bound.
        let n = n.get();
        if n as usize > cap {
            return Err(Error::WindowTooLarge { cap });
        }
        let start = u64::from(!include_zero);
        for r in start..n {
            elements.push(RingElement::modular(
                match domain {
                    DomainDescriptor::ModularRing(m) => m,
                    _ => unreachable!(),
                },
                r as i64,
            ));
        }
        return Ok(Window(Arc::new(WindowInner {
            domain,
            bound,
            include_zero,
            elements,
        })));
    }

    if bound < 1 {
        return Err(Error::InvalidInput(
            "window bound must be at least 1".into(),
        ));
    }
    if include_zero {
        elements.push(domain.zero());
    }
    for n in 1..=bound {
        elements.extend(elements_with_norm(domain, n)?);
        if elements.len() > cap {
            return Err(Error::WindowTooLarge { cap });
        }
    }
    Ok(Window(Arc::new(WindowInner {
        domain,
        bound,
        include_zero,
        elements,
    })))
}

/// The complete (finite) unit group of the ring, sorted.
pub fn units_of(domain: DomainDescriptor) -> Vec<RingElement> {
    unit_group(domain)
}

/// The canonical representative of x's residue class modulo k.
///
/// Euclidean kinds use the `div_rem` remainder, which depends only on
/// the class. Over Z/nZ the class of x modulo the ideal <k> is decided
/// by x mod gcd(k, n) over the integers.
pub fn canonical_remainder(x: &RingElement, k: &RingElement) -> Result<RingElement> {
    if k.domain().is_euclidean() {
        Ok(x.div_rem(k)?.1)
    } else {
        let n = match k.domain() {
            DomainDescriptor::ModularRing(n) => n,
            _ => unreachable!(),
        };
        let (xv, kv) = (
            x.residue_value().expect("modular payload"),
            k.residue_value().expect("modular payload"),
        );
        let g = gcd_u64(kv, n.get());
        Ok(RingElement::modular(n, (xv % g) as i64))
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A complete system of residue representatives modulo one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    pub modulus: RingElement,
    pub representatives: Vec<RingElement>,
}

impl ResidueSystem {
    /// The representative of x's class, if present.
    pub fn class_of(&self, x: &RingElement) -> Result<Option<RingElement>> {
        let r = canonical_remainder(x, &self.modulus)?;
        Ok(self
            .representatives
            .binary_search(&r)
            .ok()
            .map(|i| self.representatives[i].clone()))
    }
}

/// Collects the residue classes modulo k surfaced by the window together
/// with all classes of elements of norm below norm(k); the result is a
/// complete system for the whole ring.
pub fn residue_system(k: &RingElement, window: &Window) -> Result<ResidueSystem> {
    if k.domain() != window.domain() {
        return Err(Error::DomainMismatch {
            left: k.domain().to_string(),
            right: window.domain().to_string(),
        });
    }
    if k.is_zero() || k.is_unit() {
        return Err(Error::DegenerateModulus);
    }
    let mut reps: BTreeSet<RingElement> = BTreeSet::new();
    if k.domain().is_euclidean() {
        for x in window.elements() {
            reps.insert(canonical_remainder(x, k)?);
        }
        // Small-norm elements surface every class even on thin windows:
        // each class has a remainder representative of norm < norm(k).
        for n in 0..k.norm()? {
            for y in elements_with_norm(k.domain(), n)? {
                reps.insert(canonical_remainder(&y, k)?);
            }
        }
    } else {
        let n = match k.domain() {
            DomainDescriptor::ModularRing(n) => n,
            _ => unreachable!(),
        };
        let g = gcd_u64(k.residue_value().expect("modular payload"), n.get());
        for r in 0..g {
            reps.insert(RingElement::modular(n, r as i64));
        }
    }
    Ok(ResidueSystem {
        modulus: k.clone(),
        representatives: reps.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FpPrime, Modulus};

    #[test]
    fn integer_window_order_and_content() {
        let w = make_window(DomainDescriptor::Integers, 3, false).unwrap();
        let vals: Vec<i64> = w.elements().iter().map(|x| x.int_value().unwrap()).collect();
        assert_eq!(vals, vec![-1, 1, -2, 2, -3, 3]);

        let wz = make_window(DomainDescriptor::Integers, 3, true).unwrap();
        assert_eq!(wz.len(), 7);
        assert!(wz.elements()[0].is_zero());
    }

    #[test]
    fn gaussian_window_bound_two_has_eight_points() {
        // Brute force: lattice points with 0 < a^2+b^2 <= 2.
        let mut expected = Vec::new();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                let n = a * a + b * b;
                if n > 0 && n <= 2 {
                    expected.push(RingElement::gaussian(a, b));
                }
            }
        }
        let w = make_window(DomainDescriptor::GaussianIntegers, 2, false).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(expected.len(), 8);
        for x in &expected {
            assert!(w.contains(x));
        }
    }

    #[test]
    fn modular_window_is_full_ring() {
        let n6 = Modulus::new(6).unwrap();
        let w = make_window(DomainDescriptor::ModularRing(n6), 999, false).unwrap();
        let vals: Vec<u64> = w
            .elements()
            .iter()
            .map(|x| x.residue_value().unwrap())
            .collect();
        assert_eq!(vals, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn window_determinism() {
        let a = make_window(DomainDescriptor::EisensteinIntegers, 12, false).unwrap();
        let b = make_window(DomainDescriptor::EisensteinIntegers, 12, false).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn window_cap_is_enforced() {
        assert_eq!(
            make_window_capped(DomainDescriptor::Integers, 100, false, 10),
            Err(Error::WindowTooLarge { cap: 10 })
        );
    }

    #[test]
    fn poly_window_content() {
        let p2 = FpPrime::new(2).unwrap();
        let w = make_window(DomainDescriptor::PolyOverFp(p2), 4, false).unwrap();
        // 1; x, x+1; and the four quadratics.
        assert_eq!(w.len(), 7);
    }

    #[test]
    fn units_of_examples() {
        assert_eq!(units_of(DomainDescriptor::GaussianIntegers).len(), 4);
        assert_eq!(units_of(DomainDescriptor::EisensteinIntegers).len(), 6);
        let n6 = Modulus::new(6).unwrap();
        let u = units_of(DomainDescriptor::ModularRing(n6));
        assert_eq!(
            u,
            vec![RingElement::modular(n6, 1), RingElement::modular(n6, 5)]
        );
    }

    #[test]
    fn residue_system_mod_four() {
        let w = make_window(DomainDescriptor::Integers, 20, false).unwrap();
        let rs = residue_system(&RingElement::integer(4), &w).unwrap();
        let vals: Vec<i64> = rs
            .representatives
            .iter()
            .map(|x| x.int_value().unwrap())
            .collect();
        assert_eq!(vals, vec![0, 1, 2, 3]);
    }

    #[test]
    fn residue_system_mod_three() {
        let w = make_window(DomainDescriptor::Integers, 9, false).unwrap();
        let rs = residue_system(&RingElement::integer(3), &w).unwrap();
        let vals: Vec<i64> = rs
            .representatives
            .iter()
            .map(|x| x.int_value().unwrap())
            .collect();
        assert_eq!(vals, vec![0, 1, 2]);
    }

    #[test]
    fn gaussian_residue_count_matches_norm() {
        let w = make_window(DomainDescriptor::GaussianIntegers, 10, false).unwrap();
        let rs = residue_system(&RingElement::gaussian(1, 1), &w).unwrap();
        assert_eq!(rs.representatives.len(), 2);
        let rs5 = residue_system(&RingElement::gaussian(2, 1), &w).unwrap();
        assert_eq!(rs5.representatives.len(), 5);
    }

    #[test]
    fn residue_completeness_over_window() {
        let w = make_window(DomainDescriptor::Integers, 30, false).unwrap();
        let k = RingElement::integer(7);
        let rs = residue_system(&k, &w).unwrap();
        for x in w.elements() {
            let r = canonical_remainder(x, &k).unwrap();
            // Exactly one representative is congruent to x.
            let matching: Vec<_> = rs
                .representatives
                .iter()
                .filter(|rep| {
                    x.sub(rep)
                        .unwrap()
                        .divisible_by(&k)
                        .unwrap()
                })
                .collect();
            assert_eq!(matching.len(), 1);
            assert_eq!(matching[0], &r);
        }
    }

    #[test]
    fn modular_residue_system() {
        let n6 = Modulus::new(6).unwrap();
        let w = make_window(DomainDescriptor::ModularRing(n6), 1, false).unwrap();
        let rs = residue_system(&RingElement::modular(n6, 2), &w).unwrap();
        let vals: Vec<u64> = rs
            .representatives
            .iter()
            .map(|x| x.residue_value().unwrap())
            .collect();
        assert_eq!(vals, vec![0, 1]);
    }

    #[test]
    fn degenerate_moduli_rejected() {
        let w = make_window(DomainDescriptor::Integers, 5, false).unwrap();
        assert_eq!(
            residue_system(&RingElement::integer(0), &w),
            Err(Error::DegenerateModulus)
        );
        assert_eq!(
            residue_system(&RingElement::integer(-1), &w),
            Err(Error::DegenerateModulus)
        );
    }
}

//! The coprimality topology made computable on windows: basic opens,
//! closures (radical formula and brute-force oracle), specialization,
//! indistinguishability, and the connectivity properties as checkable
//! predicates.

use crate::domains::Window;
use crate::error::{Error, Result};
use crate::ring::{is_coprime, radical_support, RingElement};

/// The basic open sigma_k of elements coprime to the generator.
///
/// With `include_zero` the set lives in the zero-inclusive space, where
/// 0 belongs to sigma_k exactly when k is a unit and sigma_0 is the unit
/// group; without it, membership of 0 is false by fiat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicOpen {
    generator: RingElement,
    include_zero: bool,
}

impl BasicOpen {
    pub fn new(generator: RingElement, include_zero: bool) -> Self {
        BasicOpen {
            generator,
            include_zero,
        }
    }

    pub fn generator(&self) -> &RingElement {
        &self.generator
    }

    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        if x.is_zero() && !self.include_zero {
            return Ok(false);
        }
        is_coprime(&self.generator, x)
    }
}

/// An explicit subset of a window, kept sorted in window order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSet {
    window: Window,
    members: Vec<RingElement>,
}

impl WindowSet {
    /// Builds a set by filtering the window; members inherit window order.
    pub fn filtered<F>(window: &Window, mut keep: F) -> Result<WindowSet>
    where
        F: FnMut(&RingElement) -> Result<bool>,
    {
        let mut members = Vec::new();
        for x in window.elements() {
            if keep(x)? {
                members.push(x.clone());
            }
        }
        Ok(WindowSet {
            window: window.clone(),
            members,
        })
    }

    /// Builds a set from explicit members, which must all lie in the window.
    pub fn from_members(window: &Window, members: &[RingElement]) -> Result<WindowSet> {
        let mut sorted: Vec<RingElement> = members.to_vec();
        sorted.sort();
        sorted.dedup();
        for x in &sorted {
            if !window.contains(x) {
                return Err(Error::InvalidInput(format!("{x} is not in the window")));
            }
        }
        Ok(WindowSet {
            window: window.clone(),
            members: sorted,
        })
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn members(&self) -> &[RingElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.members.binary_search(x).is_ok()
    }

    fn check_same_window(&self, other: &WindowSet) -> Result<()> {
        if self.window == other.window {
            Ok(())
        } else {
            Err(Error::InvalidInput(
                "window sets belong to different windows".into(),
            ))
        }
    }

    pub fn intersect(&self, other: &WindowSet) -> Result<WindowSet> {
        self.check_same_window(other)?;
        let members = self
            .members
            .iter()
            .filter(|x| other.contains(x))
            .cloned()
            .collect();
        Ok(WindowSet {
            window: self.window.clone(),
            members,
        })
    }

    pub fn union(&self, other: &WindowSet) -> Result<WindowSet> {
        self.check_same_window(other)?;
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        members.sort();
        members.dedup();
        Ok(WindowSet {
            window: self.window.clone(),
            members,
        })
    }

    /// The earliest element (in window order) on which the two sets
    /// disagree, if any.
    pub fn first_difference(&self, other: &WindowSet) -> Option<RingElement> {
        self.window
            .elements()
            .iter()
            .find(|x| self.contains(x) != other.contains(x))
            .cloned()
    }
}

/// Outcome of a quantified law check: either it holds, or here is the
/// first element witnessing failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub holds: bool,
    pub counterexample: Option<RingElement>,
}

impl LawCheck {
    fn pass() -> Self {
        LawCheck {
            holds: true,
            counterexample: None,
        }
    }

    fn fail(witness: RingElement) -> Self {
        LawCheck {
            holds: false,
            counterexample: Some(witness),
        }
    }
}

fn check_domain(x: &RingElement, window: &Window) -> Result<()> {
    if x.domain() == window.domain() {
        Ok(())
    } else {
        Err(Error::DomainMismatch {
            left: x.domain().to_string(),
            right: window.domain().to_string(),
        })
    }
}

/// sigma_k restricted to the window: exactly the window elements coprime
/// to k. On a zero-excluded window this is the basic open of the
/// punctured space.
pub fn sigma_window(k: &RingElement, window: &Window) -> Result<WindowSet> {
    check_domain(k, window)?;
    let open = BasicOpen::new(k.clone(), window.include_zero());
    WindowSet::filtered(window, |x| open.contains(x))
}

/// Checks sigma_{ab} = sigma_a intersect sigma_b on the window.
pub fn check_basis_law(a: &RingElement, b: &RingElement, window: &Window) -> Result<LawCheck> {
    check_domain(a, window)?;
    check_domain(b, window)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let product = a.mul(b)?;
    let lhs = sigma_window(&product, window)?;
    let rhs = sigma_window(a, window)?.intersect(&sigma_window(b, window)?)?;
    Ok(match lhs.first_difference(&rhs) {
        None => LawCheck::pass(),
        Some(x) => LawCheck::fail(x),
    })
}

/// Closure of a singleton on the window, through the prime-support
/// formula: units close to the whole space, zero closes to the units,
/// and any other element closes to the common multiples of its radical.
pub fn closure_singleton(r: &RingElement, window: &Window) -> Result<WindowSet> {
    check_domain(r, window)?;
    window.domain().reject_modular("closure_singleton")?;
    if r.is_unit() {
        return WindowSet::filtered(window, |_| Ok(true));
    }
    if r.is_zero() {
        if !window.include_zero() {
            return Err(Error::ZeroInput);
        }
        return WindowSet::filtered(window, |x| Ok(x.is_unit()));
    }
    let mut radical = window.domain().one();
    for p in radical_support(r)? {
        radical = radical.mul(&p)?;
    }
    WindowSet::filtered(window, |x| x.divisible_by(&radical))
}

/// Brute-force closure of a singleton: keeps the window points all of
/// whose surrounding basic opens (generated by window elements) contain
/// r. Exact relative to the infinite space whenever the window bound
/// reaches norm(r), because a separating generator can always be chosen
/// among r's prime divisors.
pub fn closure_oracle(r: &RingElement, window: &Window) -> Result<WindowSet> {
    check_domain(r, window)?;
    window.domain().reject_modular("closure_oracle")?;
    if r.is_zero() || r.is_unit() {
        return Err(Error::InvalidInput(
            "closure oracle needs a nonzero non-unit".into(),
        ));
    }
    let need = r.norm()?;
    if window.bound() < need {
        return Err(Error::OracleBoundTooSmall {
            bound: window.bound(),
            need,
        });
    }
    // Only generators whose basic open misses r can exclude a point.
    let mut separating = Vec::new();
    for k in window.elements() {
        if !is_coprime(r, k)? {
            separating.push(k.clone());
        }
    }
    WindowSet::filtered(window, |x| {
        for k in &separating {
            let x_in = if x.is_zero() && !window.include_zero() {
                false
            } else {
                is_coprime(x, k)?
            };
            if x_in {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// Closure of a finite set: the union of its singleton closures.
pub fn closure_set(set: &WindowSet) -> Result<WindowSet> {
    let window = set.window().clone();
    let mut acc = WindowSet::from_members(&window, &[])?;
    for a in set.members() {
        acc = acc.union(&closure_singleton(a, &window)?)?;
    }
    Ok(acc)
}

/// Checks cl({xy}) = cl({x}) intersect cl({y}) on the window.
pub fn check_product_closure(
    x: &RingElement,
    y: &RingElement,
    window: &Window,
) -> Result<LawCheck> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroInput);
    }
    let product = x.mul(y)?;
    let lhs = closure_singleton(&product, window)?;
    let rhs = closure_singleton(x, window)?.intersect(&closure_singleton(y, window)?)?;
    Ok(match lhs.first_difference(&rhs) {
        None => LawCheck::pass(),
        Some(w) => LawCheck::fail(w),
    })
}

/// True iff y lies in the closure of {x}: every prime of x divides y.
/// Units specialize to everything.
pub fn specializes(x: &RingElement, y: &RingElement) -> Result<bool> {
    x.same_domain(y)?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroInput);
    }
    if x.is_unit() {
        return Ok(true);
    }
    for p in radical_support(x)? {
        if !y.divisible_by(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff x and y have the same prime support, which is exactly
/// topological indistinguishability for nonzero non-units.
pub fn indistinguishable(x: &RingElement, y: &RingElement) -> Result<bool> {
    x.same_domain(y)?;
    Ok(radical_support(x)? == radical_support(y)?)
}

/// Checks the product law "xy coprime to k iff both x and y are" over
/// every window pair whose product stays inside the window.
pub fn check_semigroup_window(k: &RingElement, window: &Window) -> Result<LawCheck> {
    check_domain(k, window)?;
    if k.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sigma = sigma_window(k, window)?;
    for x in window.elements() {
        let x_in = sigma.contains(x);
        for y in window.elements() {
            let product = match x.mul(y) {
                Ok(p) => p,
                Err(Error::ArithmeticOverflow(_)) => continue,
                Err(e) => return Err(e),
            };
            if !window.contains(&product) {
                continue;
            }
            let lhs = sigma.contains(&product);
            let rhs = x_in && sigma.contains(y);
            if lhs != rhs {
                return Ok(LawCheck::fail(product));
            }
        }
    }
    Ok(LawCheck::pass())
}

/// The point lying in every basic open: the ring's 1, verified to sit in
/// sigma_a and sigma_b.
pub fn hyperconnected_witness(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    let domain = a.same_domain(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let one = domain.one();
    debug_assert!(is_coprime(a, &one)? && is_coprime(b, &one)?);
    Ok(one)
}

/// The point lying in both singleton closures: x*y, verified against the
/// closures on a window of bound norm(x*y).
pub fn ultraconnected_witness(x: &RingElement, y: &RingElement) -> Result<RingElement> {
    let domain = x.same_domain(y)?;
    domain.reject_modular("ultraconnected_witness")?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroInput);
    }
    let product = x.mul(y)?;
    let window = crate::domains::make_window(domain, product.norm()?.max(1), false)?;
    let in_both = closure_singleton(x, &window)?.contains(&product)
        && closure_singleton(y, &window)?.contains(&product);
    if !in_both {
        return Err(Error::InvalidInput(format!(
            "{product} escaped the closure intersection"
        )));
    }
    Ok(product)
}

/// Searches the (finite) modular ring for two disjoint closed sets — the
/// witness that the punctured space over Z/nZ can fail ultraconnectedness.
/// Closures come from minimal open sets, so the subbasis generated by the
/// sigma sets is handled exactly. Returns None when every two closures
/// meet (for instance over a field, where the space is indiscrete).
pub fn modular_disjoint_closed_pair(window: &Window) -> Result<Option<(WindowSet, WindowSet)>> {
    if window.domain().is_euclidean() {
        return Err(Error::UnsupportedDomain {
            domain: window.domain().to_string(),
            operation: "modular_disjoint_closed_pair",
        });
    }
    let elems = window.elements();
    let n = elems.len();
    // minimal_open[i] = intersection of all sigma_k (k in the window)
    // containing elems[i].
    let mut minimal_open = vec![vec![true; n]; n];
    for k in elems {
        let sigma = sigma_window(k, window)?;
        for (i, x) in elems.iter().enumerate() {
            if sigma.contains(x) {
                for (j, slot) in minimal_open[i].iter_mut().enumerate() {
                    *slot &= sigma.contains(&elems[j]);
                }
            }
        }
    }
    // closure of {x} = { y : x in minimal_open(y) }.
    let closure_of = |i: usize| -> Vec<usize> {
        (0..n).filter(|&j| minimal_open[j][i]).collect()
    };
    let closures: Vec<Vec<usize>> = (0..n).map(closure_of).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if closures[i].iter().all(|v| !closures[j].contains(v)) {
                let left: Vec<RingElement> =
                    closures[i].iter().map(|&v| elems[v].clone()).collect();
                let right: Vec<RingElement> =
                    closures[j].iter().map(|&v| elems[v].clone()).collect();
                return Ok(Some((
                    WindowSet::from_members(window, &left)?,
                    WindowSet::from_members(window, &right)?,
                )));
            }
        }
    }
    Ok(None)
}

/// True iff every basic open cut to the window is the whole window —
/// the window-scale reading of "the space is indiscrete", expected
/// exactly for fields.
pub fn is_indiscrete_window(window: &Window) -> Result<bool> {
    if window.include_zero() {
        return Err(Error::InvalidInput(
            "indiscreteness is checked on the zero-excluded space".into(),
        ));
    }
    let full = window.len();
    for k in window.elements() {
        if sigma_window(k, window)?.len() != full {
            return Ok(false);
        }
    }
    Ok(true)
}

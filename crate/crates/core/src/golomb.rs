//! Coprime cosets: the basis of the Golomb topology, the decomposition
//! of each sigma set into cosets, and the witness that the coprimality
//! topology is strictly coarser.

use crate::domains::{canonical_remainder, residue_system, Window};
use crate::error::{Error, Result};
use crate::ring::{is_coprime, RingElement};
use crate::topology::{sigma_window, LawCheck, WindowSet};

/// A coset representative + modulus with <representative> + <modulus> = R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeCoset {
    representative: RingElement,
    modulus: RingElement,
}

impl CoprimeCoset {
    pub fn new(representative: RingElement, modulus: RingElement) -> Result<Self> {
        representative.same_domain(&modulus)?;
        if modulus.is_zero() {
            return Err(Error::DegenerateModulus);
        }
        if !is_coprime(&representative, &modulus)? {
            return Err(Error::InvalidInput(format!(
                "{representative} is not coprime to the modulus {modulus}"
            )));
        }
        Ok(CoprimeCoset {
            representative,
            modulus,
        })
    }

    pub fn representative(&self) -> &RingElement {
        &self.representative
    }

    pub fn modulus(&self) -> &RingElement {
        &self.modulus
    }

    /// Membership: x lies in the coset iff x and the representative fall
    /// in the same residue class mod the modulus.
    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        Ok(canonical_remainder(x, &self.modulus)?
            == canonical_remainder(&self.representative, &self.modulus)?)
    }
}

/// The coprime cosets of k: one per residue class whose representative
/// is coprime to k. Their union is sigma_k.
pub fn coprime_cosets_of(k: &RingElement, window: &Window) -> Result<Vec<CoprimeCoset>> {
    if k.is_zero() || k.is_unit() {
        return Err(Error::DegenerateModulus);
    }
    let system = residue_system(k, window)?;
    let mut cosets = Vec::new();
    for rep in system.representatives {
        if is_coprime(&rep, k)? {
            cosets.push(CoprimeCoset {
                representative: rep,
                modulus: k.clone(),
            });
        }
    }
    Ok(cosets)
}

/// The window elements congruent to the coset representative.
pub fn coset_window(coset: &CoprimeCoset, window: &Window) -> Result<WindowSet> {
    let target = canonical_remainder(&coset.representative, &coset.modulus)?;
    WindowSet::filtered(window, |x| {
        Ok(canonical_remainder(x, &coset.modulus)? == target)
    })
}

/// Checks sigma_k = union of the coprime cosets of k, exactly, on the
/// window. This is the containment that makes every basic open of the
/// coprimality topology open in the Golomb topology.
pub fn verify_decomposition(k: &RingElement, window: &Window) -> Result<LawCheck> {
    let sigma = sigma_window(k, window)?;
    let mut union = WindowSet::from_members(window, &[])?;
    for coset in coprime_cosets_of(k, window)? {
        union = union.union(&coset_window(&coset, window)?)?;
    }
    Ok(match sigma.first_difference(&union) {
        None => LawCheck {
            holds: true,
            counterexample: None,
        },
        Some(x) => LawCheck {
            holds: false,
            counterexample: Some(x),
        },
    })
}

/// Certifies that a coprime coset avoiding 1 is Golomb-open but not open
/// in the coprimality topology: 1 sits in every nonempty basic open, yet
/// not in this coset. Returns the witness, the ring's 1.
pub fn not_macias_open_witness(coset: &CoprimeCoset, window: &Window) -> Result<RingElement> {
    let one = coset.modulus.domain().one();
    if coset.contains(&one)? {
        return Err(Error::CosetContainsOne);
    }
    debug_assert!(!coset_window(coset, window)?.contains(&one));
    // Every basic open generated inside the window does contain 1.
    for k in window.elements() {
        if !k.is_zero() && !is_coprime(k, &one)? {
            return Err(Error::InvalidInput(format!(
                "1 unexpectedly escaped sigma_{k}"
            )));
        }
    }
    Ok(one)
}

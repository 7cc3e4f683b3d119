//! Runnable experiments: prime density, the constructive Euclid walk,
//! non-compactness cover witnesses, and the units-are-not-open check.
//! Every witness re-verifies through independent predicates, so reports
//! are self-certifying.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::domains::Window;
use crate::error::{Error, Result};
use crate::ring::{ext_gcd, is_coprime, is_prime, CanonicalPrimes, DomainDescriptor, RingElement};

/// Norm ceiling for prime searches; far beyond any desk-scale window.
const SEARCH_NORM_CAP: u64 = 1 << 22;

/// Serializable record of one experiment run.
///
/// The JSON form is
/// `{ "experiment", "ring", "params", "witnesses", "verified", "elapsed_ms" }`
/// with witnesses as pairs of element strings in CLI syntax.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    #[serde(rename = "ring")]
    pub domain: DomainDescriptor,
    pub params: BTreeMap<String, serde_json::Value>,
    #[serde(serialize_with = "witnesses_as_strings")]
    pub witnesses: Vec<(RingElement, RingElement)>,
    pub verified: bool,
    pub elapsed_ms: u64,
}

fn witnesses_as_strings<S: serde::Serializer>(
    witnesses: &[(RingElement, RingElement)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(witnesses.len()))?;
    for (input, witness) in witnesses {
        seq.serialize_element(&[input.to_string(), witness.to_string()])?;
    }
    seq.end()
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX)
}

/// Least-norm canonical prime coprime to x.
fn least_prime_coprime_to(x: &RingElement) -> Result<RingElement> {
    for p in CanonicalPrimes::new(x.domain(), SEARCH_NORM_CAP)? {
        if is_coprime(&p, x)? {
            return Ok(p);
        }
    }
    Err(Error::SearchBudgetExceeded(format!(
        "looking for a prime coprime to {x}"
    )))
}

/// Independent re-check of a (k, p) density witness: p prime by trial
/// division, coprimality by a Bezout certificate.
fn verify_coprime_prime(k: &RingElement, p: &RingElement) -> Result<bool> {
    Ok(is_prime(p)? && ext_gcd(p, k)?.g.is_unit())
}

/// For every non-unit k in the window, finds a prime inside sigma_k —
/// the window-scale content of "the primes are dense".
pub fn prime_density_check(window: &Window) -> Result<ExperimentReport> {
    let start = Instant::now();
    let domain = window.domain();
    domain.reject_modular("prime_density_check")?;
    if window.include_zero() {
        return Err(Error::InvalidInput(
            "density runs on the zero-excluded space".into(),
        ));
    }
    let mut witnesses = Vec::new();
    let mut verified = true;
    for k in window.elements() {
        if k.is_unit() {
            continue;
        }
        let p = least_prime_coprime_to(k)?;
        verified &= verify_coprime_prime(k, &p)?;
        witnesses.push((k.clone(), p));
    }
    let mut params = BTreeMap::new();
    params.insert("bound".into(), window.bound().into());
    params.insert("non_units_checked".into(), witnesses.len().into());
    Ok(ExperimentReport {
        experiment: "density".into(),
        domain,
        params,
        witnesses,
        verified,
        elapsed_ms: elapsed_ms(start),
    })
}

/// The constructive infinitude-of-primes walk: multiply the primes found
/// so far, then pick the least-norm prime coprime to the product. Each
/// step's prime is provably new. Overflow of the 64-bit product ends the
/// walk early with a partial (still verified) report.
pub fn euclid_walk(seeds: &[RingElement], steps: u32) -> Result<ExperimentReport> {
    let start = Instant::now();
    if seeds.is_empty() {
        return Err(Error::InvalidInput("at least one seed prime needed".into()));
    }
    if steps == 0 {
        return Err(Error::InvalidInput("steps must be positive".into()));
    }
    let domain = seeds[0].domain();
    domain.reject_modular("euclid_walk")?;
    let mut primes: Vec<RingElement> = Vec::new();
    for s in seeds {
        s.same_domain(&seeds[0])?;
        if !s.is_canonical() || !is_prime(s)? {
            return Err(Error::InvalidInput(format!(
                "seed {s} is not a canonical prime"
            )));
        }
        if primes.contains(s) {
            return Err(Error::InvalidInput(format!("seed {s} repeats a class")));
        }
        primes.push(s.clone());
    }

    let mut witnesses = Vec::new();
    let mut verified = true;
    let mut overflow = false;
    for _ in 0..steps {
        let mut product = domain.one();
        let mut overflowed = false;
        for p in &primes {
            match product.mul(p) {
                Ok(next) => product = next,
                Err(Error::ArithmeticOverflow(_)) => {
                    overflowed = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if overflowed {
            overflow = true;
            break;
        }
        let q = least_prime_coprime_to(&product)?;
        verified &= verify_coprime_prime(&product, &q)? && !primes.contains(&q);
        witnesses.push((product, q.clone()));
        primes.push(q);
    }

    let mut params = BTreeMap::new();
    params.insert(
        "seeds".into(),
        seeds
            .iter()
            .map(|s| serde_json::Value::from(s.to_string()))
            .collect::<Vec<_>>()
            .into(),
    );
    params.insert("requested_steps".into(), steps.into());
    params.insert("completed_steps".into(), witnesses.len().into());
    params.insert("overflow".into(), overflow.into());
    Ok(ExperimentReport {
        experiment: "euclid-walk".into(),
        domain,
        params,
        witnesses,
        verified,
        elapsed_ms: elapsed_ms(start),
    })
}

/// The product of the given primes: a point of the punctured space that
/// every sigma_p in the finite family misses, certifying that the family
/// is not a subcover.
pub fn cover_witness(primes: &[RingElement]) -> Result<RingElement> {
    if primes.is_empty() {
        return Err(Error::InvalidInput("at least one prime needed".into()));
    }
    let domain = primes[0].domain();
    domain.reject_modular("cover_witness")?;
    let mut product = domain.one();
    for (i, p) in primes.iter().enumerate() {
        p.same_domain(&primes[0])?;
        if !p.is_canonical() || !is_prime(p)? {
            return Err(Error::InvalidInput(format!("{p} is not a canonical prime")));
        }
        if primes[..i].contains(p) {
            return Err(Error::InvalidInput(format!("{p} repeats a class")));
        }
        product = product.mul(p)?;
    }
    for p in primes {
        if is_coprime(&product, p)? || !product.divisible_by(p)? {
            return Err(Error::InvalidInput(format!(
                "witness {product} failed its non-coprimality certificate for {p}"
            )));
        }
    }
    Ok(product)
}

/// Report wrapper around [`cover_witness`]: one (prime, product) pair
/// per certificate.
pub fn cover_witness_report(primes: &[RingElement]) -> Result<ExperimentReport> {
    let start = Instant::now();
    let product = cover_witness(primes)?;
    let mut witnesses = Vec::new();
    let mut verified = true;
    for p in primes {
        verified &= !is_coprime(&product, p)? && product.divisible_by(p)?;
        witnesses.push((p.clone(), product.clone()));
    }
    let mut params = BTreeMap::new();
    params.insert("prime_count".into(), primes.len().into());
    params.insert("product".into(), product.to_string().into());
    Ok(ExperimentReport {
        experiment: "cover-witness".into(),
        domain: primes[0].domain(),
        params,
        witnesses,
        verified,
        elapsed_ms: elapsed_ms(start),
    })
}

/// For every k in the window, exhibits a non-unit member of sigma_k: no
/// basic open fits inside the unit group, so the units are not open.
/// The cheap witness is 1 + k; if that is a unit or falls outside the
/// window, the window is searched in order.
pub fn units_not_open_check(window: &Window) -> Result<ExperimentReport> {
    let start = Instant::now();
    let domain = window.domain();
    if window.include_zero() {
        return Err(Error::InvalidInput(
            "units-not-open runs on the zero-excluded space".into(),
        ));
    }
    let one = domain.one();
    let mut witnesses = Vec::new();
    let mut verified = true;
    for k in window.elements() {
        let candidate = match one.add(k) {
            Ok(c) if !c.is_unit() && window.contains(&c) => Some(c),
            _ => None,
        };
        let witness = match candidate {
            Some(c) => c,
            None => {
                let mut found = None;
                for x in window.elements() {
                    if !x.is_unit() && is_coprime(x, k)? {
                        found = Some(x.clone());
                        break;
                    }
                }
                found.ok_or_else(|| {
                    Error::WindowTooSmall(format!(
                        "no non-unit of sigma_{k} fits in bound {}",
                        window.bound()
                    ))
                })?
            }
        };
        verified &= !witness.is_unit() && is_coprime(&witness, k)?;
        witnesses.push((k.clone(), witness));
    }
    let mut params = BTreeMap::new();
    params.insert("bound".into(), window.bound().into());
    Ok(ExperimentReport {
        experiment: "units-check".into(),
        domain,
        params,
        witnesses,
        verified,
        elapsed_ms: elapsed_ms(start),
    })
}

//! Element strings: `12`, `3+2i`, `1-1w`, `1,0,2` (coefficients low to
//! high), `4` — the same syntax the CLI accepts and reports emit.

use std::fmt;

use crate::error::{Error, Result};

use super::{DomainDescriptor, Payload, RingElement};

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Int(v) => write!(f, "{v}"),
            Payload::Gaussian { re, im } => write_pair(f, *re, *im, 'i'),
            Payload::Eisenstein { a, b } => write_pair(f, *a, *b, 'w'),
            Payload::Poly(c) => {
                if c.is_empty() {
                    return write!(f, "0");
                }
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
            Payload::Residue(r) => write!(f, "{r}"),
        }
    }
}

fn write_pair(f: &mut fmt::Formatter<'_>, a: i64, b: i64, sym: char) -> fmt::Result {
    if b < 0 {
        write!(f, "{a}-{}{sym}", b.unsigned_abs())
    } else {
        write!(f, "{a}+{b}{sym}")
    }
}

impl RingElement {
    /// Parses an element in the given ring's CLI syntax.
    pub fn parse(domain: DomainDescriptor, s: &str) -> Result<RingElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidElement("empty string".into()));
        }
        match domain {
            DomainDescriptor::Integers => Ok(RingElement::integer(parse_i64(s)?)),
            DomainDescriptor::GaussianIntegers => {
                let (a, b) = parse_pair(s, 'i')?;
                Ok(RingElement::gaussian(a, b))
            }
            DomainDescriptor::EisensteinIntegers => {
                let (a, b) = parse_pair(s, 'w')?;
                Ok(RingElement::eisenstein(a, b))
            }
            DomainDescriptor::PolyOverFp(p) => {
                let coeffs: Result<Vec<i64>> = s.split(',').map(|t| parse_i64(t.trim())).collect();
                Ok(RingElement::poly(p, &coeffs?))
            }
            DomainDescriptor::ModularRing(n) => Ok(RingElement::modular(n, parse_i64(s)?)),
        }
    }
}

fn parse_i64(s: &str) -> Result<i64> {
    s.parse()
        .map_err(|_| Error::InvalidElement(format!("{s:?} is not a 64-bit integer")))
}

/// Parses `a+b<sym>` / `a-b<sym>`, plus the plain forms `a` and `b<sym>`.
fn parse_pair(s: &str, sym: char) -> Result<(i64, i64)> {
    let err = || Error::InvalidElement(format!("{s:?} is not of the form a+b{sym}"));
    if let Some(body) = s.strip_suffix(sym) {
        // Find the sign splitting the two components, skipping a leading sign.
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i);
        let (a_part, b_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let a = if a_part.is_empty() {
            0
        } else {
            parse_i64(a_part)?
        };
        let b = match b_part {
            "" | "+" => 1,
            "-" => -1,
            t => {
                let t = t.strip_prefix('+').unwrap_or(t);
                parse_i64(t).map_err(|_| err())?
            }
        };
        Ok((a, b))
    } else {
        Ok((parse_i64(s).map_err(|_| err())?, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{FpPrime, Modulus};
    use super::*;

    #[test]
    fn display_matches_cli_syntax() {
        assert_eq!(RingElement::integer(-7).to_string(), "-7");
        assert_eq!(RingElement::gaussian(3, 2).to_string(), "3+2i");
        assert_eq!(RingElement::gaussian(3, -2).to_string(), "3-2i");
        assert_eq!(RingElement::eisenstein(1, -1).to_string(), "1-1w");
        let p3 = FpPrime::new(3).unwrap();
        assert_eq!(RingElement::poly(p3, &[1, 0, 2]).to_string(), "1,0,2");
        assert_eq!(RingElement::poly(p3, &[0]).to_string(), "0");
        let n6 = Modulus::new(6).unwrap();
        assert_eq!(RingElement::modular(n6, 4).to_string(), "4");
    }

    #[test]
    fn parse_round_trips() {
        let gi = DomainDescriptor::GaussianIntegers;
        for s in ["3+2i", "3-2i", "-3+2i", "-3-2i", "0+0i", "0+1i"] {
            let x = RingElement::parse(gi, s).unwrap();
            assert_eq!(x.to_string(), s);
        }
        let ei = DomainDescriptor::EisensteinIntegers;
        let x = RingElement::parse(ei, "1-1w").unwrap();
        assert_eq!(x, RingElement::eisenstein(1, -1));
    }

    #[test]
    fn parse_accepts_short_forms() {
        let gi = DomainDescriptor::GaussianIntegers;
        assert_eq!(
            RingElement::parse(gi, "5").unwrap(),
            RingElement::gaussian(5, 0)
        );
        assert_eq!(
            RingElement::parse(gi, "2i").unwrap(),
            RingElement::gaussian(0, 2)
        );
        assert_eq!(
            RingElement::parse(gi, "-i").unwrap(),
            RingElement::gaussian(0, -1)
        );
    }

    #[test]
    fn parse_poly_and_modular() {
        let p3 = FpPrime::new(3).unwrap();
        let x = RingElement::parse(DomainDescriptor::PolyOverFp(p3), "1,0,2").unwrap();
        assert_eq!(x.poly_coeffs().unwrap(), &[1, 0, 2]);
        let n6 = Modulus::new(6).unwrap();
        let y = RingElement::parse(DomainDescriptor::ModularRing(n6), "-1").unwrap();
        assert_eq!(y.residue_value(), Some(5));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(RingElement::parse(DomainDescriptor::Integers, "abc").is_err());
        assert!(RingElement::parse(DomainDescriptor::GaussianIntegers, "3+2j").is_err());
        assert!(RingElement::parse(DomainDescriptor::Integers, "").is_err());
    }
}

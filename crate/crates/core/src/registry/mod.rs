//! One rank/unrank interface over every enumeration in the crate.
//!
//! `unrank` maps an index `k >= 1` to a value and `rank` maps a value back to
//! its index. For the pairing functions and Ginsberg's code, `rank` is the
//! encoding map and `unrank` its (possibly partial) inverse.

mod verify;

pub use verify::{verify_prefix, verify_prefix_with, Failure, VerificationReport, VerifyOptions};

use std::fmt;

use crate::factor_bijections::{
    cf_decode, cf_encode, factor_fold, factor_unfold, poly_route_fold, poly_route_unfold,
};
use crate::numerics::{IntFoldCodec, Natural, PositiveRational, SignedRational};
use crate::pairings::{decode_pair, encode_pair, LatticePair, PairingScheme};
use crate::sequences::{
    calkin_wilf, calkin_wilf_rank, cohen_decode, cohen_encode, ginsberg_decode, ginsberg_encode,
    grant_priest, lauwerier_rank, lauwerier_unrank, ting_gamma, ting_rank,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    PositiveRationals,
    Rationals,
    Pairs,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::PositiveRationals => "Q+",
            Domain::Rationals => "Q",
            Domain::Pairs => "pairs",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    Bijective,
    Injective,
    Surjective,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapKind::Bijective => "bijective",
            MapKind::Injective => "injective",
            MapKind::Surjective => "surjective",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeId {
    Pairing(PairingScheme),
    Factor(IntFoldCodec),
    PolySignFold,
    CfBinary,
    Ting,
    CalkinWilf,
    Lauwerier,
    CohenEngel,
    GrantPriest,
    Ginsberg,
}

/// A value enumerated by some scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Rational(PositiveRational),
    Signed(SignedRational),
    Pair(LatticePair),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => r.fmt(f),
            Value::Signed(r) => r.fmt(f),
            Value::Pair(p) => p.fmt(f),
        }
    }
}

impl Value {
    /// Parses text in the format of `domain`.
    pub fn parse(domain: Domain, s: &str) -> Result<Self> {
        match domain {
            Domain::PositiveRationals => s.parse().map(Value::Rational),
            Domain::Rationals => s.parse().map(Value::Signed),
            Domain::Pairs => s.parse().map(Value::Pair),
        }
    }
}

/// Catalog entry for one enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeDescriptor {
    pub id: &'static str,
    pub scheme: SchemeId,
    pub domain: Domain,
    pub kind: MapKind,
    pub has_rank: bool,
    pub has_unrank: bool,
    pub summary: &'static str,
}

const fn pairing(
    scheme: PairingScheme,
    id: &'static str,
    bijective: bool,
    summary: &'static str,
) -> SchemeDescriptor {
    SchemeDescriptor {
        id,
        scheme: SchemeId::Pairing(scheme),
        domain: Domain::Pairs,
        kind: if bijective {
            MapKind::Bijective
        } else {
            MapKind::Injective
        },
        has_rank: true,
        has_unrank: true,
        summary,
    }
}

const fn qplus(scheme: SchemeId, id: &'static str, summary: &'static str) -> SchemeDescriptor {
    SchemeDescriptor {
        id,
        scheme,
        domain: Domain::PositiveRationals,
        kind: MapKind::Bijective,
        has_rank: true,
        has_unrank: true,
        summary,
    }
}

static SCHEMES: [SchemeDescriptor; 18] = [
    pairing(PairingScheme::OddPow2, "odd-pow2", true, "(2n-1)2^(m-1)"),
    pairing(
        PairingScheme::OnesZeros,
        "ones-zeros",
        false,
        "(2^n-1)2^m, binary 1^n 0^m",
    ),
    pairing(
        PairingScheme::UnarySep,
        "unary-sep",
        false,
        "2^(n+m+1)-1-2^m, binary 1^n 0 1^m",
    ),
    pairing(PairingScheme::TwoBits, "two-bits", false, "2^n+2^(n+m)"),
    pairing(PairingScheme::Godel, "godel", false, "2^n 3^m"),
    pairing(PairingScheme::PrimePower, "prime-power", false, "p(m)^n"),
    pairing(PairingScheme::Cantor, "cantor", true, "(n+m-1)(n+m-2)/2+n"),
    pairing(
        PairingScheme::BoxL,
        "box-l",
        true,
        "M^2-M+m-n+1, M=max(n,m)",
    ),
    qplus(
        SchemeId::Factor(IntFoldCodec::SignFold),
        "factor-signfold",
        "prime exponents folded by a -> 2a / -2a-1",
    ),
    qplus(
        SchemeId::Factor(IntFoldCodec::Negabinary),
        "factor-negabinary",
        "prime exponents folded through base -2 digits",
    ),
    qplus(
        SchemeId::PolySignFold,
        "poly-signfold",
        "Q+ -> Z[x] -> N[x] -> Z+ with the sign fold",
    ),
    qplus(
        SchemeId::CfBinary,
        "cf-binary",
        "sum of 2^(a0+...+ak) over continued-fraction quotients",
    ),
    qplus(
        SchemeId::Ting,
        "ting",
        "gamma_2k = 1 + gamma_k, gamma_2k+1 = 1/gamma_2k",
    ),
    qplus(
        SchemeId::CalkinWilf,
        "calkin-wilf",
        "b(k-1)/b(k), hyperbinary counts",
    ),
    qplus(
        SchemeId::Lauwerier,
        "lauwerier",
        "by denominator then numerator, reciprocals interleaved",
    ),
    qplus(
        SchemeId::CohenEngel,
        "cohen-engel",
        "Engel expansion of x/(x+1) as a bitmask",
    ),
    SchemeDescriptor {
        id: "grant-priest",
        scheme: SchemeId::GrantPriest,
        domain: Domain::PositiveRationals,
        kind: MapKind::Surjective,
        has_rank: false,
        has_unrank: true,
        summary: "(#4s + 1)/(#7s + 1) in decimal",
    },
    SchemeDescriptor {
        id: "ginsberg",
        scheme: SchemeId::Ginsberg,
        domain: Domain::Rationals,
        kind: MapKind::Injective,
        has_rank: true,
        has_unrank: true,
        summary: "[-]a/b read in base 12 with / = 10 and - = 11",
    },
];

/// Every registered scheme, in catalog order.
pub fn schemes() -> &'static [SchemeDescriptor] {
    &SCHEMES
}

pub fn get_scheme(id: &str) -> Result<&'static SchemeDescriptor> {
    SCHEMES
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::NotFound(id.to_string()))
}

fn expect_rational<'a>(id: &str, v: &'a Value) -> Result<&'a PositiveRational> {
    match v {
        Value::Rational(r) => Ok(r),
        Value::Signed(s) if s.sign() == crate::numerics::Sign::Positive => {
            Ok(s.magnitude().expect("positive values carry a magnitude"))
        }
        other => Err(Error::domain(format!(
            "{id} ranks positive rationals, not {other}"
        ))),
    }
}

impl SchemeDescriptor {
    /// The value at position `k`.
    pub fn unrank(&self, k: &Natural) -> Result<Value> {
        use SchemeId::*;
        Ok(match self.scheme {
            Pairing(p) => Value::Pair(decode_pair(p, k)?),
            Factor(codec) => Value::Rational(factor_unfold(k, codec)?),
            PolySignFold => Value::Rational(poly_route_unfold(k, IntFoldCodec::SignFold)?),
            CfBinary => Value::Rational(cf_decode(k)?),
            Ting => Value::Rational(ting_gamma(k)?),
            CalkinWilf => Value::Rational(calkin_wilf(k)?),
            Lauwerier => Value::Rational(lauwerier_unrank(k)?),
            CohenEngel => Value::Rational(cohen_decode(k)?),
            GrantPriest => Value::Rational(grant_priest(k)?),
            Ginsberg => Value::Signed(ginsberg_decode(k)?),
        })
    }

    /// The position of `v`.
    pub fn rank(&self, v: &Value) -> Result<Natural> {
        use SchemeId::*;
        match self.scheme {
            Pairing(p) => match v {
                Value::Pair(pair) => encode_pair(p, *pair),
                other => Err(Error::domain(format!(
                    "{} ranks pairs, not {other}",
                    self.id
                ))),
            },
            Ginsberg => match v {
                Value::Signed(s) => Ok(ginsberg_encode(s)),
                Value::Rational(r) => Ok(ginsberg_encode(&SignedRational::positive(r.clone()))),
                other => Err(Error::domain(format!(
                    "ginsberg ranks rationals, not {other}"
                ))),
            },
            GrantPriest => Err(Error::domain(
                "grant-priest is a surjection and has no rank",
            )),
            _ => {
                let r = expect_rational(self.id, v)?;
                match self.scheme {
                    Factor(codec) => factor_fold(r, codec),
                    PolySignFold => poly_route_fold(r, IntFoldCodec::SignFold),
                    CfBinary => cf_encode(r),
                    Ting => ting_rank(r),
                    CalkinWilf => calkin_wilf_rank(r),
                    Lauwerier => lauwerier_rank(r),
                    CohenEngel => cohen_encode(r),
                    Pairing(_) | Ginsberg | GrantPriest => unreachable!(),
                }
            }
        }
    }

    pub fn parse_value(&self, s: &str) -> Result<Value> {
        Value::parse(self.domain, s)
    }
}

/// `rank_b(unrank_a(k))`: the permutation of the positive integers induced by
/// two bijections onto the same domain.
pub fn compose_permutation(a: &str, b: &str, k: &Natural) -> Result<Natural> {
    let (a, b) = (get_scheme(a)?, get_scheme(b)?);
    for s in [a, b] {
        if s.kind != MapKind::Bijective {
            return Err(Error::domain(format!("{} is not a bijection", s.id)));
        }
    }
    if a.domain != b.domain {
        return Err(Error::domain(format!(
            "{} enumerates {} but {} enumerates {}",
            a.id, a.domain, b.id, b.domain
        )));
    }
    b.rank(&a.unrank(k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn catalog_examples() {
        let cw = get_scheme("calkin-wilf").unwrap();
        assert_eq!(cw.kind, MapKind::Bijective);
        assert_eq!(cw.domain, Domain::PositiveRationals);
        assert!(cw.has_rank && cw.has_unrank);

        let gp = get_scheme("grant-priest").unwrap();
        assert_eq!(gp.kind, MapKind::Surjective);
        assert!(!gp.has_rank && gp.has_unrank);

        assert!(matches!(get_scheme("nope"), Err(Error::NotFound(_))));
    }

    #[test]
    fn catalog_invariants() {
        let ids: std::collections::HashSet<_> = schemes().iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), schemes().len());
        for s in schemes() {
            if s.kind == MapKind::Bijective {
                assert!(s.has_rank && s.has_unrank, "{}", s.id);
            }
            if let SchemeId::Pairing(p) = s.scheme {
                assert_eq!(p.id(), s.id);
                assert_eq!(p.is_bijective(), s.kind == MapKind::Bijective);
            }
        }
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            compose_permutation("calkin-wilf", "calkin-wilf", &n(17)).unwrap(),
            n(17)
        );
        assert_eq!(
            compose_permutation("calkin-wilf", "ting", &n(5)).unwrap(),
            n(6)
        );
        assert!(matches!(
            compose_permutation("grant-priest", "ting", &n(1)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            compose_permutation("cantor", "ting", &n(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rank_rejects_wrong_value_kind() {
        let ting = get_scheme("ting").unwrap();
        let pair = Value::Pair(LatticePair::new(1, 2).unwrap());
        assert!(matches!(ting.rank(&pair), Err(Error::Domain(_))));
        let gp = get_scheme("grant-priest").unwrap();
        let one = Value::Rational(PositiveRational::one());
        assert!(matches!(gp.rank(&one), Err(Error::Domain(_))));
    }

    #[test]
    fn composition_is_a_permutation() {
        let bijective: Vec<_> = schemes()
            .iter()
            .filter(|s| s.kind == MapKind::Bijective && s.domain == Domain::PositiveRationals)
            .map(|s| s.id)
            .collect();
        for &a in &bijective {
            for &b in &bijective {
                let mut seen = std::collections::HashSet::new();
                for k in 1..=1000u64 {
                    let j = compose_permutation(a, b, &n(k)).unwrap();
                    assert_eq!(compose_permutation(b, a, &j).unwrap(), n(k), "{a} {b} {k}");
                    assert!(seen.insert(j), "{a} {b} {k}");
                }
            }
        }
    }
}

//! Formal oriented 3-manifolds arising as Seifert hypersurfaces.
//!
//! A [`ThreeManifold`] is a connected sum of prime summands: lens spaces,
//! the catalog Brieskorn sphere, S^1 x S^2 factors, and raw surgery
//! presentations. Connected sum is a sorted multiset, so it is commutative
//! and associative by construction.
//!
//! Orientation convention: `Lens(p, q)` is the boundary of the
//! positive-definite linear plumbing with framings from the minus continued
//! fraction of p/q (equivalently, +p/q surgery on the unknot). This makes
//! d(L(p,1), s0) = (p-1)/4 and mu(L(2,1)) = +1 hold with positive sign.
//! Orientation reversal sends Lens(p,q) to Lens(p, p-q), with spin^c indices
//! transported by i -> p-1-i; Brieskorn and raw summands carry an explicit
//! reversal flag; S^1 x S^2 is fixed.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::knot::KnotExpr;
use crate::surgery::{
    characteristic_sublinks, lens_spin_indices, SurgeryPresentation,
};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeSummand {
    /// L(p,q), p >= 2, 0 < q < p, coprime. L(1,1) normalizes away.
    Lens { p: u64, q: u64 },
    /// Brieskorn sphere with pairwise coprime parameters sorted ascending.
    /// `reversed` reverses orientation. Only Sigma(2,3,5) has catalog
    /// invariants (oriented as the link of the singularity, d = +2).
    Brieskorn { a: u64, b: u64, c: u64, reversed: bool },
    S1xS2,
    /// Boundary of a chain/tree surgery presentation, optionally reversed.
    Raw { pres: SurgeryPresentation, reversed: bool },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThreeManifold {
    summands: Vec<PrimeSummand>,
}

/// Per-summand spin^c (or spin) data, aligned with the summand list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpinPart {
    /// Spin^c index i in 0..p of a lens summand (recursion labeling).
    LensIndex(u64),
    /// The spin structure of a Brieskorn homology sphere (unique).
    BrieskornSpin,
    /// The torsion spin^c structure s0 of S^1 x S^2, remembering which of
    /// the two spin structures induced it (both have mu = 0, d = -1/2).
    S1xS2Spin(bool),
    /// A characteristic sublink on a raw summand.
    RawSublink(Vec<bool>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinCSelector {
    pub parts: Vec<SpinPart>,
}

impl ThreeManifold {
    /// S^3: the empty connected sum.
    pub fn sphere() -> Self {
        ThreeManifold::default()
    }

    pub fn lens(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Invalid("lens parameters must be positive".into()));
        }
        if p > crate::knot::MAX_PARAM {
            return Err(Error::Invalid(format!(
                "lens parameter exceeds limit {}",
                crate::knot::MAX_PARAM
            )));
        }
        if p == 1 {
            if q == 1 {
                return Ok(Self::sphere());
            }
            return Err(Error::Invalid("lens(1,q): need q = 1".into()));
        }
        if q >= p || p.gcd(&q) != 1 {
            return Err(Error::Invalid(format!(
                "lens({p},{q}): need 0 < q < p coprime"
            )));
        }
        Ok(ThreeManifold { summands: vec![PrimeSummand::Lens { p, q }] })
    }

    pub fn brieskorn(a: u64, b: u64, c: u64) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        let [a, b, c] = v;
        if a < 2 {
            return Err(Error::Invalid("brieskorn parameters must be >= 2".into()));
        }
        if a.gcd(&b) != 1 || a.gcd(&c) != 1 || b.gcd(&c) != 1 {
            return Err(Error::Invalid(format!(
                "brieskorn({a},{b},{c}): parameters must be pairwise coprime"
            )));
        }
        Ok(ThreeManifold {
            summands: vec![PrimeSummand::Brieskorn { a, b, c, reversed: false }],
        })
    }

    pub fn s1_x_s2() -> Self {
        ThreeManifold { summands: vec![PrimeSummand::S1xS2] }
    }

    pub fn raw(pres: SurgeryPresentation) -> Result<Self> {
        if pres.is_empty() {
            return Ok(Self::sphere());
        }
        pres.h1_order()?;
        Ok(ThreeManifold {
            summands: vec![PrimeSummand::Raw { pres, reversed: false }],
        })
    }

    pub fn summands(&self) -> &[PrimeSummand] {
        &self.summands
    }

    /// Connected sum (multiset union).
    pub fn connected_sum(mut self, other: ThreeManifold) -> ThreeManifold {
        self.summands.extend(other.summands);
        self.summands.sort();
        self
    }

    pub fn sum_of(parts: impl IntoIterator<Item = ThreeManifold>) -> ThreeManifold {
        parts
            .into_iter()
            .fold(ThreeManifold::sphere(), |acc, m| acc.connected_sum(m))
    }

    /// First Betti number: the number of S^1 x S^2 summands.
    pub fn b1(&self) -> u64 {
        self.summands
            .iter()
            .filter(|s| matches!(s, PrimeSummand::S1xS2))
            .count() as u64
    }

    /// Order of the torsion subgroup of H1.
    pub fn h1_torsion_order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for s in &self.summands {
            match s {
                PrimeSummand::Lens { p, .. } => acc *= BigUint::from(*p),
                PrimeSummand::Brieskorn { .. } => {}
                PrimeSummand::S1xS2 => {}
                PrimeSummand::Raw { pres, .. } => {
                    acc *= pres.h1_order().expect("validated at construction").magnitude().clone();
                }
            }
        }
        acc
    }

    /// Orientation reversal, distributed over summands. Involutive.
    pub fn orientation_reverse(&self) -> ThreeManifold {
        let summands = self
            .summands
            .iter()
            .map(|s| match s {
                PrimeSummand::Lens { p, q } => PrimeSummand::Lens { p: *p, q: *p - *q },
                PrimeSummand::Brieskorn { a, b, c, reversed } => PrimeSummand::Brieskorn {
                    a: *a,
                    b: *b,
                    c: *c,
                    reversed: !reversed,
                },
                PrimeSummand::S1xS2 => PrimeSummand::S1xS2,
                PrimeSummand::Raw { pres, reversed } => PrimeSummand::Raw {
                    pres: pres.clone(),
                    reversed: !reversed,
                },
            })
            .collect::<Vec<_>>();
        let mut m = ThreeManifold { summands };
        m.summands.sort();
        m
    }

    /// Enumerates the spin structures as selectors, in a deterministic
    /// order. The count is 2^{b1} times the product over summands of (1 if
    /// |H1| is odd, else 2); each S^1 x S^2 contributes both spin structures
    /// inducing its torsion spin^c structure.
    pub fn spin_structures(&self) -> Result<Vec<SpinCSelector>> {
        let mut options: Vec<Vec<SpinPart>> = Vec::with_capacity(self.summands.len());
        for s in &self.summands {
            match s {
                PrimeSummand::Lens { p, q } => {
                    options.push(
                        lens_spin_indices(*p, *q)
                            .into_iter()
                            .map(SpinPart::LensIndex)
                            .collect(),
                    );
                }
                PrimeSummand::Brieskorn { .. } => options.push(vec![SpinPart::BrieskornSpin]),
                PrimeSummand::S1xS2 => options.push(vec![
                    SpinPart::S1xS2Spin(false),
                    SpinPart::S1xS2Spin(true),
                ]),
                PrimeSummand::Raw { pres, .. } => {
                    let subs = characteristic_sublinks(pres)?;
                    options.push(subs.into_iter().map(SpinPart::RawSublink).collect());
                }
            }
        }
        let mut out = vec![SpinCSelector { parts: Vec::new() }];
        for opts in options {
            let mut next = Vec::with_capacity(out.len() * opts.len());
            for prefix in &out {
                for o in &opts {
                    let mut parts = prefix.parts.clone();
                    parts.push(o.clone());
                    next.push(SpinCSelector { parts });
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Checks that a selector is structurally valid for this manifold.
    pub fn validate_selector(&self, s: &SpinCSelector) -> Result<()> {
        if s.parts.len() != self.summands.len() {
            return Err(Error::Invalid(format!(
                "selector has {} parts for {} summands",
                s.parts.len(),
                self.summands.len()
            )));
        }
        for (part, summand) in s.parts.iter().zip(&self.summands) {
            match (part, summand) {
                (SpinPart::LensIndex(i), PrimeSummand::Lens { p, .. }) => {
                    if i >= p {
                        return Err(Error::Invalid(format!(
                            "spin^c index {i} out of range for lens space with p = {p}"
                        )));
                    }
                }
                (SpinPart::BrieskornSpin, PrimeSummand::Brieskorn { .. }) => {}
                (SpinPart::S1xS2Spin(_), PrimeSummand::S1xS2) => {}
                (SpinPart::RawSublink(c), PrimeSummand::Raw { pres, .. }) => {
                    if c.len() != pres.len() {
                        return Err(Error::Invalid("sublink length mismatch".into()));
                    }
                }
                _ => {
                    return Err(Error::Invalid(
                        "selector part does not match summand kind".into(),
                    ))
                }
            }
        }
        Ok(())
    }

    /// Transports a selector through orientation reversal: lens indices map
    /// by i -> p-1-i; everything else is carried along.
    pub fn reverse_selector(&self, s: &SpinCSelector) -> SpinCSelector {
        // Reversal reorders summands (they are kept sorted); pair parts with
        // summands, reverse each, then sort in lockstep with the summands.
        let mut paired: Vec<(PrimeSummand, SpinPart)> = self
            .summands
            .iter()
            .zip(&s.parts)
            .map(|(summand, part)| {
                let rev_summand = match summand {
                    PrimeSummand::Lens { p, q } => PrimeSummand::Lens { p: *p, q: *p - *q },
                    PrimeSummand::Brieskorn { a, b, c, reversed } => PrimeSummand::Brieskorn {
                        a: *a,
                        b: *b,
                        c: *c,
                        reversed: !reversed,
                    },
                    PrimeSummand::S1xS2 => PrimeSummand::S1xS2,
                    PrimeSummand::Raw { pres, reversed } => PrimeSummand::Raw {
                        pres: pres.clone(),
                        reversed: !reversed,
                    },
                };
                let rev_part = match (part, summand) {
                    (SpinPart::LensIndex(i), PrimeSummand::Lens { p, .. }) => {
                        SpinPart::LensIndex(p - 1 - i)
                    }
                    (other, _) => other.clone(),
                };
                (rev_summand, rev_part)
            })
            .collect();
        paired.sort();
        SpinCSelector { parts: paired.into_iter().map(|(_, part)| part).collect() }
    }

    /// Conjugation on spin^c selectors: lens indices map by
    /// iota(i) = p + q - 1 - i; spin structures elsewhere are self-conjugate.
    pub fn conjugate_selector(&self, s: &SpinCSelector) -> SpinCSelector {
        let parts = self
            .summands
            .iter()
            .zip(&s.parts)
            .map(|(summand, part)| match (part, summand) {
                (SpinPart::LensIndex(i), PrimeSummand::Lens { p, q }) => {
                    SpinPart::LensIndex(crate::surgery::lens_conjugate_index(*p, *q, *i))
                }
                (other, _) => other.clone(),
            })
            .collect();
        SpinCSelector { parts }
    }
}

/// The n-fold cyclic branched cover of S^3 over a catalog knot.
///
/// Sigma_2(b(p,q)) = L(p,q); Sigma_n(T(p,q)) is the Brieskorn sphere
/// Sigma(n,p,q) when the triple is pairwise coprime (only Sigma(2,3,5) has
/// catalog invariants downstream); mirrors reverse orientation. Everything
/// else is reported as unsupported, never guessed.
pub fn branched_cover(k: &KnotExpr, n: u64) -> Result<ThreeManifold> {
    if n < 2 {
        return Err(Error::Invalid("branched cover needs n >= 2".into()));
    }
    match k {
        KnotExpr::Unknot => Ok(ThreeManifold::sphere()),
        KnotExpr::Mirror(inner) => Ok(branched_cover(inner, n)?.orientation_reverse()),
        KnotExpr::TwoBridge { p, q } => {
            if n == 2 {
                ThreeManifold::lens(*p, *q)
            } else if *q == 1 {
                // b(p,1) is the (2,p) torus knot; reuse the torus route.
                branched_cover(&KnotExpr::Torus { p: 2, q: *p }, n)
            } else {
                Err(Error::Unsupported(format!(
                    "{n}-fold branched cover of twobridge({p},{q}) is outside the catalog"
                )))
            }
        }
        KnotExpr::Torus { p, q } => {
            if n == 2 && *p == 2 {
                return ThreeManifold::lens(*q, 1);
            }
            let mut t = [n, *p, *q];
            t.sort_unstable();
            let [a, b, c] = t;
            if a.gcd(&b) != 1 || a.gcd(&c) != 1 || b.gcd(&c) != 1 {
                return Err(Error::Unsupported(format!(
                    "{n}-fold branched cover of torus({p},{q}) is not a Brieskorn \
                     sphere in the catalog"
                )));
            }
            if (a, b, c) == (2, 3, 5) {
                ThreeManifold::brieskorn(2, 3, 5)
            } else {
                Err(Error::Unsupported(format!(
                    "Brieskorn({a},{b},{c}) is outside the catalog; supply a raw \
                     plumbing presentation instead"
                )))
            }
        }
        KnotExpr::SeifertMatrix { .. } => Err(Error::Unsupported(
            "branched covers of raw Seifert-matrix knots are not computed".into(),
        )),
    }
}

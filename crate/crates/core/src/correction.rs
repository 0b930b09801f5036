//! Numerical invariants of formal Seifert hypersurfaces: Heegaard Floer
//! correction terms (exact rationals) and Rochlin invariants (mod 16).
//!
//! Lens values come from the recursion
//!
//!   d(L(1,0), 0) = 0,
//!   d(L(p,q), i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(L(q, p mod q), i mod q),
//!
//! whose global sign is pinned by the anchor d(L(p,1), s0) = (p-1)/4. The
//! lattice oracle in [`crate::surgery`] recomputes the same values from
//! positive-definite chains; the acceptance suite checks exact agreement for
//! every spin^c index, all p <= 40.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::manifold::{PrimeSummand, SpinCSelector, SpinPart, ThreeManifold};
use crate::mod16::Mu;
use crate::rational::{rat, rat_int, Rat};
use crate::surgery::{self, SurgeryPresentation};

/// A correction term: an exact rational, or unknown with a reason. Unknown
/// absorbs unsupported cases; it is a value, never a crash.
#[derive(Debug, Clone, PartialEq)]
pub enum DValue {
    Known(Rat),
    Unknown(String),
}

impl DValue {
    pub fn known(&self) -> Option<&Rat> {
        match self {
            DValue::Known(r) => Some(r),
            DValue::Unknown(_) => None,
        }
    }

    fn map(self, f: impl FnOnce(Rat) -> Rat) -> DValue {
        match self {
            DValue::Known(r) => DValue::Known(f(r)),
            u => u,
        }
    }
}

/// d(L(p,q), i) by the recursion above. `d_lens(1, 0, 0) = 0` is the S^3
/// base case; otherwise requires gcd(p,q) = 1, 0 < q < p, 0 <= i < p.
pub fn d_lens(p: u64, q: u64, i: u64) -> Result<Rat> {
    if p == 1 && q == 0 && i == 0 {
        return Ok(rat_int(0));
    }
    if p < 2 || q == 0 || q >= p || p.gcd(&q) != 1 {
        return Err(Error::Invalid(format!(
            "d_lens({p},{q}): need 0 < q < p coprime"
        )));
    }
    if i >= p {
        return Err(Error::Invalid(format!(
            "d_lens({p},{q},{i}): spin^c index out of range"
        )));
    }
    let mut acc = rat_int(0);
    let mut sign = 1i64;
    let (mut p, mut q, mut i) = (p as i128, q as i128, i as i128);
    while p > 1 {
        let t = 2 * i + 1 - p - q;
        let num = BigInt::from(t * t - p * q);
        let den = BigInt::from(4 * p * q);
        acc += rat_int(sign) * Rat::new(num, den);
        sign = -sign;
        let (np, nq, ni) = (q, p.rem_euclid(q), i.rem_euclid(q));
        p = np;
        q = nq;
        i = ni;
    }
    Ok(acc)
}

/// The spin spin^c index (indices, for even p) of L(p,q).
pub fn lens_spin_indices(p: u64, q: u64) -> Vec<u64> {
    surgery::lens_spin_indices(p, q)
}

fn brieskorn_catalog_check(a: u64, b: u64, c: u64) -> Result<()> {
    if (a, b, c) == (2, 3, 5) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "Brieskorn({a},{b},{c}) is outside the catalog (only Sigma(2,3,5) is built in)"
        )))
    }
}

fn raw_d(pres: &SurgeryPresentation, c: &[bool], reversed: bool) -> DValue {
    if !pres.is_positive_definite() {
        return DValue::Unknown(format!(
            "raw presentation with framings {:?} is not positive definite; \
             the lattice oracle does not apply",
            pres.framings()
        ));
    }
    match surgery::d_oracle_sublink(pres, c) {
        Ok(d) => DValue::Known(if reversed { -d } else { d }),
        Err(e) => DValue::Unknown(e.to_string()),
    }
}

/// d(Y, s): sum over summands. Lens summands use the recursion; the catalog
/// Brieskorn sphere contributes +2 (or -2 reversed); each S^1 x S^2
/// contributes -1/2 in its torsion spin^c structure; positive-definite raw
/// summands use the lattice oracle. Anything else is Unknown.
pub fn d_manifold(y: &ThreeManifold, s: &SpinCSelector) -> DValue {
    if let Err(e) = y.validate_selector(s) {
        return DValue::Unknown(e.to_string());
    }
    let mut acc = rat_int(0);
    for (summand, part) in y.summands().iter().zip(&s.parts) {
        let term = match (summand, part) {
            (PrimeSummand::Lens { p, q }, SpinPart::LensIndex(i)) => {
                match d_lens(*p, *q, *i) {
                    Ok(d) => d,
                    Err(e) => return DValue::Unknown(e.to_string()),
                }
            }
            (PrimeSummand::Brieskorn { a, b, c, reversed }, SpinPart::BrieskornSpin) => {
                if let Err(e) = brieskorn_catalog_check(*a, *b, *c) {
                    return DValue::Unknown(e.to_string());
                }
                if *reversed {
                    rat_int(-2)
                } else {
                    rat_int(2)
                }
            }
            (PrimeSummand::S1xS2, SpinPart::S1xS2Spin(_)) => rat(-1, 2),
            (PrimeSummand::Raw { pres, reversed }, SpinPart::RawSublink(c)) => {
                match raw_d(pres, c, *reversed) {
                    DValue::Known(d) => d,
                    u => return u,
                }
            }
            _ => return DValue::Unknown("selector/summand mismatch".into()),
        };
        acc += term;
    }
    DValue::Known(acc)
}

/// Normalized correction term d_bar(Y, s) = d(Y, s) + b1(Y)/2. Kills pure
/// S^1 x S^2 stabilization and stays additive under connected sum.
pub fn d_normalized(y: &ThreeManifold, s: &SpinCSelector) -> DValue {
    let b1 = y.b1();
    d_manifold(y, s).map(|d| d + rat(b1 as i64, 2))
}

/// Rochlin invariant mu(Y, s) for a spin selector: additive over summands.
/// Lens summands go through their chain presentation, Brieskorn(2,3,5)
/// through the E8 tree (+8, orientation-insensitive mod 16), S^1 x S^2
/// contributes 0, raw summands use the Kirby-Melvin formula directly.
pub fn mu_manifold(y: &ThreeManifold, s: &SpinCSelector) -> Result<Mu> {
    y.validate_selector(s)?;
    let mut acc = Mu::new(0);
    for (summand, part) in y.summands().iter().zip(&s.parts) {
        let term = match (summand, part) {
            (PrimeSummand::Lens { p, q }, SpinPart::LensIndex(i)) => {
                let pres = surgery::lens_chain(*p, *q)?;
                let subs = surgery::characteristic_sublinks(&pres)?;
                let mut found = None;
                for c in &subs {
                    if surgery::lens_sublink_index(*p, *q, c)? == *i {
                        found = Some(surgery::mu(&pres, c)?);
                        break;
                    }
                }
                found.ok_or_else(|| {
                    Error::NotSpin(format!(
                        "spin^c index {i} on lens({p},{q}) is not induced by a spin structure"
                    ))
                })?
            }
            (PrimeSummand::Brieskorn { a, b, c, reversed }, SpinPart::BrieskornSpin) => {
                brieskorn_catalog_check(*a, *b, *c)?;
                static POINCARE_MU: std::sync::OnceLock<Mu> = std::sync::OnceLock::new();
                let m = *POINCARE_MU.get_or_init(|| {
                    let e8 = surgery::e8_presentation();
                    surgery::mu(&e8, &vec![false; e8.len()]).expect("static E8 tree")
                });
                if *reversed {
                    -m
                } else {
                    m
                }
            }
            (PrimeSummand::S1xS2, SpinPart::S1xS2Spin(_)) => Mu::new(0),
            (PrimeSummand::Raw { pres, reversed }, SpinPart::RawSublink(c)) => {
                let m = surgery::mu(pres, c)?;
                if *reversed {
                    -m
                } else {
                    m
                }
            }
            _ => return Err(Error::Invalid("selector/summand mismatch".into())),
        };
        acc = acc + term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::ThreeManifold;

    fn lens_with_spin(p: u64, q: u64) -> (ThreeManifold, SpinCSelector) {
        let y = ThreeManifold::lens(p, q).unwrap();
        let s = y.spin_structures().unwrap().remove(0);
        (y, s)
    }

    #[test]
    fn d_lens_anchors() {
        assert_eq!(d_lens(1, 0, 0).unwrap(), rat_int(0));
        for p in (3..=199u64).step_by(2) {
            let spin = lens_spin_indices(p, 1)[0];
            assert_eq!(spin, 0);
            assert_eq!(d_lens(p, 1, spin).unwrap(), rat(p as i64 - 1, 4), "p = {p}");
        }
        assert_eq!(d_lens(3, 1, 1).unwrap(), rat(-1, 6));
        assert_eq!(d_lens(2, 1, 0).unwrap(), rat(1, 4));
        assert_eq!(d_lens(2, 1, 1).unwrap(), rat(-1, 4));
    }

    #[test]
    fn d_lens_rejects_bad_input() {
        assert!(d_lens(4, 2, 0).is_err());
        assert!(d_lens(5, 5, 0).is_err());
        assert!(d_lens(5, 2, 5).is_err());
    }

    #[test]
    fn d_lens_conjugation_symmetry() {
        for p in 2..=40u64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for i in 0..p {
                    let j = surgery::lens_conjugate_index(p, q, i);
                    assert_eq!(
                        d_lens(p, q, i).unwrap(),
                        d_lens(p, q, j).unwrap(),
                        "L({p},{q}) i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn d_lens_orientation_reversal_identity() {
        // d(L(p,q), i) = -d(L(p,p-q), p-1-i).
        for p in 2..=30u64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for i in 0..p {
                    assert_eq!(
                        d_lens(p, q, i).unwrap(),
                        -d_lens(p, p - q, p - 1 - i).unwrap(),
                        "L({p},{q}) i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn d_manifold_examples() {
        // Poincare sphere: +2; double sum: 4.
        let b = ThreeManifold::brieskorn(2, 3, 5).unwrap();
        let s = b.spin_structures().unwrap().remove(0);
        assert_eq!(d_manifold(&b, &s), DValue::Known(rat_int(2)));
        let bb = b.clone().connected_sum(b.clone());
        let sbb = bb.spin_structures().unwrap().remove(0);
        assert_eq!(d_manifold(&bb, &sbb), DValue::Known(rat_int(4)));
        // Reversed Poincare sphere: -2.
        let rb = b.orientation_reverse();
        let srb = rb.spin_structures().unwrap().remove(0);
        assert_eq!(d_manifold(&rb, &srb), DValue::Known(rat_int(-2)));
        // #n S^1 x S^2 in the torsion structure: -n/2.
        for n in 1..=6u64 {
            let m = ThreeManifold::sum_of((0..n).map(|_| ThreeManifold::s1_x_s2()));
            let s = m.spin_structures().unwrap().remove(0);
            assert_eq!(d_manifold(&m, &s), DValue::Known(rat(-(n as i64), 2)));
            assert_eq!(d_normalized(&m, &s), DValue::Known(rat_int(0)));
        }
        // -Lens(5,1) with its spin structure: -1.
        let m = ThreeManifold::lens(5, 1).unwrap().orientation_reverse();
        let s = m.spin_structures().unwrap().remove(0);
        assert_eq!(d_manifold(&m, &s), DValue::Known(rat_int(-1)));
    }

    #[test]
    fn d_normalized_examples() {
        // Lens(3,1) # s1s2 with spin: 1/2 - 1/2 + 1/2 = 1/2.
        let y = ThreeManifold::lens(3, 1)
            .unwrap()
            .connected_sum(ThreeManifold::s1_x_s2());
        let s = y.spin_structures().unwrap().remove(0);
        assert_eq!(d_normalized(&y, &s), DValue::Known(rat(1, 2)));
        // Brieskorn # 3 s1s2: still 2.
        let y = ThreeManifold::sum_of([
            ThreeManifold::brieskorn(2, 3, 5).unwrap(),
            ThreeManifold::s1_x_s2(),
            ThreeManifold::s1_x_s2(),
            ThreeManifold::s1_x_s2(),
        ]);
        let s = y.spin_structures().unwrap().remove(0);
        assert_eq!(d_normalized(&y, &s), DValue::Known(rat_int(2)));
    }

    #[test]
    fn d_antisymmetry_on_rational_homology_spheres() {
        for (p, q) in [(3u64, 1u64), (5, 2), (7, 3), (8, 3), (12, 5)] {
            let y = ThreeManifold::lens(p, q).unwrap();
            for s in y.spin_structures().unwrap() {
                let ry = y.orientation_reverse();
                let rs = y.reverse_selector(&s);
                let d = d_manifold(&y, &s).known().unwrap().clone();
                let rd = d_manifold(&ry, &rs).known().unwrap().clone();
                assert_eq!(rd, -d, "L({p},{q})");
            }
        }
    }

    #[test]
    fn mu_examples() {
        // L(2,1): spin structures realize mu = 1 (the D^2-bundle one) and 15.
        let (l21, _) = lens_with_spin(2, 1);
        let mus: Vec<Mu> = l21
            .spin_structures()
            .unwrap()
            .iter()
            .map(|s| mu_manifold(&l21, s).unwrap())
            .collect();
        assert!(mus.contains(&Mu::new(1)));
        assert!(mus.contains(&Mu::new(15)));
        // Brieskorn(2,3,5): 8 either orientation.
        let b = ThreeManifold::brieskorn(2, 3, 5).unwrap();
        let s = b.spin_structures().unwrap().remove(0);
        assert_eq!(mu_manifold(&b, &s).unwrap(), Mu::new(8));
        let rb = b.orientation_reverse();
        let rs = rb.spin_structures().unwrap().remove(0);
        assert_eq!(mu_manifold(&rb, &rs).unwrap(), Mu::new(8));
        // Y # S1xS2 keeps mu.
        let (l31, s31) = lens_with_spin(3, 1);
        let m0 = mu_manifold(&l31, &s31).unwrap();
        assert_eq!(m0, Mu::new(14));
        let y = l31.connected_sum(ThreeManifold::s1_x_s2());
        for s in y.spin_structures().unwrap() {
            assert_eq!(mu_manifold(&y, &s).unwrap(), m0);
        }
    }

    #[test]
    fn mu_antisymmetry() {
        for (p, q) in [(3u64, 1u64), (5, 1), (7, 2), (9, 4), (2, 1), (8, 3)] {
            let y = ThreeManifold::lens(p, q).unwrap();
            for s in y.spin_structures().unwrap() {
                let m = mu_manifold(&y, &s).unwrap();
                let ry = y.orientation_reverse();
                let rs = y.reverse_selector(&s);
                assert_eq!(mu_manifold(&ry, &rs).unwrap(), -m, "L({p},{q})");
            }
        }
    }

    #[test]
    fn mu_rejects_non_spin_index() {
        let y = ThreeManifold::lens(5, 1).unwrap();
        let s = SpinCSelector { parts: vec![SpinPart::LensIndex(1)] };
        assert!(matches!(mu_manifold(&y, &s), Err(Error::NotSpin(_))));
        // d is still fine there.
        assert!(d_manifold(&y, &s).known().is_some());
    }
}

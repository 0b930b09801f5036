//! Invariant profiles and 0-concordance verdicts.
//!
//! A profile carries (mu mod 16, normalized d-bar, |H1| torsion order) per
//! candidate spin structure. Two knots are `Distinguished` only when some
//! invariant is computed on both sides and differs for every pairing of
//! candidates: an obstruction must be unconditional. Profiles built on
//! asserted hypersurfaces make the verdict conditional on the assertion.

use num_bigint::BigUint;

use crate::correction::{d_normalized, mu_manifold, DValue};
use crate::error::{Error, Result};
use crate::knot::{determinant, is_quasi_alternating, signature, KnotExpr, QaStatus};
use crate::manifold::branched_cover;
use crate::mod16::Mu;
use crate::rational::{format_rat, rat_int, Rat};
use crate::twoknot::{seifert_hypersurface, SeifertData, TwoKnotExpr};

/// Invariants of one candidate spin structure.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinCandidateInvariants {
    pub mu: Option<Mu>,
    pub d_bar: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantProfile {
    pub candidates: Vec<SpinCandidateInvariants>,
    /// |H1| of the core Seifert hypersurface (stabilizations stripped), or
    /// 0 when the core has b1 > 0 or could not be computed.
    pub h1_order: BigUint,
    pub conditional: bool,
    pub notes: Vec<String>,
}

impl InvariantProfile {
    /// The mu value when it is defined and unambiguous.
    pub fn mu(&self) -> Option<Mu> {
        let mut vals = self.candidates.iter().map(|c| c.mu);
        let first = vals.next()??;
        for v in vals {
            if v? != first {
                return None;
            }
        }
        Some(first)
    }

    /// The d-bar value when it is defined and unambiguous.
    pub fn d_bar(&self) -> Option<Rat> {
        let mut vals = self.candidates.iter().map(|c| c.d_bar.as_ref());
        let first = vals.next()??.clone();
        for v in vals {
            if *v? != first {
                return None;
            }
        }
        Some(first)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    Mu,
    D,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// The knots cannot be 0-concordant; witnesses name the invariants that
    /// differ (computed on both sides, unequal for every candidate pairing).
    Distinguished { witnesses: Vec<Witness> },
    /// No obstruction found. `unknowns` lists what could not be computed.
    NotObstructed { unknowns: Vec<String> },
    /// Verdict valid only if the asserted hypersurfaces are correct.
    ConditionalOnAssertion(Box<Verdict>),
}

impl Verdict {
    pub fn is_distinguished(&self) -> bool {
        match self {
            Verdict::Distinguished { .. } => true,
            Verdict::NotObstructed { .. } => false,
            Verdict::ConditionalOnAssertion(inner) => inner.is_distinguished(),
        }
    }
}

/// Profile of a Seifert hypersurface (used by `profile` and by stabilization
/// tests, which must not change it).
pub fn profile_of_seifert(data: &SeifertData) -> InvariantProfile {
    let mut notes = Vec::new();
    let mut candidates = Vec::with_capacity(data.spin_candidates.len());
    for s in &data.spin_candidates {
        let mu = match mu_manifold(&data.manifold, s) {
            Ok(m) => Some(m),
            Err(e) => {
                notes.push(format!("mu unknown: {e}"));
                None
            }
        };
        let d_bar = match d_normalized(&data.manifold, s) {
            DValue::Known(r) => Some(r),
            DValue::Unknown(reason) => {
                notes.push(format!("d unknown: {reason}"));
                None
            }
        };
        candidates.push(SpinCandidateInvariants { mu, d_bar });
    }
    if data.spin_candidates.len() > 1 {
        notes.push(format!(
            "induced spin structure ambiguous: {} candidates quantified",
            data.spin_candidates.len()
        ));
    }
    if data.conditional {
        notes.push("conditional on an asserted Seifert hypersurface".into());
    }
    // h1_order describes the core: 0 marks a core with b1 > 0.
    let core_b1 = data.manifold.b1().saturating_sub(data.stabilizations);
    let h1_order = if core_b1 > 0 {
        BigUint::from(0u32)
    } else {
        data.manifold.h1_torsion_order()
    };
    InvariantProfile {
        candidates,
        h1_order,
        conditional: data.conditional,
        notes,
    }
}

/// Invariant profile of a 2-knot expression. Unknown entries never abort:
/// an unsupported hypersurface yields a fully-unknown profile with a note.
pub fn profile(k: &TwoKnotExpr) -> InvariantProfile {
    match seifert_hypersurface(k) {
        Ok(data) => profile_of_seifert(&data),
        Err(e) => InvariantProfile {
            candidates: vec![SpinCandidateInvariants { mu: None, d_bar: None }],
            h1_order: BigUint::from(0u32),
            conditional: k.is_conditional(),
            notes: vec![format!("no Seifert hypersurface computed: {e}")],
        },
    }
}

/// 0-concordance verdict for a pair of 2-knots.
pub fn compare(k1: &TwoKnotExpr, k2: &TwoKnotExpr) -> Verdict {
    let p1 = profile(k1);
    let p2 = profile(k2);
    let mut witnesses = Vec::new();
    let mut unknowns = Vec::new();

    let mu_all_known = p1.candidates.iter().all(|c| c.mu.is_some())
        && p2.candidates.iter().all(|c| c.mu.is_some());
    if mu_all_known {
        let differs = p1.candidates.iter().all(|a| {
            p2.candidates
                .iter()
                .all(|b| a.mu.unwrap() != b.mu.unwrap())
        });
        if differs {
            witnesses.push(Witness::Mu);
        }
    } else {
        unknowns.push("mu not computed on at least one side".to_string());
    }

    let d_all_known = p1.candidates.iter().all(|c| c.d_bar.is_some())
        && p2.candidates.iter().all(|c| c.d_bar.is_some());
    if d_all_known {
        let differs = p1.candidates.iter().all(|a| {
            p2.candidates
                .iter()
                .all(|b| a.d_bar.as_ref().unwrap() != b.d_bar.as_ref().unwrap())
        });
        if differs {
            witnesses.push(Witness::D);
        }
    } else {
        unknowns.push("d not computed on at least one side".to_string());
    }

    let verdict = if witnesses.is_empty() {
        Verdict::NotObstructed { unknowns }
    } else {
        Verdict::Distinguished { witnesses }
    };
    if p1.conditional || p2.conditional {
        Verdict::ConditionalOnAssertion(Box::new(verdict))
    } else {
        verdict
    }
}

/// Report of the signature criterion for 2-twist spins of quasi-alternating
/// knots ("0-slice implies vanishing signature").
#[derive(Debug, Clone, PartialEq)]
pub struct Theorem2Report {
    pub sigma: i64,
    pub d: Rat,
    /// The calibrated proportionality constant with sigma = c * d across the
    /// quasi-alternating catalog.
    pub c: Rat,
    pub relation_holds: bool,
    /// d != 0 obstructs the 2-twist spin from being 0-slice.
    pub obstructs_zero_slice: bool,
    pub notes: Vec<String>,
}

/// The constant c with sigma(K) = c * d(Sigma_2(K), s0), calibrated once on
/// the trefoil. With this crate's orientation conventions c = -4; sources
/// stating "sigma = 2d" use a different normalization of d.
pub fn theorem2_constant() -> Rat {
    let trefoil = KnotExpr::torus(2, 3).unwrap();
    let sigma = signature(&trefoil).expect("catalog trefoil signature");
    let d = double_cover_spin_d(&trefoil).expect("catalog trefoil cover");
    rat_int(sigma) / d
}

fn double_cover_spin_d(k: &KnotExpr) -> Result<Rat> {
    let y = branched_cover(k, 2)?;
    let spins = y.spin_structures()?;
    if spins.len() != 1 {
        return Err(Error::Unsupported(
            "double cover has more than one spin structure".into(),
        ));
    }
    match d_normalized(&y, &spins[0]) {
        DValue::Known(r) => Ok(r),
        DValue::Unknown(reason) => Err(Error::Unsupported(reason)),
    }
}

/// Runs the signature criterion on a quasi-alternating catalog knot.
pub fn theorem2_check(k: &KnotExpr) -> Result<Theorem2Report> {
    if is_quasi_alternating(k) != QaStatus::QuasiAlternating {
        return Err(Error::NotQuasiAlternating(format!("{k:?}")));
    }
    let sigma = signature(k)?;
    let d = double_cover_spin_d(k)?;
    let c = theorem2_constant();
    let relation_holds = rat_int(sigma) == c.clone() * d.clone();
    let obstructs = d != rat_int(0);
    let mut notes = vec![format!(
        "convention: sigma = c*d with c = {} calibrated on torus(2,3); \
         sources using the opposite cover orientation state sigma = 2d",
        format_rat(&c)
    )];
    if obstructs {
        notes.push(format!(
            "d(Sigma_2, s0) = {} != 0: the 2-twist spin is not 0-slice",
            format_rat(&d)
        ));
    }
    Ok(Theorem2Report {
        sigma,
        d,
        c,
        relation_holds,
        obstructs_zero_slice: obstructs,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// k-fold connected sums of the 5-twist spin of the trefoil:
    /// d-bar = 2k, pairwise distinguished.
    D,
    /// Connected sums realizing distinct Rochlin residues mod 16: even ones
    /// from catalog twist spins, odd ones via an asserted RP^3-fibered knot
    /// (conditional).
    Mu,
}

/// Generates families of pairwise non-0-concordant 2-knots with profiles.
pub fn family(kind: FamilyKind, size: u64) -> Result<Vec<(TwoKnotExpr, InvariantProfile)>> {
    if size == 0 {
        return Err(Error::Invalid("family size must be at least 1".into()));
    }
    let mut out = Vec::new();
    match kind {
        FamilyKind::D => {
            let gen = TwoKnotExpr::twist_spin(5, KnotExpr::torus(2, 3).unwrap());
            for k in 1..=size {
                let expr =
                    TwoKnotExpr::conn_sum((0..k).map(|_| gen.clone()).collect::<Vec<_>>());
                let p = profile(&expr);
                out.push((expr, p));
            }
        }
        FamilyKind::Mu => {
            // mu(Sigma_2(b(3,1)), spin) = 14 = -2: even residues are catalog
            // sums; odd residues add one asserted mu = 1 generator.
            let even_gen = TwoKnotExpr::twist_spin(2, KnotExpr::two_bridge(3, 1).unwrap());
            let l21 = crate::manifold::ThreeManifold::lens(2, 1).unwrap();
            let odd_spin = l21
                .spin_structures()?
                .into_iter()
                .find(|s| mu_manifold(&l21, s).map(|m| m == Mu::new(1)).unwrap_or(false))
                .ok_or_else(|| Error::Invalid("no mu = 1 spin structure on L(2,1)".into()))?;
            let odd_gen = TwoKnotExpr::asserted(
                l21,
                Some(odd_spin),
                "2-knot fibered by L(2,1), asserted",
            )?;
            for residue in 0..size.min(16) {
                let m = residue / 2;
                let copies = (8 - m % 8) % 8;
                let mut parts: Vec<TwoKnotExpr> =
                    (0..copies).map(|_| even_gen.clone()).collect();
                if residue % 2 == 1 {
                    parts.push(odd_gen.clone());
                }
                let expr = TwoKnotExpr::conn_sum(parts);
                let p = profile(&expr);
                debug_assert_eq!(p.mu(), Some(Mu::new(residue as i128)));
                out.push((expr, p));
            }
        }
    }
    Ok(out)
}

/// Convenience: the determinant of a catalog knot, exposed for reports.
pub fn knot_determinant(k: &KnotExpr) -> Result<BigUint> {
    Ok(determinant(k)?.magnitude().clone())
}

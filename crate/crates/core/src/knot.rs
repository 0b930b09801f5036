//! Classical knots in S^3: the catalog feeding twist-spin constructions.
//!
//! The catalog holds torus knots T(2,p), 2-bridge knots b(p,q), raw Seifert
//! matrices, and mirrors. Signatures and determinants are computed exactly.
//!
//! Sign convention: `Torus(2, p)` with the built-in Seifert matrix (diagonal
//! -1, superdiagonal +1) is the negative-signature chirality, so
//! sigma(T(2,p)) = -(p-1). `Mirror` gives the other chirality. The 2-bridge
//! convention is calibrated so that `TwoBridge(p, 1)` agrees with
//! `Torus(2, p)`; its double branched cover is the lens space L(p,q) as
//! oriented in [`crate::manifold`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{det_int, sym_signature_int, tridiag_signature};

/// Largest admissible parameter in torus / two-bridge / lens constructors.
/// Keeps chain lengths and matrix sizes sane; invariant code is exact at any
/// size below this.
pub const MAX_PARAM: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KnotExpr {
    Unknot,
    /// T(p,q), stored with p <= q. Only T(2,p) has catalog invariants.
    Torus { p: u64, q: u64 },
    /// b(p,q): p odd, 0 < q < p, gcd(p,q) = 1.
    TwoBridge { p: u64, q: u64 },
    /// A raw Seifert matrix; `qa_asserted` marks a caller-asserted
    /// quasi-alternating flag (there is no diagram to decide from).
    SeifertMatrix { rows: Vec<Vec<i64>>, qa_asserted: bool },
    Mirror(Box<KnotExpr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QaStatus {
    QuasiAlternating,
    Unknown,
}

impl KnotExpr {
    /// Torus knot constructor. T(p,1) and T(1,q) normalize to the unknot.
    pub fn torus(p: u64, q: u64) -> Result<KnotExpr> {
        if p == 0 || q == 0 {
            return Err(Error::Invalid("torus parameters must be positive".into()));
        }
        if p.max(q) > MAX_PARAM {
            return Err(Error::Invalid(format!(
                "torus parameter exceeds limit {MAX_PARAM}"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::Invalid(format!(
                "torus({p},{q}): parameters must be coprime, gcd = {}",
                p.gcd(&q)
            )));
        }
        if p == 1 || q == 1 {
            return Ok(KnotExpr::Unknot);
        }
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Ok(KnotExpr::Torus { p, q })
    }

    /// 2-bridge knot b(p,q): p odd (knot determinants are odd), 0 < q < p,
    /// coprime.
    pub fn two_bridge(p: u64, q: u64) -> Result<KnotExpr> {
        if p > MAX_PARAM {
            return Err(Error::Invalid(format!(
                "two-bridge parameter exceeds limit {MAX_PARAM}"
            )));
        }
        if p % 2 == 0 {
            return Err(Error::Invalid(format!(
                "twobridge({p},{q}): p must be odd (knot determinants are odd)"
            )));
        }
        if q == 0 || q >= p {
            return Err(Error::Invalid(format!(
                "twobridge({p},{q}): need 0 < q < p"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::Invalid(format!(
                "twobridge({p},{q}): parameters must be coprime"
            )));
        }
        Ok(KnotExpr::TwoBridge { p, q })
    }

    pub fn seifert_matrix(rows: Vec<Vec<i64>>) -> Result<KnotExpr> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("Seifert matrix must be square".into()));
        }
        if n > 512 {
            return Err(Error::Invalid("Seifert matrix too large".into()));
        }
        Ok(KnotExpr::SeifertMatrix { rows, qa_asserted: false })
    }

    /// Mirror image; double mirrors cancel.
    pub fn mirror(k: KnotExpr) -> KnotExpr {
        match k {
            KnotExpr::Mirror(inner) => *inner,
            KnotExpr::Unknot => KnotExpr::Unknot,
            other => KnotExpr::Mirror(Box::new(other)),
        }
    }
}

/// The built-in Seifert matrix of T(2,p): (p-1) x (p-1), -1 on the diagonal,
/// +1 on the superdiagonal.
pub fn torus2_seifert_matrix(p: u64) -> Vec<Vec<i64>> {
    let n = (p - 1) as usize;
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = -1;
        if i + 1 < n {
            m[i][i + 1] = 1;
        }
    }
    m
}

/// All-even continued fraction of p/q' where q' = q if q is even, else q - p.
///
/// Expands p/q' = e1 + 1/(e2 + 1/(... + 1/em)) with every `e` even and
/// nonzero; p odd forces an even number of terms. Each step takes the even
/// integer nearest the remaining value (never a tie, since p is odd).
pub fn even_continued_fraction(p: u64, q: u64) -> Vec<i64> {
    debug_assert!(p % 2 == 1 && q > 0 && q < p && p.gcd(&q) == 1);
    let mut num: i128 = p as i128;
    let mut den: i128 = if q % 2 == 0 {
        q as i128
    } else {
        q as i128 - p as i128
    };
    let mut out = Vec::new();
    loop {
        if den < 0 {
            num = -num;
            den = -den;
        }
        if den == 1 && num % 2 == 0 {
            out.push(num as i64);
            break;
        }
        // Even integer nearest num/den: e = 2 * round(num / (2 den)).
        let b = 2 * den;
        let k = (2 * num + b).div_euclid(2 * b);
        let e = 2 * k;
        let rem = num - e * den;
        debug_assert!(rem != 0 && rem.abs() < den);
        out.push(e as i64);
        num = den;
        den = rem;
    }
    debug_assert!(out.len() % 2 == 0);
    out
}

/// Banded Seifert matrix of the 2-bridge knot b(p,q), built from the all-even
/// continued fraction: diagonal c_i = (-1)^(i+1) e_i / 2, superdiagonal 1.
/// At q = 1 this reproduces the built-in T(2,p) matrix.
pub fn two_bridge_seifert_matrix(p: u64, q: u64) -> Vec<Vec<i64>> {
    let es = even_continued_fraction(p, q);
    let n = es.len();
    let mut m = vec![vec![0i64; n]; n];
    for (i, &e) in es.iter().enumerate() {
        let c = e / 2;
        m[i][i] = if i % 2 == 0 { c } else { -c };
        if i + 1 < n {
            m[i][i + 1] = 1;
        }
    }
    m
}

fn symmetrized(v: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = v.len();
    let mut s = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            s[i][j] = v[i][j]
                .checked_add(v[j][i])
                .expect("Seifert matrix entries too large");
        }
    }
    s
}

fn tridiag_parts(s: &[Vec<i64>]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let n = s.len();
    for i in 0..n {
        for j in 0..n {
            if j > i + 1 && s[i][j] != 0 {
                return None;
            }
        }
    }
    let diag = (0..n).map(|i| BigInt::from(s[i][i])).collect();
    let off = (0..n.saturating_sub(1)).map(|i| BigInt::from(s[i][i + 1])).collect();
    Some((diag, off))
}

/// Signature of the symmetrized form V + V^T, exact.
fn sym_form_signature(v: &[Vec<i64>]) -> i64 {
    let s = symmetrized(v);
    if let Some((diag, off)) = tridiag_parts(&s) {
        if let Ok(sig) = tridiag_signature(&diag, &off) {
            return sig;
        }
    }
    let (pos, neg, _) = sym_signature_int(&s);
    pos as i64 - neg as i64
}

/// Knot signature. Always even; negated by `Mirror`.
pub fn signature(k: &KnotExpr) -> Result<i64> {
    match k {
        KnotExpr::Unknot => Ok(0),
        KnotExpr::Torus { p, q } => {
            if *p != 2 {
                return Err(Error::Unsupported(format!(
                    "signature of torus({p},{q}): only T(2,q) is in the catalog; \
                     supply a Seifert matrix instead"
                )));
            }
            Ok(sym_form_signature(&torus2_seifert_matrix(*q)))
        }
        KnotExpr::TwoBridge { p, q } => Ok(sym_form_signature(&two_bridge_seifert_matrix(*p, *q))),
        KnotExpr::SeifertMatrix { rows, .. } => Ok(sym_form_signature(rows)),
        KnotExpr::Mirror(inner) => Ok(-signature(inner)?),
    }
}

/// Knot determinant |det(V + V^T)|; equals p for b(p,q). Always odd,
/// invariant under `Mirror`.
pub fn determinant(k: &KnotExpr) -> Result<BigInt> {
    match k {
        KnotExpr::Unknot => Ok(BigInt::from(1)),
        KnotExpr::Torus { p, q } => {
            if *p != 2 {
                return Err(Error::Unsupported(format!(
                    "determinant of torus({p},{q}): only T(2,q) is in the catalog"
                )));
            }
            Ok(det_int(&symmetrized(&torus2_seifert_matrix(*q))).abs())
        }
        KnotExpr::TwoBridge { p, .. } => Ok(BigInt::from(*p)),
        KnotExpr::SeifertMatrix { rows, .. } => {
            let d = det_int(&symmetrized(rows)).abs();
            if (&d % 2u8) == BigInt::from(0) {
                return Err(Error::Invalid(
                    "matrix is not a knot Seifert matrix: even determinant".into(),
                ));
            }
            Ok(d)
        }
        KnotExpr::Mirror(inner) => determinant(inner),
    }
}

/// Quasi-alternating status. 2-bridge knots and T(2,p) are alternating, hence
/// quasi-alternating; raw Seifert matrices carry no diagram, so the status is
/// unknown unless asserted.
pub fn is_quasi_alternating(k: &KnotExpr) -> QaStatus {
    match k {
        KnotExpr::Unknot => QaStatus::QuasiAlternating,
        KnotExpr::Torus { p, .. } => {
            if *p == 2 {
                QaStatus::QuasiAlternating
            } else {
                QaStatus::Unknown
            }
        }
        KnotExpr::TwoBridge { .. } => QaStatus::QuasiAlternating,
        KnotExpr::SeifertMatrix { qa_asserted, .. } => {
            if *qa_asserted {
                QaStatus::QuasiAlternating
            } else {
                QaStatus::Unknown
            }
        }
        KnotExpr::Mirror(inner) => is_quasi_alternating(inner),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent counting formula for the 2-bridge signature in this
    /// crate's chirality convention:
    /// sigma(b(p,q)) = -(p-1) + 4 * #{ 1 <= i <= (p-1)/2 : frac(iq/p) > 1/2 }.
    fn two_bridge_signature_by_counting(p: u64, q: u64) -> i64 {
        let mut count = 0i64;
        for i in 1..=(p - 1) / 2 {
            if 2 * ((i * q) % p) > p {
                count += 1;
            }
        }
        -((p - 1) as i64) + 4 * count
    }

    #[test]
    fn unknot_and_normalizations() {
        assert_eq!(KnotExpr::torus(5, 1).unwrap(), KnotExpr::Unknot);
        assert_eq!(KnotExpr::torus(1, 7).unwrap(), KnotExpr::Unknot);
        assert_eq!(signature(&KnotExpr::Unknot).unwrap(), 0);
        assert_eq!(determinant(&KnotExpr::Unknot).unwrap(), BigInt::from(1));
        assert!(KnotExpr::torus(2, 4).is_err());
        assert!(KnotExpr::two_bridge(4, 1).is_err());
        assert!(KnotExpr::two_bridge(5, 5).is_err());
    }

    #[test]
    fn trefoil_signature_from_seifert_matrix() {
        // V = [[-1,1],[0,-1]]: V + V^T has eigenvalues -1 and -3.
        let t23 = KnotExpr::torus(2, 3).unwrap();
        assert_eq!(signature(&t23).unwrap(), -2);
        let t25 = KnotExpr::torus(2, 5).unwrap();
        assert_eq!(signature(&t25).unwrap(), -4);
        assert_eq!(signature(&KnotExpr::mirror(t23)).unwrap(), 2);
    }

    #[test]
    fn torus_signature_family() {
        for p in (3..=31u64).step_by(2) {
            let k = KnotExpr::torus(2, p).unwrap();
            assert_eq!(signature(&k).unwrap(), -((p - 1) as i64));
            assert_eq!(determinant(&k).unwrap(), BigInt::from(p));
        }
    }

    #[test]
    fn two_bridge_matches_torus_at_q1() {
        for p in (3..=31u64).step_by(2) {
            let b = KnotExpr::two_bridge(p, 1).unwrap();
            let t = KnotExpr::torus(2, p).unwrap();
            assert_eq!(signature(&b).unwrap(), signature(&t).unwrap());
            assert_eq!(determinant(&b).unwrap(), determinant(&t).unwrap());
            // The even-CF construction reproduces the built-in matrix exactly.
            assert_eq!(two_bridge_seifert_matrix(p, 1), torus2_seifert_matrix(p));
        }
    }

    #[test]
    fn two_bridge_signature_against_counting_oracle() {
        for p in (3..=99u64).step_by(2) {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let b = KnotExpr::two_bridge(p, q).unwrap();
                assert_eq!(
                    signature(&b).unwrap(),
                    two_bridge_signature_by_counting(p, q),
                    "b({p},{q})"
                );
            }
        }
    }

    #[test]
    fn figure_eight_is_amphichiral_with_zero_signature() {
        let f8 = KnotExpr::two_bridge(5, 2).unwrap();
        assert_eq!(signature(&f8).unwrap(), 0);
        assert_eq!(determinant(&f8).unwrap(), BigInt::from(5));
    }

    #[test]
    fn even_cf_symmetrized_determinant_is_p() {
        for p in (3..=61u64).step_by(2) {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let v = two_bridge_seifert_matrix(p, q);
                let d = det_int(&symmetrized(&v)).abs();
                assert_eq!(d, BigInt::from(p), "b({p},{q})");
            }
        }
    }

    #[test]
    fn signature_is_even_and_mirror_negates() {
        for p in (3..=31u64).step_by(2) {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let k = KnotExpr::two_bridge(p, q).unwrap();
                let s = signature(&k).unwrap();
                assert_eq!(s.rem_euclid(2), 0);
                assert_eq!(signature(&KnotExpr::mirror(k.clone())).unwrap(), -s);
                let d = determinant(&k).unwrap();
                assert_eq!((&d % 2u8), BigInt::from(1));
                assert_eq!(determinant(&KnotExpr::mirror(k)).unwrap(), d);
            }
        }
    }

    #[test]
    fn qa_status() {
        assert_eq!(
            is_quasi_alternating(&KnotExpr::two_bridge(7, 3).unwrap()),
            QaStatus::QuasiAlternating
        );
        assert_eq!(
            is_quasi_alternating(&KnotExpr::torus(2, 5).unwrap()),
            QaStatus::QuasiAlternating
        );
        let raw = KnotExpr::seifert_matrix(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(is_quasi_alternating(&raw), QaStatus::Unknown);
    }

    #[test]
    fn torus_big_p_unsupported() {
        let k = KnotExpr::torus(3, 4).unwrap();
        assert!(matches!(signature(&k), Err(Error::Unsupported(_))));
        assert!(matches!(determinant(&k), Err(Error::Unsupported(_))));
    }

    #[test]
    fn user_seifert_matrix_roundtrip() {
        // Trefoil hand-entered: same invariants as the catalog torus knot.
        let raw = KnotExpr::seifert_matrix(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(signature(&raw).unwrap(), -2);
        assert_eq!(determinant(&raw).unwrap(), BigInt::from(3));
        // Degenerate (even determinant) input is rejected.
        let bad = KnotExpr::seifert_matrix(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(determinant(&bad).is_err());
    }
}

//! The expression grammar for 2-knots, knots, and 3-manifolds.
//!
//! ```text
//! expr     := term ('#' term)*
//! term     := 'unknot2'
//!           | 'twistspin' '(' int ',' knot ')'
//!           | 'ribbon' '(' int ')'
//!           | 'rev' '(' expr ')'
//!           | 'seifert' '(' manifold [',' 'spin=' int] ')'
//! knot     := 'torus' '(' int ',' int ')'
//!           | 'twobridge' '(' int ',' int ')'
//!           | 'mirror' '(' knot ')'
//!           | 'unknot'
//! manifold := prime ('#' prime)*
//! prime    := 'lens' '(' int ',' int ')'
//!           | 'brieskorn' '(' int ',' int ',' int ')'
//!           | 's1s2'
//!           | '-' prime
//! ```
//!
//! Whitespace-insensitive; '#' is left-associative; integer literals are
//! arbitrary precision (range constraints are reported as semantic errors).
//! Parsing normalizes, so parse(print(e)) equals normalize(e).

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::Error;
use crate::knot::KnotExpr;
use crate::manifold::{PrimeSummand, SpinCSelector, ThreeManifold};
use crate::twoknot::TwoKnotExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    /// Malformed text: byte position and what was expected there.
    Syntax { position: usize, expected: String, found: String },
    /// Well-formed text violating a domain constraint (gcd, range, parity).
    Semantic { position: usize, message: String },
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { position, expected, found } => {
                write!(f, "syntax error at byte {position}: expected {expected}, found {found}")
            }
            ExprError::Semantic { position, message } => {
                write!(f, "semantic error at byte {position}: {message}")
            }
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    Comma,
    Hash,
    Minus,
    Eq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Comma => write!(f, "','"),
            Tok::Hash => write!(f, "'#'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Eq => write!(f, "'='"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer, ExprError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            b'#' => {
                toks.push((i, Tok::Hash));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'=' => {
                toks.push((i, Tok::Eq));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(v)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                // Identifiers may end in digits (s1s2), so peel trailing
                // digits only when the whole word is not a known token.
                toks.push((start, Tok::Ident(text[start..i].to_ascii_lowercase())));
            }
            _ => {
                return Err(ExprError::Syntax {
                    position: i,
                    expected: "a token".into(),
                    found: format!("'{}'", &text[i..i + 1]),
                })
            }
        }
    }
    toks.push((text.len(), Tok::End));
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, expected: &str) -> Result<usize, ExprError> {
        let (pos, tok) = self.next();
        if &tok == want {
            Ok(pos)
        } else {
            Err(ExprError::Syntax {
                position: pos,
                expected: expected.into(),
                found: tok.to_string(),
            })
        }
    }

    fn expect_int(&mut self) -> Result<(usize, BigInt), ExprError> {
        let (pos, tok) = self.next();
        match tok {
            Tok::Int(v) => Ok((pos, v)),
            other => Err(ExprError::Syntax {
                position: pos,
                expected: "an integer".into(),
                found: other.to_string(),
            }),
        }
    }
}

fn semantic(position: usize, e: Error) -> ExprError {
    ExprError::Semantic { position, message: e.to_string() }
}

fn to_u64(pos: usize, v: &BigInt) -> Result<u64, ExprError> {
    v.to_u64().ok_or_else(|| ExprError::Semantic {
        position: pos,
        message: format!("integer {v} out of supported range"),
    })
}

/// Parses a 2-knot expression; the result is normalized.
pub fn parse_two_knot(text: &str) -> Result<TwoKnotExpr, ExprError> {
    let mut lx = lex(text)?;
    let e = parse_expr(&mut lx)?;
    lx.expect(&Tok::End, "end of input")?;
    Ok(e.normalize())
}

/// Parses a classical knot expression.
pub fn parse_knot(text: &str) -> Result<KnotExpr, ExprError> {
    let mut lx = lex(text)?;
    let k = parse_knot_inner(&mut lx)?;
    lx.expect(&Tok::End, "end of input")?;
    Ok(k)
}

/// Parses a 3-manifold expression (connected sum of primes).
pub fn parse_manifold(text: &str) -> Result<ThreeManifold, ExprError> {
    let mut lx = lex(text)?;
    let m = parse_manifold_inner(&mut lx)?;
    lx.expect(&Tok::End, "end of input")?;
    Ok(m)
}

fn parse_expr(lx: &mut Lexer) -> Result<TwoKnotExpr, ExprError> {
    let mut parts = vec![parse_term(lx)?];
    while lx.peek().1 == Tok::Hash {
        lx.next();
        parts.push(parse_term(lx)?);
    }
    Ok(if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        TwoKnotExpr::ConnSum(parts)
    })
}

fn parse_term(lx: &mut Lexer) -> Result<TwoKnotExpr, ExprError> {
    let (pos, tok) = lx.next();
    let name = match tok {
        Tok::Ident(s) => s,
        other => {
            return Err(ExprError::Syntax {
                position: pos,
                expected: "'unknot2', 'twistspin', 'ribbon', 'rev' or 'seifert'".into(),
                found: other.to_string(),
            })
        }
    };
    match name.as_str() {
        "unknot2" => Ok(TwoKnotExpr::UnknotS2),
        "twistspin" => {
            lx.expect(&Tok::LParen, "'('")?;
            let (npos, n) = lx.expect_int()?;
            let n = to_u64(npos, &n)?;
            lx.expect(&Tok::Comma, "','")?;
            let knot = parse_knot_inner(lx)?;
            lx.expect(&Tok::RParen, "')'")?;
            Ok(TwoKnotExpr::TwistSpin { n, knot })
        }
        "ribbon" => {
            lx.expect(&Tok::LParen, "'('")?;
            let (npos, n) = lx.expect_int()?;
            let n = to_u64(npos, &n)?;
            lx.expect(&Tok::RParen, "')'")?;
            TwoKnotExpr::ribbon(n).map_err(|e| semantic(npos, e))
        }
        "rev" => {
            lx.expect(&Tok::LParen, "'('")?;
            let inner = parse_expr(lx)?;
            lx.expect(&Tok::RParen, "')'")?;
            Ok(TwoKnotExpr::Reverse(Box::new(inner)))
        }
        "seifert" => {
            lx.expect(&Tok::LParen, "'('")?;
            let mpos = lx.peek().0;
            let manifold = parse_manifold_inner(lx)?;
            let mut spin = None;
            if lx.peek().1 == Tok::Comma {
                lx.next();
                let (spos, stok) = lx.next();
                if stok != Tok::Ident("spin".into()) {
                    return Err(ExprError::Syntax {
                        position: spos,
                        expected: "'spin='".into(),
                        found: stok.to_string(),
                    });
                }
                lx.expect(&Tok::Eq, "'='")?;
                let (ipos, i) = lx.expect_int()?;
                let i = to_u64(ipos, &i)? as usize;
                let spins = manifold
                    .spin_structures()
                    .map_err(|e| semantic(mpos, e))?;
                if i >= spins.len() {
                    return Err(ExprError::Semantic {
                        position: ipos,
                        message: format!(
                            "spin index {i} out of range: the manifold has {} spin structures",
                            spins.len()
                        ),
                    });
                }
                spin = Some(spins[i].clone());
            }
            lx.expect(&Tok::RParen, "')'")?;
            TwoKnotExpr::asserted(manifold, spin, "").map_err(|e| semantic(mpos, e))
        }
        other => Err(ExprError::Syntax {
            position: pos,
            expected: "'unknot2', 'twistspin', 'ribbon', 'rev' or 'seifert'".into(),
            found: format!("'{other}'"),
        }),
    }
}

fn parse_knot_inner(lx: &mut Lexer) -> Result<KnotExpr, ExprError> {
    let (pos, tok) = lx.next();
    let name = match tok {
        Tok::Ident(s) => s,
        other => {
            return Err(ExprError::Syntax {
                position: pos,
                expected: "'torus', 'twobridge', 'mirror' or 'unknot'".into(),
                found: other.to_string(),
            })
        }
    };
    match name.as_str() {
        "unknot" => Ok(KnotExpr::Unknot),
        "torus" => {
            let (ppos, p, q) = parse_int_pair(lx)?;
            KnotExpr::torus(p, q).map_err(|e| semantic(ppos, e))
        }
        "twobridge" => {
            let (ppos, p, q) = parse_int_pair(lx)?;
            KnotExpr::two_bridge(p, q).map_err(|e| semantic(ppos, e))
        }
        "mirror" => {
            lx.expect(&Tok::LParen, "'('")?;
            let inner = parse_knot_inner(lx)?;
            lx.expect(&Tok::RParen, "')'")?;
            Ok(KnotExpr::mirror(inner))
        }
        other => Err(ExprError::Syntax {
            position: pos,
            expected: "'torus', 'twobridge', 'mirror' or 'unknot'".into(),
            found: format!("'{other}'"),
        }),
    }
}

fn parse_int_pair(lx: &mut Lexer) -> Result<(usize, u64, u64), ExprError> {
    lx.expect(&Tok::LParen, "'('")?;
    let (ppos, p) = lx.expect_int()?;
    let p = to_u64(ppos, &p)?;
    lx.expect(&Tok::Comma, "','")?;
    let (qpos, q) = lx.expect_int()?;
    let q = to_u64(qpos, &q)?;
    lx.expect(&Tok::RParen, "')'")?;
    Ok((ppos, p, q))
}

fn parse_manifold_inner(lx: &mut Lexer) -> Result<ThreeManifold, ExprError> {
    let mut m = parse_prime(lx)?;
    while lx.peek().1 == Tok::Hash {
        lx.next();
        m = m.connected_sum(parse_prime(lx)?);
    }
    Ok(m)
}

fn parse_prime(lx: &mut Lexer) -> Result<ThreeManifold, ExprError> {
    if lx.peek().1 == Tok::Minus {
        lx.next();
        let inner = parse_prime(lx)?;
        return Ok(inner.orientation_reverse());
    }
    let (pos, tok) = lx.next();
    let name = match tok {
        Tok::Ident(s) => s,
        other => {
            return Err(ExprError::Syntax {
                position: pos,
                expected: "'lens', 'brieskorn', 's1s2' or '-'".into(),
                found: other.to_string(),
            })
        }
    };
    match name.as_str() {
        "s1s2" => Ok(ThreeManifold::s1_x_s2()),
        "lens" => {
            let (ppos, p, q) = parse_int_pair(lx)?;
            ThreeManifold::lens(p, q).map_err(|e| semantic(ppos, e))
        }
        "brieskorn" => {
            lx.expect(&Tok::LParen, "'('")?;
            let (apos, a) = lx.expect_int()?;
            let a = to_u64(apos, &a)?;
            lx.expect(&Tok::Comma, "','")?;
            let (bpos, b) = lx.expect_int()?;
            let b = to_u64(bpos, &b)?;
            lx.expect(&Tok::Comma, "','")?;
            let (cpos, c) = lx.expect_int()?;
            let c = to_u64(cpos, &c)?;
            lx.expect(&Tok::RParen, "')'")?;
            ThreeManifold::brieskorn(a, b, c).map_err(|e| semantic(apos, e))
        }
        other => Err(ExprError::Syntax {
            position: pos,
            expected: "'lens', 'brieskorn', 's1s2' or '-'".into(),
            found: format!("'{other}'"),
        }),
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => write!(f, "unknot"),
            KnotExpr::Torus { p, q } => write!(f, "torus({p},{q})"),
            KnotExpr::TwoBridge { p, q } => write!(f, "twobridge({p},{q})"),
            KnotExpr::SeifertMatrix { rows, .. } => write!(f, "seifertmatrix[{}]", rows.len()),
            KnotExpr::Mirror(inner) => write!(f, "mirror({inner})"),
        }
    }
}

impl fmt::Display for PrimeSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSummand::Lens { p, q } => write!(f, "lens({p},{q})"),
            PrimeSummand::Brieskorn { a, b, c, reversed } => {
                if *reversed {
                    write!(f, "-brieskorn({a},{b},{c})")
                } else {
                    write!(f, "brieskorn({a},{b},{c})")
                }
            }
            PrimeSummand::S1xS2 => write!(f, "s1s2"),
            PrimeSummand::Raw { pres, reversed } => {
                // Raw presentations are not part of the text grammar; this
                // form is for diagnostics only.
                if *reversed {
                    write!(f, "-raw{:?}", pres.framings())
                } else {
                    write!(f, "raw{:?}", pres.framings())
                }
            }
        }
    }
}

impl fmt::Display for ThreeManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands().is_empty() {
            // S^3 has no grammar token; it only occurs as the hypersurface
            // of the unknotted sphere, printed as unknot2 at the knot level.
            return write!(f, "s3");
        }
        let parts: Vec<String> = self.summands().iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" # "))
    }
}

impl fmt::Display for TwoKnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoKnotExpr::UnknotS2 => write!(f, "unknot2"),
            TwoKnotExpr::TwistSpin { n, knot } => write!(f, "twistspin({n}, {knot})"),
            TwoKnotExpr::Ribbon { spheres } => write!(f, "ribbon({spheres})"),
            TwoKnotExpr::ConnSum(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", parts.join(" # "))
            }
            TwoKnotExpr::Reverse(inner) => write!(f, "rev({inner})"),
            TwoKnotExpr::AssertedSeifert { manifold, spin, .. } => {
                match spin_position(manifold, spin) {
                    Some(i) => write!(f, "seifert({manifold}, spin={i})"),
                    None => write!(f, "seifert({manifold})"),
                }
            }
        }
    }
}

fn spin_position(m: &ThreeManifold, spin: &Option<SpinCSelector>) -> Option<usize> {
    let s = spin.as_ref()?;
    m.spin_structures().ok()?.iter().position(|c| c == s)
}

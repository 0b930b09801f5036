//! Human-readable and JSON rendering. Exact rationals always serialize as
//! "a/b" strings, never floats.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use zeroconc::engine::{InvariantProfile, Theorem2Report, Verdict, Witness};
use zeroconc::rational::format_rat;
use zeroconc::{KnotExpr, TwoKnotExpr};

pub fn sublink_str(c: &[bool]) -> String {
    let bits: Vec<String> = c.iter().map(|&b| (b as u8).to_string()).collect();
    format!("[{}]", bits.join(","))
}

fn h1_value(p: &InvariantProfile) -> Value {
    match p.h1_order.to_u64() {
        Some(v) => json!(v),
        None => json!(p.h1_order.to_string()),
    }
}

pub fn profile_json(expr: &TwoKnotExpr, p: &InvariantProfile) -> Value {
    let candidates: Vec<Value> = p
        .candidates
        .iter()
        .map(|c| {
            json!({
                "mu": c.mu.map(|m| m.value()),
                "d_bar": c.d_bar.as_ref().map(format_rat),
            })
        })
        .collect();
    let mut v = json!({
        "expr": expr.to_string(),
        "mu": p.mu().map(|m| m.value()),
        "d_bar": p.d_bar().map(|d| format_rat(&d)),
        "h1": h1_value(p),
        "conditional": p.conditional,
        "notes": p.notes,
    });
    if p.candidates.len() > 1 {
        v["candidates"] = json!(candidates);
    }
    v
}

pub fn print_profile(expr: &TwoKnotExpr, p: &InvariantProfile) {
    println!("expression : {expr}");
    match p.mu() {
        Some(m) => println!("mu         : {m} (mod 16)"),
        None => println!("mu         : unknown"),
    }
    match p.d_bar() {
        Some(d) => println!("d_bar      : {}", format_rat(&d)),
        None => println!("d_bar      : unknown"),
    }
    println!("h1         : {}", p.h1_order);
    if p.candidates.len() > 1 {
        for (i, c) in p.candidates.iter().enumerate() {
            let mu = c.mu.map(|m| m.to_string()).unwrap_or_else(|| "?".into());
            let d = c
                .d_bar
                .as_ref()
                .map(format_rat)
                .unwrap_or_else(|| "?".into());
            println!("candidate {i}: mu = {mu}, d_bar = {d}");
        }
    }
    if p.conditional {
        println!("conditional: yes (asserted Seifert hypersurface)");
    }
    for n in &p.notes {
        println!("note       : {n}");
    }
}

pub fn print_profile_line(expr: &TwoKnotExpr, p: &InvariantProfile) {
    let mu = p
        .mu()
        .map(|m| m.to_string())
        .unwrap_or_else(|| "?".into());
    let d = p
        .d_bar()
        .map(|d| format_rat(&d))
        .unwrap_or_else(|| "?".into());
    let cond = if p.conditional { " [conditional]" } else { "" };
    println!("mu = {mu:>2}  d_bar = {d:>6}  {expr}{cond}");
}

fn witnesses_json(ws: &[Witness]) -> Vec<&'static str> {
    ws.iter()
        .map(|w| match w {
            Witness::Mu => "mu",
            Witness::D => "d",
        })
        .collect()
}

fn verdict_parts(v: &Verdict) -> (&'static str, Vec<&'static str>, bool, Vec<String>) {
    match v {
        Verdict::Distinguished { witnesses } => {
            ("distinguished", witnesses_json(witnesses), false, Vec::new())
        }
        Verdict::NotObstructed { unknowns } => {
            ("not_obstructed", Vec::new(), false, unknowns.clone())
        }
        Verdict::ConditionalOnAssertion(inner) => {
            let (name, ws, _, unk) = verdict_parts(inner);
            (name, ws, true, unk)
        }
    }
}

pub fn compare_json(k1: &TwoKnotExpr, k2: &TwoKnotExpr, v: &Verdict) -> Value {
    let p1 = zeroconc::engine::profile(k1);
    let p2 = zeroconc::engine::profile(k2);
    let (verdict, witnesses, conditional, unknowns) = verdict_parts(v);
    json!({
        "left": profile_json(k1, &p1),
        "right": profile_json(k2, &p2),
        "verdict": verdict,
        "witnesses": witnesses,
        "conditional": conditional,
        "notes": unknowns,
    })
}

pub fn print_compare(k1: &TwoKnotExpr, k2: &TwoKnotExpr, v: &Verdict) {
    let p1 = zeroconc::engine::profile(k1);
    let p2 = zeroconc::engine::profile(k2);
    print_profile_line(k1, &p1);
    print_profile_line(k2, &p2);
    let (verdict, witnesses, conditional, unknowns) = verdict_parts(v);
    match verdict {
        "distinguished" => {
            println!("verdict: distinguished (not 0-concordant); witnesses: {witnesses:?}")
        }
        _ => {
            println!("verdict: not obstructed by these invariants");
            for u in &unknowns {
                println!("  unknown: {u}");
            }
        }
    }
    if conditional {
        println!("verdict is conditional on asserted Seifert hypersurfaces");
    }
}

pub fn theorem2_json(k: &KnotExpr, r: &Theorem2Report) -> Value {
    json!({
        "knot": k.to_string(),
        "sigma": r.sigma,
        "d": format_rat(&r.d),
        "c": format_rat(&r.c),
        "relation_holds": r.relation_holds,
        "obstructs_zero_slice": r.obstructs_zero_slice,
        "notes": r.notes,
    })
}

pub fn print_theorem2(k: &KnotExpr, r: &Theorem2Report) {
    println!("knot                : {k}");
    println!("sigma               : {}", r.sigma);
    println!("d(Sigma_2, s0)      : {}", format_rat(&r.d));
    println!(
        "sigma = c*d         : {} (c = {})",
        if r.relation_holds { "holds" } else { "FAILS" },
        format_rat(&r.c)
    );
    println!(
        "0-slice obstruction : {}",
        if r.obstructs_zero_slice {
            "yes (2-twist spin is not 0-slice)"
        } else {
            "none from this criterion"
        }
    );
    for n in &r.notes {
        println!("note                : {n}");
    }
}

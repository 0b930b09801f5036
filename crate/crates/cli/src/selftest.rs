//! Built-in calibration and consistency checks, with the conventions in use
//! printed up front.

use std::process::ExitCode;

use num_integer::Integer;
use zeroconc::correction::{d_lens, mu_manifold};
use zeroconc::engine::{profile, theorem2_check, theorem2_constant};
use zeroconc::rational::{format_rat, rat, rat_int};
use zeroconc::surgery::{
    characteristic_sublinks, lens_chain, lens_conjugate_index, lens_index_covector, mu,
    DOracle, SurgeryPresentation,
};
use zeroconc::{KnotExpr, Mu, ThreeManifold, TwoKnotExpr};

struct Suite {
    failures: usize,
}

impl Suite {
    fn check(&mut self, name: &str, ok: bool) {
        if ok {
            println!("  ok    {name}");
        } else {
            println!("  FAIL  {name}");
            self.failures += 1;
        }
    }
}

pub fn run() -> anyhow::Result<ExitCode> {
    println!("calibration constants:");
    println!("  orientation : lens(p,q) bounds the positive-definite linear plumbing");
    println!("                (d(L(p,1), s0) = (p-1)/4, mu(L(2,1), D^2-bundle spin) = +1)");
    println!(
        "  spin^c map  : index i <-> class of [L c* + 2 (i - i0) q^-1 e_1] on the chain"
    );
    println!(
        "  theorem-2 c : sigma = c * d(Sigma_2, s0) with c = {}",
        format_rat(&theorem2_constant())
    );
    println!();

    let mut s = Suite { failures: 0 };

    // Lens anchor.
    let ok = (3..=99u64)
        .step_by(2)
        .all(|p| d_lens(p, 1, 0).unwrap() == rat(p as i64 - 1, 4));
    s.check("d(L(p,1), s0) = (p-1)/4 for odd p <= 99", ok);

    // Oracle equivalence, small sweep.
    let mut ok = true;
    for p in 2..=20u64 {
        for q in (1..p).filter(|q| p.gcd(q) == 1) {
            let pres = lens_chain(p, q).unwrap();
            let oracle = DOracle::new(&pres).unwrap();
            for i in 0..p {
                let (_, k) = lens_index_covector(p, q, i).unwrap();
                ok &= oracle.d_covector(&k).unwrap() == d_lens(p, q, i).unwrap();
            }
        }
    }
    s.check("lens recursion = lattice oracle for p <= 20, all spin^c indices", ok);

    // Conjugation symmetry.
    let mut ok = true;
    for p in 2..=20u64 {
        for q in (1..p).filter(|q| p.gcd(q) == 1) {
            for i in 0..p {
                ok &= d_lens(p, q, i).unwrap()
                    == d_lens(p, q, lens_conjugate_index(p, q, i)).unwrap();
            }
        }
    }
    s.check("conjugation symmetry d(i) = d(iota(i)) for p <= 20", ok);

    // Rochlin anchors.
    let p2 = SurgeryPresentation::chain(vec![2]).unwrap();
    s.check(
        "mu([+2], c=0) = 1 (L(2,1) spin bounding the D^2 bundle)",
        mu(&p2, &[false]).unwrap() == Mu::new(1),
    );
    let e8 = zeroconc::surgery::e8_presentation();
    s.check(
        "mu(E8 tree) = 8 (Poincare sphere)",
        mu(&e8, &[false; 8]).unwrap() == Mu::new(8),
    );
    let l21 = ThreeManifold::lens(2, 1).unwrap();
    let mus: Vec<Mu> = l21
        .spin_structures()
        .unwrap()
        .iter()
        .map(|sp| mu_manifold(&l21, sp).unwrap())
        .collect();
    s.check("spin structures of L(2,1) realize mu = 1 and mu = 15", {
        mus.contains(&Mu::new(1)) && mus.contains(&Mu::new(15))
    });
    let _ = characteristic_sublinks(&p2).unwrap();

    // Poincare d anchor through the full stack.
    let spun = TwoKnotExpr::twist_spin(5, KnotExpr::torus(2, 3).unwrap());
    s.check(
        "d_bar(twistspin(5, torus(2,3))) = 2",
        profile(&spun).d_bar() == Some(rat_int(2)),
    );

    // Theorem 2 on the torus family.
    let mut ok = true;
    for p in (3..=19u64).step_by(2) {
        let r = theorem2_check(&KnotExpr::torus(2, p).unwrap()).unwrap();
        ok &= r.relation_holds && r.sigma == -(p as i64 - 1);
    }
    s.check("sigma(T(2,p)) = -(p-1) = c * d for odd p <= 19", ok);

    // Parser round trips.
    let ok = [
        "unknot2",
        "twistspin(5, torus(2,3))",
        "twistspin(2, mirror(twobridge(5,3))) # ribbon(2)",
        "seifert(lens(2,1), spin=1)",
    ]
    .iter()
    .all(|t| {
        let e = zeroconc::parse_two_knot(t).unwrap();
        zeroconc::parse_two_knot(&e.to_string()).unwrap() == e
    });
    s.check("parser round trips", ok);

    println!();
    if s.failures == 0 {
        println!("selftest: all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("selftest: {} check(s) FAILED", s.failures);
        Ok(ExitCode::from(1))
    }
}

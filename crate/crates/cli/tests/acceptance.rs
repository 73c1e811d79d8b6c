//! Acceptance criteria 1–8; prints one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use charp_cli::{run_paper_examples, Config};
use charp_core::frobenius::{
    bracket_commute_check, frobenius_closure, frobenius_membership, frobenius_preimage, is_frobenius_closed,
};
use charp_core::ideal::monomial::monomial_irreducible_decomposition;
use charp_core::oracle::{linalg_membership, monomial_membership_bruteforce, random_homogeneous, random_instance, random_monomial_parameter_ideal, random_ring, rng, Profile};
use charp_core::polyring::monomials_of_degree;
use charp_core::quotient::{is_system_of_parameters, subring_presentation};
use charp_core::tight::{colon_socle_bound, product_identity_check, tight_membership, MultiplierCertificate, TestElementStatus};
use charp_core::{Certificate, Field, Ideal, MonomialOrder, PolyRing, QuotientRingExt, Ring, RingExt, RingPresentation, Status};

type Check = Result<(), String>;
type Criterion = (u32, &'static str, fn() -> Check);

macro_rules! ensure {
    ($c:expr, $($m:tt)+) => {
        if !$c {
            return Err(format!($($m)+));
        }
    };
}

fn ring(p: u64, params: &[&str], vars: &[&str]) -> Ring {
    PolyRing::new(Field::with_params(p, params.to_vec()).unwrap(), vars.to_vec(), MonomialOrder::GrevLex).unwrap()
}

fn within(start: Instant, limit: Duration) -> Check {
    ensure!(start.elapsed() < limit, "took {:?}, limit {:?}", start.elapsed(), limit);
    Ok(())
}

fn hypersurface() -> Check {
    let start = Instant::now();
    let r = RingPresentation::parse(&ring(2, &[], &["x", "y", "z"]), &["x^2+y^3+z^5"]).unwrap();
    let q = r.ideal_str(&["y", "z"]).unwrap();
    let x = r.element("x").unwrap();
    let v = frobenius_membership(&x, &q, 1).unwrap();
    ensure!(v.status == Status::In && matches!(v.certificate, Certificate::Frobenius { e: 1, .. }), "membership {v:?}");
    let v = is_frobenius_closed(&q, 4, 2, &[]).unwrap();
    ensure!(v.status == Status::Out, "closedness {}", v.status);
    ensure!(matches!(&v.certificate, Certificate::Witness { element, e: 1, .. } if *element == x), "witness {:?}", v.certificate);
    ensure!(v.verify().unwrap(), "witness does not verify");
    let m = r.maximal_ideal();
    ensure!(m.bracket_power(1).unwrap().equals(&q.bracket_power(1).unwrap()).unwrap(), "m^[2] != q^[2]");
    ensure!(colon_socle_bound(&q).unwrap().equals(&m).unwrap(), "q : m != m");
    within(start, Duration::from_secs(1))
}

fn veronese() -> Check {
    let start = Instant::now();
    let s = RingPresentation::parse(&ring(2, &["u", "v"], &["x", "y", "z"]), &["x^2+u*y^2+v*z^2"]).unwrap();
    let gens = ["x*y", "x*z", "y^2", "y*z", "z^2"].iter().map(|g| s.element(g).unwrap()).collect();
    let sub = subring_presentation(&s, gens, None).unwrap();
    let t = sub.presented().clone();
    ensure!(t.relations().krull_dimension().unwrap() == 2, "dimension");
    let pre = |f: &str| sub.preimage(&s.element(f).unwrap()).unwrap().expect("in the subring");
    let (g1, g2) = (vec![pre("x^2"), pre("y^2")], vec![pre("x*y"), pre("z^2")]);
    ensure!(is_system_of_parameters(&g1, &t).unwrap(), "{{x^2, y^2}} not a sop");
    ensure!(is_system_of_parameters(&g2, &t).unwrap(), "{{xy, z^2}} not a sop");
    let prod = t.ideal(g1).unwrap().product(&t.ideal(g2).unwrap()).unwrap();
    let w = pre("y*z^3");
    ensure!(!prod.contains(&w).unwrap(), "yz^3 in q1 q2");
    ensure!(prod.bracket_power(1).unwrap().contains(&w.frobenius_power(1).unwrap()).unwrap(), "square not in bracket");
    let v = is_frobenius_closed(&prod, 1, 2, std::slice::from_ref(&w)).unwrap();
    ensure!(v.status == Status::Out, "closedness {}", v.status);
    ensure!(matches!(&v.certificate, Certificate::Witness { element, e: 1, .. } if *element == w), "witness {:?}", v.certificate);
    ensure!(v.verify().unwrap(), "witness does not verify");
    within(start, Duration::from_secs(60))
}

fn one_dimensional() -> Check {
    let start = Instant::now();
    let r = RingPresentation::parse(&ring(2, &["u"], &["x", "y"]), &["x*y"]).unwrap();
    let c = MultiplierCertificate::new(&r, r.element("x+y").unwrap(), TestElementStatus::None).unwrap();
    for (n, m, q) in [(1u32, 1u32, 2u32), (1, 2, 2), (2, 3, 4)] {
        let g = r.element(&format!("(x^{n}+u*y^{m})*(x^{}+u^{q}*y^{})", n * q, m * q)).unwrap();
        let want = r.element(&format!("x^{}+u^{}*y^{}", n * (q + 1), q + 1, m * (q + 1))).unwrap();
        ensure!(r.reduce(&g).unwrap() == want, "identity fails for {:?}", (n, m, q));
        let x = r.element(&format!("x^{}", n * (q + 1))).unwrap();
        let v = tight_membership(&x, &r.ideal(vec![g]).unwrap(), &c, 4).unwrap();
        ensure!(v.status == Status::Unknown, "status {} for {:?}", v.status, (n, m, q));
        let Certificate::Evidence { claims, .. } = &v.certificate else { return Err(format!("certificate {:?}", v.certificate)) };
        ensure!(claims.len() == 5 && claims.iter().all(|(_, m)| m.member), "evidence {claims:?}");
        ensure!(v.verify().unwrap(), "evidence does not verify");
    }
    within(start, Duration::from_secs(5))
}

fn regular_battery() -> Check {
    for (p, n) in [(2, 3), (3, 2)] {
        let s = random_ring(p, n).unwrap();
        let r = RingPresentation::polynomial(&s);
        let mut g = rng(1000 + p);
        for k in 0..50 {
            let q = r.ideal(random_monomial_parameter_ideal(&mut g, &s, 3).gens().to_vec()).unwrap();
            let chain = frobenius_closure(&q, 4, 2).unwrap();
            ensure!(chain.stable && chain.entries[0].1.equals(&q).unwrap() && chain.candidate().equals(&q).unwrap(), "closure of ideal {k} over F_{p}");
            ensure!(bracket_commute_check(&q, 4, 2).unwrap().passed(), "commute check {k} over F_{p}");
            let q2 = r.ideal(random_monomial_parameter_ideal(&mut g, &s, 3).gens().to_vec()).unwrap();
            ensure!(product_identity_check(&q, &q2, 4, 2, &[], None).unwrap().frobenius_layer_passes(), "product pair {k} over F_{p}");
        }
    }
    Ok(())
}

fn decomposition() -> Check {
    let s = ring(2, &[], &["x", "y", "z"]);
    let q = Ideal::variables(&s);
    for e in 1..=2 {
        let input = q.product(&q.frobenius_power(e).unwrap()).unwrap();
        let comps = monomial_irreducible_decomposition(&input).unwrap();
        let mut meet = Ideal::unit(&s);
        for c in &comps {
            ensure!(c.gens().iter().all(|g| g.leading_monomial().unwrap().pure_power_var().is_some()), "component not irreducible");
            meet = meet.intersection(c).unwrap();
        }
        ensure!(meet.equals(&input).unwrap(), "components do not re-intersect at e={e}");
        let lm = |i: &Ideal| -> Vec<_> { i.gens().iter().map(|g| g.leading_monomial().unwrap().clone()).collect() };
        let (input_m, comp_m): (Vec<_>, Vec<Vec<_>>) = (lm(&input), comps.iter().map(lm).collect());
        for d in 0..=8 {
            for mono in monomials_of_degree(3, d) {
                let via = comp_m.iter().all(|c| monomial_membership_bruteforce(&mono, c));
                ensure!(monomial_membership_bruteforce(&mono, &input_m) == via, "discrepancy at {mono:?}, e={e}");
            }
        }
    }
    Ok(())
}

fn oracle() -> Check {
    let start = Instant::now();
    for seed in 0..200u64 {
        let p = [2, 3, 5][(seed % 3) as usize];
        let (s, ideals) = random_instance(seed, Profile { p, nvars: 3, max_degree: 3, ngens: 2, nideals: 1 }).unwrap();
        let ideal = &ideals[0];
        let mut g = rng(seed ^ 0xacce);
        let d = 3 + (seed % 3) as u32;
        let mut member = s.zero();
        for h in ideal.gens().iter().filter(|h| h.total_degree() <= d) {
            member = &member + &(h * &random_homogeneous(&mut g, &s, d - h.total_degree(), 3));
        }
        for f in [member.clone(), random_homogeneous(&mut g, &s, d, 4)] {
            if f.is_zero() {
                continue;
            }
            let (gb, la) = (ideal.contains(&f).unwrap(), linalg_membership(&f, ideal, d).unwrap());
            ensure!(gb == la, "seed {seed}: groebner {gb}, linear algebra {la} for {f}");
        }
    }
    within(start, Duration::from_secs(30))
}

fn preimages() -> Check {
    let s = ring(2, &[], &["x"]);
    let k = |g: &str| Ideal::parse(&s, &[g]).unwrap();
    ensure!(frobenius_preimage(&k("x^2"), 1).unwrap().equals(&k("x")).unwrap(), "F^-1((x^2)) != (x)");
    ensure!(frobenius_preimage(&k("x^3"), 1).unwrap().equals(&k("x^2")).unwrap(), "F^-1((x^3)) != (x^2)");
    let r = RingPresentation::parse(&ring(2, &[], &["x", "y", "z"]), &["x^2+y^3+z^5"]).unwrap();
    let chain = frobenius_closure(&r.ideal_str(&["y", "z"]).unwrap(), 4, 2).unwrap();
    ensure!(chain.stable && chain.candidate().equals(&r.maximal_ideal()).unwrap(), "chain {}", chain.label());
    Ok(())
}

fn determinism() -> Check {
    let config = Config::default();
    let a = run_paper_examples(&config).map_err(|e| e.to_string())?;
    let b = run_paper_examples(&config).map_err(|e| e.to_string())?;
    ensure!(a.determinism_hash == b.determinism_hash, "{} != {}", a.determinism_hash, b.determinism_hash);
    ensure!(a.exit_code() == 0, "paper examples report mismatches");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "hypersurface example", hypersurface),
        (2, "veronese example", veronese),
        (3, "one-dimensional example", one_dimensional),
        (4, "regular-ring battery", regular_battery),
        (5, "irreducible decomposition", decomposition),
        (6, "oracle equivalence", oracle),
        (7, "frobenius preimages and chain", preimages),
        (8, "report determinism", determinism),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match res {
            Ok(()) => println!("criterion {n}: PASS ({name}, {ms} ms)"),
            Err(e) => {
                failed += 1;
                println!("criterion {n}: FAIL ({name}, {ms} ms): {e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use charp_core::frobenius::{
    bracket_commute_check, frobenius_closure, frobenius_membership, is_frobenius_closed, radical_member,
};
use charp_core::ideal::groebner::{is_reduced, satisfies_buchberger_criterion};
use charp_core::oracle::{
    linalg_membership, random_homogeneous, random_instance, random_monomial, random_monomial_parameter_ideal,
    random_ring, rng, Profile,
};
use charp_core::tight::{product_identity_check, tight_membership, MultiplierCertificate, TestElementStatus};
use charp_core::{Ideal, Polynomial, QuotientIdeal, QuotientRingExt, RingExt, RingPresentation, Status};
use rand::Rng;

#[test]
fn groebner_membership_agrees_with_linear_algebra() {
    let mut disagreements = 0;
    let mut checked = 0;
    for seed in 0..200u64 {
        let p = [2, 3, 5][(seed % 3) as usize];
        let profile = Profile { p, nvars: 3, max_degree: 3, ngens: 2, nideals: 1 };
        let (ring, ideals) = random_instance(seed, profile).unwrap();
        let ideal = &ideals[0];
        let mut r = rng(seed ^ 0x5eed);
        let d = r.gen_range(3..=5);
        let mut member = ring.zero();
        for g in ideal.gens() {
            if g.total_degree() <= d {
                member = &member + &(g * &random_homogeneous(&mut r, &ring, d - g.total_degree(), 3));
            }
        }
        let probes: Vec<Polynomial> = vec![member.clone(), random_homogeneous(&mut r, &ring, d, 4), &member + &random_homogeneous(&mut r, &ring, d, 1)];
        for f in probes.into_iter().filter(|f| !f.is_zero()) {
            let gb = ideal.contains(&f).unwrap();
            let la = linalg_membership(&f, ideal, f.total_degree()).unwrap();
            checked += 1;
            if gb != la {
                disagreements += 1;
            }
        }
    }
    assert!(checked >= 400);
    assert_eq!(disagreements, 0);
}

#[test]
fn random_bases_are_reduced_groebner_bases() {
    for seed in 0..40u64 {
        let profile = Profile { p: [2, 3, 5, 7][(seed % 4) as usize], nvars: 3, max_degree: 3, ngens: 3, nideals: 1 };
        let (_, ideals) = random_instance(seed, profile).unwrap();
        let gb = ideals[0].groebner_basis().unwrap();
        assert!(satisfies_buchberger_criterion(&gb));
        assert!(is_reduced(&gb));
    }
}

#[test]
fn bracket_powers_distribute() {
    for seed in 0..25u64 {
        let p = [2, 3][(seed % 2) as usize];
        let profile = Profile { p, nvars: 3, max_degree: 2, ngens: 2, nideals: 2 };
        let (ring, ideals) = random_instance(seed, profile).unwrap();
        let r = RingPresentation::polynomial(&ring);
        let i = r.ideal(ideals[0].gens().to_vec()).unwrap();
        let j = r.ideal(ideals[1].gens().to_vec()).unwrap();
        for e in 1..=2 {
            let sum = i.sum(&j).unwrap().bracket_power(e).unwrap();
            assert!(sum.equals(&i.bracket_power(e).unwrap().sum(&j.bracket_power(e).unwrap()).unwrap()).unwrap());
            let prod = i.product(&j).unwrap().bracket_power(e).unwrap();
            assert!(prod.equals(&i.bracket_power(e).unwrap().product(&j.bracket_power(e).unwrap()).unwrap()).unwrap());
        }
    }
}

#[test]
fn bracket_powers_distribute_in_a_quotient() {
    let s = random_ring(2, 3).unwrap();
    let r = RingPresentation::new(&s, vec![s.parse("x^2+y^3+z^5").unwrap()]).unwrap();
    let mut g = rng(7);
    for _ in 0..10 {
        let i = r.ideal(vec![random_homogeneous(&mut g, &s, 1, 2), random_homogeneous(&mut g, &s, 2, 2)]).unwrap();
        let j = r.ideal(vec![random_homogeneous(&mut g, &s, 2, 2)]).unwrap();
        let lhs = i.product(&j).unwrap().bracket_power(1).unwrap();
        let rhs = i.bracket_power(1).unwrap().product(&j.bracket_power(1).unwrap()).unwrap();
        assert!(lhs.equals(&rhs).unwrap());
    }
}

#[test]
fn bracket_powers_ignore_the_generating_set() {
    for seed in 0..25u64 {
        let profile = Profile { p: 3, nvars: 3, max_degree: 2, ngens: 2, nideals: 1 };
        let (ring, ideals) = random_instance(seed, profile).unwrap();
        let r = RingPresentation::polynomial(&ring);
        let gens = ideals[0].gens().to_vec();
        let mut g = rng(seed + 1000);
        let mut other = vec![&gens[0] + &(&gens[1] * &random_homogeneous(&mut g, &ring, 1, 2)), gens[1].clone()];
        other.push(&gens[0] * &random_homogeneous(&mut g, &ring, 1, 2));
        let i = r.ideal(gens).unwrap();
        let i2 = r.ideal(other).unwrap();
        assert!(i.equals(&i2).unwrap());
        assert!(i.bracket_power(1).unwrap().equals(&i2.bracket_power(1).unwrap()).unwrap());
    }
}

fn random_monomial_ideal(g: &mut impl Rng, ring: &charp_core::Ring) -> Ideal {
    let one = ring.field().one();
    let k = g.gen_range(1..=3);
    let gens = (0..k).map(|_| ring.monomial(random_monomial(g, ring.nvars(), 4), one.clone())).collect();
    Ideal::new(ring, gens).unwrap()
}

#[test]
fn closures_are_trivial_in_polynomial_rings() {
    for (p, n) in [(2, 3), (3, 2)] {
        let ring = random_ring(p, n).unwrap();
        let r = RingPresentation::polynomial(&ring);
        let mut g = rng(p * 100 + n as u64);
        for k in 0..50 {
            let ideal = if k % 2 == 0 { random_monomial_ideal(&mut g, &ring) } else { random_monomial_parameter_ideal(&mut g, &ring, 3) };
            let q = r.ideal(ideal.gens().to_vec()).unwrap();
            let chain = frobenius_closure(&q, 4, 2).unwrap();
            assert!(chain.stable);
            assert!(chain.is_ascending().unwrap());
            assert_eq!(chain.entries.len(), 3);
            assert!(chain.entries.iter().all(|(_, c)| c.equals(&q).unwrap()));
            assert_eq!(is_frobenius_closed(&q, 4, 2, &[]).unwrap().status, Status::In);
        }
    }
}

#[test]
fn regular_ring_battery() {
    for (p, n) in [(2, 3), (3, 2)] {
        let ring = random_ring(p, n).unwrap();
        let r = RingPresentation::polynomial(&ring);
        let mut g = rng(42 + p);
        for _ in 0..50 {
            let q = r.ideal(random_monomial_parameter_ideal(&mut g, &ring, 3).gens().to_vec()).unwrap();
            let c = bracket_commute_check(&q, 4, 2).unwrap();
            assert!(c.passed());
            assert!(c.verdict.verify().unwrap());

            let q2 = r.ideal(random_monomial_parameter_ideal(&mut g, &ring, 3).gens().to_vec()).unwrap();
            let rep = product_identity_check(&q, &q2, 4, 2, &[], None).unwrap();
            assert!(rep.frobenius_layer_passes());
            assert!(rep.q1_parameter && rep.q2_parameter);
        }
    }
}

#[test]
fn frobenius_certificates_give_tight_membership() {
    let s = random_ring(2, 3).unwrap();
    let r = RingPresentation::new(&s, vec![s.parse("x^2+y^3+z^5").unwrap()]).unwrap();
    let c = MultiplierCertificate::new(&r, s.parse("z^4").unwrap(), TestElementStatus::JacobianDerived).unwrap();
    let q = r.ideal_str(&["y", "z"]).unwrap();
    let mut g = rng(3);
    let mut certified = 0;
    for _ in 0..30 {
        let x = &(&s.var(0) * &random_homogeneous(&mut g, &s, 1, 2)) + &random_homogeneous(&mut g, &s, 2, 1);
        let f = frobenius_membership(&x, &q, 2).unwrap();
        if f.status == Status::In {
            certified += 1;
            assert!(f.verify().unwrap());
            assert_eq!(tight_membership(&x, &q, &c, 2).unwrap().status, Status::In);
            assert!(radical_member(&x, &q, 8).unwrap());
        }
    }
    assert!(certified > 0);
}

#[test]
fn unit_multiplier_refutes_non_members_in_regular_rings() {
    let s = random_ring(3, 3).unwrap();
    let r = RingPresentation::polynomial(&s);
    let one = MultiplierCertificate::new(&r, s.one(), TestElementStatus::Asserted).unwrap();
    let mut g = rng(11);
    let mut refuted = 0;
    for _ in 0..30 {
        let i: QuotientIdeal = r.ideal(random_monomial_ideal(&mut g, &s).gens().to_vec()).unwrap();
        let d = g.gen_range(1..=3);
        let x = random_homogeneous(&mut g, &s, d, 2);
        let v = tight_membership(&x, &i, &one, 2).unwrap();
        if i.contains(&x).unwrap() {
            assert_eq!(v.status, Status::In);
        } else {
            assert_eq!(v.status, Status::Out);
            assert!(v.verify().unwrap());
            refuted += 1;
        }
    }
    assert!(refuted > 0);
}

#[test]
fn verdicts_are_monotone_in_emax() {
    let s = random_ring(2, 3).unwrap();
    let r = RingPresentation::new(&s, vec![s.parse("x^2+y^3+z^5").unwrap()]).unwrap();
    let q = r.ideal_str(&["y", "z"]).unwrap();
    let x = s.var(0);
    assert_eq!(frobenius_membership(&x, &q, 0).unwrap().status, Status::Unknown);
    for e in 1..=3 {
        assert_eq!(frobenius_membership(&x, &q, e).unwrap().status, Status::In);
    }
}

mod common;

use std::collections::BTreeMap;

use lfac::algebra::{ideal_generator, HalfInt, Scalar, SplitRational};
use lfac::catalog::{nov_lfactor, rs_lfactor, theta_lift, Gl2Param, StType};
use lfac::cli::{eval_str, Env, Value};
use lfac::poles::{exceptional_poles, ideals_jk, nov_split, ps_split, subregular_poles, PoleClass};
use lfac::verify::{
    product_route, random_char, random_gl2_nonsc, random_gsp4, random_pole_pair, random_ps, random_rep,
    random_theta_triple, TrialProfile,
};
use lfac::wdrep::{sp_tensor, Character, SummandKind, WDRep};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ROOTS: [&str; 6] = ["a", "b", "a*b", "a*v^-1", "b^-1*v^2", "-a"];

fn root(i: usize) -> Scalar {
    match eval_str(&Env::default(), ROOTS[i]).unwrap() {
        Value::Scalar(s) => s,
        v => panic!("{v}"),
    }
}

fn split() -> impl Strategy<Value = SplitRational> {
    (
        prop::collection::vec((0..ROOTS.len(), -3i64..=3), 0..5),
        -2i64..=2,
        prop::sample::select(vec![1i64, -1, 2, 5]),
    )
        .prop_map(|(fs, k, u)| {
            let mut f = SplitRational::monomial(Scalar::integer(u), k).unwrap();
            for (i, e) in fs {
                f = f.mul(&SplitRational::factor(root(i), e));
            }
            f
        })
}

fn lfactor() -> impl Strategy<Value = SplitRational> {
    prop::collection::vec((0..ROOTS.len(), 1i64..=3), 0..4).prop_map(|fs| {
        fs.into_iter()
            .fold(SplitRational::one(), |acc, (i, e)| acc.mul(&SplitRational::factor(root(i), -e)))
    })
}

fn half() -> impl Strategy<Value = HalfInt> {
    (-6i64..=6).prop_map(HalfInt::from_twice)
}

fn profile(seed: u64, irred: bool) -> TrialProfile {
    let mut p = TrialProfile::new(seed);
    p.allow_irred = irred;
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mul_is_commutative_and_associative(f in split(), g in split(), h in split()) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.mul(&f.inv()).is_one());
    }

    #[test]
    fn shifts_compose(f in split(), t in half(), u in half()) {
        let sum = HalfInt::from_twice(t.twice() + u.twice());
        prop_assert_eq!(f.shift(t).shift(u), f.shift(sum));
    }

    #[test]
    fn ideal_generator_divides_inputs(fs in prop::collection::vec(split(), 1..5)) {
        let g = ideal_generator(&fs).unwrap().generator;
        for f in &fs {
            for (beta, _) in f.factors().chain(g.factors()) {
                prop_assert!(f.vanishing_order(beta) >= g.vanishing_order(beta));
            }
        }
    }

    #[test]
    fn ideal_generator_ignores_order_and_duplicates(fs in prop::collection::vec(split(), 1..5), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let g = ideal_generator(&fs).unwrap();
        let mut shuffled = fs.clone();
        shuffled.extend(fs.iter().take(2).cloned());
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(ideal_generator(&shuffled).unwrap(), g);
    }

    #[test]
    fn ideal_generator_matches_expanded_gcd(fs in prop::collection::vec(split(), 1..4), seed in any::<u64>()) {
        let g = ideal_generator(&fs).unwrap().generator;
        let vals = common::separating_assignment(&fs, &mut ChaCha8Rng::seed_from_u64(seed));
        let (n, d) = common::expand(&g, &vals);
        prop_assert_eq!((n.monic(), d.monic()), common::ideal_oracle(&fs, &vals));
    }

    #[test]
    fn lfactor_inputs_give_lfactor(fs in prop::collection::vec(lfactor(), 1..5)) {
        prop_assert!(ideal_generator(&fs).unwrap().is_lfactor);
    }

    #[test]
    fn clebsch_gordan_dimensions(m in 0u32..8, n in 0u32..8) {
        let ks = sp_tensor(m, n);
        prop_assert_eq!(ks.iter().map(|k| k + 1).sum::<u32>(), (m + 1) * (n + 1));
    }

    #[test]
    fn rep_identities(s1 in any::<u64>(), s2 in any::<u64>(), t in half()) {
        let (a, b) = (random_rep(&profile(s1, true)), random_rep(&profile(s2, false)));
        prop_assert_eq!(a.direct_sum(&b).lfactor(), a.lfactor().mul(&b.lfactor()));
        prop_assert_eq!(a.twist(&Character::abs(t)).lfactor(), a.lfactor().shift(t));
        prop_assert_eq!(a.dual().dual(), a.clone());
        let chi = random_char(&mut ChaCha8Rng::seed_from_u64(s2), &profile(s2, false));
        prop_assert_eq!(a.twist(&chi).dual(), a.dual().twist(&chi.inv()));
        let t = a.tensor(&b).unwrap();
        prop_assert_eq!(t.dim(), a.dim() * b.dim());
    }

    #[test]
    fn symplectic_lines_pair_up(seed in any::<u64>()) {
        let p = profile(seed, true);
        let pi = random_gsp4(&mut p.rng(), &p);
        prop_assert!(pi.rep().similitude_check(pi.similitude()));
        let chi = pi.similitude();
        let lines = pi.rep().summand_query(SummandKind::Line);
        if chi.is_unramified() {
            let mut left: BTreeMap<Scalar, i32> = BTreeMap::new();
            for l in &lines {
                *left.entry(l.clone()).or_default() += 1;
                *left.entry(chi.satake().div(l).unwrap()).or_default() -= 1;
            }
            prop_assert!(left.values().all(|v| *v == 0));
        }
    }

    #[test]
    fn catalog_identities(seed in any::<u64>()) {
        let p = profile(seed, false);
        let mut rng = p.rng();
        let pi = random_gsp4(&mut rng, &p);
        let sigma = random_ps(&mut rng, &p);
        prop_assert_eq!(nov_lfactor(&pi, &sigma).unwrap(), product_route(&pi, &sigma).unwrap());
        if matches!(pi.st_type(), StType::VII | StType::VIIIa | StType::IXa | StType::SC) {
            prop_assert!(pi.lfactor().is_one());
        }
        let (t1, t2, s) = random_theta_triple(&mut rng, &p);
        let lhs = nov_lfactor(&theta_lift(&t1, &t2).unwrap(), &s).unwrap();
        prop_assert_eq!(lhs, rs_lfactor(&t1, &s).unwrap().mul(&rs_lfactor(&t2, &s).unwrap()));
    }

    #[test]
    fn pole_invariants(seed in any::<u64>()) {
        let p = profile(seed, false);
        let mut rng = p.rng();
        let (pi, sigma) = random_pole_pair(&mut rng, &p);
        let chi = pi.similitude().mul(sigma.central());
        for e in &exceptional_poles(&pi, &sigma).unwrap().entries {
            prop_assert!(chi.is_unramified() && chi.satake() == &e.root.mul(&e.root));
        }
        let (reg, ex) = nov_split(&pi, &sigma).unwrap();
        prop_assert_eq!(reg.mul(&ex), nov_lfactor(&pi, &sigma).unwrap());
        prop_assert!(reg.is_lfactor() && ex.is_lfactor());
        let (one, sub, kir) = ps_split(&pi);
        prop_assert_eq!(one.mul(&sub).mul(&kir), pi.lfactor());
        prop_assert!(sub.factors().all(|(_, e)| e == -1));
        let report = subregular_poles(&pi);
        for root in report.roots() {
            let classes: Vec<PoleClass> = report.entries.iter().filter(|e| &e.root == root).map(|e| e.class).collect();
            prop_assert_eq!(classes.len(), 1);
        }
        let (j, k) = ideals_jk(&pi).unwrap();
        prop_assert!(j.factors().chain(k.factors()).all(|(_, e)| e >= 0));
        prop_assert!(k.div(&j).factors().all(|(_, e)| e >= 0));
    }

    #[test]
    fn iiia_iva_have_no_subregular_poles(seed in any::<u64>()) {
        let p = profile(seed, false);
        let pi = random_gsp4(&mut p.rng(), &p);
        if matches!(pi.st_type(), StType::IIIa | StType::IVa) {
            prop_assert!(subregular_poles(&pi).is_empty());
        }
        if pi.st_type() == StType::I {
            let sub = subregular_poles(&pi);
            for beta in pi.lfactor().pole_roots() {
                prop_assert!(sub.contains(&beta));
            }
        }
    }

    #[test]
    fn text_round_trip(seed in any::<u64>(), which in 0usize..6) {
        let p = profile(seed, true);
        let mut rng = p.rng();
        let v = match which {
            0 => Value::Rep(random_rep(&p)),
            1 => Value::Split(random_rep(&p).lfactor().inv()),
            2 => Value::Gsp4(random_gsp4(&mut rng, &p)),
            3 => Value::Gl2(random_gl2_nonsc(&mut rng, &p)),
            4 => Value::Poles(subregular_poles(&random_gsp4(&mut rng, &p))),
            _ => Value::Char(random_char(&mut rng, &p)),
        };
        let text = v.to_string();
        let back = eval_str(&Env::default(), &text).unwrap();
        prop_assert_eq!(&back, &v);
        prop_assert_eq!(back.to_string(), text);
    }
}

#[test]
fn steinberg_squares() {
    let st = Gl2Param::steinberg();
    assert_eq!(st.rep().tensor(st.rep()).unwrap(), WDRep::sp(2).direct_sum(&WDRep::sp(0)));
}

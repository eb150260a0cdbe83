//! Acceptance criteria, one line per criterion. Exact checks only.

mod common;

use std::collections::BTreeSet;
use std::path::Path;

use lfac::algebra::{ideal_generator, HalfInt, Scalar, SplitRational};
use lfac::catalog::{Catalog, CatalogArg, Gl2Param, Gsp4Param, StType};
use lfac::cli::{self, Env, Value};
use lfac::poles::{exceptional_poles, ideals_jk, nov_split, ps_split, subregular_poles, PoleClass};
use lfac::verify::{
    check_steinberg_tensor, sp1_ratio, random_char, random_gl2_nonsc, random_gsp4, random_pole_pair, random_rep,
    random_satake, random_unr, run_suite, Suite, TrialProfile,
};
use lfac::wdrep::{Block, Character, IrredPart, WDRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(s: &str) -> Character {
    Character::unr_symbol(s)
}

fn irr(label: &str, det: Character) -> IrredPart {
    IrredPart::new(2, label, det, None).unwrap()
}

fn suite(s: Suite, trials: usize, seed: u64) -> Outcome {
    let r = run_suite(s, trials, seed);
    if r.passed() && r.trials == trials {
        Ok(format!("{} trials", r.trials))
    } else {
        Err(r.to_string())
    }
}

fn criterion_1() -> Outcome {
    let rho = WDRep::character(c("a")).direct_sum(&WDRep::block(Block::char(c("b"), 1)));
    let expected = SplitRational::euler(Scalar::symbol("a"));
    let got = sp1_ratio(&rho)?;
    if got != expected {
        return Err(format!("worked case gave {got}"));
    }
    suite(Suite::ProductIdentities, 200, 7).map(|s| format!("{s} + worked case"))
}

fn criterion_2() -> Outcome {
    let st = Gl2Param::steinberg();
    let shapes = [
        Gsp4Param::type_iva(c("a")).unwrap(),
        Gsp4Param::type_iiia(c("a"), c("b")).unwrap(),
        Gsp4Param::supercuspidal("l4", Character::trivial()).unwrap(),
        Gsp4Param::supercuspidal_pair(irr("l2", Character::trivial()), irr("l2p", Character::trivial())).unwrap(),
    ];
    for pi in &shapes {
        let r = check_steinberg_tensor(pi, &st);
        if !r.passed() {
            return Err(r.to_string());
        }
        let nov = lfac::catalog::nov_lfactor(pi, &st).map_err(|e| e.to_string())?;
        let shifted = nov.shift(HalfInt::HALF);
        let ok = match pi.st_type() {
            StType::SC => nov.is_one(),
            _ => {
                let l = pi.lfactor();
                shifted == l.mul(&l.shift(HalfInt::ONE)) && subregular_poles(pi).is_empty()
            }
        };
        if !ok {
            return Err(format!("{pi}: {nov}"));
        }
    }
    Ok(format!("{} shapes", shapes.len()))
}

fn criterion_3() -> Outcome {
    suite(Suite::PrincipalSeries, 100, 3)
}

fn criterion_4() -> Outcome {
    suite(Suite::ThetaLift, 100, 4)
}

fn random_split(rng: &mut ChaCha8Rng, roots: &[Scalar]) -> SplitRational {
    let mut f = SplitRational::monomial(random_satake(rng, &TrialProfile::new(0)), rng.gen_range(-2..=2)).unwrap();
    for _ in 0..rng.gen_range(0..=4) {
        let beta = roots[rng.gen_range(0..roots.len())].clone();
        let e = loop {
            let e = rng.gen_range(-3..=3);
            if e != 0 {
                break e;
            }
        };
        f = f.mul(&SplitRational::factor(beta, e));
    }
    f
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let profile = TrialProfile::new(5);
    for trial in 0..100 {
        let roots: Vec<Scalar> = (0..rng.gen_range(1..=5)).map(|_| random_satake(&mut rng, &profile)).collect();
        let fs: Vec<SplitRational> = (0..rng.gen_range(1..=4)).map(|_| random_split(&mut rng, &roots)).collect();
        let gen = ideal_generator(&fs).map_err(|e| e.to_string())?.generator;
        let vals = common::separating_assignment(&fs, &mut rng);
        let (n, d) = common::expand(&gen, &vals);
        let got = (n.monic(), d.monic());
        let want = common::ideal_oracle(&fs, &vals);
        if got != want {
            return Err(format!("trial {trial}: {fs:?} gave {gen}"));
        }
    }
    Ok("100 input sets".into())
}

fn criterion_6() -> Outcome {
    let profile = TrialProfile::new(6);
    let mut rng = profile.rng();
    let mut planted = 0;
    for trial in 0..100 {
        let (pi, sigma) = random_pole_pair(&mut rng, &profile);
        let report = exceptional_poles(&pi, &sigma).map_err(|e| e.to_string())?;
        let got: BTreeSet<Scalar> = report.roots().into_iter().cloned().collect();
        let want = common::exceptional_oracle(&pi, &sigma);
        if got != want {
            return Err(format!("trial {trial}: {pi} x {sigma}: {got:?} vs {want:?}"));
        }
        planted += usize::from(!got.is_empty());
    }
    Ok(format!("100 pairs, {planted} with exceptional poles"))
}

/// One instance of every non-FREE shape: generic symbols first, then seeded
/// random characters.
fn catalog_shapes(rng: &mut ChaCha8Rng, generic: bool) -> Vec<Gsp4Param> {
    let cat = Catalog::default();
    let profile = TrialProfile::new(7);
    let mut ch = |name: &str| if generic { c(name) } else { random_unr(rng, &profile) };
    let (a, b, g, s) = (ch("a"), ch("b"), ch("g"), ch("s"));
    let d = ch("d");
    let xi = Character::unr(Scalar::integer(-1));
    let rho_triv = irr("r", Character::trivial());
    let rho = irr("r", d.clone());
    let mut out = vec![
        Gsp4Param::type_i(a.clone(), b.clone(), g.clone()),
        Gsp4Param::type_iiia(a.clone(), b.clone()),
        Gsp4Param::type_iva(a.clone()),
        Gsp4Param::type_vii(rho.clone(), xi.clone()),
        Gsp4Param::type_viiia(rho.clone()),
        Gsp4Param::type_ixa(rho.clone()),
        Gsp4Param::supercuspidal("l", g.clone()),
        Gsp4Param::supercuspidal_pair(irr("l1", g.clone()), irr("l2", g.clone())),
    ];
    let built = [
        (StType::IIa, vec![CatalogArg::Char(a.clone()), CatalogArg::Char(s.clone())]),
        (StType::Va, vec![CatalogArg::Char(s.clone()), CatalogArg::Char(xi)]),
        (StType::VIa, vec![CatalogArg::Char(s.clone())]),
        (StType::X, vec![CatalogArg::Irrep(rho), CatalogArg::Char(s.clone())]),
        (StType::XIa, vec![CatalogArg::Irrep(rho_triv), CatalogArg::Char(s)]),
    ];
    out.extend(built.into_iter().map(|(t, args)| cat.build(t, &args)));
    out.into_iter().filter_map(Result::ok).collect()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    let mut instances = catalog_shapes(&mut rng, true);
    for _ in 0..20 {
        instances.extend(catalog_shapes(&mut rng, false));
    }
    let types: BTreeSet<StType> = instances.iter().map(Gsp4Param::st_type).collect();
    for pi in &instances {
        if pi.lfactor().is_one() {
            continue;
        }
        let (j, k) = ideals_jk(pi).map_err(|e| e.to_string())?;
        for f in [&j, &k] {
            if f.factors().any(|(_, e)| e < 0) {
                return Err(format!("{pi}: ideal {f} is not integral"));
            }
        }
        let sub = subregular_poles(pi);
        let mut roots: BTreeSet<Scalar> = pi.lfactor().pole_roots().into_iter().collect();
        roots.extend(k.factors().map(|(b, _)| b.clone()));
        roots.extend(sub.roots().into_iter().cloned());
        for beta in &roots {
            let vanishes = k.vanishing_order(beta) > 0;
            let subregular = sub.class_of(beta).is_some_and(PoleClass::is_subregular);
            if vanishes != subregular {
                return Err(format!("{pi}: root {beta}, K = {k}, subregular = {subregular}"));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} instances over {} shapes", types.len()))
}

fn criterion_8() -> Outcome {
    let profile = TrialProfile::new(8);
    let mut rng = profile.rng();
    let simple = |f: &SplitRational| f.factors().all(|(_, e)| e == -1) && f.xpower() == 0 && f.unit().is_one();
    for trial in 0..100 {
        let pi = random_gsp4(&mut rng, &profile);
        let sigma = if rng.gen_bool(0.5) {
            random_gl2_nonsc(&mut rng, &profile)
        } else {
            random_pole_pair(&mut rng, &profile).1
        };
        let l = lfac::catalog::nov_lfactor(&pi, &sigma).map_err(|e| e.to_string())?;
        let (reg, ex) = nov_split(&pi, &sigma).map_err(|e| e.to_string())?;
        let (one, sub, kir) = ps_split(&pi);
        if reg.mul(&ex) != l || !simple(&ex) {
            return Err(format!("trial {trial}: nov split of {pi} x {sigma}"));
        }
        if !one.is_one() || sub.mul(&kir) != pi.lfactor() || !simple(&sub) {
            return Err(format!("trial {trial}: ps split of {pi}"));
        }
    }
    Ok("100 trials".into())
}

fn golden() -> Result<usize, String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut names: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "args"))
        .collect();
    names.sort();
    for args_path in &names {
        let text = std::fs::read_to_string(args_path).map_err(|e| e.to_string())?;
        let mut lines = text.lines();
        let code: i32 = lines.next().and_then(|l| l.parse().ok()).ok_or("missing exit code")?;
        let args: Vec<&str> = std::iter::once("lfac").chain(lines).collect();
        let want = std::fs::read(args_path.with_extension("out")).map_err(|e| e.to_string())?;
        let mut got = Vec::new();
        let got_code = cli::run(&args, &mut got);
        if got != want || got_code != code {
            return Err(format!("{}: exit {got_code}, output {}", args_path.display(), String::from_utf8_lossy(&got)));
        }
    }
    Ok(names.len())
}

fn random_value(rng: &mut ChaCha8Rng, seed: u64) -> Value {
    let mut profile = TrialProfile::new(seed);
    profile.allow_irred = true;
    let pi = || random_gsp4(&mut profile.rng(), &profile);
    match rng.gen_range(0..10) {
        0 => Value::Scalar(random_satake(rng, &profile).add(&random_satake(rng, &profile))),
        1 => Value::Char(random_char(rng, &profile)),
        2 => Value::Rep(random_rep(&profile)),
        3 => Value::Split(random_rep(&profile).lfactor().pow(rng.gen_range(-2..=2))),
        4 => Value::Gsp4(pi()),
        5 => Value::Gl2(random_gl2_nonsc(rng, &profile)),
        6 => Value::Poles(subregular_poles(&pi())),
        7 => {
            let (p, s) = random_pole_pair(rng, &profile);
            Value::Poles(exceptional_poles(&p, &s).expect("supported pair"))
        }
        8 => {
            let (j, k) = ideals_jk(&pi()).expect("supported pair");
            Value::Tuple(vec![Value::Split(j), Value::Split(k)])
        }
        _ => Value::Poles(lfac::poles::spinor_pole_table(&pi())),
    }
}

fn criterion_9() -> Outcome {
    let goldens = golden()?;
    let env = Env::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        let v = random_value(&mut rng, i);
        let text = v.to_string();
        let back = cli::eval_str(&env, &text).map_err(|e| format!("{text}: {e}"))?;
        if back != v || back.to_string() != text {
            return Err(format!("round trip of {text} gave {back}"));
        }
    }
    let codes = [
        (vec!["eval", "a + 1"], 0),
        (vec!["eval", "1/0"], 1),
        (vec!["verify", "--suite", "lemma71", "--trials", "200", "--seed", "7"], 0),
        (vec!["eval", "L("], 2),
        (vec!["eval", "frob(a)"], 2),
        (vec!["frobnicate"], 2),
        (vec!["poles"], 2),
        (vec!["--catalog", "/nonexistent/catalog.txt", "eval", "1"], 2),
    ];
    for (args, code) in &codes {
        let mut sink = Vec::new();
        let got = cli::run(std::iter::once(&"lfac").chain(args.iter()), &mut sink);
        if got != *code {
            return Err(format!("{args:?}: exit {got}, expected {code}"));
        }
    }
    Ok(format!("{goldens} goldens, 200 round trips, {} exit codes", codes.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("product identities for character-parted representations", criterion_1),
        ("Steinberg shapes: tensor L-factor against the spinor product", criterion_2),
        ("principal-series factorisation", criterion_3),
        ("theta-lift product formula", criterion_4),
        ("ideal generator against expanded gcd", criterion_5),
        ("exceptional poles against direct enumeration", criterion_6),
        ("K vanishing iff subregular; J and K integral", criterion_7),
        ("split factorisations recompose with simple factors", criterion_8),
        ("cli goldens, round trip, exit codes", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

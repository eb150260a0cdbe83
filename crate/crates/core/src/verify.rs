//! Seeded random parameters and exact checks of the product identities.
//!
//! Every trial draws its own seed from the suite seed, so a failure replays
//! from the trial seed alone.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{HalfInt, Scalar, SplitRational, Symbol, SQRT_Q};
use crate::catalog::{nov_lfactor, rs_lfactor, theta_lift, CatalogError, Gl2Kind, Gl2Param, Gsp4Param, StType};
use crate::poles::subregular_poles;
use crate::wdrep::{Block, Character, IrredPart, RamTag, WDRep, WeilPart};

/// Satake symbols used by the generators, avoiding `v`, `q`, `X` and `x`.
pub const SYMBOL_POOL: [&str; 12] = ["a", "b", "c", "d", "e", "f", "g", "h", "k", "m", "n", "p"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialProfile {
    pub seed: u64,
    pub block_budget: usize,
    pub symbol_pool: usize,
    pub allow_irred: bool,
}

impl TrialProfile {
    pub fn new(seed: u64) -> Self {
        TrialProfile {
            seed,
            block_budget: 4,
            symbol_pool: 6,
            allow_irred: false,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Seeds for `trials` independent trials.
    pub fn trial_seeds(&self, trials: usize) -> Vec<u64> {
        let mut rng = self.rng();
        (0..trials).map(|_| rng.gen()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub seed: u64,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(identity: &str) -> Self {
        CheckReport {
            identity: identity.to_string(),
            trials: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, seed: u64, input: impl fmt::Display, outcome: Result<(), String>) {
        self.trials += 1;
        if let Err(detail) = outcome {
            self.failures.push(Failure {
                seed,
                input: input.to_string(),
                detail,
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.trials += other.trials;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {} trials, {} failures ({status})", self.identity, self.trials, self.failures.len())?;
        for fl in &self.failures {
            write!(f, "\n  seed {}: {}\n    {}", fl.seed, fl.input, fl.detail)?;
        }
        Ok(())
    }
}

fn expect_eq(what: &str, lhs: &SplitRational, rhs: &SplitRational) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

// --- generators ---------------------------------------------------------

fn pool<'a>(profile: &TrialProfile) -> &'a [&'static str] {
    &SYMBOL_POOL[..profile.symbol_pool.clamp(1, SYMBOL_POOL.len())]
}

/// Random Satake value `sym^{+-1} v^k`, `|k| <= 3`.
pub fn random_satake(rng: &mut impl Rng, profile: &TrialProfile) -> Scalar {
    let sym = Scalar::symbol(pool(profile).choose(rng).expect("nonempty pool"));
    let sym = if rng.gen_bool(0.2) { sym.inv().expect("nonzero") } else { sym };
    sym.mul(&Scalar::sqrt_q_pow(rng.gen_range(-3..=3)))
}

/// Random character, ramified about one time in six.
pub fn random_char(rng: &mut impl Rng, profile: &TrialProfile) -> Character {
    let satake = random_satake(rng, profile);
    if rng.gen_ratio(1, 6) {
        let tag = RamTag::symbol(["eta", "eps"].choose(rng).expect("nonempty"));
        Character::new(tag, satake).expect("nonzero Satake value")
    } else {
        Character::unr(satake)
    }
}

pub fn random_unr(rng: &mut impl Rng, profile: &TrialProfile) -> Character {
    Character::unr(random_satake(rng, profile))
}

fn random_irred(rng: &mut impl Rng, det: Character) -> IrredPart {
    let label = ["r", "s", "t"].choose(rng).expect("nonempty");
    IrredPart::new(2, label, det, None).expect("dimension 2")
}

/// Random representation with at most `block_budget` blocks and `n <= 3`.
pub fn random_rep(profile: &TrialProfile) -> WDRep {
    let mut rng = profile.rng();
    let count = rng.gen_range(1..=profile.block_budget.max(1));
    let blocks = (0..count).map(|_| {
        let n = rng.gen_range(0..=3);
        if profile.allow_irred && rng.gen_ratio(1, 5) {
            let det = random_char(&mut rng, profile);
            let rho = random_irred(&mut rng, det);
            let rho = rho.twisted(&random_char(&mut rng, profile));
            Block::new(WeilPart::Irred(rho), n)
        } else {
            Block::char(random_char(&mut rng, profile), n)
        }
    });
    WDRep::from_blocks(blocks.collect::<Vec<_>>())
}

/// Random symplectic 4-dimensional parameter (FREE) with mostly unramified lines.
pub fn random_free_gsp4(rng: &mut impl Rng, profile: &TrialProfile) -> Gsp4Param {
    let shapes = if profile.allow_irred { 7 } else { 5 };
    let (rep, chi) = match rng.gen_range(0..shapes) {
        0 => {
            let (l1, l2, chi) = (random_char(rng, profile), random_unr(rng, profile), random_unr(rng, profile));
            let lines = [l1.clone(), l2.clone(), chi.div(&l1), chi.div(&l2)];
            (WDRep::from_blocks(lines.map(|c| Block::char(c, 0))), chi)
        }
        1 => {
            let (l, g) = (random_unr(rng, profile), random_unr(rng, profile));
            let chi = g.pow(2);
            let rep = WDRep::from_blocks([Block::char(l.clone(), 0), Block::char(chi.div(&l), 0), Block::char(g, 1)]);
            (rep, chi)
        }
        2 => {
            let g1 = random_unr(rng, profile);
            let g2 = if rng.gen_bool(0.3) { g1.clone() } else { random_char(rng, profile) };
            let chi = g1.mul(&g2);
            (WDRep::from_blocks([Block::char(g1, 1), Block::char(g2, 1)]), chi)
        }
        3 => {
            let g = random_char(rng, profile);
            (WDRep::block(Block::char(g.clone(), 3)), g.pow(2))
        }
        4 => {
            let (l, g) = (random_unr(rng, profile), random_char(rng, profile));
            let chi = g.pow(2);
            let rep = WDRep::from_blocks([Block::char(l.clone(), 0), Block::char(chi.div(&l), 0), Block::char(g, 1)]);
            (rep, chi)
        }
        5 => {
            let chi = random_unr(rng, profile);
            let l = random_unr(rng, profile);
            let rho = random_irred(rng, chi.clone());
            let rep = WDRep::from_blocks([Block::char(l.clone(), 0), Block::char(chi.div(&l), 0), Block::new(WeilPart::Irred(rho), 0)]);
            (rep, chi)
        }
        _ => {
            let chi = random_char(rng, profile);
            let rho = random_irred(rng, chi.clone());
            (WDRep::block(Block::new(WeilPart::Irred(rho), 1)), chi)
        }
    };
    Gsp4Param::free(rep, chi).expect("generator shapes are symplectic")
}

/// Random GSp(4) parameter over the pinned catalog shapes and FREE.
pub fn random_gsp4(rng: &mut impl Rng, profile: &TrialProfile) -> Gsp4Param {
    let distinct_pair = |rng: &mut ChaCha8Rng| loop {
        let (a, b) = (random_char(rng, profile), random_char(rng, profile));
        if a != b {
            return (a, b);
        }
    };
    let mut r = ChaCha8Rng::seed_from_u64(rng.gen());
    let rho = |r: &mut ChaCha8Rng, det: Character| random_irred(r, det);
    match r.gen_range(0..9) {
        0 => Gsp4Param::type_i(random_char(&mut r, profile), random_unr(&mut r, profile), random_unr(&mut r, profile)),
        1 => {
            let (a, b) = distinct_pair(&mut r);
            Gsp4Param::type_iiia(a, b)
        }
        2 => Gsp4Param::type_iva(random_char(&mut r, profile)),
        3 => {
            let d = random_char(&mut r, profile);
            let xi = loop {
                let xi = random_char(&mut r, profile);
                if !xi.is_trivial() {
                    break xi;
                }
            };
            Gsp4Param::type_vii(rho(&mut r, d), xi)
        }
        4 => {
            let d = random_char(&mut r, profile);
            Gsp4Param::type_viiia(rho(&mut r, d))
        }
        5 => {
            let d = random_char(&mut r, profile);
            Gsp4Param::type_ixa(rho(&mut r, d))
        }
        6 => Gsp4Param::supercuspidal("l", random_char(&mut r, profile)),
        7 => {
            let d = random_char(&mut r, profile);
            let r1 = IrredPart::new(2, "l1", d.clone(), None).expect("dimension 2");
            let r2 = IrredPart::new(2, "l2", d, None).expect("dimension 2");
            Gsp4Param::supercuspidal_pair(r1, r2)
        }
        _ => Ok(random_free_gsp4(&mut r, profile)),
    }
    .expect("generator respects type constraints")
}

/// Random irreducible principal series.
pub fn random_ps(rng: &mut impl Rng, profile: &TrialProfile) -> Gl2Param {
    loop {
        let (c1, c2) = (random_char(rng, profile), random_char(rng, profile));
        if let Ok(p) = Gl2Param::principal_series(c1, c2, false) {
            return p;
        }
    }
}

/// Random non-supercuspidal GL(2) parameter.
pub fn random_gl2_nonsc(rng: &mut impl Rng, profile: &TrialProfile) -> Gl2Param {
    if rng.gen_bool(0.5) {
        Gl2Param::steinberg_twist(random_char(rng, profile))
    } else {
        random_ps(rng, profile)
    }
}

/// Random GL(2) parameter with central character `omega = mu^2`.
fn random_gl2_with_central(rng: &mut impl Rng, profile: &TrialProfile, mu: &Character, label: &str) -> Gl2Param {
    let omega = mu.pow(2);
    match rng.gen_range(0..3) {
        0 => loop {
            let c = random_char(rng, profile);
            if let Ok(p) = Gl2Param::principal_series(c.clone(), omega.div(&c), false) {
                break p;
            }
        },
        1 => {
            let sign = if rng.gen_bool(0.5) { Scalar::one() } else { Scalar::integer(-1) };
            Gl2Param::steinberg_twist(mu.mul(&Character::unr(sign)))
        }
        _ => Gl2Param::supercuspidal(label, omega).expect("dimension 2"),
    }
}

/// Random ThetaLift instance `(tau1, tau2, sigma)` inside the supported range.
pub fn random_theta_triple(rng: &mut impl Rng, profile: &TrialProfile) -> (Gl2Param, Gl2Param, Gl2Param) {
    let mu = random_char(rng, profile);
    let t1 = random_gl2_with_central(rng, profile, &mu, "l1");
    let t2 = random_gl2_with_central(rng, profile, &mu, "l2");
    let sigma = match rng.gen_range(0..3) {
        0 => random_ps(rng, profile),
        1 => Gl2Param::steinberg_twist(random_char(rng, profile)),
        _ => Gl2Param::supercuspidal("m", random_char(rng, profile)).expect("dimension 2"),
    };
    (t1, t2, sigma)
}

/// Pair `(pi, sigma)` where an exceptional pole is planted about half the time.
pub fn random_pole_pair(rng: &mut impl Rng, profile: &TrialProfile) -> (Gsp4Param, Gl2Param) {
    let pi = random_free_gsp4(rng, profile);
    if rng.gen_bool(0.5) {
        return (pi, random_gl2_nonsc(rng, profile));
    }
    let chi = pi.similitude().clone();
    // lines lambda of phi_pi and gamma (x) sp(1) blocks give tensor lines
    let lines: Vec<Character> = pi
        .rep()
        .blocks()
        .iter()
        .filter(|b| b.n <= 1)
        .filter_map(|b| b.part.as_char().cloned())
        .collect();
    if let Some(lambda) = lines.choose(rng) {
        let mu1 = random_unr(rng, profile);
        // chi mu1 mu2 = (lambda mu1)^2
        let mu2 = lambda.pow(2).mul(&mu1).div(&chi);
        if let Ok(sigma) = Gl2Param::principal_series(mu1, mu2, false) {
            return (pi, sigma);
        }
    }
    (pi, Gl2Param::steinberg())
}

// --- numeric cross-check --------------------------------------------------

fn split_symbols(f: &SplitRational, out: &mut BTreeSet<Symbol>) {
    out.extend(f.unit().symbols());
    for (b, _) in f.factors() {
        out.extend(b.symbols());
    }
}

fn random_rational(rng: &mut impl Rng) -> BigRational {
    let n: i64 = rng.gen_range(-40..=40);
    let d: i64 = rng.gen_range(1..=17);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Evaluates `f` and `g` at random rational points and compares the values.
pub fn numeric_agree(f: &SplitRational, g: &SplitRational, rng: &mut impl Rng) -> bool {
    let mut syms = BTreeSet::new();
    split_symbols(f, &mut syms);
    split_symbols(g, &mut syms);
    syms.insert(Symbol::new(SQRT_Q));
    for _ in 0..16 {
        let values: HashMap<Symbol, BigRational> = syms
            .iter()
            .map(|s| {
                let mut r = random_rational(rng);
                while r == BigRational::from_integer(0.into()) {
                    r = random_rational(rng);
                }
                (s.clone(), r)
            })
            .collect();
        let x = random_rational(rng);
        if let (Some(a), Some(b)) = (f.evaluate(&values, &x), g.evaluate(&values, &x)) {
            return a == b;
        }
    }
    // every draw hit a pole; treat as agreement only when both are identical
    f == g
}

// --- identities -------------------------------------------------------------

fn sp1() -> WDRep {
    WDRep::sp(1)
}

fn blocks_lfactor(rho: &WDRep, n: u32) -> SplitRational {
    rho.blocks()
        .iter()
        .filter(|b| b.n == n)
        .fold(SplitRational::one(), |acc, b| acc.mul(&b.lfactor()))
}

/// Left side of the first product identity:
/// `L(rho, s) L(rho, s + 1) / L(rho (x) sp(1), s + 1/2)`.
pub fn sp1_ratio(rho: &WDRep) -> Result<SplitRational, String> {
    let l = rho.lfactor();
    let t = rho.tensor(&sp1()).map_err(|e| e.to_string())?;
    Ok(l.mul(&l.shift(HalfInt::ONE)).div(&t.lfactor().shift(HalfInt::HALF)))
}

/// Left side of the second product identity.
pub fn sp1_ratio_twice(rho: &WDRep) -> Result<SplitRational, String> {
    let t = rho.tensor(&sp1()).map_err(|e| e.to_string())?;
    let tt = t.tensor(&sp1()).map_err(|e| e.to_string())?;
    let l = t.lfactor();
    let num = l.shift(HalfInt::HALF).mul(&l.shift(HalfInt::from_twice(3)));
    Ok(num.div(&tt.lfactor().shift(HalfInt::ONE)))
}

/// Both product identities for a character-parted `rho`.
pub fn check_product_identities(rho: &WDRep) -> CheckReport {
    let mut report = CheckReport::new("lemma71");
    let outcome = (|| {
        if !rho.is_character_parted() {
            return Err("input is not character-parted".to_string());
        }
        expect_eq("n = 0 identity", &sp1_ratio(rho)?, &blocks_lfactor(rho, 0))?;
        expect_eq("n = 1 identity", &sp1_ratio_twice(rho)?, &blocks_lfactor(rho, 1))
    })();
    report.record(0, rho, outcome);
    report
}

/// `L(phi_pi (x) phi_sigma)` without forming the tensor product: twists for a
/// principal series, the first product identity for a Steinberg twist.
pub fn product_route(pi: &Gsp4Param, sigma: &Gl2Param) -> Result<SplitRational, String> {
    match sigma.kind() {
        Gl2Kind::PrincipalSeries { .. } => {
            let chars: Vec<&Character> = sigma.rep().blocks().iter().filter_map(|b| b.part.as_char()).collect();
            Ok(chars
                .iter()
                .fold(SplitRational::one(), |acc, c| acc.mul(&pi.rep().twist(c).lfactor())))
        }
        Gl2Kind::SteinbergTwist => {
            let chi = sigma.rep().blocks()[0].part.as_char().expect("character part");
            let rho = pi.rep().twist(chi);
            let l = rho.lfactor();
            let ratio = l.mul(&l.shift(HalfInt::ONE)).div(&blocks_lfactor(&rho, 0));
            Ok(ratio.shift(-HalfInt::HALF))
        }
        Gl2Kind::Supercuspidal => Err("product route needs a non-supercuspidal sigma".into()),
    }
}

/// Tensor route against product route; for IIIa and IVa against the
/// Steinberg also the shifted identity and an empty subregular report.
pub fn check_steinberg_tensor(pi: &Gsp4Param, sigma: &Gl2Param) -> CheckReport {
    let mut report = CheckReport::new("theoremA");
    let outcome = (|| {
        let tensor = nov_lfactor(pi, sigma).map_err(|e| e.to_string())?;
        expect_eq("tensor vs product route", &tensor, &product_route(pi, sigma)?)?;
        let is_st = sigma.kind() == Gl2Kind::SteinbergTwist && sigma.central().is_trivial() && sigma.rep() == &WDRep::sp(1);
        if is_st && matches!(pi.st_type(), StType::IIIa | StType::IVa) {
            let l = pi.lfactor();
            expect_eq("shifted identity", &tensor.shift(HalfInt::HALF), &l.mul(&l.shift(HalfInt::ONE)))?;
            let sub = subregular_poles(pi);
            if !sub.is_empty() {
                return Err(format!("subregular poles for {}: {:?}", pi.st_type(), sub.roots()));
            }
        }
        Ok(())
    })();
    report.record(0, format_args!("{pi} ; {sigma}"), outcome);
    report
}

/// `L(pi x PS(chi1, chi2)) = L(pi x chi1) L(pi x chi2)`.
pub fn check_principal_series(pi: &Gsp4Param, sigma: &Gl2Param) -> CheckReport {
    let mut report = CheckReport::new("cor62");
    let outcome = (|| {
        if !matches!(sigma.kind(), Gl2Kind::PrincipalSeries { .. }) {
            return Err("sigma must be a principal series".to_string());
        }
        let tensor = nov_lfactor(pi, sigma).map_err(|e| e.to_string())?;
        expect_eq("principal-series product", &tensor, &product_route(pi, sigma)?)
    })();
    report.record(0, format_args!("{pi} ; {sigma}"), outcome);
    report
}

/// `L(theta(tau1, tau2) x sigma) = L(tau1 x sigma) L(tau2 x sigma)`.
pub fn check_theta_lift(t1: &Gl2Param, t2: &Gl2Param, sigma: &Gl2Param) -> Result<CheckReport, CatalogError> {
    let pi = theta_lift(t1, t2)?;
    let lhs = nov_lfactor(&pi, sigma)?;
    let rhs = rs_lfactor(t1, sigma)?.mul(&rs_lfactor(t2, sigma)?);
    let mut report = CheckReport::new("soudry");
    report.record(0, format_args!("{t1} ; {t2} ; {sigma}"), expect_eq("product formula", &lhs, &rhs));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ProductIdentities,
    SteinbergTensor,
    PrincipalSeries,
    ThetaLift,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::ProductIdentities => "lemma71",
            Suite::SteinbergTensor => "theoremA",
            Suite::PrincipalSeries => "cor62",
            Suite::ThetaLift => "soudry",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        [Suite::ProductIdentities, Suite::SteinbergTensor, Suite::PrincipalSeries, Suite::ThetaLift, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
    }
}

fn with_seed(mut r: CheckReport, seed: u64) -> CheckReport {
    for f in &mut r.failures {
        f.seed = seed;
    }
    r
}

fn numeric(report: &mut CheckReport, seed: u64, rng: &mut ChaCha8Rng, lhs: &SplitRational, rhs: &SplitRational) {
    if !numeric_agree(lhs, rhs, rng) {
        report.failures.push(Failure {
            seed,
            input: format!("{lhs} ; {rhs}"),
            detail: "numeric specialization disagrees".to_string(),
        });
    }
}

/// Runs a suite of `trials` random instances from `seed`.
pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> CheckReport {
    if suite == Suite::All {
        let mut all = CheckReport::new("all");
        for s in [Suite::ProductIdentities, Suite::SteinbergTensor, Suite::PrincipalSeries, Suite::ThetaLift] {
            all.merge(run_suite(s, trials, seed));
        }
        return all;
    }
    let base = TrialProfile::new(seed);
    let mut report = CheckReport::new(suite.name());
    for ts in base.trial_seeds(trials) {
        let profile = TrialProfile {
            seed: ts,
            allow_irred: suite != Suite::ProductIdentities,
            ..base
        };
        let mut rng = profile.rng();
        let trial = match suite {
            Suite::ProductIdentities => {
                let rho = random_rep(&profile);
                let r = check_product_identities(&rho);
                if let Ok(lhs) = sp1_ratio(&rho) {
                    let mut r = r;
                    numeric(&mut r, ts, &mut rng, &lhs, &blocks_lfactor(&rho, 0));
                    r
                } else {
                    r
                }
            }
            Suite::SteinbergTensor => {
                let pi = random_gsp4(&mut rng, &profile);
                let sigma = if rng.gen_bool(0.5) {
                    Gl2Param::steinberg()
                } else {
                    random_gl2_nonsc(&mut rng, &profile)
                };
                check_steinberg_tensor(&pi, &sigma)
            }
            Suite::PrincipalSeries => {
                let pi = random_free_gsp4(&mut rng, &profile);
                let sigma = random_ps(&mut rng, &profile);
                let mut r = check_principal_series(&pi, &sigma);
                if let (Ok(a), Ok(b)) = (nov_lfactor(&pi, &sigma), product_route(&pi, &sigma)) {
                    numeric(&mut r, ts, &mut rng, &a, &b);
                }
                r
            }
            Suite::ThetaLift => {
                let (t1, t2, sigma) = random_theta_triple(&mut rng, &profile);
                match check_theta_lift(&t1, &t2, &sigma) {
                    Ok(r) => r,
                    Err(e) => {
                        let mut r = CheckReport::new("soudry");
                        r.record(ts, format_args!("{t1} ; {t2} ; {sigma}"), Err(e.to_string()));
                        r
                    }
                }
            }
            Suite::All => unreachable!(),
        };
        report.merge(with_seed(trial, ts));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unr(x: &str) -> Character {
        Character::unr_symbol(x)
    }

    #[test]
    fn random_rep_is_deterministic() {
        let p = TrialProfile {
            block_budget: 1,
            ..TrialProfile::new(11)
        };
        assert_eq!(random_rep(&p).blocks().len(), 1);
        assert_eq!(random_rep(&p), random_rep(&p));

        let p = TrialProfile::new(5);
        for s in p.trial_seeds(30) {
            let r = random_rep(&TrialProfile { seed: s, ..p });
            assert!(r.is_character_parted());
            assert!(r.blocks().len() <= 4 && r.blocks().iter().all(|b| b.n <= 3));
        }
    }

    #[test]
    fn product_identity_examples() {
        let rho = WDRep::from_blocks([Block::char(unr("a"), 0), Block::char(unr("b"), 1)]);
        assert_eq!(sp1_ratio(&rho).unwrap(), SplitRational::euler(Scalar::symbol("a")));
        assert!(check_product_identities(&rho).passed());

        let rho = WDRep::block(Block::char(unr("a"), 3));
        assert!(sp1_ratio(&rho).unwrap().is_one());

        let rho = WDRep::sp(1);
        assert_eq!(sp1_ratio_twice(&rho).unwrap(), SplitRational::euler(Scalar::sqrt_q_pow(-1)));
    }

    #[test]
    fn steinberg_tensor_examples() {
        let st = Gl2Param::steinberg();
        assert!(check_steinberg_tensor(&Gsp4Param::type_iva(unr("a")).unwrap(), &st).passed());
        assert!(check_steinberg_tensor(&Gsp4Param::type_iiia(unr("a"), unr("b")).unwrap(), &st).passed());
        let sc = Gsp4Param::supercuspidal("l4", Character::trivial()).unwrap();
        assert!(check_steinberg_tensor(&sc, &st).passed());
    }

    #[test]
    fn theta_lift_examples() {
        let st = Gl2Param::steinberg();
        let ps = Gl2Param::principal_series(unr("c"), unr("d"), false).unwrap();
        assert!(check_theta_lift(&st, &st, &ps).unwrap().passed());
        let t1 = Gl2Param::principal_series(unr("a"), unr("b"), false).unwrap();
        let ab = Scalar::symbol("a").mul(&Scalar::symbol("b"));
        let t2 = Gl2Param::principal_series(unr("e"), Character::unr(ab.div(&Scalar::symbol("e")).unwrap()), false).unwrap();
        assert!(check_theta_lift(&t1, &t2, &st).unwrap().passed());
        let l1 = Gl2Param::supercuspidal("l1", unr("c")).unwrap();
        let l2 = Gl2Param::supercuspidal("l2", unr("c")).unwrap();
        let m = Gl2Param::supercuspidal("m", unr("d")).unwrap();
        assert!(check_theta_lift(&l1, &l2, &m).unwrap().passed());
    }

    #[test]
    fn failing_checks_are_reported() {
        let rho = WDRep::irred(IrredPart::new(2, "r", unr("c"), None).unwrap());
        let r = check_product_identities(&rho);
        assert!(!r.passed());
        assert_eq!(r.failures.len(), 1);
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::ProductIdentities, Suite::SteinbergTensor, Suite::PrincipalSeries, Suite::ThetaLift] {
            let r = run_suite(s, 15, 3);
            assert!(r.passed(), "{r}");
            assert_eq!(r.trials, 15);
        }
    }

    #[test]
    fn numeric_check_detects_difference() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = SplitRational::euler(Scalar::symbol("a"));
        let g = SplitRational::euler(Scalar::symbol("b"));
        assert!(!numeric_agree(&f, &g, &mut rng));
        assert!(numeric_agree(&f, &f, &mut rng));
    }
}

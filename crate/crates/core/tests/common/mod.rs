//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use lfac::algebra::{HalfInt, Scalar, SplitRational, Symbol};
use lfac::catalog::{Gl2Param, Gsp4Param};
use lfac::wdrep::{Character, WDRep};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(pub Vec<BigRational>);

impl UPoly {
    pub fn one() -> Self {
        UPoly(vec![BigRational::one()])
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly(out).trim()
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero());
        let mut r = self.0.clone();
        let lead = d.0.last().unwrap().clone();
        let dd = d.degree();
        let mut q = vec![BigRational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, b) in d.0.iter().enumerate() {
                r[k + i] -= &c * b;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UPoly(q).trim(), UPoly(r).trim())
    }

    pub fn monic(&self) -> UPoly {
        let lead = self.0.last().expect("nonzero").clone();
        UPoly(self.0.iter().map(|c| c / &lead).collect())
    }

    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(a: &UPoly, b: &UPoly) -> UPoly {
        let g = UPoly::gcd(a, b);
        a.mul(b).divrem(&g).0.monic()
    }

    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact division");
        q
    }

    /// `(1 - beta X)^e`.
    pub fn linear_power(beta: &BigRational, e: u32) -> UPoly {
        let f = UPoly(vec![BigRational::one(), -beta.clone()]).trim();
        (0..e).fold(UPoly::one(), |acc, _| acc.mul(&f))
    }
}

/// Numerator and denominator of `f` as expanded polynomials after the
/// substitution, monomial unit and `X` power dropped (units of `Q[X, X^-1]`).
pub fn expand(f: &SplitRational, vals: &HashMap<Symbol, BigRational>) -> (UPoly, UPoly) {
    let (mut num, mut den) = (UPoly::one(), UPoly::one());
    for (beta, e) in f.factors() {
        let b = beta.evaluate(vals).expect("fully assigned");
        let p = UPoly::linear_power(&b, e.unsigned_abs() as u32);
        if e > 0 {
            num = num.mul(&p);
        } else {
            den = den.mul(&p);
        }
    }
    (num, den)
}

/// Generator `N / D` of the fractional ideal spanned by `fs`, reduced and
/// monic, computed with expanded polynomials only.
pub fn ideal_oracle(fs: &[SplitRational], vals: &HashMap<Symbol, BigRational>) -> (UPoly, UPoly) {
    let parts: Vec<(UPoly, UPoly)> = fs.iter().map(|f| expand(f, vals)).collect();
    let d = parts.iter().fold(UPoly::one(), |acc, (_, den)| UPoly::lcm(&acc, den));
    let mut n = UPoly(vec![]);
    for (num, den) in &parts {
        let scaled = num.mul(&d.exact_div(den));
        n = if n.is_zero() { scaled.monic() } else { UPoly::gcd(&n, &scaled) };
    }
    let g = UPoly::gcd(&n, &d);
    (n.exact_div(&g).monic(), d.exact_div(&g).monic())
}

pub fn symbols_of(fs: &[SplitRational]) -> BTreeSet<Symbol> {
    let mut out = BTreeSet::new();
    for f in fs {
        out.extend(f.unit().symbols());
        for (b, _) in f.factors() {
            out.extend(b.symbols());
        }
    }
    out
}

/// Random nonzero rational assignment under which the distinct roots of
/// `fs` stay distinct and nonzero; redrawn on collisions.
pub fn separating_assignment(fs: &[SplitRational], rng: &mut impl Rng) -> HashMap<Symbol, BigRational> {
    let syms = symbols_of(fs);
    let roots: BTreeSet<Scalar> = fs.iter().flat_map(|f| f.factors().map(|(b, _)| b.clone())).collect();
    loop {
        let vals: HashMap<Symbol, BigRational> = syms
            .iter()
            .map(|s| {
                let n = loop {
                    let n: i64 = rng.gen_range(-60..=60);
                    if n != 0 {
                        break n;
                    }
                };
                (s.clone(), BigRational::new(BigInt::from(n), BigInt::from(rng.gen_range(1..=23i64))))
            })
            .collect();
        let mut seen = BTreeSet::new();
        let ok = roots.iter().all(|b| match b.evaluate(&vals) {
            Some(x) if !x.is_zero() => seen.insert(x),
            _ => false,
        });
        if ok {
            return vals;
        }
    }
}

/// Exceptional pole roots by direct enumeration: poles of
/// `L(T, s) L(T, s + 1) / L(T (x) sp(1), s + 1/2)` for `T = phi_pi (x) phi_sigma`
/// whose square is the Satake value of an unramified `chi_pi chi_sigma`.
pub fn exceptional_oracle(pi: &Gsp4Param, sigma: &Gl2Param) -> BTreeSet<Scalar> {
    let t = pi.rep().tensor_known(sigma.rep()).expect("supported pair");
    let l = t.lfactor();
    let lsp = t.tensor(&WDRep::sp(1)).expect("character tensor").lfactor();
    let ratio = l.mul(&l.shift(HalfInt::ONE)).div(&lsp.shift(HalfInt::HALF));
    let chi: Character = pi.similitude().mul(sigma.central());
    ratio
        .pole_roots()
        .into_iter()
        .filter(|b| chi.is_unramified() && chi.satake() == &b.mul(b))
        .collect()
}

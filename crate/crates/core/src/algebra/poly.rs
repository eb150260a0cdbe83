//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are ordered graded-lexicographically: total degree first, then
//! exponent vectors compared with variables in alphabetical order (a larger
//! exponent on the alphabetically earlier variable wins). Every canonical form
//! in the crate is defined relative to this order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A formal variable, compared by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// Power product of symbols with positive exponents, sorted by symbol name.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(s, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| *e as u64).sum()
    }

    pub fn exponent(&self, s: &Symbol) -> u32 {
        self.0
            .iter()
            .find(|(t, _)| t == s)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (s, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < *s {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *s {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((s.clone(), e - f)),
                }
            } else {
                out.push((s.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for (s, e) in &self.0 {
            let f = other.exponent(s);
            if f > 0 {
                out.push((s.clone(), (*e).min(f)));
            }
        }
        Monomial(out)
    }

    /// Split off the power of `x`.
    fn split(&self, x: &Symbol) -> (u32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut d = 0;
        for (s, e) in &self.0 {
            if s == x {
                d = *e;
            } else {
                rest.push((s.clone(), *e));
            }
        }
        (d, Monomial(rest))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((s, e)), Some((t, f))) => match s.cmp(t) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match e.cmp(f) {
                            Ordering::Equal => {}
                            o => return o,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{m:?}")?;
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(s: Symbol) -> Self {
        Poly::term(BigRational::one(), Monomial::var(s, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The single term if this is a monomial times a coefficient.
    pub fn as_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.leading().map(|(_, c)| c)
    }

    pub fn variables(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(s, _)| s.clone()))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?;
        if let Some((m, c)) = divisor.as_term() {
            let mut out = Poly::zero();
            for (n, d) in &self.terms {
                out.terms.insert(n.div(m)?, d / c);
            }
            return Some(out);
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            let step = divisor.mul_monomial(&qm).scale(&qc);
            quot.add_term(qm, qc);
            rem = rem.sub(&step);
        }
        Some(quot)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Greatest common monomial divisor of all terms.
    fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        if let Some((m, _)) = self.as_term() {
            return Poly::term(BigRational::one(), m.gcd(&other.monomial_content()));
        }
        if let Some((m, _)) = other.as_term() {
            return Poly::term(BigRational::one(), m.gcd(&self.monomial_content()));
        }
        let va = self.variables();
        let vb = other.variables();
        let x = va.union(&vb).next().cloned().expect("non-constant");
        if !va.contains(&x) {
            return self.gcd(&other.content_in(&x));
        }
        if !vb.contains(&x) {
            return other.gcd(&self.content_in(&x));
        }
        let ca = self.content_in(&x);
        let cb = other.content_in(&x);
        let pa = self.div_exact(&ca).expect("content divides");
        let pb = other.div_exact(&cb).expect("content divides");
        let c = ca.gcd(&cb);
        let g = primitive_prs(pa.to_univariate(&x), pb.to_univariate(&x));
        Poly::from_univariate(&x, &g).mul(&c).monic()
    }

    /// Gcd of the coefficients of `self` viewed as a polynomial in `x`.
    fn content_in(&self, x: &Symbol) -> Poly {
        let coeffs = self.to_univariate(x);
        let mut g = Poly::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Coefficients in `x`, indexed by degree; each is free of `x`.
    fn to_univariate(&self, x: &Symbol) -> Vec<Poly> {
        let mut out: Vec<Poly> = Vec::new();
        for (m, c) in &self.terms {
            let (d, rest) = m.split(x);
            let d = d as usize;
            if out.len() <= d {
                out.resize(d + 1, Poly::zero());
            }
            out[d].add_term(rest, c.clone());
        }
        out
    }

    fn from_univariate(x: &Symbol, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            let xm = Monomial::var(x.clone(), d as u32);
            for (m, k) in &c.terms {
                out.add_term(m.mul(&xm), k.clone());
            }
        }
        out
    }

    /// Substitute rational values for some symbols.
    pub fn specialize(&self, values: &HashMap<Symbol, BigRational>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (s, e) in &m.0 {
                match values.get(s) {
                    Some(val) => coeff *= pow_rational(val, *e),
                    None => rest.push((s.clone(), *e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Substitute polynomials for symbols.
    pub fn substitute(&self, values: &HashMap<Symbol, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            let mut rest = Vec::new();
            for (s, e) in &m.0 {
                match values.get(s) {
                    Some(p) => acc = acc.mul(&p.pow(*e)),
                    None => rest.push((s.clone(), *e)),
                }
            }
            out = out.add(&acc.mul_monomial(&Monomial(rest)));
        }
        out
    }

    /// Rational value under a full assignment; `None` if a symbol is unassigned.
    pub fn evaluate(&self, values: &HashMap<Symbol, BigRational>) -> Option<BigRational> {
        let p = self.specialize(values);
        p.constant_value()
    }

    pub fn is_negative_leading(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_negative())
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

fn degree(p: &[Poly]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(mut p: Vec<Poly>) -> Vec<Poly> {
    while p.last().is_some_and(Poly::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b` as polynomials in one variable.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = degree(b).expect("nonzero divisor");
    let lcb = &b[db];
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lcr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Poly> = r.iter().map(|c| c.mul(lcb)).collect();
        for (i, c) in b.iter().enumerate() {
            next[i + shift] = next[i + shift].sub(&c.mul(&lcr));
        }
        r = trim(next);
    }
    r
}

fn primitive_part(p: Vec<Poly>) -> Vec<Poly> {
    let mut g = Poly::zero();
    for c in p.iter().filter(|c| !c.is_zero()) {
        g = g.gcd(c);
        if g.is_one() {
            return p;
        }
    }
    if g.is_zero() {
        return p;
    }
    p.iter()
        .map(|c| c.div_exact(&g).expect("content divides"))
        .collect()
}

/// Gcd of two primitive polynomials in one variable via the primitive PRS.
fn primitive_prs(a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    let (mut a, mut b) = (trim(a), trim(b));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while degree(&b).is_some() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(r);
    }
    primitive_part(a)
}

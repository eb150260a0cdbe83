use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Poly, Symbol};
use super::AlgebraError;

/// Name of the formal square root of the residue field cardinality.
pub const SQRT_Q: &str = "v";

type LaurentTerm = (Vec<(Symbol, i64)>, BigRational);

/// Exact element of `Q(v, a, b, ...)`.
///
/// Always stored as `num / den` with `gcd(num, den) = 1` and `den` monic in the
/// graded-lex order, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

/// Display order: numerators by leading terms (larger monomials first, so
/// constants last), then denominators with smaller monomials first.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let mut a = self.num.terms_desc();
        let mut b = other.num.terms_desc();
        loop {
            match (a.next(), b.next()) {
                (None, None) => break,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((m, c)), Some((n, d))) => {
                    let o = n.cmp(m).then_with(|| c.cmp(d));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
        let mut a = self.den.terms_desc();
        let mut b = other.den.terms_desc();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((m, c)), Some((n, d))) => {
                    let o = m.cmp(n).then_with(|| c.cmp(d));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_poly(Poly::one())
    }

    pub fn integer(n: i64) -> Self {
        Scalar::from_poly(Poly::integer(n))
    }

    pub fn rational(r: BigRational) -> Self {
        Scalar::from_poly(Poly::constant(r))
    }

    pub fn symbol(name: &str) -> Self {
        Scalar::from_poly(Poly::var(Symbol::new(name)))
    }

    /// `v = q^{1/2}`.
    pub fn sqrt_q() -> Self {
        Scalar::symbol(SQRT_Q)
    }

    /// `v^k`, i.e. `q^{k/2}`.
    pub fn sqrt_q_pow(k: i64) -> Self {
        Scalar::sqrt_q().powi(k)
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.den == o.den {
            return Self::canonical(self.num.add(&o.num), self.den.clone());
        }
        Self::canonical(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        Self::canonical(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Scalar, AlgebraError> {
        Scalar::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, AlgebraError> {
        if o.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    /// Integer power; panics on a negative power of zero.
    pub fn powi(&self, e: i64) -> Scalar {
        if e == 0 {
            return Scalar::one();
        }
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let k = e.unsigned_abs() as u32;
        // num and den stay coprime under powers; only the monic scaling may move.
        Self::canonical(base.num.pow(k), base.den.pow(k))
    }

    pub fn checked_powi(&self, e: i64) -> Result<Scalar, AlgebraError> {
        if e < 0 && self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.powi(e))
    }

    /// Substitute rational values for some symbols and re-canonicalize.
    pub fn specialize(&self, values: &HashMap<Symbol, BigRational>) -> Result<Scalar, AlgebraError> {
        Scalar::new(self.num.specialize(values), self.den.specialize(values))
    }

    /// Substitute Scalars for symbols.
    pub fn substitute(&self, values: &HashMap<Symbol, Scalar>) -> Result<Scalar, AlgebraError> {
        let mut num = Scalar::zero();
        for (m, c) in self.num.terms_desc() {
            num = num.add(&subst_term(m, c, values)?);
        }
        let mut den = Scalar::zero();
        for (m, c) in self.den.terms_desc() {
            den = den.add(&subst_term(m, c, values)?);
        }
        num.div(&den)
    }

    /// Full rational evaluation; `None` when a symbol is unassigned or the
    /// denominator vanishes.
    pub fn evaluate(&self, values: &HashMap<Symbol, BigRational>) -> Option<BigRational> {
        let d = self.den.evaluate(values)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(values)? / d)
    }

    pub fn symbols(&self) -> std::collections::BTreeSet<Symbol> {
        let mut s = self.num.variables();
        s.extend(self.den.variables());
        s
    }

    /// Terms of `num / den` with signed exponents when `den` is a monomial.
    fn laurent_form(&self) -> Option<Vec<LaurentTerm>> {
        let (dm, dc) = self.den.as_term()?;
        debug_assert!(dc.is_one());
        let mut out = Vec::new();
        for (m, c) in self.num.terms_desc() {
            let mut exps: Vec<(Symbol, i64)> = m
                .factors()
                .iter()
                .map(|(s, e)| (s.clone(), *e as i64))
                .collect();
            for (s, e) in dm.factors() {
                match exps.iter_mut().find(|(t, _)| t == s) {
                    Some(slot) => slot.1 -= *e as i64,
                    None => exps.push((s.clone(), -(*e as i64))),
                }
            }
            exps.retain(|(_, e)| *e != 0);
            exps.sort_by(|x, y| x.0.cmp(&y.0));
            out.push((exps, c.clone()));
        }
        Some(out)
    }

    /// `Some(is_negative)` when the text form is one signed Laurent term,
    /// so it can sit inside a product without parentheses (after the sign).
    pub fn single_term_sign(&self) -> Option<bool> {
        match self.laurent_form() {
            Some(terms) if terms.len() == 1 => Some(terms[0].1.is_negative()),
            _ => None,
        }
    }
}

fn subst_term(
    m: &Monomial,
    c: &BigRational,
    values: &HashMap<Symbol, Scalar>,
) -> Result<Scalar, AlgebraError> {
    let mut acc = Scalar::rational(c.clone());
    for (s, e) in m.factors() {
        let base = values
            .get(s)
            .cloned()
            .unwrap_or_else(|| Scalar::symbol(s.name()));
        acc = acc.mul(&base.powi(*e as i64));
    }
    Ok(acc)
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_monomial(exps: &[(Symbol, i64)]) -> String {
    exps.iter()
        .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn fmt_sum(terms: &[(Vec<(Symbol, i64)>, BigRational)]) -> String {
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let ms = fmt_monomial(m);
        if m.is_empty() {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&ms);
        } else {
            out.push_str(&fmt_rational(&mag));
            out.push('*');
            out.push_str(&ms);
        }
    }
    out
}

fn poly_terms(p: &Poly) -> Vec<(Vec<(Symbol, i64)>, BigRational)> {
    p.terms_desc()
        .map(|(m, c)| {
            (
                m.factors().iter().map(|(s, e)| (s.clone(), *e as i64)).collect(),
                c.clone(),
            )
        })
        .collect()
}

impl fmt::Display for Scalar {
    /// ASCII text that the expression parser reads back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if let Some(terms) = self.laurent_form() {
            return f.write_str(&fmt_sum(&terms));
        }
        let num = poly_terms(&self.num);
        let den = poly_terms(&self.den);
        let wrap = |t: &[(Vec<(Symbol, i64)>, BigRational)]| {
            let s = fmt_sum(t);
            let single = t.len() == 1 && (t[0].0.is_empty() || t[0].1.is_one());
            if single && !s.starts_with('-') {
                s
            } else {
                format!("({s})")
            }
        };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::rational(BigRational::from_integer(n))
    }
}

/// Raw arithmetic expression over rationals, `v`, and Satake symbols.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarExpr {
    Num(BigRational),
    Sym(String),
    Neg(Box<ScalarExpr>),
    Add(Box<ScalarExpr>, Box<ScalarExpr>),
    Sub(Box<ScalarExpr>, Box<ScalarExpr>),
    Mul(Box<ScalarExpr>, Box<ScalarExpr>),
    Div(Box<ScalarExpr>, Box<ScalarExpr>),
    Pow(Box<ScalarExpr>, i64),
}

impl ScalarExpr {
    pub fn sym(s: &str) -> Self {
        ScalarExpr::Sym(s.to_string())
    }

    pub fn int(n: i64) -> Self {
        ScalarExpr::Num(BigRational::from_integer(n.into()))
    }
}

/// Evaluate an expression tree to its canonical Scalar.
pub fn scalar_canonicalize(e: &ScalarExpr) -> Result<Scalar, AlgebraError> {
    Ok(match e {
        ScalarExpr::Num(r) => Scalar::rational(r.clone()),
        ScalarExpr::Sym(s) => Scalar::symbol(s),
        ScalarExpr::Neg(a) => scalar_canonicalize(a)?.neg(),
        ScalarExpr::Add(a, b) => scalar_canonicalize(a)?.add(&scalar_canonicalize(b)?),
        ScalarExpr::Sub(a, b) => scalar_canonicalize(a)?.sub(&scalar_canonicalize(b)?),
        ScalarExpr::Mul(a, b) => scalar_canonicalize(a)?.mul(&scalar_canonicalize(b)?),
        ScalarExpr::Div(a, b) => scalar_canonicalize(a)?.div(&scalar_canonicalize(b)?)?,
        ScalarExpr::Pow(a, k) => scalar_canonicalize(a)?.checked_powi(*k)?,
    })
}

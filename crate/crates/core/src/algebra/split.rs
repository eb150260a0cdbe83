//! Rational functions in `X = q^{-s}` kept fully factored into linear pieces.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Symbol;
use super::scalar::Scalar;
use super::AlgebraError;

/// Exact element of `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn from_rational(r: &BigRational) -> Result<Self, AlgebraError> {
        let twice = r * BigRational::from_integer(2.into());
        if !twice.is_integer() {
            return Err(AlgebraError::NotHalfInteger(r.to_string()));
        }
        let n: i64 = twice
            .to_integer()
            .try_into()
            .map_err(|_| AlgebraError::NotHalfInteger(r.to_string()))?;
        Ok(HalfInt(n))
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(self.0.into(), 2.into())
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `unit * X^xpower * prod (1 - beta X)^e` with pairwise distinct nonzero
/// roots `beta` and nonzero exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitRational {
    unit: Scalar,
    xpower: i64,
    factors: BTreeMap<Scalar, i64>,
}

impl Default for SplitRational {
    fn default() -> Self {
        SplitRational::one()
    }
}

impl SplitRational {
    pub fn one() -> Self {
        SplitRational {
            unit: Scalar::one(),
            xpower: 0,
            factors: BTreeMap::new(),
        }
    }

    /// `unit * X^xpower`.
    pub fn monomial(unit: Scalar, xpower: i64) -> Result<Self, AlgebraError> {
        if unit.is_zero() {
            return Err(AlgebraError::ZeroUnit);
        }
        Ok(SplitRational {
            unit,
            xpower,
            factors: BTreeMap::new(),
        })
    }

    pub fn x() -> Self {
        SplitRational {
            unit: Scalar::one(),
            xpower: 1,
            factors: BTreeMap::new(),
        }
    }

    /// `(1 - beta X)^e`; a zero root gives the constant 1.
    pub fn factor(beta: Scalar, e: i64) -> Self {
        let mut f = SplitRational::one();
        f.push(beta, e);
        f
    }

    /// `1 / (1 - alpha X)`.
    pub fn euler(alpha: Scalar) -> Self {
        SplitRational::factor(alpha, -1)
    }

    /// Build from raw parts, merging roots that are equal as Scalars.
    pub fn from_parts(
        unit: Scalar,
        xpower: i64,
        factors: impl IntoIterator<Item = (Scalar, i64)>,
    ) -> Result<Self, AlgebraError> {
        let mut f = SplitRational::monomial(unit, xpower)?;
        for (b, e) in factors {
            f.push(b, e);
        }
        Ok(f)
    }

    fn push(&mut self, beta: Scalar, e: i64) {
        if e == 0 || beta.is_zero() {
            return;
        }
        let slot = self.factors.entry(beta).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.retain(|_, e| *e != 0);
        }
    }

    pub fn unit(&self) -> &Scalar {
        &self.unit
    }

    pub fn xpower(&self) -> i64 {
        self.xpower
    }

    /// Roots and exponents in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (&Scalar, i64)> {
        self.factors.iter().map(|(b, e)| (b, *e))
    }

    pub fn is_one(&self) -> bool {
        self.unit.is_one() && self.xpower == 0 && self.factors.is_empty()
    }

    /// `1/P(X)` with `P(0) = 1`.
    pub fn is_lfactor(&self) -> bool {
        self.unit.is_one() && self.xpower == 0 && self.factors.values().all(|e| *e <= 0)
    }

    /// True when every root occurs with exponent one in absolute value.
    pub fn is_squarefree(&self) -> bool {
        self.factors.values().all(|e| e.abs() == 1)
    }

    pub fn mul(&self, o: &SplitRational) -> SplitRational {
        let mut out = SplitRational {
            unit: self.unit.mul(&o.unit),
            xpower: self.xpower + o.xpower,
            factors: self.factors.clone(),
        };
        for (b, e) in &o.factors {
            out.push(b.clone(), *e);
        }
        out
    }

    pub fn inv(&self) -> SplitRational {
        SplitRational {
            unit: self.unit.inv().expect("unit is nonzero"),
            xpower: -self.xpower,
            factors: self.factors.iter().map(|(b, e)| (b.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, o: &SplitRational) -> SplitRational {
        self.mul(&o.inv())
    }

    pub fn pow(&self, k: i64) -> SplitRational {
        if k == 0 {
            return SplitRational::one();
        }
        SplitRational {
            unit: self.unit.powi(k),
            xpower: self.xpower * k,
            factors: self.factors.iter().map(|(b, e)| (b.clone(), e * k)).collect(),
        }
    }

    /// `s -> s + t`, i.e. `X -> v^{-2t} X`.
    pub fn shift(&self, t: HalfInt) -> SplitRational {
        if t == HalfInt::ZERO {
            return self.clone();
        }
        let scale = Scalar::sqrt_q_pow(-t.twice());
        let mut out = SplitRational {
            unit: self.unit.mul(&scale.powi(self.xpower)),
            xpower: self.xpower,
            factors: BTreeMap::new(),
        };
        for (b, e) in &self.factors {
            out.push(b.mul(&scale), *e);
        }
        out
    }

    /// Order of vanishing at the point `X = beta^{-1}`; poles are negative.
    pub fn vanishing_order(&self, beta: &Scalar) -> i64 {
        self.factors.get(beta).copied().unwrap_or(0)
    }

    /// Roots with negative exponent, i.e. the pole locus in `q^{s}`.
    pub fn pole_roots(&self) -> Vec<Scalar> {
        self.factors
            .iter()
            .filter(|(_, e)| **e < 0)
            .map(|(b, _)| b.clone())
            .collect()
    }

    pub fn specialize(&self, values: &HashMap<Symbol, BigRational>) -> Result<SplitRational, AlgebraError> {
        let mut out = SplitRational::monomial(self.unit.specialize(values)?, self.xpower)?;
        for (b, e) in &self.factors {
            out.push(b.specialize(values)?, *e);
        }
        Ok(out)
    }

    /// Value at a rational point `X = x` under a full assignment of symbols.
    /// `None` at poles or when a symbol is unassigned.
    pub fn evaluate(&self, values: &HashMap<Symbol, BigRational>, x: &BigRational) -> Option<BigRational> {
        let mut acc = self.unit.evaluate(values)?;
        if self.xpower != 0 {
            if x.is_zero() {
                return None;
            }
            acc *= num_traits::pow::pow(x.clone(), self.xpower.unsigned_abs() as usize)
                .pow_sign(self.xpower);
        }
        for (b, e) in &self.factors {
            let lin = BigRational::one() - b.evaluate(values)? * x;
            if lin.is_zero() {
                return None;
            }
            let p = num_traits::pow::pow(lin, e.unsigned_abs() as usize);
            acc *= p.pow_sign(*e);
        }
        Some(acc)
    }
}

trait PowSign {
    fn pow_sign(self, e: i64) -> Self;
}

impl PowSign for BigRational {
    fn pow_sign(self, e: i64) -> Self {
        if e < 0 {
            self.recip()
        } else {
            self
        }
    }
}

fn fmt_root_factor(beta: &Scalar, e: i64) -> String {
    let inner = if beta.is_one() {
        "1 - X".to_string()
    } else {
        match beta.single_term_sign() {
            Some(true) => {
                let m = beta.neg();
                if m.is_one() {
                    "1 + X".to_string()
                } else {
                    format!("1 + {m}*X")
                }
            }
            Some(false) => format!("1 - {beta}*X"),
            None => format!("1 - ({beta})*X"),
        }
    };
    if e == 1 {
        format!("({inner})")
    } else {
        format!("({inner})^{e}")
    }
}

fn fmt_xpow(k: i64) -> String {
    if k == 1 {
        "X".into()
    } else {
        format!("X^{k}")
    }
}

impl fmt::Display for SplitRational {
    /// ASCII form, e.g. `1/((1 - a*X)(1 - b*v^-1*X))`; parses back to itself.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut prefix = Vec::new();
        if !self.unit.is_one() {
            match self.unit.single_term_sign() {
                Some(false) => prefix.push(self.unit.to_string()),
                _ => prefix.push(format!("({})", self.unit)),
            }
        }
        if self.xpower > 0 {
            prefix.push(fmt_xpow(self.xpower));
        }
        let num_facs: String = self
            .factors
            .iter()
            .filter(|(_, e)| **e > 0)
            .map(|(b, e)| fmt_root_factor(b, *e))
            .collect();
        let mut num = prefix.join("*");
        if !num_facs.is_empty() {
            if !num.is_empty() {
                num.push('*');
            }
            num.push_str(&num_facs);
        }
        if num.is_empty() {
            num.push('1');
        }

        let den_facs: Vec<String> = self
            .factors
            .iter()
            .filter(|(_, e)| **e < 0)
            .map(|(b, e)| fmt_root_factor(b, -*e))
            .collect();
        if self.xpower >= 0 && den_facs.is_empty() {
            return f.write_str(&num);
        }
        let den = if self.xpower >= 0 && den_facs.len() == 1 {
            den_facs[0].clone()
        } else if self.xpower < 0 && den_facs.is_empty() {
            fmt_xpow(-self.xpower)
        } else {
            let mut s = String::from("(");
            if self.xpower < 0 {
                s.push_str(&fmt_xpow(-self.xpower));
                s.push('*');
            }
            s.push_str(&den_facs.concat());
            s.push(')');
            s
        };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for SplitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generator of a fractional ideal of the Laurent ring `C[X, X^{-1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGen {
    pub generator: SplitRational,
    pub is_lfactor: bool,
    pub contains_units: bool,
}

/// Generator of the fractional ideal spanned by `fs`: per root the minimum
/// exponent over the inputs (an absent root counts as exponent 0).
pub fn ideal_generator(fs: &[SplitRational]) -> Result<IdealGen, AlgebraError> {
    if fs.is_empty() {
        return Err(AlgebraError::EmptyIdeal);
    }
    let mut roots: BTreeMap<Scalar, i64> = BTreeMap::new();
    for f in fs {
        for (b, _) in f.factors() {
            roots.entry(b.clone()).or_insert(0);
        }
    }
    for (b, slot) in roots.iter_mut() {
        *slot = fs.iter().map(|f| f.vanishing_order(b)).min().unwrap_or(0);
    }
    let generator = SplitRational::from_parts(Scalar::one(), 0, roots).expect("unit one");
    let contains_units = generator.factors().all(|(_, e)| e <= 0);
    Ok(IdealGen {
        is_lfactor: generator.is_lfactor(),
        contains_units,
        generator,
    })
}

use std::fmt;

use num_traits::{Signed, ToPrimitive};

use super::syntax::{BinOp, Expr, ExprKind, Span};
use super::value::Value;
use crate::algebra::{ideal_generator, HalfInt, Scalar, SplitRational};
use crate::catalog::{nov_lfactor, rs_lfactor, theta_lift, Catalog, CatalogArg, Gl2Param, Gsp4Param, StType};
use crate::poles::{
    exceptional_poles, hom_dim, ideals_jk, nov_split, ps_split, spinor_pole_table, subregular_poles, PoleClass,
    PoleEntry, PoleReport,
};
use crate::wdrep::{Block, Character, IrredPart, RamTag, WDRep, WeilPart};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Unknown names, wrong arity, wrong argument kinds.
    Type,
    /// Well-typed input rejected by the mathematics.
    Domain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub span: Span,
    pub kind: ErrorKind,
    pub msg: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ErrorKind::Type => "type error",
            ErrorKind::Domain => "error",
        };
        write!(f, "{what} at {}: {}", self.span, self.msg)
    }
}

impl std::error::Error for EvalError {}

type R<T> = Result<T, EvalError>;

fn type_err<T>(span: Span, msg: impl Into<String>) -> R<T> {
    Err(EvalError {
        span,
        kind: ErrorKind::Type,
        msg: msg.into(),
    })
}

fn domain<E: fmt::Display>(span: Span) -> impl FnOnce(E) -> EvalError {
    move |e| EvalError {
        span,
        kind: ErrorKind::Domain,
        msg: e.to_string(),
    }
}

/// Evaluation context: the catalog used for data-driven GSp(4) types.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub catalog: Catalog,
}

impl Env {
    pub fn new(catalog: Catalog) -> Self {
        Env { catalog }
    }

    pub fn eval(&self, e: &Expr) -> R<Value> {
        let sp = e.span;
        match &e.kind {
            ExprKind::Int(n) => Ok(Value::Scalar(Scalar::from(n.clone()))),
            ExprKind::Name(n) => Ok(match n.as_str() {
                "X" => Value::Split(SplitRational::x()),
                "q" => Value::Scalar(Scalar::sqrt_q_pow(2)),
                _ => Value::Scalar(Scalar::symbol(n)),
            }),
            ExprKind::Tuple(items) => Ok(Value::Tuple(items.iter().map(|i| self.eval(i)).collect::<R<_>>()?)),
            ExprKind::Neg(x) => match self.eval(x)? {
                Value::Scalar(s) => Ok(Value::Scalar(s.neg())),
                Value::Split(f) => Ok(Value::Split(scale(&f, &Scalar::integer(-1)))),
                v => type_err(sp, format!("cannot negate a {}", v.kind())),
            },
            ExprKind::Pow(x, k) => match self.eval(x)? {
                Value::Scalar(s) => Ok(Value::Scalar(s.checked_powi(*k).map_err(domain(sp))?)),
                Value::Split(f) => Ok(Value::Split(f.pow(*k))),
                Value::Char(c) => Ok(Value::Char(c.pow(*k))),
                v => type_err(sp, format!("cannot raise a {} to a power", v.kind())),
            },
            ExprKind::Bin(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                binary(*op, a, b, sp)
            }
            ExprKind::Call(f, args) => self.call(f, args, sp),
        }
    }

    fn call(&self, f: &str, args: &[Expr], sp: Span) -> R<Value> {
        let arity = |n: usize| -> R<()> {
            if args.len() == n {
                Ok(())
            } else {
                type_err(sp, format!("`{f}` takes {n} argument(s), got {}", args.len()))
            }
        };
        let arity_range = |lo: usize, hi: usize| -> R<()> {
            if (lo..=hi).contains(&args.len()) {
                Ok(())
            } else {
                type_err(sp, format!("`{f}` takes {lo} to {hi} arguments, got {}", args.len()))
            }
        };
        let val = |i: usize| self.eval(&args[i]);
        let scalar = |i: usize| to_scalar(val(i)?, args[i].span);
        let chr = |i: usize| to_char(val(i)?, args[i].span);
        let rep = |i: usize| to_rep(val(i)?, args[i].span);
        let split = |i: usize| to_split(val(i)?, args[i].span);
        let gl2 = |i: usize| to_gl2(val(i)?, args[i].span);
        let gsp4 = |i: usize| to_gsp4(val(i)?, args[i].span);
        let irred = |i: usize| to_irred(val(i)?, args[i].span);
        let label = |i: usize| match args[i].name() {
            Some(n) => Ok(n.to_string()),
            None => type_err(args[i].span, "expected a label"),
        };

        let v = match f {
            "unr" => {
                arity(1)?;
                let s = scalar(0)?;
                Value::Char(Character::new(RamTag::identity(), s).map_err(domain(sp))?)
            }
            "ram" => {
                arity(2)?;
                let tag = to_tag(val(0)?, args[0].span)?;
                Value::Char(Character::new(tag, scalar(1)?).map_err(domain(sp))?)
            }
            "abs" => {
                arity(1)?;
                Value::Char(Character::abs(to_halfint(val(0)?, args[0].span)?))
            }
            "irr" => {
                arity_range(3, 4)?;
                let dim = to_u32(val(0)?, args[0].span)?;
                let eta = if args.len() == 4 { Some(chr(3)?) } else { None };
                let r = IrredPart::new(dim, &label(1)?, chr(2)?, eta).map_err(domain(sp))?;
                Value::Rep(WDRep::irred(r))
            }
            "sp" => {
                arity(1)?;
                Value::Rep(WDRep::sp(to_u32(val(0)?, args[0].span)?))
            }
            "rep" => {
                let mut acc = WDRep::zero();
                for i in 0..args.len() {
                    acc = acc.direct_sum(&rep(i)?);
                }
                Value::Rep(acc)
            }
            "dual" => {
                arity(1)?;
                match val(0)? {
                    Value::Char(c) => Value::Char(c.inv()),
                    v => Value::Rep(to_rep(v, args[0].span)?.dual()),
                }
            }
            "twist" => {
                arity(2)?;
                Value::Rep(rep(0)?.twist(&chr(1)?))
            }
            "tensor" => {
                arity(2)?;
                Value::Rep(rep(0)?.tensor(&rep(1)?).map_err(domain(sp))?)
            }
            "similitude_check" => {
                arity(2)?;
                Value::Scalar(Scalar::integer(i64::from(rep(0)?.similitude_check(&chr(1)?))))
            }
            "L" => {
                arity(1)?;
                Value::Split(rep(0)?.lfactor())
            }
            "shift" => {
                arity(2)?;
                Value::Split(split(0)?.shift(to_halfint(val(1)?, args[1].span)?))
            }
            "ideal" => {
                let fs = (0..args.len()).map(split).collect::<R<Vec<_>>>()?;
                Value::Split(ideal_generator(&fs).map_err(domain(sp))?.generator)
            }
            "gl2.ps" | "gl2.ps_red" => {
                arity(2)?;
                let p = Gl2Param::principal_series(chr(0)?, chr(1)?, f == "gl2.ps_red").map_err(domain(sp))?;
                Value::Gl2(p)
            }
            "gl2.st" => {
                arity_range(0, 1)?;
                let chi = if args.is_empty() { Character::trivial() } else { chr(0)? };
                Value::Gl2(Gl2Param::steinberg_twist(chi))
            }
            "gl2.sc" => {
                arity_range(1, 2)?;
                let p = if args.len() == 2 {
                    Gl2Param::supercuspidal(&label(0)?, chr(1)?)
                } else {
                    Gl2Param::from_irred(irred(0)?)
                };
                Value::Gl2(p.map_err(domain(sp))?)
            }
            "gsp4.free" => {
                arity(2)?;
                Value::Gsp4(Gsp4Param::free(rep(0)?, chr(1)?).map_err(domain(sp))?)
            }
            "gsp4.typed" => {
                arity(3)?;
                let t: StType = label(0)?.parse().map_err(domain(args[0].span))?;
                Value::Gsp4(Gsp4Param::new(rep(1)?, chr(2)?, t).map_err(domain(sp))?)
            }
            "gsp4.I" => {
                arity(3)?;
                Value::Gsp4(Gsp4Param::type_i(chr(0)?, chr(1)?, chr(2)?).map_err(domain(sp))?)
            }
            "gsp4.IIIa" => {
                arity(2)?;
                Value::Gsp4(Gsp4Param::type_iiia(chr(0)?, chr(1)?).map_err(domain(sp))?)
            }
            "gsp4.IVa" => {
                arity(1)?;
                Value::Gsp4(Gsp4Param::type_iva(chr(0)?).map_err(domain(sp))?)
            }
            "gsp4.VII" => {
                arity(2)?;
                Value::Gsp4(Gsp4Param::type_vii(irred(0)?, chr(1)?).map_err(domain(sp))?)
            }
            "gsp4.VIIIa" => {
                arity(1)?;
                Value::Gsp4(Gsp4Param::type_viiia(irred(0)?).map_err(domain(sp))?)
            }
            "gsp4.IXa" => {
                arity(1)?;
                Value::Gsp4(Gsp4Param::type_ixa(irred(0)?).map_err(domain(sp))?)
            }
            "gsp4.SC" => {
                arity_range(1, 2)?;
                let p = match args[0].name() {
                    Some(l) if l != "X" => {
                        let chi = if args.len() == 2 { chr(1)? } else { Character::trivial() };
                        Gsp4Param::supercuspidal(l, chi)
                    }
                    _ => {
                        arity(2)?;
                        Gsp4Param::supercuspidal_pair(irred(0)?, irred(1)?)
                    }
                };
                Value::Gsp4(p.map_err(domain(sp))?)
            }
            "gsp4.IIa" | "gsp4.Va" | "gsp4.VIa" | "gsp4.X" | "gsp4.XIa" => {
                let t: StType = f["gsp4.".len()..].parse().map_err(domain(sp))?;
                let Some(sig) = self.catalog.signature(t) else {
                    return type_err(sp, format!("type {t} is missing from the catalog"));
                };
                arity(sig.len())?;
                let mut cargs = Vec::new();
                for (i, k) in sig.iter().enumerate() {
                    cargs.push(match k {
                        crate::catalog::ParamKind::Char => CatalogArg::Char(chr(i)?),
                        crate::catalog::ParamKind::Irrep => CatalogArg::Irrep(irred(i)?),
                    });
                }
                Value::Gsp4(self.catalog.build(t, &cargs).map_err(domain(sp))?)
            }
            "theta" => {
                arity(2)?;
                Value::Gsp4(theta_lift(&gl2(0)?, &gl2(1)?).map_err(domain(sp))?)
            }
            "nov" => {
                arity(2)?;
                Value::Split(nov_lfactor(&gsp4(0)?, &gl2(1)?).map_err(domain(sp))?)
            }
            "rs" => {
                arity(2)?;
                Value::Split(rs_lfactor(&gl2(0)?, &gl2(1)?).map_err(domain(sp))?)
            }
            "poles.exceptional" => {
                arity(2)?;
                Value::Poles(exceptional_poles(&gsp4(0)?, &gl2(1)?).map_err(domain(sp))?)
            }
            "poles.subregular" => {
                arity(1)?;
                Value::Poles(subregular_poles(&gsp4(0)?))
            }
            "poles.table" => {
                arity(1)?;
                Value::Poles(spinor_pole_table(&gsp4(0)?))
            }
            "split.nov" => {
                arity(2)?;
                let (reg, ex) = nov_split(&gsp4(0)?, &gl2(1)?).map_err(domain(sp))?;
                Value::Tuple(vec![Value::Split(reg), Value::Split(ex)])
            }
            "split.ps" => {
                arity(1)?;
                let (ex, sub, kir) = ps_split(&gsp4(0)?);
                Value::Tuple(vec![Value::Split(ex), Value::Split(sub), Value::Split(kir)])
            }
            "ideals" => {
                arity(1)?;
                let (j, k) = ideals_jk(&gsp4(0)?).map_err(domain(sp))?;
                Value::Tuple(vec![Value::Split(j), Value::Split(k)])
            }
            "hom" => {
                arity(3)?;
                let d = hom_dim(&gsp4(0)?, &gl2(1)?, &scalar(2)?).map_err(domain(sp))?;
                Value::Scalar(Scalar::integer(i64::from(d)))
            }
            "report" => {
                let mut entries = Vec::new();
                for (i, a) in args.iter().enumerate() {
                    match val(i)? {
                        Value::Poles(p) if p.entries.len() == 1 => entries.extend(p.entries),
                        _ => return type_err(a.span, "expected pole(...)"),
                    }
                }
                Value::Poles(PoleReport::new(entries))
            }
            "pole" => {
                arity_range(3, 4)?;
                let Some(class) = args[1].name().and_then(PoleClass::from_name) else {
                    return type_err(args[1].span, "expected a pole class");
                };
                let bessel = if args.len() == 4 {
                    match val(3)? {
                        Value::Tuple(v) if v.len() == 2 => {
                            Some((to_char(v[0].clone(), args[3].span)?, to_char(v[1].clone(), args[3].span)?))
                        }
                        _ => return type_err(args[3].span, "expected bessel(...)"),
                    }
                } else {
                    None
                };
                let entry = PoleEntry {
                    root: scalar(0)?,
                    class,
                    witnesses: rep(2)?.blocks().to_vec(),
                    bessel,
                };
                Value::Poles(PoleReport::new(vec![entry]))
            }
            "bessel" => {
                arity(2)?;
                Value::Tuple(vec![Value::Char(chr(0)?), Value::Char(chr(1)?)])
            }
            _ => return type_err(sp, format!("unknown function `{f}`")),
        };
        Ok(v)
    }
}

fn scale(f: &SplitRational, s: &Scalar) -> SplitRational {
    SplitRational::monomial(s.clone(), 0).expect("nonzero scale").mul(f)
}

/// Terms `(power, coefficient)` of a Laurent polynomial in `X` with at most
/// one linear factor, or `None`.
fn x_terms(v: &Value) -> Option<Vec<(i64, Scalar)>> {
    match v {
        Value::Scalar(s) => Some(vec![(0, s.clone())]),
        Value::Split(f) => {
            let facs: Vec<(&Scalar, i64)> = f.factors().collect();
            let (u, k) = (f.unit().clone(), f.xpower());
            match facs[..] {
                [] => Some(vec![(k, u)]),
                [(beta, 1)] => Some(vec![(k, u.clone()), (k + 1, u.mul(beta).neg())]),
                _ => None,
            }
        }
        _ => None,
    }
}

fn linear_sum(a: &Value, b: &Value, negate: bool, sp: Span) -> R<Value> {
    let (Some(ta), Some(tb)) = (x_terms(a), x_terms(b)) else {
        return type_err(sp, format!("cannot add {} and {}", a.kind(), b.kind()));
    };
    let mut terms: std::collections::BTreeMap<i64, Scalar> = Default::default();
    for (k, c) in ta {
        let e = terms.entry(k).or_insert_with(Scalar::zero);
        *e = e.add(&c);
    }
    for (k, c) in tb {
        let c = if negate { c.neg() } else { c };
        let e = terms.entry(k).or_insert_with(Scalar::zero);
        *e = e.add(&c);
    }
    terms.retain(|_, c| !c.is_zero());
    let terms: Vec<(i64, Scalar)> = terms.into_iter().collect();
    match &terms[..] {
        [] => Ok(Value::Scalar(Scalar::zero())),
        [(0, c)] => Ok(Value::Scalar(c.clone())),
        [(k, c)] => Ok(Value::Split(SplitRational::monomial(c.clone(), *k).expect("nonzero"))),
        [(k, c0), (k1, c1)] if *k1 == k + 1 => {
            let beta = c1.div(c0).expect("nonzero").neg();
            let m = SplitRational::monomial(c0.clone(), *k).expect("nonzero");
            Ok(Value::Split(m.mul(&SplitRational::factor(beta, 1))))
        }
        _ => type_err(sp, "sum is not a product of linear factors in X"),
    }
}

fn binary(op: BinOp, a: Value, b: Value, sp: Span) -> R<Value> {
    use Value::*;
    match (op, a, b) {
        (BinOp::Add, Scalar(x), Scalar(y)) => Ok(Scalar(x.add(&y))),
        (BinOp::Sub, Scalar(x), Scalar(y)) => Ok(Scalar(x.sub(&y))),
        (BinOp::Add | BinOp::Sub, a @ (Scalar(_) | Split(_)), b @ (Scalar(_) | Split(_))) => {
            linear_sum(&a, &b, op == BinOp::Sub, sp)
        }
        (BinOp::Add, a @ (Char(_) | Rep(_)), b @ (Char(_) | Rep(_))) => {
            Ok(Rep(to_rep(a, sp)?.direct_sum(&to_rep(b, sp)?)))
        }
        (BinOp::Mul, Scalar(x), Scalar(y)) => Ok(Scalar(x.mul(&y))),
        (BinOp::Div, Scalar(x), Scalar(y)) => Ok(Scalar(x.div(&y).map_err(domain(sp))?)),
        (BinOp::Mul | BinOp::Div, a @ (Scalar(_) | Split(_)), b @ (Scalar(_) | Split(_))) => {
            let (x, y) = (to_split(a, sp)?, to_split(b, sp)?);
            Ok(Split(if op == BinOp::Mul { x.mul(&y) } else { x.div(&y) }))
        }
        (BinOp::Mul | BinOp::Tensor, Char(x), Char(y)) => Ok(Char(x.mul(&y))),
        (BinOp::Div, Char(x), Char(y)) => Ok(Char(x.div(&y))),
        (BinOp::Tensor, Rep(r), Char(c)) | (BinOp::Tensor, Char(c), Rep(r)) => Ok(Rep(r.twist(&c))),
        (BinOp::Tensor, Rep(r), Rep(s)) => Ok(Rep(r.tensor(&s).map_err(domain(sp))?)),
        (op, a, b) => type_err(sp, format!("operator {op:?} is not defined for {} and {}", a.kind(), b.kind())),
    }
}

fn to_scalar(v: Value, sp: Span) -> R<Scalar> {
    match v {
        Value::Scalar(s) => Ok(s),
        v => type_err(sp, format!("expected a scalar, got a {}", v.kind())),
    }
}

fn to_char(v: Value, sp: Span) -> R<Character> {
    match v {
        Value::Char(c) => Ok(c),
        v => type_err(sp, format!("expected a character, got a {}", v.kind())),
    }
}

fn to_rep(v: Value, sp: Span) -> R<WDRep> {
    match v {
        Value::Rep(r) => Ok(r),
        Value::Char(c) => Ok(WDRep::character(c)),
        Value::Gl2(g) => Ok(g.rep().clone()),
        Value::Gsp4(p) => Ok(p.rep().clone()),
        v => type_err(sp, format!("expected a representation, got a {}", v.kind())),
    }
}

fn to_split(v: Value, sp: Span) -> R<SplitRational> {
    match v {
        Value::Split(f) => Ok(f),
        Value::Scalar(s) => SplitRational::monomial(s, 0).map_err(domain(sp)),
        v => type_err(sp, format!("expected a rational function of X, got a {}", v.kind())),
    }
}

fn to_gl2(v: Value, sp: Span) -> R<Gl2Param> {
    match v {
        Value::Gl2(g) => Ok(g),
        v => type_err(sp, format!("expected a GL(2) parameter, got a {}", v.kind())),
    }
}

fn to_gsp4(v: Value, sp: Span) -> R<Gsp4Param> {
    match v {
        Value::Gsp4(p) => Ok(p),
        v => type_err(sp, format!("expected a GSp(4) parameter, got a {}", v.kind())),
    }
}

fn to_irred(v: Value, sp: Span) -> R<IrredPart> {
    let rep = match v {
        Value::Gl2(g) => g.rep().clone(),
        Value::Rep(r) => r,
        v => return type_err(sp, format!("expected an irreducible part, got a {}", v.kind())),
    };
    match rep.blocks() {
        [Block {
            part: WeilPart::Irred(r),
            n: 0,
        }] => Ok(r.clone()),
        _ => type_err(sp, format!("expected a single irreducible part, got {rep}")),
    }
}

fn to_int(v: Value, sp: Span) -> R<num_bigint::BigInt> {
    let s = to_scalar(v, sp)?;
    match s.as_rational() {
        Some(r) if r.is_integer() => Ok(r.to_integer()),
        _ => type_err(sp, format!("expected an integer, got {s}")),
    }
}

fn to_u32(v: Value, sp: Span) -> R<u32> {
    let n = to_int(v, sp)?;
    match n.to_u32() {
        Some(k) if !n.is_negative() => Ok(k),
        _ => type_err(sp, format!("expected a nonnegative integer, got {n}")),
    }
}

fn to_halfint(v: Value, sp: Span) -> R<HalfInt> {
    let s = to_scalar(v, sp)?;
    match s.as_rational() {
        Some(r) => HalfInt::from_rational(&r).map_err(domain(sp)),
        None => type_err(sp, format!("expected a half-integer, got {s}")),
    }
}

/// Ramification tags are written as monomials in their symbols, `1` for none.
fn to_tag(v: Value, sp: Span) -> R<RamTag> {
    let s = to_scalar(v, sp)?;
    let (Some((nm, nc)), Some((dm, dc))) = (s.numer().as_term(), s.denom().as_term()) else {
        return type_err(sp, format!("ramification tag must be a monomial, got {s}"));
    };
    if !(nc.is_integer() && nc.to_integer() == 1.into() && dc.is_integer() && dc.to_integer() == 1.into()) {
        return type_err(sp, format!("ramification tag must be a monomial, got {s}"));
    }
    let pos = nm.factors().iter().map(|(sym, e)| (sym.clone(), *e as i64));
    let neg = dm.factors().iter().map(|(sym, e)| (sym.clone(), -(*e as i64)));
    Ok(RamTag::from_powers(pos.chain(neg)))
}

use std::fmt;

use serde_json::{json, Value as Json};

use crate::algebra::{Scalar, SplitRational};
use crate::catalog::{Gl2Kind, Gl2Param, Gsp4Param};
use crate::poles::{PoleEntry, PoleReport};
use crate::wdrep::{Character, WDRep};

/// Result of evaluating an expression. A split function without `X`
/// equals the scalar it is, a one-line representation its character.
#[derive(Clone, Debug, Eq)]
pub enum Value {
    Scalar(Scalar),
    Char(Character),
    Rep(WDRep),
    Split(SplitRational),
    Poles(PoleReport),
    Gl2(Gl2Param),
    Gsp4(Gsp4Param),
    Tuple(Vec<Value>),
}

impl PartialEq for Value {
    fn eq(&self, o: &Value) -> bool {
        use Value::*;
        match (self, o) {
            (Scalar(a), Scalar(b)) => a == b,
            (Char(a), Char(b)) => a == b,
            (Rep(a), Rep(b)) => a == b,
            (Split(a), Split(b)) => a == b,
            (Poles(a), Poles(b)) => a == b,
            (Gl2(a), Gl2(b)) => a == b,
            (Gsp4(a), Gsp4(b)) => a == b,
            (Tuple(a), Tuple(b)) => a == b,
            (Scalar(s), Split(f)) | (Split(f), Scalar(s)) => {
                f.xpower() == 0 && f.factors().next().is_none() && f.unit() == s
            }
            (Char(c), Rep(r)) | (Rep(r), Char(c)) => *r == WDRep::character(c.clone()),
            _ => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Char(_) => "character",
            Value::Rep(_) => "rep",
            Value::Split(_) => "split",
            Value::Poles(_) => "poles",
            Value::Gl2(_) => "gl2",
            Value::Gsp4(_) => "gsp4",
            Value::Tuple(_) => "tuple",
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Scalar(s) => json!(s.to_string()),
            Value::Char(c) => json!({"tag": c.tag().to_string(), "satake": c.satake().to_string()}),
            Value::Rep(r) => json!({
                "dim": r.dim(),
                "blocks": r.blocks().iter().map(|b| json!({"part": b.part.to_string(), "n": b.n})).collect::<Vec<_>>(),
            }),
            Value::Split(f) => split_json(f),
            Value::Poles(p) => json!({"entries": p.entries.iter().map(entry_json).collect::<Vec<_>>()}),
            Value::Gl2(g) => json!({
                "kind": gl2_kind(g.kind()),
                "rep": g.rep().to_string(),
                "central": g.central().to_string(),
            }),
            Value::Gsp4(p) => json!({
                "type": p.st_type().name(),
                "rep": p.rep().to_string(),
                "similitude": p.similitude().to_string(),
                "theta": p.theta().map(|(a, b)| json!([a.to_string(), b.to_string()])),
            }),
            Value::Tuple(vs) => Json::Array(vs.iter().map(Value::to_json).collect()),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_string(),
            Format::Json => self.to_json().to_string(),
        }
    }
}

fn gl2_kind(k: Gl2Kind) -> &'static str {
    match k {
        Gl2Kind::PrincipalSeries { reducible: false } => "principal-series",
        Gl2Kind::PrincipalSeries { reducible: true } => "principal-series-reducible",
        Gl2Kind::SteinbergTwist => "steinberg-twist",
        Gl2Kind::Supercuspidal => "supercuspidal",
    }
}

fn split_json(f: &SplitRational) -> Json {
    json!({
        "text": f.to_string(),
        "unit": f.unit().to_string(),
        "xpower": f.xpower(),
        "factors": f.factors().map(|(b, e)| json!({"root": b.to_string(), "exponent": e})).collect::<Vec<_>>(),
        "is_lfactor": f.is_lfactor(),
    })
}

fn entry_json(e: &PoleEntry) -> Json {
    json!({
        "root": e.root.to_string(),
        "class": e.class.name(),
        "witnesses": e.witnesses.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "bessel": e.bessel.as_ref().map(|(a, b)| json!([a.to_string(), b.to_string()])),
    })
}

fn fmt_entry(e: &PoleEntry) -> String {
    let w = WDRep::from_blocks(e.witnesses.iter().cloned());
    match &e.bessel {
        Some((l1, l2)) => format!("pole({}, {}, {w}, bessel({l1}, {l2}))", e.root, e.class),
        None => format!("pole({}, {}, {w})", e.root, e.class),
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Char(c) => write!(f, "{c}"),
            Value::Rep(r) => write!(f, "{r}"),
            Value::Split(s) => write!(f, "{s}"),
            Value::Poles(p) => {
                let entries: Vec<String> = p.entries.iter().map(fmt_entry).collect();
                write!(f, "report({})", entries.join(", "))
            }
            Value::Gl2(g) => write!(f, "{g}"),
            Value::Gsp4(p) => write!(f, "{p}"),
            Value::Tuple(vs) => {
                let items: Vec<String> = vs.iter().map(Value::to_string).collect();
                write!(f, "({})", items.join(", "))
            }
        }
    }
}

//! GL(2) and GSp(4) parameter shapes, theta lifts, and the GSp(4) x GL(2)
//! and GL(2) x GL(2) L-factors computed from them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::algebra::{AlgebraError, HalfInt, Scalar, SplitRational, Symbol};
use crate::wdrep::{Block, Character, IrredPart, RepError, WDRep, WeilPart};

/// The catalog entries shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../data/catalog-v1.txt");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("similitude check failed: {0}")]
    SimilitudeViolation(String),
    #[error("type constraint violated: {0}")]
    TypeConstraintViolation(String),
    #[error("central characters differ: {0} vs {1}")]
    CentralCharacterMismatch(String, String),
    #[error("both parameters are supercuspidal and may be dual up to an unramified twist")]
    UnsupportedPair,
    #[error("unknown GSp(4) type `{0}`")]
    UnknownType(String),
    #[error("catalog data line {line}: {msg}")]
    Data { line: usize, msg: String },
    #[error(transparent)]
    Rep(#[from] RepError),
}

impl From<AlgebraError> for CatalogError {
    fn from(e: AlgebraError) -> Self {
        CatalogError::Rep(RepError::Algebra(e))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gl2Kind {
    PrincipalSeries { reducible: bool },
    SteinbergTwist,
    Supercuspidal,
}

/// Parameter of an irreducible generic representation of GL(2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gl2Param {
    rep: WDRep,
    central: Character,
    kind: Gl2Kind,
}

impl Gl2Param {
    /// `chi1 + chi2`. Rejected when `chi1/chi2 = |.|^{+-1}` unless `reducible`.
    pub fn principal_series(chi1: Character, chi2: Character, reducible: bool) -> Result<Self, CatalogError> {
        let r = chi1.div(&chi2);
        let at_reducibility = r.is_abs_power(HalfInt::ONE) || r.is_abs_power(-HalfInt::ONE);
        if at_reducibility && !reducible {
            return Err(CatalogError::TypeConstraintViolation(format!(
                "{chi1} / {chi2} = |.|^(+-1) needs the reducible flag"
            )));
        }
        let central = chi1.mul(&chi2);
        Ok(Gl2Param {
            rep: WDRep::character(chi1).direct_sum(&WDRep::character(chi2)),
            central,
            kind: Gl2Kind::PrincipalSeries { reducible },
        })
    }

    /// `chi (x) sp(1)`.
    pub fn steinberg_twist(chi: Character) -> Self {
        Gl2Param {
            central: chi.pow(2),
            rep: WDRep::block(Block::char(chi, 1)),
            kind: Gl2Kind::SteinbergTwist,
        }
    }

    pub fn steinberg() -> Self {
        Gl2Param::steinberg_twist(Character::trivial())
    }

    pub fn supercuspidal(label: &str, det: Character) -> Result<Self, CatalogError> {
        Gl2Param::from_irred(IrredPart::new(2, label, det, None)?)
    }

    pub fn from_irred(rho: IrredPart) -> Result<Self, CatalogError> {
        if rho.dim() != 2 {
            return Err(CatalogError::TypeConstraintViolation(format!(
                "supercuspidal GL(2) parameter needs a 2-dimensional part, got {}",
                rho.dim()
            )));
        }
        Ok(Gl2Param {
            central: rho.det().clone(),
            rep: WDRep::irred(rho),
            kind: Gl2Kind::Supercuspidal,
        })
    }

    pub fn rep(&self) -> &WDRep {
        &self.rep
    }

    pub fn central(&self) -> &Character {
        &self.central
    }

    pub fn kind(&self) -> Gl2Kind {
        self.kind
    }

    pub fn is_supercuspidal(&self) -> bool {
        self.kind == Gl2Kind::Supercuspidal
    }

    /// The 2-dimensional irreducible part of a supercuspidal parameter.
    pub fn irred(&self) -> Option<&IrredPart> {
        match (&self.kind, &self.rep.blocks()[0].part) {
            (Gl2Kind::Supercuspidal, WeilPart::Irred(r)) => Some(r),
            _ => None,
        }
    }

    pub fn lfactor(&self) -> SplitRational {
        self.rep.lfactor()
    }

    pub fn map_scalars(&self, f: &mut impl FnMut(&Scalar) -> Result<Scalar, AlgebraError>) -> Result<Gl2Param, CatalogError> {
        Ok(Gl2Param {
            rep: self.rep.map_scalars(f)?,
            central: self.central.map_scalars(f)?,
            kind: self.kind,
        })
    }
}

impl fmt::Display for Gl2Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.rep.blocks();
        match self.kind {
            Gl2Kind::PrincipalSeries { reducible } => {
                let name = if reducible { "gl2.ps_red" } else { "gl2.ps" };
                write!(f, "{name}({}, {})", b[0].part, b[1].part)
            }
            Gl2Kind::SteinbergTwist => {
                let chi = b[0].part.as_char().expect("character part");
                if chi.is_trivial() {
                    f.write_str("gl2.st()")
                } else {
                    write!(f, "gl2.st({chi})")
                }
            }
            Gl2Kind::Supercuspidal => {
                let r = self.irred().expect("irreducible part");
                if r.twist_char().is_trivial() && !r.is_dual_label() {
                    write!(f, "gl2.sc({}, {})", r.label(), r.det())
                } else {
                    write!(f, "gl2.sc({r})")
                }
            }
        }
    }
}

/// Generic GSp(4) types, plus the unconstrained `Free` shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StType {
    I,
    IIa,
    IIIa,
    IVa,
    Va,
    VIa,
    VII,
    VIIIa,
    IXa,
    X,
    XIa,
    SC,
    Free,
}

impl StType {
    pub const ALL: [StType; 13] = [
        StType::I,
        StType::IIa,
        StType::IIIa,
        StType::IVa,
        StType::Va,
        StType::VIa,
        StType::VII,
        StType::VIIIa,
        StType::IXa,
        StType::X,
        StType::XIa,
        StType::SC,
        StType::Free,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StType::I => "I",
            StType::IIa => "IIa",
            StType::IIIa => "IIIa",
            StType::IVa => "IVa",
            StType::Va => "Va",
            StType::VIa => "VIa",
            StType::VII => "VII",
            StType::VIIIa => "VIIIa",
            StType::IXa => "IXa",
            StType::X => "X",
            StType::XIa => "XIa",
            StType::SC => "SC",
            StType::Free => "FREE",
        }
    }

    /// Types whose shape comes from the catalog data file.
    pub fn is_data_driven(self) -> bool {
        matches!(self, StType::IIa | StType::Va | StType::VIa | StType::X | StType::XIa)
    }
}

impl fmt::Display for StType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StType {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StType::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s || (s == "free" && *t == StType::Free))
            .ok_or_else(|| CatalogError::UnknownType(s.to_string()))
    }
}

/// Parameter of a generic representation of GSp(4).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gsp4Param {
    rep: WDRep,
    similitude: Character,
    st_type: StType,
    theta: Option<Box<(Gl2Param, Gl2Param)>>,
}

impl Gsp4Param {
    /// Checks `dim = 4` and `rep = rep^dual (x) similitude`.
    pub fn new(rep: WDRep, similitude: Character, st_type: StType) -> Result<Self, CatalogError> {
        if rep.dim() != 4 {
            return Err(CatalogError::TypeConstraintViolation(format!(
                "GSp(4) parameter must be 4-dimensional, got {} ({rep})",
                rep.dim()
            )));
        }
        if !rep.similitude_check(&similitude) {
            return Err(CatalogError::SimilitudeViolation(format!(
                "{rep} is not symplectic with similitude {similitude}"
            )));
        }
        Ok(Gsp4Param {
            rep,
            similitude,
            st_type,
            theta: None,
        })
    }

    pub fn free(rep: WDRep, similitude: Character) -> Result<Self, CatalogError> {
        Gsp4Param::new(rep, similitude, StType::Free)
    }

    /// Type I with lines `l1, l2, chi/l1, chi/l2`.
    pub fn type_i(l1: Character, l2: Character, chi: Character) -> Result<Self, CatalogError> {
        let lines = [l1.clone(), l2.clone(), chi.div(&l1), chi.div(&l2)];
        Gsp4Param::new(WDRep::from_blocks(lines.map(|c| Block::char(c, 0))), chi, StType::I)
    }

    /// `a (x) sp(1) + b (x) sp(1)` with `a != b`.
    pub fn type_iiia(a: Character, b: Character) -> Result<Self, CatalogError> {
        if a == b {
            return Err(CatalogError::TypeConstraintViolation(format!(
                "IIIa needs distinct characters, got {a} twice"
            )));
        }
        let sim = a.mul(&b);
        Gsp4Param::new(WDRep::from_blocks([Block::char(a, 1), Block::char(b, 1)]), sim, StType::IIIa)
    }

    /// `chi (x) sp(3)`.
    pub fn type_iva(chi: Character) -> Result<Self, CatalogError> {
        let sim = chi.pow(2);
        Gsp4Param::new(WDRep::block(Block::char(chi, 3)), sim, StType::IVa)
    }

    /// `rho + rho (x) xi`, `xi` nontrivial.
    pub fn type_vii(rho: IrredPart, xi: Character) -> Result<Self, CatalogError> {
        check_two_dim(&rho, "VII")?;
        if xi.is_trivial() {
            return Err(CatalogError::TypeConstraintViolation("VII needs a nontrivial twist".into()));
        }
        let sim = rho.det().mul(&xi);
        let rep = WDRep::from_blocks([
            Block::new(WeilPart::Irred(rho.clone()), 0),
            Block::new(WeilPart::Irred(rho.twisted(&xi)), 0),
        ]);
        Gsp4Param::new(rep, sim, StType::VII)
    }

    /// `rho + rho`.
    pub fn type_viiia(rho: IrredPart) -> Result<Self, CatalogError> {
        check_two_dim(&rho, "VIIIa")?;
        let sim = rho.det().clone();
        let b = Block::new(WeilPart::Irred(rho), 0);
        Gsp4Param::new(WDRep::from_blocks([b.clone(), b]), sim, StType::VIIIa)
    }

    /// `rho (x) sp(1)`.
    pub fn type_ixa(rho: IrredPart) -> Result<Self, CatalogError> {
        check_two_dim(&rho, "IXa")?;
        let sim = rho.det().clone();
        Gsp4Param::new(WDRep::block(Block::new(WeilPart::Irred(rho), 1)), sim, StType::IXa)
    }

    /// Irreducible 4-dimensional symplectic part with similitude `chi`.
    pub fn supercuspidal(label: &str, chi: Character) -> Result<Self, CatalogError> {
        let rho = IrredPart::new(4, label, chi.pow(2), Some(chi.inv()))?;
        Gsp4Param::new(WDRep::irred(rho), chi, StType::SC)
    }

    /// `rho1 + rho2`, distinct with equal determinant.
    pub fn supercuspidal_pair(rho1: IrredPart, rho2: IrredPart) -> Result<Self, CatalogError> {
        check_two_dim(&rho1, "SC")?;
        check_two_dim(&rho2, "SC")?;
        if rho1 == rho2 {
            return Err(CatalogError::TypeConstraintViolation("SC needs two distinct parts".into()));
        }
        if rho1.det() != rho2.det() {
            return Err(CatalogError::TypeConstraintViolation(format!(
                "SC needs equal determinants, got {} and {}",
                rho1.det(),
                rho2.det()
            )));
        }
        let sim = rho1.det().clone();
        let rep = WDRep::from_blocks([WeilPart::Irred(rho1), WeilPart::Irred(rho2)].map(|p| Block::new(p, 0)));
        Gsp4Param::new(rep, sim, StType::SC)
    }

    pub fn rep(&self) -> &WDRep {
        &self.rep
    }

    pub fn similitude(&self) -> &Character {
        &self.similitude
    }

    pub fn st_type(&self) -> StType {
        self.st_type
    }

    pub fn theta(&self) -> Option<(&Gl2Param, &Gl2Param)> {
        self.theta.as_deref().map(|(a, b)| (a, b))
    }

    /// Spinor L-factor.
    pub fn lfactor(&self) -> SplitRational {
        self.rep.lfactor()
    }

    pub fn map_scalars(&self, f: &mut impl FnMut(&Scalar) -> Result<Scalar, AlgebraError>) -> Result<Gsp4Param, CatalogError> {
        let theta = match &self.theta {
            Some(t) => Some(Box::new((t.0.map_scalars(f)?, t.1.map_scalars(f)?))),
            None => None,
        };
        Ok(Gsp4Param {
            rep: self.rep.map_scalars(f)?,
            similitude: self.similitude.map_scalars(f)?,
            st_type: self.st_type,
            theta,
        })
    }

    /// Substitutes rational values for symbols. The shape is kept; callers
    /// re-run the classifiers on the result.
    pub fn specialize(&self, values: &HashMap<Symbol, BigRational>) -> Result<Gsp4Param, CatalogError> {
        self.map_scalars(&mut |s| s.specialize(values))
    }
}

impl fmt::Display for Gsp4Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.theta, self.st_type) {
            (Some(t), _) => write!(f, "theta({}, {})", t.0, t.1),
            (None, StType::Free) => write!(f, "gsp4.free({}, {})", self.rep, self.similitude),
            (None, t) => write!(f, "gsp4.typed({t}, {}, {})", self.rep, self.similitude),
        }
    }
}

fn check_two_dim(rho: &IrredPart, ty: &str) -> Result<(), CatalogError> {
    if rho.dim() == 2 {
        Ok(())
    } else {
        Err(CatalogError::TypeConstraintViolation(format!(
            "{ty} needs 2-dimensional irreducible parts, got dimension {}",
            rho.dim()
        )))
    }
}

/// `theta(tau1 (x) tau2)`: parameter `rep(tau1) + rep(tau2)`.
pub fn theta_lift(t1: &Gl2Param, t2: &Gl2Param) -> Result<Gsp4Param, CatalogError> {
    if t1.central != t2.central {
        return Err(CatalogError::CentralCharacterMismatch(
            t1.central.to_string(),
            t2.central.to_string(),
        ));
    }
    let mut p = Gsp4Param::free(t1.rep.direct_sum(&t2.rep), t1.central.clone())?;
    p.theta = Some(Box::new((t1.clone(), t2.clone())));
    Ok(p)
}

/// `L(phi_pi (x) phi_sigma)`.
pub fn nov_lfactor(pi: &Gsp4Param, sigma: &Gl2Param) -> Result<SplitRational, CatalogError> {
    Ok(pi.rep.tensor_lfactor(&sigma.rep)?)
}

/// `L(tau x sigma)` for GL(2) x GL(2).
pub fn rs_lfactor(tau: &Gl2Param, sigma: &Gl2Param) -> Result<SplitRational, CatalogError> {
    match tau.rep.tensor_lfactor(&sigma.rep) {
        Ok(l) => Ok(l),
        Err(RepError::UnsupportedTensor(_, _)) => Err(CatalogError::UnsupportedPair),
        Err(e) => Err(e.into()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Char,
    Irrep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Char(String, i64),
    Det(String),
    Irrep(String),
}

#[derive(Clone, Debug)]
struct Entry {
    params: Vec<(String, ParamKind)>,
    nontrivial: Vec<String>,
    blocks: Vec<(u32, Vec<Token>)>,
    similitude: Vec<Token>,
}

/// Argument supplied to a data-driven type constructor.
#[derive(Clone, Debug)]
pub enum CatalogArg {
    Char(Character),
    Irrep(IrredPart),
}

/// Data-driven GSp(4) shapes loaded from the versioned text format.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<StType, Entry>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::parse(DEFAULT_CATALOG).expect("bundled catalog parses")
    }
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let err = |line: usize, msg: &str| CatalogError::Data {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, "lfac-catalog v1")) => {}
            Some((i, _)) => return Err(err(i, "expected header `lfac-catalog v1`")),
            None => return Err(err(0, "empty catalog")),
        }
        let mut entries = BTreeMap::new();
        let mut current: Option<(StType, Entry)> = None;
        for (i, line) in lines {
            let mut words = line.split_whitespace();
            let head = words.next().unwrap_or_default();
            let rest: Vec<&str> = words.collect();
            if head == "type" {
                if current.is_some() {
                    return Err(err(i, "missing `end` before new type"));
                }
                let [name] = rest[..] else {
                    return Err(err(i, "expected `type NAME`"));
                };
                let t: StType = name.parse().map_err(|_| err(i, "unknown type name"))?;
                if !t.is_data_driven() {
                    return Err(err(i, "type is built into the engine"));
                }
                let entry = Entry {
                    params: Vec::new(),
                    nontrivial: Vec::new(),
                    blocks: Vec::new(),
                    similitude: Vec::new(),
                };
                current = Some((t, entry));
                continue;
            }
            let Some((t, entry)) = current.as_mut() else {
                return Err(err(i, "statement outside a type entry"));
            };
            match head {
                "param" => {
                    let [name, kind] = rest[..] else {
                        return Err(err(i, "expected `param NAME char|irrep`"));
                    };
                    let kind = match kind {
                        "char" => ParamKind::Char,
                        "irrep" => ParamKind::Irrep,
                        _ => return Err(err(i, "parameter kind must be char or irrep")),
                    };
                    entry.params.push((name.to_string(), kind));
                }
                "nontrivial" => {
                    let [name] = rest[..] else {
                        return Err(err(i, "expected `nontrivial NAME`"));
                    };
                    if !entry.params.iter().any(|p| p.0 == name && p.1 == ParamKind::Char) {
                        return Err(err(i, "`nontrivial` needs a character parameter"));
                    }
                    entry.nontrivial.push(name.to_string());
                }
                "block" => {
                    let Some((n, toks)) = rest.split_first() else {
                        return Err(err(i, "expected `block N TOKENS`"));
                    };
                    let n: u32 = n.parse().map_err(|_| err(i, "bad block index"))?;
                    let toks = parse_tokens(toks, &entry.params).map_err(|m| err(i, &m))?;
                    if toks.iter().filter(|t| matches!(t, Token::Irrep(_))).count() > 1 {
                        return Err(err(i, "at most one irrep per block"));
                    }
                    entry.blocks.push((n, toks));
                }
                "similitude" => {
                    let toks = parse_tokens(&rest, &entry.params).map_err(|m| err(i, &m))?;
                    if toks.iter().any(|t| matches!(t, Token::Irrep(_))) {
                        return Err(err(i, "similitude must be a character"));
                    }
                    entry.similitude = toks;
                }
                "end" => {
                    let (t, entry) = current.take().expect("inside entry");
                    entries.insert(t, entry);
                }
                _ => return Err(err(i, &format!("unknown statement `{head}` in type {t}"))),
            }
        }
        if current.is_some() {
            return Err(err(text.lines().count(), "unterminated type entry"));
        }
        Ok(Catalog { entries })
    }

    pub fn types(&self) -> impl Iterator<Item = StType> + '_ {
        self.entries.keys().copied()
    }

    pub fn signature(&self, t: StType) -> Option<Vec<ParamKind>> {
        self.entries.get(&t).map(|e| e.params.iter().map(|p| p.1).collect())
    }

    pub fn build(&self, t: StType, args: &[CatalogArg]) -> Result<Gsp4Param, CatalogError> {
        let entry = self.entries.get(&t).ok_or_else(|| CatalogError::UnknownType(t.to_string()))?;
        if args.len() != entry.params.len() {
            return Err(CatalogError::TypeConstraintViolation(format!(
                "{t} takes {} arguments, got {}",
                entry.params.len(),
                args.len()
            )));
        }
        let mut chars = HashMap::new();
        let mut irreps = HashMap::new();
        for ((name, kind), arg) in entry.params.iter().zip(args) {
            match (kind, arg) {
                (ParamKind::Char, CatalogArg::Char(c)) => {
                    chars.insert(name.as_str(), c.clone());
                }
                (ParamKind::Irrep, CatalogArg::Irrep(r)) => {
                    check_two_dim(r, t.name())?;
                    irreps.insert(name.as_str(), r.clone());
                }
                _ => {
                    return Err(CatalogError::TypeConstraintViolation(format!(
                        "{t}: argument `{name}` has the wrong kind"
                    )))
                }
            }
        }
        for name in &entry.nontrivial {
            if chars[name.as_str()].is_trivial() {
                return Err(CatalogError::TypeConstraintViolation(format!(
                    "{t}: `{name}` must be nontrivial"
                )));
            }
        }
        let product = |toks: &[Token]| {
            let mut c = Character::trivial();
            let mut irrep = None;
            for tok in toks {
                match tok {
                    Token::Char(n, k) => c = c.mul(&chars[n.as_str()].pow(*k)),
                    Token::Det(n) => c = c.mul(irreps[n.as_str()].det()),
                    Token::Irrep(n) => irrep = Some(irreps[n.as_str()].clone()),
                }
            }
            match irrep {
                Some(r) => WeilPart::Irred(r.twisted(&c)),
                None => WeilPart::Char(c),
            }
        };
        let rep = WDRep::from_blocks(entry.blocks.iter().map(|(n, toks)| Block::new(product(toks), *n)));
        let WeilPart::Char(sim) = product(&entry.similitude) else {
            unreachable!("similitude tokens are characters")
        };
        Gsp4Param::new(rep, sim, t)
    }
}

fn parse_tokens(words: &[&str], params: &[(String, ParamKind)]) -> Result<Vec<Token>, String> {
    let kind = |n: &str| params.iter().find(|p| p.0 == n).map(|p| p.1);
    words
        .iter()
        .map(|w| {
            if let Some(n) = w.strip_prefix("det:") {
                return match kind(n) {
                    Some(ParamKind::Irrep) => Ok(Token::Det(n.to_string())),
                    _ => Err(format!("`{n}` is not an irrep parameter")),
                };
            }
            let (name, k) = match w.split_once('^') {
                Some((n, k)) => (n, k.parse::<i64>().map_err(|_| format!("bad exponent in `{w}`"))?),
                None => (*w, 1),
            };
            match kind(name) {
                Some(ParamKind::Char) => Ok(Token::Char(name.to_string(), k)),
                Some(ParamKind::Irrep) if k == 1 => Ok(Token::Irrep(name.to_string())),
                Some(ParamKind::Irrep) => Err(format!("irrep `{name}` cannot take a power")),
                None => Err(format!("unknown parameter `{name}`")),
            }
        })
        .collect()
}

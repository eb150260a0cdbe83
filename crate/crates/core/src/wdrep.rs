//! Characters of `F^x` and Weil-Deligne representations as multisets of
//! blocks `rho (x) sp(n)`.
//!
//! Conventions: `|.|^t` is the unramified character with Satake value
//! `v^{-2t}`, and `sp(n)` carries Frobenius eigenvalues `q^{-n/2}, ..., q^{n/2}`,
//! so `L(unr(alpha) (x) sp(n)) = 1/(1 - alpha v^{-n} X)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlgebraError, HalfInt, Scalar, SplitRational, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("tensor product of two irreducible Weil parts ({0} and {1}) is not supported")]
    UnsupportedTensor(String, String),
    #[error("Satake value of a character must be nonzero")]
    ZeroSatake,
    #[error("irreducible Weil parts need dimension at least 2, got {0}")]
    BadIrredDim(u32),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Element of the free abelian group on ramification symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamTag(BTreeMap<Symbol, i64>);

impl RamTag {
    pub fn identity() -> Self {
        RamTag::default()
    }

    pub fn symbol(name: &str) -> Self {
        RamTag::from_powers([(Symbol::new(name), 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Symbol, i64)>) -> Self {
        let mut t = RamTag::default();
        for (s, e) in powers {
            *t.0.entry(s).or_insert(0) += e;
        }
        t.0.retain(|_, e| *e != 0);
        t
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> impl Iterator<Item = (&Symbol, i64)> {
        self.0.iter().map(|(s, e)| (s, *e))
    }

    pub fn mul(&self, o: &RamTag) -> RamTag {
        RamTag::from_powers(self.0.iter().chain(o.0.iter()).map(|(s, e)| (s.clone(), *e)))
    }

    pub fn pow(&self, k: i64) -> RamTag {
        RamTag::from_powers(self.0.iter().map(|(s, e)| (s.clone(), e * k)))
    }
}

impl fmt::Display for RamTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Smooth character of `F^x`: ramification tag plus Satake value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    tag: RamTag,
    satake: Scalar,
}

impl Character {
    pub fn new(tag: RamTag, satake: Scalar) -> Result<Self, RepError> {
        if satake.is_zero() {
            return Err(RepError::ZeroSatake);
        }
        Ok(Character { tag, satake })
    }

    pub fn trivial() -> Self {
        Character::unr(Scalar::one())
    }

    /// Unramified character with the given Satake value.
    pub fn unr(satake: Scalar) -> Self {
        assert!(!satake.is_zero(), "Satake value must be nonzero");
        Character {
            tag: RamTag::identity(),
            satake,
        }
    }

    pub fn unr_symbol(name: &str) -> Self {
        Character::unr(Scalar::symbol(name))
    }

    /// `|.|^t`.
    pub fn abs(t: HalfInt) -> Self {
        Character::unr(Scalar::sqrt_q_pow(-t.twice()))
    }

    pub fn tag(&self) -> &RamTag {
        &self.tag
    }

    pub fn satake(&self) -> &Scalar {
        &self.satake
    }

    pub fn is_unramified(&self) -> bool {
        self.tag.is_identity()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_unramified() && self.satake.is_one()
    }

    pub fn mul(&self, o: &Character) -> Character {
        Character {
            tag: self.tag.mul(&o.tag),
            satake: self.satake.mul(&o.satake),
        }
    }

    pub fn inv(&self) -> Character {
        Character {
            tag: self.tag.pow(-1),
            satake: self.satake.inv().expect("nonzero Satake value"),
        }
    }

    pub fn div(&self, o: &Character) -> Character {
        self.mul(&o.inv())
    }

    pub fn pow(&self, k: i64) -> Character {
        Character {
            tag: self.tag.pow(k),
            satake: self.satake.powi(k),
        }
    }

    /// Equality with `|.|^t`.
    pub fn is_abs_power(&self, t: HalfInt) -> bool {
        *self == Character::abs(t)
    }

    pub fn map_scalars(&self, f: &mut impl FnMut(&Scalar) -> Result<Scalar, AlgebraError>) -> Result<Character, RepError> {
        Character::new(self.tag.clone(), f(&self.satake)?)
    }
}

/// `char_mul` of the operation list.
pub fn char_mul(a: &Character, b: &Character) -> Character {
    a.mul(b)
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tag.is_identity() {
            write!(f, "unr({})", self.satake)
        } else {
            write!(f, "ram({}, {})", self.tag, self.satake)
        }
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formal irreducible Weil representation of dimension at least 2, stored as
/// `base (x) twist` where `base` is a named representation (or its dual).
///
/// When the base carries a known duality twist `eta` (`base^dual = base (x) eta`),
/// duals are folded back onto the base and the `dual` flag stays false. For
/// dimension 2 this twist is always `det(base)^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrredPart {
    dim: u32,
    label: String,
    dual: bool,
    twist: Character,
    det: Character,
    dual_twist: Option<Character>,
}

impl IrredPart {
    /// Named irreducible with determinant `det`. For `dim = 2` the duality
    /// twist is derived; for other dimensions it may be declared.
    pub fn new(dim: u32, label: &str, det: Character, dual_twist: Option<Character>) -> Result<Self, RepError> {
        if dim < 2 {
            return Err(RepError::BadIrredDim(dim));
        }
        let dual_twist = if dim == 2 { Some(det.inv()) } else { dual_twist };
        Ok(IrredPart {
            dim,
            label: label.to_string(),
            dual: false,
            twist: Character::trivial(),
            det,
            dual_twist,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_dual_label(&self) -> bool {
        self.dual
    }

    pub fn twist_char(&self) -> &Character {
        &self.twist
    }

    pub fn det(&self) -> &Character {
        &self.det
    }

    pub fn dual_twist(&self) -> Option<&Character> {
        self.dual_twist.as_ref()
    }

    /// Determinant of the untwisted base.
    pub fn base_det(&self) -> Character {
        self.det.div(&self.twist.pow(self.dim as i64))
    }

    pub fn twisted(&self, chi: &Character) -> IrredPart {
        IrredPart {
            twist: self.twist.mul(chi),
            det: self.det.mul(&chi.pow(self.dim as i64)),
            ..self.clone()
        }
    }

    pub fn dual(&self) -> IrredPart {
        match &self.dual_twist {
            Some(eta) => IrredPart {
                twist: eta.mul(&self.twist.inv()),
                det: self.det.inv(),
                ..self.clone()
            },
            None => IrredPart {
                dual: !self.dual,
                twist: self.twist.inv(),
                det: self.det.inv(),
                ..self.clone()
            },
        }
    }

    /// Same base (label and dual flag) up to twist.
    pub fn same_base(&self, o: &IrredPart) -> bool {
        self.dim == o.dim && self.label == o.label && self.dual == o.dual
    }

    /// True if `self` is isomorphic to `o` twisted by an unramified character.
    pub fn is_unramified_twist_of(&self, o: &IrredPart) -> bool {
        self.same_base(o) && self.twist.div(&o.twist).is_unramified()
    }

    pub fn map_scalars(&self, f: &mut impl FnMut(&Scalar) -> Result<Scalar, AlgebraError>) -> Result<IrredPart, RepError> {
        Ok(IrredPart {
            twist: self.twist.map_scalars(f)?,
            det: self.det.map_scalars(f)?,
            dual_twist: match &self.dual_twist {
                Some(c) => Some(c.map_scalars(f)?),
                None => None,
            },
            ..self.clone()
        })
    }
}

impl fmt::Display for IrredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base_det = if self.dual {
            self.base_det().inv()
        } else {
            self.base_det()
        };
        let mut base = match (&self.dual_twist, self.dim) {
            (Some(eta), d) if d != 2 => {
                let eta = if self.dual { eta.inv() } else { eta.clone() };
                format!("irr({}, {}, {}, {})", self.dim, self.label, base_det, eta)
            }
            _ => format!("irr({}, {}, {})", self.dim, self.label, base_det),
        };
        if self.dual {
            base = format!("dual({base})");
        }
        if self.twist.is_trivial() {
            f.write_str(&base)
        } else {
            write!(f, "{base} x {}", self.twist)
        }
    }
}

impl fmt::Debug for IrredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeilPart {
    Char(Character),
    Irred(IrredPart),
}

impl WeilPart {
    pub fn dim(&self) -> u32 {
        match self {
            WeilPart::Char(_) => 1,
            WeilPart::Irred(r) => r.dim,
        }
    }

    pub fn dual(&self) -> WeilPart {
        match self {
            WeilPart::Char(c) => WeilPart::Char(c.inv()),
            WeilPart::Irred(r) => WeilPart::Irred(r.dual()),
        }
    }

    pub fn twist(&self, chi: &Character) -> WeilPart {
        match self {
            WeilPart::Char(c) => WeilPart::Char(c.mul(chi)),
            WeilPart::Irred(r) => WeilPart::Irred(r.twisted(chi)),
        }
    }

    pub fn as_char(&self) -> Option<&Character> {
        match self {
            WeilPart::Char(c) => Some(c),
            WeilPart::Irred(_) => None,
        }
    }

    pub fn tensor(&self, o: &WeilPart) -> Result<WeilPart, RepError> {
        match (self, o) {
            (WeilPart::Char(a), p) | (p, WeilPart::Char(a)) => Ok(p.twist(a)),
            (WeilPart::Irred(a), WeilPart::Irred(b)) => {
                Err(RepError::UnsupportedTensor(a.to_string(), b.to_string()))
            }
        }
    }
}

impl fmt::Display for WeilPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeilPart::Char(c) => write!(f, "{c}"),
            WeilPart::Irred(r) => write!(f, "{r}"),
        }
    }
}

/// `part (x) sp(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub part: WeilPart,
    pub n: u32,
}

impl Block {
    pub fn new(part: WeilPart, n: u32) -> Self {
        Block { part, n }
    }

    pub fn char(chi: Character, n: u32) -> Self {
        Block::new(WeilPart::Char(chi), n)
    }

    pub fn dim(&self) -> u32 {
        (self.n + 1) * self.part.dim()
    }

    /// `1/(1 - alpha v^{-n} X)` for an unramified character part, else 1.
    pub fn lfactor(&self) -> SplitRational {
        match &self.part {
            WeilPart::Char(c) if c.is_unramified() => {
                SplitRational::euler(c.satake().mul(&Scalar::sqrt_q_pow(-(self.n as i64))))
            }
            _ => SplitRational::one(),
        }
    }

    pub fn unramified_satake(&self) -> Option<&Scalar> {
        match &self.part {
            WeilPart::Char(c) if c.is_unramified() => Some(c.satake()),
            _ => None,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.part, self.n) {
            (p, 0) => write!(f, "{p}"),
            (WeilPart::Char(c), n) if c.is_trivial() => write!(f, "sp({n})"),
            (p, n) => write!(f, "{p} x sp({n})"),
        }
    }
}

/// Whether `s` could be an unramified twist of `r^dual`. Distinct labels are
/// independent; equal labels are decided through the twists when the duality
/// twist is known.
fn may_pair_unramified(r: &IrredPart, s: &IrredPart) -> bool {
    if r.dim != s.dim || r.label != s.label {
        return false;
    }
    let rd = r.dual();
    if rd.dual == s.dual {
        s.twist.div(&rd.twist).is_unramified()
    } else {
        // undetermined relation between a base and its dual
        true
    }
}

/// Clebsch-Gordan rule `sp(m) (x) sp(n) = sp(m+n) + sp(m+n-2) + ... + sp(|m-n|)`,
/// listed in decreasing order.
pub fn sp_tensor(m: u32, n: u32) -> Vec<u32> {
    let lo = m.abs_diff(n);
    (0..=m.min(n)).map(|k| m + n - 2 * k).filter(|k| *k >= lo).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandKind {
    /// Blocks `unr(alpha) (x) sp(0)`.
    Line,
    /// Blocks `unr(gamma) (x) sp(1)`.
    Steinberg,
}

/// Weil-Deligne representation as a sorted multiset of blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WDRep {
    blocks: Vec<Block>,
}

impl WDRep {
    pub fn zero() -> Self {
        WDRep::default()
    }

    pub fn from_blocks(blocks: impl IntoIterator<Item = Block>) -> Self {
        let mut blocks: Vec<Block> = blocks.into_iter().collect();
        blocks.sort();
        WDRep { blocks }
    }

    pub fn block(b: Block) -> Self {
        WDRep { blocks: vec![b] }
    }

    pub fn character(chi: Character) -> Self {
        WDRep::block(Block::char(chi, 0))
    }

    /// `sp(n)` with trivial Weil part.
    pub fn sp(n: u32) -> Self {
        WDRep::block(Block::char(Character::trivial(), n))
    }

    pub fn irred(r: IrredPart) -> Self {
        WDRep::block(Block::new(WeilPart::Irred(r), 0))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dim(&self) -> u32 {
        self.blocks.iter().map(Block::dim).sum()
    }

    pub fn is_character_parted(&self) -> bool {
        self.blocks.iter().all(|b| matches!(b.part, WeilPart::Char(_)))
    }

    pub fn direct_sum(&self, o: &WDRep) -> WDRep {
        WDRep::from_blocks(self.blocks.iter().chain(o.blocks.iter()).cloned())
    }

    pub fn dual(&self) -> WDRep {
        WDRep::from_blocks(self.blocks.iter().map(|b| Block::new(b.part.dual(), b.n)))
    }

    pub fn twist(&self, chi: &Character) -> WDRep {
        WDRep::from_blocks(self.blocks.iter().map(|b| Block::new(b.part.twist(chi), b.n)))
    }

    pub fn tensor(&self, o: &WDRep) -> Result<WDRep, RepError> {
        let mut out = Vec::new();
        for a in &self.blocks {
            for b in &o.blocks {
                let part = a.part.tensor(&b.part)?;
                out.extend(sp_tensor(a.n, b.n).into_iter().map(|k| Block::new(part.clone(), k)));
            }
        }
        Ok(WDRep::from_blocks(out))
    }

    /// `L(W, s) = prod_i L(rho_i, s + n_i/2)`.
    pub fn lfactor(&self) -> SplitRational {
        self.blocks
            .iter()
            .fold(SplitRational::one(), |acc, b| acc.mul(&b.lfactor()))
    }

    /// Tensor product, omitting products of two irreducible parts that have
    /// no unramified character summand.
    ///
    /// For irreducible `r`, `s` the product `r (x) s` contains an unramified
    /// character only if `s` is an unramified twist of `r^dual`. Pairs where
    /// that cannot be ruled out are rejected. Line and Steinberg queries and
    /// the L-factor of the result agree with those of the full tensor.
    pub fn tensor_known(&self, o: &WDRep) -> Result<WDRep, RepError> {
        let mut out = Vec::new();
        for a in &self.blocks {
            for b in &o.blocks {
                if let (WeilPart::Irred(r), WeilPart::Irred(s)) = (&a.part, &b.part) {
                    if may_pair_unramified(r, s) {
                        return Err(RepError::UnsupportedTensor(r.to_string(), s.to_string()));
                    }
                    continue;
                }
                let part = a.part.tensor(&b.part)?;
                out.extend(sp_tensor(a.n, b.n).into_iter().map(|k| Block::new(part.clone(), k)));
            }
        }
        Ok(WDRep::from_blocks(out))
    }

    /// `L(self (x) o)`, also defined for most pairs of irreducible parts.
    pub fn tensor_lfactor(&self, o: &WDRep) -> Result<SplitRational, RepError> {
        Ok(self.tensor_known(o)?.lfactor())
    }

    /// Satake values of unramified line (`n = 0`) or Steinberg (`n = 1`) summands.
    pub fn summand_query(&self, kind: SummandKind) -> Vec<Scalar> {
        self.summand_blocks(kind)
            .map(|b| b.unramified_satake().expect("filtered").clone())
            .collect()
    }

    pub fn summand_blocks(&self, kind: SummandKind) -> impl Iterator<Item = &Block> {
        let n = match kind {
            SummandKind::Line => 0,
            SummandKind::Steinberg => 1,
        };
        self.blocks
            .iter()
            .filter(move |b| b.n == n && b.unramified_satake().is_some())
    }

    /// `W = W^dual (x) chi` as block multisets.
    pub fn similitude_check(&self, chi: &Character) -> bool {
        self.dual().twist(chi) == *self
    }

    pub fn map_scalars(&self, f: &mut impl FnMut(&Scalar) -> Result<Scalar, AlgebraError>) -> Result<WDRep, RepError> {
        let mut out = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let part = match &b.part {
                WeilPart::Char(c) => WeilPart::Char(c.map_scalars(f)?),
                WeilPart::Irred(r) => WeilPart::Irred(r.map_scalars(f)?),
            };
            out.push(Block::new(part, b.n));
        }
        Ok(WDRep::from_blocks(out))
    }
}

impl fmt::Display for WDRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("rep()");
        }
        let parts: Vec<String> = self.blocks.iter().map(Block::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unr(x: &str) -> Character {
        Character::unr_symbol(x)
    }

    fn s(x: &str) -> Scalar {
        Scalar::symbol(x)
    }

    fn vpow(k: i64) -> Scalar {
        Scalar::sqrt_q_pow(k)
    }

    #[test]
    fn char_group_law() {
        let h = Character::abs(HalfInt::HALF);
        assert_eq!(h.mul(&h), Character::abs(HalfInt::ONE));
        assert_eq!(*Character::abs(HalfInt::ONE).satake(), vpow(-2));
        let eta = Character::new(RamTag::symbol("eta"), Scalar::one()).unwrap();
        assert!(eta.mul(&eta.inv()).is_trivial());
        assert!(!eta.mul(&eta).is_unramified());
        assert_eq!(char_mul(&unr("a"), &unr("b")), Character::unr(s("a").mul(&s("b"))));
        assert_eq!(Character::new(RamTag::identity(), Scalar::zero()), Err(RepError::ZeroSatake));
    }

    #[test]
    fn dual_examples() {
        let w = WDRep::character(unr("a"));
        assert_eq!(w.dual(), WDRep::character(Character::unr(s("a").inv().unwrap())));
        assert_eq!(WDRep::sp(1).dual(), WDRep::sp(1));
    }

    #[test]
    fn twist_examples() {
        let w = WDRep::block(Block::char(unr("a"), 1));
        let t = w.twist(&Character::abs(HalfInt::HALF));
        assert_eq!(t, WDRep::block(Block::char(Character::unr(s("a").mul(&vpow(-1))), 1)));
        assert_eq!(w.twist(&Character::trivial()), w);
        let chi = unr("c");
        assert_eq!(w.twist(&chi).twist(&chi.inv()), w);
    }

    #[test]
    fn sp_tensor_examples() {
        assert_eq!(sp_tensor(3, 1), vec![4, 2]);
        assert_eq!(sp_tensor(0, 1), vec![1]);
        assert_eq!(sp_tensor(2, 2), vec![4, 2, 0]);
        assert_eq!(sp_tensor(1, 3), vec![4, 2]);
    }

    #[test]
    fn tensor_examples() {
        let w = WDRep::block(Block::char(unr("a"), 1));
        let t = w.tensor(&WDRep::sp(1)).unwrap();
        assert_eq!(
            t,
            WDRep::from_blocks([Block::char(unr("a"), 2), Block::char(unr("a"), 0)])
        );
        let l1 = IrredPart::new(2, "l", unr("c"), None).unwrap();
        let l2 = IrredPart::new(2, "m", unr("d"), None).unwrap();
        let err = WDRep::irred(l1).tensor(&WDRep::irred(l2));
        assert!(matches!(err, Err(RepError::UnsupportedTensor(_, _))));
    }

    #[test]
    fn tensor_with_principal_series_is_sum_of_twists() {
        let phi = WDRep::from_blocks([Block::char(unr("a"), 1), Block::char(unr("b"), 0)]);
        let (c1, c2) = (unr("c"), unr("d"));
        let ps = WDRep::character(c1.clone()).direct_sum(&WDRep::character(c2.clone()));
        assert_eq!(phi.tensor(&ps).unwrap(), phi.twist(&c1).direct_sum(&phi.twist(&c2)));
    }

    #[test]
    fn lfactor_examples() {
        let w = WDRep::block(Block::char(unr("a"), 3));
        assert_eq!(w.lfactor(), SplitRational::euler(s("a").mul(&vpow(-3))));
        let eta = Character::new(RamTag::symbol("eta"), Scalar::one()).unwrap();
        assert!(WDRep::block(Block::char(eta, 2)).lfactor().is_one());
        let w = WDRep::from_blocks([Block::char(unr("a"), 0), Block::char(unr("b"), 1)]);
        let expect = SplitRational::euler(s("a")).mul(&SplitRational::euler(s("b").mul(&vpow(-1))));
        assert_eq!(w.lfactor(), expect);
        assert!(w.lfactor().is_lfactor());
    }

    #[test]
    fn summand_queries() {
        let w = WDRep::from_blocks([Block::char(unr("a"), 0), Block::char(unr("b"), 1)]);
        assert_eq!(w.summand_query(SummandKind::Line), vec![s("a")]);
        assert_eq!(w.summand_query(SummandKind::Steinberg), vec![s("b")]);
        let l = IrredPart::new(2, "l", unr("c"), None).unwrap();
        let w = WDRep::block(Block::new(WeilPart::Irred(l), 1));
        assert!(w.summand_query(SummandKind::Line).is_empty());
        assert!(w.summand_query(SummandKind::Steinberg).is_empty());
    }

    #[test]
    fn similitude_examples() {
        let c = s("c");
        let lines = [s("a"), s("b"), c.div(&s("a")).unwrap(), c.div(&s("b")).unwrap()];
        let w = WDRep::from_blocks(lines.into_iter().map(|x| Block::char(Character::unr(x), 0)));
        assert!(w.similitude_check(&Character::unr(c)));

        let w = WDRep::block(Block::char(unr("a"), 3));
        assert!(w.similitude_check(&Character::unr(s("a").powi(2))));

        let w = WDRep::from_blocks(["a", "b", "c", "d"].map(|x| Block::char(unr(x), 0)));
        let abcd = s("a").mul(&s("b")).mul(&s("c")).mul(&s("d"));
        assert!(!w.similitude_check(&Character::unr(abcd)));
    }

    #[test]
    fn two_dimensional_irreducibles_are_self_dual_up_to_det() {
        let rho = IrredPart::new(2, "l", unr("c"), None).unwrap();
        let w = WDRep::irred(rho.clone());
        assert!(w.similitude_check(&unr("c")));
        assert_eq!(rho.dual().dual(), rho);
        let t = rho.twisted(&unr("t"));
        assert_eq!(t.dual().dual(), t);
        assert_eq!(*t.det(), Character::unr(s("c").mul(&s("t").powi(2))));
    }

    #[test]
    fn undeclared_duals_flip_the_label() {
        let rho = IrredPart::new(3, "r", unr("c"), None).unwrap();
        assert!(rho.dual().is_dual_label());
        assert_eq!(rho.dual().dual(), rho);
        assert_ne!(rho.dual(), rho);
    }

    #[test]
    fn rendering() {
        let w = WDRep::from_blocks([Block::char(unr("a"), 0), Block::char(unr("b"), 1), Block::char(Character::trivial(), 2)]);
        assert_eq!(w.to_string(), "unr(a) + unr(b) x sp(1) + sp(2)");
        let eta = Character::new(RamTag::symbol("eta"), s("a")).unwrap();
        assert_eq!(eta.to_string(), "ram(eta, a)");
        let rho = IrredPart::new(2, "l", unr("c"), None).unwrap().twisted(&unr("t"));
        assert_eq!(rho.to_string(), "irr(2, l, unr(c)) x unr(t)");
        assert_eq!(WDRep::zero().to_string(), "rep()");
    }
}

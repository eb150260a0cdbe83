//! Pole classification for `L(pi x sigma)` (exceptional poles) and `L(pi)`
//! (subregular poles), the factorizations they induce, and the integral
//! ideals `J` and `K`.
//!
//! A pole is recorded by its reciprocal root `beta = q^{s0}`, so a factor
//! `1/(1 - beta X)` has its pole at `s0`.

use std::fmt;

use crate::algebra::{HalfInt, Scalar, SplitRational};
use crate::catalog::{nov_lfactor, CatalogError, Gl2Param, Gsp4Param};
use crate::wdrep::{Block, Character, SummandKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PoleClass {
    Exceptional,
    SubregularCase1,
    SubregularCase2,
    Regular,
}

impl PoleClass {
    pub fn name(self) -> &'static str {
        match self {
            PoleClass::Exceptional => "exceptional",
            PoleClass::SubregularCase1 => "subregular1",
            PoleClass::SubregularCase2 => "subregular2",
            PoleClass::Regular => "regular",
        }
    }

    pub fn from_name(s: &str) -> Option<PoleClass> {
        [
            PoleClass::Exceptional,
            PoleClass::SubregularCase1,
            PoleClass::SubregularCase2,
            PoleClass::Regular,
        ]
        .into_iter()
        .find(|c| c.name() == s)
    }

    pub fn is_subregular(self) -> bool {
        matches!(self, PoleClass::SubregularCase1 | PoleClass::SubregularCase2)
    }
}

impl fmt::Display for PoleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PoleEntry {
    pub root: Scalar,
    pub class: PoleClass,
    /// Summands producing the pole; repeated summands stay listed.
    pub witnesses: Vec<Block>,
    /// Distinguished split Bessel character `(lambda1, lambda2)`.
    pub bessel: Option<(Character, Character)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PoleReport {
    pub entries: Vec<PoleEntry>,
}

impl PoleReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn roots(&self) -> Vec<&Scalar> {
        self.entries.iter().map(|e| &e.root).collect()
    }

    pub fn contains(&self, root: &Scalar) -> bool {
        self.entries.iter().any(|e| e.root == *root)
    }

    pub fn class_of(&self, root: &Scalar) -> Option<PoleClass> {
        self.entries.iter().find(|e| e.root == *root).map(|e| e.class)
    }

    /// `prod 1/(1 - beta X)` over the listed roots, each simple.
    pub fn simple_lfactor(&self) -> SplitRational {
        self.entries
            .iter()
            .fold(SplitRational::one(), |acc, e| acc.mul(&SplitRational::euler(e.root.clone())))
    }

    pub fn new(mut entries: Vec<PoleEntry>) -> Self {
        for e in &mut entries {
            e.witnesses.sort();
        }
        PoleReport { entries }
    }

    fn push(&mut self, root: Scalar, class: PoleClass, witness: Block, bessel: Option<(Character, Character)>) {
        match self.entries.iter_mut().find(|e| e.root == root) {
            Some(e) => e.witnesses.push(witness),
            None => self.entries.push(PoleEntry {
                root,
                class,
                witnesses: vec![witness],
                bessel,
            }),
        }
    }

    fn sort(&mut self) {
        for e in &mut self.entries {
            e.witnesses.sort();
        }
        self.entries.sort_by(|a, b| a.root.cmp(&b.root).then(a.class.cmp(&b.class)));
    }
}

/// `chi` is unramified with Satake value `x`.
fn unramified_with(chi: &Character, x: &Scalar) -> bool {
    chi.is_unramified() && chi.satake() == x
}

/// Roots `alpha` of unramified line summands of `phi_pi (x) phi_sigma` with
/// `chi_pi chi_sigma |.|^{2 s0} = 1`, i.e. Satake value `alpha^2`.
pub fn exceptional_poles(pi: &Gsp4Param, sigma: &Gl2Param) -> Result<PoleReport, CatalogError> {
    let t = pi.rep().tensor_known(sigma.rep())?;
    let chi = pi.similitude().mul(sigma.central());
    let mut report = PoleReport::default();
    for b in t.summand_blocks(SummandKind::Line) {
        let alpha = b.unramified_satake().expect("line summand").clone();
        if unramified_with(&chi, &alpha.mul(&alpha)) {
            report.push(alpha, PoleClass::Exceptional, b.clone(), None);
        }
    }
    report.sort();
    Ok(report)
}

/// `(L_reg, L_ex)` with `L_ex` the simple factor over exceptional roots.
pub fn nov_split(pi: &Gsp4Param, sigma: &Gl2Param) -> Result<(SplitRational, SplitRational), CatalogError> {
    let l = nov_lfactor(pi, sigma)?;
    let ex = exceptional_poles(pi, sigma)?.simple_lfactor();
    Ok((l.div(&ex), ex))
}

/// `Lambda = (|.|^{-1/2-s0}, chi_pi |.|^{1/2+s0})` at `beta = q^{s0}`.
pub fn bessel_character(similitude: &Character, beta: &Scalar) -> (Character, Character) {
    let vb = Scalar::sqrt_q().mul(beta);
    let l1 = Character::unr(vb.clone());
    let l2 = similitude.mul(&Character::unr(vb.inv().expect("nonzero root")));
    (l1, l2)
}

/// Subregular poles of `L(pi)`.
///
/// Case 1: unramified line `beta` with `chi_pi |.|^{2 s0 + 1} != 1`.
/// Case 2: `chi_pi |.|^{2 s0 + 1} = 1` and `unr(beta v) (x) sp(1)` a summand.
pub fn subregular_poles(pi: &Gsp4Param) -> PoleReport {
    let chi = pi.similitude();
    let v = Scalar::sqrt_q();
    let condition = |beta: &Scalar| {
        let vb = v.mul(beta);
        unramified_with(chi, &vb.mul(&vb))
    };
    let mut report = PoleReport::default();
    for b in pi.rep().summand_blocks(SummandKind::Line) {
        let beta = b.unramified_satake().expect("line summand").clone();
        if !condition(&beta) {
            let bessel = bessel_character(chi, &beta);
            report.push(beta, PoleClass::SubregularCase1, b.clone(), Some(bessel));
        }
    }
    for b in pi.rep().summand_blocks(SummandKind::Steinberg) {
        let gamma = b.unramified_satake().expect("Steinberg summand");
        let beta = gamma.div(&v).expect("v is nonzero");
        if condition(&beta) {
            let bessel = bessel_character(chi, &beta);
            report.push(beta, PoleClass::SubregularCase2, b.clone(), Some(bessel));
        }
    }
    report.sort();
    report
}

/// Every pole root of `L(pi)`: subregular ones as classified, the rest regular.
pub fn spinor_pole_table(pi: &Gsp4Param) -> PoleReport {
    let sub = subregular_poles(pi);
    let mut report = sub.clone();
    for b in pi.rep().blocks() {
        for beta in b.lfactor().pole_roots() {
            if !sub.contains(&beta) {
                report.push(beta, PoleClass::Regular, b.clone(), None);
            }
        }
    }
    report.sort();
    report
}

/// `(L_ex, L_sub, L_Kir)` with `L_ex = 1` and `L(pi) = L_sub * L_Kir`.
pub fn ps_split(pi: &Gsp4Param) -> (SplitRational, SplitRational, SplitRational) {
    let sub = subregular_poles(pi).simple_lfactor();
    let kir = pi.lfactor().div(&sub);
    (SplitRational::one(), sub, kir)
}

/// Predicted dimension of the invariant-period space at the pole `root`.
pub fn hom_dim(pi: &Gsp4Param, sigma: &Gl2Param, root: &Scalar) -> Result<u8, CatalogError> {
    Ok(u8::from(exceptional_poles(pi, sigma)?.contains(root)))
}

/// Integral ideals `(J, K)` attached to `pi` against the Steinberg.
///
/// `J = L(pi x St, s + 1/2) / (L(pi, s) L(pi, s + 1))` and `K` is the same
/// ratio with the regular part of `L(pi x St)` in the numerator.
pub fn ideals_jk(pi: &Gsp4Param) -> Result<(SplitRational, SplitRational), CatalogError> {
    let st = Gl2Param::steinberg();
    let l = pi.lfactor();
    let den = l.mul(&l.shift(HalfInt::ONE));
    let j = nov_lfactor(pi, &st)?.shift(HalfInt::HALF).div(&den);
    let (reg, _) = nov_split(pi, &st)?;
    let k = reg.shift(HalfInt::HALF).div(&den);
    Ok((j, k))
}

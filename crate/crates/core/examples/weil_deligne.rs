//! Weil-Deligne representations: sums, twists, tensor products, L-factors.

use lfac::algebra::{HalfInt, Scalar};
use lfac::wdrep::{sp_tensor, Block, Character, IrredPart, WDRep};

fn main() {
    let a = Character::unr_symbol("a");
    let b = Character::unr_symbol("b");

    let rho = WDRep::character(a.clone()).direct_sum(&WDRep::block(Block::char(b, 1)));
    println!("rho          = {rho}");
    println!("L(rho)       = {}", rho.lfactor());
    println!("rho x |.|^1/2 has L = {}", rho.twist(&Character::abs(HalfInt::HALF)).lfactor());

    println!("sp(2) x sp(3) = sp{:?}", sp_tensor(2, 3));
    let t = rho.tensor(&WDRep::sp(1)).unwrap();
    println!("rho x sp(1)  = {t}");

    let eta = Character::unr(Scalar::integer(-1));
    let r = IrredPart::new(2, "r", eta, None).unwrap();
    let w = WDRep::irred(r).twist(&a);
    println!("w            = {w}, dual {}", w.dual());
    println!("L(w)         = {}", w.lfactor());
}
